//! Congruences on finite graphs without loops.
//!
//! Same shape as the loop-graph congruences, plus the requirement that no
//! congruence edge joins two vertices of one class. These only form a
//! meet-semilattice, so no join is offered.

use crate::error::CongruenceError;
use crate::graph_congruence::{
    block_pair_orbits, check_hom, check_size, check_subset, kernel_edges, meet_parts, quotient_cong_parts,
    quotient_graph, restrict_parts, saturate, subdirect_parts, substitution_failure,
};
use crate::partition::Partition;
use crate::structures::{EdgeSet, FiniteGraph, LoopPolicy};
use crate::subdirect::Subdirect;

pub use crate::graph_congruence::embedding_is_faithful;

pub type LooplessCongruence = crate::graph_congruence::GraphCongruence;

fn require_no_loops(g: &FiniteGraph) -> Result<(), CongruenceError> {
    if g.policy() != LoopPolicy::NoLoops {
        return Err(CongruenceError::PolicyMismatch);
    }
    Ok(())
}

/// First pair inside one class that is an edge of `edges`.
fn dependent_pair(p: &Partition, edges: EdgeSet) -> Option<(usize, usize)> {
    edges.pairs().into_iter().find(|&(a, b)| p.same(a, b))
}

pub fn validate(g: &FiniteGraph, theta: &LooplessCongruence) -> Result<(), CongruenceError> {
    require_no_loops(g)?;
    check_size(g.n(), &theta.partition)?;
    if let Some((a, b)) = dependent_pair(&theta.partition, g.edges().union(theta.cedges)) {
        return Err(CongruenceError::IndependenceViolated(a, b));
    }
    if !g.edges().is_subset(theta.cedges) || !theta.cedges.is_subset(g.possible_edges()) {
        return Err(CongruenceError::EdgeSetOutOfRange);
    }
    if let Some(((a, b), (c, d))) = substitution_failure(&theta.partition, theta.cedges) {
        return Err(CongruenceError::SubstitutionViolated(format!("{a}-{b}"), format!("{c}-{d}")));
    }
    Ok(())
}

fn checked(g: &FiniteGraph, theta: &LooplessCongruence) -> Result<(), CongruenceError> {
    validate(g, theta).map_err(CongruenceError::invalid)
}

/// The strong congruence for `p`, absent when some class contains an edge.
pub fn strongify(g: &FiniteGraph, p: &Partition) -> Option<LooplessCongruence> {
    if dependent_pair(p, g.edges()).is_some() {
        return None;
    }
    Some(LooplessCongruence::new(p.clone(), saturate(p, g.edges())))
}

pub fn is_strong(g: &FiniteGraph, theta: &LooplessCongruence) -> bool {
    theta.cedges == saturate(&theta.partition, g.edges())
}

pub fn kernel(g: &FiniteGraph, h: &FiniteGraph, f: &[usize]) -> Result<LooplessCongruence, CongruenceError> {
    require_no_loops(g)?;
    require_no_loops(h)?;
    check_hom(g, h, f)?;
    Ok(LooplessCongruence::new(Partition::from_labels(f), kernel_edges(h, f, g.possible_edges())))
}

pub fn strong_kernel(g: &FiniteGraph, h: &FiniteGraph, f: &[usize]) -> Result<LooplessCongruence, CongruenceError> {
    require_no_loops(g)?;
    require_no_loops(h)?;
    check_hom(g, h, f)?;
    // a homomorphism into a loopless graph never collapses an edge
    Ok(strongify(g, &Partition::from_labels(f)).expect("classes of a homomorphism are independent"))
}

pub fn quotient(g: &FiniteGraph, theta: &LooplessCongruence) -> Result<(FiniteGraph, Vec<usize>), CongruenceError> {
    checked(g, theta)?;
    Ok(quotient_graph(LoopPolicy::NoLoops, theta))
}

pub fn meet(g: &FiniteGraph, list: &[LooplessCongruence]) -> Result<LooplessCongruence, CongruenceError> {
    for t in list {
        checked(g, t)?;
    }
    meet_parts(list)
}

pub fn restrict(
    g: &FiniteGraph,
    theta: &LooplessCongruence,
    subset: u32,
) -> Result<LooplessCongruence, CongruenceError> {
    checked(g, theta)?;
    check_subset(g.n(), subset)?;
    Ok(restrict_parts(theta, subset))
}

pub fn quotient_cong(
    g: &FiniteGraph,
    t1: &LooplessCongruence,
    t2: &LooplessCongruence,
) -> Result<LooplessCongruence, CongruenceError> {
    checked(g, t1)?;
    checked(g, t2)?;
    if !t1.leq(t2) {
        return Err(CongruenceError::NotContained);
    }
    Ok(quotient_cong_parts(t1, t2))
}

/// `f(θ) ⊆ β`, comparing the image pair `(f(∼), f(ℰ))` directly. The pair
/// need not be a congruence; a collapsed congruence edge can never lie in `β`.
pub fn image_below(f: &[usize], theta: &LooplessCongruence, beta: &LooplessCongruence) -> bool {
    let n = f.len();
    let rel_ok = (0..n).all(|a| (a + 1..n).all(|b| !theta.partition.same(a, b) || beta.partition.same(f[a], f[b])));
    rel_ok && theta.cedges.pairs().into_iter().all(|(a, b)| f[a] != f[b] && beta.cedges.contains(f[a], f[b]))
}

pub fn check_subdirect(
    g: &FiniteGraph,
    list: &[LooplessCongruence],
) -> Result<Subdirect<FiniteGraph>, CongruenceError> {
    for t in list {
        checked(g, t)?;
    }
    subdirect_parts(g.n(), LoopPolicy::NoLoops, &LooplessCongruence::identity(g), list)
}

/// All congruences on a loopless graph, sorted.
pub fn congruences(g: &FiniteGraph) -> Vec<LooplessCongruence> {
    let mut out = Vec::new();
    for p in Partition::all(g.n()) {
        if dependent_pair(&p, g.edges()).is_some() {
            continue;
        }
        let orbits = block_pair_orbits(&p, false);
        let forced = orbits.iter().filter(|o| o.intersects(g.edges())).fold(EdgeSet::EMPTY, |acc, &o| acc.union(o));
        let optional: Vec<EdgeSet> = orbits.into_iter().filter(|o| !o.intersects(g.edges())).collect();
        for mask in 0u64..(1 << optional.len()) {
            let e = optional
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .fold(forced, |acc, (_, &o)| acc.union(o));
            out.push(LooplessCongruence::new(p.clone(), e));
        }
    }
    out.sort();
    out
}

pub fn strong_congruences(g: &FiniteGraph) -> Vec<LooplessCongruence> {
    let mut out: Vec<LooplessCongruence> = Partition::all(g.n()).iter().filter_map(|p| strongify(g, p)).collect();
    out.sort();
    out
}

pub fn is_subdirectly_irreducible(g: &FiniteGraph) -> bool {
    let iota = LooplessCongruence::identity(g);
    let others: Vec<LooplessCongruence> = congruences(g).into_iter().filter(|t| *t != iota).collect();
    match meet_parts(&others) {
        Ok(m) => m != iota,
        Err(_) => true,
    }
}

/// Congruences with complete quotients meeting to `ι`.
///
/// For each non-edge `uv` (in order) the congruence that merges `u` and `v`
/// and keeps every other pair as a congruence edge, then `(≗, K)`. A complete
/// graph gets `{ι}` alone.
pub fn birkhoff_complete_decomposition(g: &FiniteGraph) -> Result<Vec<LooplessCongruence>, CongruenceError> {
    require_no_loops(g)?;
    let k = g.possible_edges();
    let mut out = Vec::new();
    for (u, v) in k.difference(g.edges()).pairs() {
        let labels: Vec<usize> = (0..g.n()).map(|x| if x == v { u } else { x }).collect();
        let p = Partition::from_labels(&labels);
        out.push(LooplessCongruence::new(p, k.difference(EdgeSet::from_pairs([(u, v)]))));
    }
    out.push(LooplessCongruence::new(Partition::discrete(g.n()), k));
    Ok(out)
}

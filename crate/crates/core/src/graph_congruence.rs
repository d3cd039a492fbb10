//! Congruences on finite graphs that admit loops.
//!
//! A congruence is a pair `(∼, ℰ)` with `E ⊆ ℰ ⊆ C` such that `xy ∈ ℰ`
//! implies `[x][y] ⊆ ℰ`.

use std::fmt;

use crate::bits;
use crate::error::CongruenceError;
use crate::partition::Partition;
use crate::structures::{EdgeSet, FiniteGraph, LoopPolicy, StructureError};
use crate::subdirect::Subdirect;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCongruence {
    pub partition: Partition,
    pub cedges: EdgeSet,
}

impl GraphCongruence {
    pub fn new(partition: Partition, cedges: EdgeSet) -> Self {
        GraphCongruence { partition, cedges }
    }

    /// `ι = (≗, E)`.
    pub fn identity(g: &FiniteGraph) -> Self {
        Self::new(Partition::discrete(g.n()), g.edges())
    }

    /// `υ = (↭, C)`.
    pub fn universal(g: &FiniteGraph) -> Self {
        Self::new(Partition::indiscrete(g.n()), g.possible_edges())
    }

    /// Containment of both components.
    pub fn leq(&self, other: &GraphCongruence) -> bool {
        self.partition.refines(&other.partition) && self.cedges.is_subset(other.cedges)
    }
}

impl fmt::Display for GraphCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.partition, self.cedges)
    }
}

/// `⋃ [x][y]` over `xy ∈ edges`.
pub fn saturate(p: &Partition, edges: EdgeSet) -> EdgeSet {
    let blocks = p.block_masks();
    edges
        .pairs()
        .into_iter()
        .fold(EdgeSet::EMPTY, |acc, (a, b)| acc.union(EdgeSet::product(blocks[p.block_of(a)], blocks[p.block_of(b)])))
}

/// Edge pairs `xy ∈ ℰ` and `x'y' ∉ ℰ` witnessing a substitution failure.
pub(crate) fn substitution_failure(p: &Partition, cedges: EdgeSet) -> Option<((usize, usize), (usize, usize))> {
    let blocks = p.block_masks();
    for (a, b) in cedges.pairs() {
        let missing = EdgeSet::product(blocks[p.block_of(a)], blocks[p.block_of(b)]).difference(cedges);
        if let Some(&m) = missing.pairs().first() {
            return Some(((a, b), m));
        }
    }
    None
}

pub(crate) fn check_size(n: usize, p: &Partition) -> Result<(), CongruenceError> {
    if p.len() != n {
        return Err(CongruenceError::SizeMismatch { expected: n, got: p.len() });
    }
    Ok(())
}

fn require_loops(g: &FiniteGraph) -> Result<(), CongruenceError> {
    if g.policy() != LoopPolicy::LoopsAllowed {
        return Err(CongruenceError::PolicyMismatch);
    }
    Ok(())
}

pub fn validate(g: &FiniteGraph, theta: &GraphCongruence) -> Result<(), CongruenceError> {
    require_loops(g)?;
    check_size(g.n(), &theta.partition)?;
    if !g.edges().is_subset(theta.cedges) || !theta.cedges.is_subset(g.possible_edges()) {
        return Err(CongruenceError::EdgeSetOutOfRange);
    }
    if let Some(((a, b), (c, d))) = substitution_failure(&theta.partition, theta.cedges) {
        return Err(CongruenceError::SubstitutionViolated(format!("{a}-{b}"), format!("{c}-{d}")));
    }
    Ok(())
}

fn checked(g: &FiniteGraph, theta: &GraphCongruence) -> Result<(), CongruenceError> {
    validate(g, theta).map_err(CongruenceError::invalid)
}

/// The strong congruence `(∼, ℰ(∼))`.
pub fn strongify(g: &FiniteGraph, p: &Partition) -> GraphCongruence {
    GraphCongruence::new(p.clone(), saturate(p, g.edges()))
}

pub fn is_strong(g: &FiniteGraph, theta: &GraphCongruence) -> bool {
    theta.cedges == saturate(&theta.partition, g.edges())
}

pub(crate) fn check_hom(g: &FiniteGraph, h: &FiniteGraph, f: &[usize]) -> Result<(), CongruenceError> {
    if f.len() != g.n() || f.iter().any(|&v| v >= h.n()) {
        return Err(StructureError::OutOfRange.into());
    }
    if !g.is_homomorphism(h, f) {
        return Err(CongruenceError::NotHomomorphism);
    }
    Ok(())
}

/// `ℰ_f = {uv | f(u)f(v) ∈ E_H}` over the pairs in `slots`.
pub(crate) fn kernel_edges(h: &FiniteGraph, f: &[usize], slots: EdgeSet) -> EdgeSet {
    EdgeSet::from_pairs(slots.pairs().into_iter().filter(|&(u, v)| h.has_edge(f[u], f[v])))
}

pub fn kernel(g: &FiniteGraph, h: &FiniteGraph, f: &[usize]) -> Result<GraphCongruence, CongruenceError> {
    require_loops(g)?;
    check_hom(g, h, f)?;
    Ok(GraphCongruence::new(Partition::from_labels(f), kernel_edges(h, f, g.possible_edges())))
}

pub fn strong_kernel(g: &FiniteGraph, h: &FiniteGraph, f: &[usize]) -> Result<GraphCongruence, CongruenceError> {
    require_loops(g)?;
    check_hom(g, h, f)?;
    Ok(strongify(g, &Partition::from_labels(f)))
}

/// Graph on the classes with edges `[x][y]` for `xy ∈ ℰ`.
pub(crate) fn quotient_graph(policy: LoopPolicy, theta: &GraphCongruence) -> (FiniteGraph, Vec<usize>) {
    let proj = theta.partition.labels().to_vec();
    let q = FiniteGraph::from_parts_unchecked(theta.partition.num_blocks(), policy, theta.cedges.map(&proj));
    (q, proj)
}

pub fn quotient(g: &FiniteGraph, theta: &GraphCongruence) -> Result<(FiniteGraph, Vec<usize>), CongruenceError> {
    checked(g, theta)?;
    Ok(quotient_graph(LoopPolicy::LoopsAllowed, theta))
}

pub(crate) fn meet_parts(list: &[GraphCongruence]) -> Result<GraphCongruence, CongruenceError> {
    let (first, rest) = list.split_first().ok_or(CongruenceError::EmptyList)?;
    Ok(rest.iter().fold(first.clone(), |acc, t| {
        GraphCongruence::new(acc.partition.meet(&t.partition), acc.cedges.intersection(t.cedges))
    }))
}

pub fn meet(g: &FiniteGraph, list: &[GraphCongruence]) -> Result<GraphCongruence, CongruenceError> {
    for t in list {
        checked(g, t)?;
    }
    meet_parts(list)
}

pub fn join(g: &FiniteGraph, list: &[GraphCongruence]) -> Result<GraphCongruence, CongruenceError> {
    let (first, rest) = list.split_first().ok_or(CongruenceError::EmptyList)?;
    for t in list {
        checked(g, t)?;
    }
    let mut p = first.partition.clone();
    let mut e = first.cedges;
    for t in rest {
        p = p.join(&t.partition);
        e = e.union(t.cedges);
    }
    let e = saturate(&p, e);
    Ok(GraphCongruence::new(p, e))
}

pub(crate) fn restrict_parts(theta: &GraphCongruence, subset: u32) -> GraphCongruence {
    let members: Vec<usize> = bits::members(subset).collect();
    GraphCongruence::new(theta.partition.restrict(&members), theta.cedges.restrict(&members))
}

pub(crate) fn check_subset(n: usize, subset: u32) -> Result<(), CongruenceError> {
    if subset == 0 {
        return Err(StructureError::EmptySubset.into());
    }
    if subset & !bits::full(n) != 0 {
        return Err(StructureError::OutOfRange.into());
    }
    Ok(())
}

/// `H ∩ θ` on the induced subgraph `H`.
pub fn restrict(g: &FiniteGraph, theta: &GraphCongruence, subset: u32) -> Result<GraphCongruence, CongruenceError> {
    checked(g, theta)?;
    check_subset(g.n(), subset)?;
    Ok(restrict_parts(theta, subset))
}

pub(crate) fn quotient_cong_parts(t1: &GraphCongruence, t2: &GraphCongruence) -> GraphCongruence {
    let reps = t1.partition.representatives();
    let key: Vec<usize> = reps.iter().map(|&r| t2.partition.block_of(r)).collect();
    GraphCongruence::new(Partition::from_labels(&key), t2.cedges.map(t1.partition.labels()))
}

/// `θ₂/θ₁` on `G/θ₁`, for `θ₁ ⊆ θ₂`.
pub fn quotient_cong(
    g: &FiniteGraph,
    t1: &GraphCongruence,
    t2: &GraphCongruence,
) -> Result<GraphCongruence, CongruenceError> {
    checked(g, t1)?;
    checked(g, t2)?;
    if !t1.leq(t2) {
        return Err(CongruenceError::NotContained);
    }
    Ok(quotient_cong_parts(t1, t2))
}

pub(crate) fn check_surjective(n: usize, m: usize, f: &[usize]) -> Result<(), CongruenceError> {
    if bits::image(bits::full(n), f) != bits::full(m) {
        return Err(CongruenceError::NotSurjective);
    }
    Ok(())
}

/// `f(θ) = (θ + ker f)/ker f`, carried onto `H` along `[x] ↦ f(x)`.
pub fn image(
    g: &FiniteGraph,
    h: &FiniteGraph,
    f: &[usize],
    theta: &GraphCongruence,
) -> Result<GraphCongruence, CongruenceError> {
    let alpha = kernel(g, h, f)?;
    check_surjective(g.n(), h.n(), f)?;
    let sum = join(g, &[theta.clone(), alpha.clone()])?;
    let q = quotient_cong_parts(&alpha, &sum);
    let to_h: Vec<usize> = alpha.partition.representatives().iter().map(|&r| f[r]).collect();
    let mut key = vec![0; h.n()];
    for (b, &v) in to_h.iter().enumerate() {
        key[v] = q.partition.block_of(b);
    }
    Ok(GraphCongruence::new(Partition::from_labels(&key), q.cedges.map(&to_h)))
}

pub(crate) fn subdirect_parts(
    n: usize,
    policy: LoopPolicy,
    identity: &GraphCongruence,
    list: &[GraphCongruence],
) -> Result<Subdirect<FiniteGraph>, CongruenceError> {
    let m = meet_parts(list)?;
    let factors = list.iter().map(|t| quotient_graph(policy, t).0).collect();
    let embedding = (0..n).map(|v| list.iter().map(|t| t.partition.block_of(v)).collect()).collect();
    Ok(Subdirect { holds: &m == identity, factors, embedding })
}

pub fn check_subdirect(g: &FiniteGraph, list: &[GraphCongruence]) -> Result<Subdirect<FiniteGraph>, CongruenceError> {
    for t in list {
        checked(g, t)?;
    }
    subdirect_parts(g.n(), g.policy(), &GraphCongruence::identity(g), list)
}

/// Whether the coordinate map of `sd` carries `g` onto an induced subgraph
/// of the product of the factors: injective, and `uv ∈ E` exactly when
/// every coordinate pair is an edge.
pub fn embedding_is_faithful(g: &FiniteGraph, sd: &Subdirect<FiniteGraph>) -> bool {
    if !sd.is_injective() {
        return false;
    }
    let all_pairs = EdgeSet::all_pairs(g.n(), true).pairs();
    all_pairs.into_iter().all(|(u, v)| {
        let product_edge =
            sd.factors.iter().enumerate().all(|(i, q)| q.has_edge(sd.embedding[u][i], sd.embedding[v][i]));
        product_edge == g.has_edge(u, v)
    })
}

/// Pair sets `[x_i][x_j]` for classes `i ≤ j` (`i < j` without loops).
pub(crate) fn block_pair_orbits(p: &Partition, loops: bool) -> Vec<EdgeSet> {
    let blocks = p.block_masks();
    let mut out = Vec::new();
    for j in 0..blocks.len() {
        for i in 0..=j {
            if i == j && !loops {
                continue;
            }
            out.push(EdgeSet::product(blocks[i], blocks[j]));
        }
    }
    out
}

/// All congruences on a loop graph, sorted.
///
/// For a fixed partition the substitution property makes each block-pair
/// set `[x][y]` all-or-nothing, so the edge sets are unions of these orbits
/// with every orbit that meets `E` forced in.
pub fn congruences(g: &FiniteGraph) -> Vec<GraphCongruence> {
    let mut out = Vec::new();
    for p in Partition::all(g.n()) {
        let orbits = block_pair_orbits(&p, true);
        let forced = orbits.iter().filter(|o| o.intersects(g.edges())).fold(EdgeSet::EMPTY, |acc, &o| acc.union(o));
        let optional: Vec<EdgeSet> = orbits.into_iter().filter(|o| !o.intersects(g.edges())).collect();
        for mask in 0u64..(1 << optional.len()) {
            let e = optional
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .fold(forced, |acc, (_, &o)| acc.union(o));
            out.push(GraphCongruence::new(p.clone(), e));
        }
    }
    out.sort();
    out
}

pub fn strong_congruences(g: &FiniteGraph) -> Vec<GraphCongruence> {
    let mut out: Vec<GraphCongruence> = Partition::all(g.n()).iter().map(|p| strongify(g, p)).collect();
    out.sort();
    out
}

/// Whether every family of congruences meeting to `ι` contains `ι`.
///
/// A family avoiding `ι` meets to `ι` only if the meet of all non-identity
/// congruences does, so one meet settles it.
pub fn is_subdirectly_irreducible(g: &FiniteGraph) -> bool {
    let iota = GraphCongruence::identity(g);
    let others: Vec<GraphCongruence> = congruences(g).into_iter().filter(|t| *t != iota).collect();
    match meet_parts(&others) {
        Ok(m) => m != iota,
        Err(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{enumerate_graphs, is_iso_graphs, named};

    fn gc(n: usize, blocks: &[&[usize]], edges: &[(usize, usize)]) -> GraphCongruence {
        GraphCongruence::new(Partition::from_blocks(n, blocks).unwrap(), EdgeSet::from_pairs(edges.iter().copied()))
    }

    fn loop_graphs(max_n: usize) -> Vec<FiniteGraph> {
        (1..=max_n).flat_map(|n| enumerate_graphs(n, LoopPolicy::LoopsAllowed).unwrap()).collect()
    }

    /// Every (partition, edge set) pair checked against the definition.
    fn congruences_by_brute_force(g: &FiniteGraph) -> Vec<GraphCongruence> {
        let slots = g.possible_edges().pairs();
        let mut out = Vec::new();
        for p in Partition::all(g.n()) {
            for mask in 0u64..(1 << slots.len()) {
                let e =
                    EdgeSet::from_pairs(slots.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &q)| q));
                let t = GraphCongruence::new(p.clone(), e);
                let ok = g.edges().is_subset(e)
                    && e.pairs().iter().all(|&(x, y)| {
                        (0..g.n())
                            .all(|x2| (0..g.n()).all(|y2| !(p.same(x, x2) && p.same(y, y2)) || e.contains(x2, y2)))
                    });
                if ok {
                    out.push(t);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_definition() {
        assert_eq!(congruences(&named::b(1)).len(), 10);
        for g in loop_graphs(3) {
            assert_eq!(congruences(&g), congruences_by_brute_force(&g));
        }
    }

    #[test]
    fn validation_examples() {
        let b1 = named::b(1);
        assert!(validate(&b1, &gc(2, &[&[0, 1]], &[])).is_ok());
        assert_eq!(
            validate(&b1, &gc(2, &[&[0, 1]], &[(0, 1)])),
            Err(CongruenceError::SubstitutionViolated("0-1".into(), "0-0".into()))
        );
        let b6 = named::b(6);
        assert!(validate(&b6, &GraphCongruence::identity(&b6)).is_ok());
        assert_eq!(validate(&b6, &gc(2, &[&[0], &[1]], &[(0, 0)])), Err(CongruenceError::EdgeSetOutOfRange));
        assert_eq!(
            validate(&named::complete(2), &GraphCongruence::identity(&named::complete(2))),
            Err(CongruenceError::PolicyMismatch)
        );
    }

    #[test]
    fn strongify_examples() {
        let b4 = named::b(4);
        assert_eq!(strongify(&b4, &Partition::indiscrete(2)), gc(2, &[&[0, 1]], &[(0, 0), (0, 1), (1, 1)]));
        let b1 = named::b(1);
        assert_eq!(strongify(&b1, &Partition::indiscrete(2)), gc(2, &[&[0, 1]], &[]));
        assert!(!is_strong(&b1, &gc(2, &[&[0], &[1]], &[(0, 1)])));
    }

    #[test]
    fn kernel_examples() {
        let b1 = named::b(1);
        assert_eq!(kernel(&b1, &named::t0(), &[0, 0]).unwrap(), GraphCongruence::universal(&b1));
        assert_eq!(kernel(&named::b(2), &named::t(), &[0, 0]), Err(CongruenceError::NotHomomorphism));
        let a3 = named::a3();
        let k = kernel(&a3, &named::b(6), &[0, 1, 0]).unwrap();
        assert_eq!(k.partition, Partition::from_labels(&[0, 1, 0]));
        // every pair maps onto an edge of B6
        assert_eq!(k.cedges, a3.possible_edges());
        // sker f ⊆ ker f on every homomorphism between small graphs
        let gs = loop_graphs(3);
        for g in &gs {
            for h in &gs {
                for f in maps(g.n(), h.n()) {
                    if let Ok(k) = kernel(g, h, &f) {
                        let s = strong_kernel(g, h, &f).unwrap();
                        assert!(s.leq(&k));
                    }
                }
            }
        }
    }

    fn maps(n: usize, m: usize) -> Vec<Vec<usize>> {
        (0..m.pow(n as u32))
            .map(|mut c| {
                (0..n)
                    .map(|_| {
                        let v = c % m;
                        c /= m;
                        v
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn quotient_examples() {
        let b1 = named::b(1);
        assert_eq!(quotient(&b1, &gc(2, &[&[0, 1]], &[])).unwrap().0, named::t());
        let b4 = named::b(4);
        assert_eq!(quotient(&b4, &strongify(&b4, &Partition::indiscrete(2))).unwrap().0, named::t0());
        for g in loop_graphs(3) {
            assert!(is_iso_graphs(&quotient(&g, &GraphCongruence::identity(&g)).unwrap().0, &g));
            assert_eq!(quotient(&g, &GraphCongruence::universal(&g)).unwrap().0, named::t0());
        }
    }

    #[test]
    fn meet_join_examples() {
        let e3 = named::edgeless(3, LoopPolicy::LoopsAllowed);
        let a = gc(3, &[&[0, 1], &[2]], &[]);
        let b = gc(3, &[&[0], &[1, 2]], &[]);
        assert_eq!(join(&e3, &[a, b]).unwrap(), gc(3, &[&[0, 1, 2]], &[]));
        let b1 = named::b(1);
        let x = gc(2, &[&[0], &[1]], &[(0, 0), (0, 1)]);
        let y = gc(2, &[&[0], &[1]], &[(0, 0), (1, 1)]);
        assert_eq!(meet(&b1, &[x, y]).unwrap(), gc(2, &[&[0], &[1]], &[(0, 0)]));
        assert_eq!(join(&b1, &[]), Err(CongruenceError::EmptyList));
    }

    #[test]
    fn lattice_laws_exhaustive() {
        for g in loop_graphs(3) {
            let all = congruences(&g);
            let (iota, up) = (GraphCongruence::identity(&g), GraphCongruence::universal(&g));
            for a in &all {
                assert!(iota.leq(a) && a.leq(&up));
                assert_eq!(&meet(&g, &[a.clone(), up.clone()]).unwrap(), a);
                assert_eq!(&join(&g, &[a.clone(), iota.clone()]).unwrap(), a);
                for b in &all {
                    let m = meet(&g, &[a.clone(), b.clone()]).unwrap();
                    let j = join(&g, &[a.clone(), b.clone()]).unwrap();
                    validate(&g, &m).unwrap();
                    validate(&g, &j).unwrap();
                    assert_eq!(&meet(&g, &[a.clone(), j.clone()]).unwrap(), a);
                    assert_eq!(&join(&g, &[a.clone(), m.clone()]).unwrap(), a);
                    if is_strong(&g, a) && is_strong(&g, b) {
                        assert!(is_strong(&g, &j));
                    }
                    for c in &all {
                        if c.leq(a) && c.leq(b) {
                            assert!(c.leq(&m));
                        }
                        if a.leq(c) && b.leq(c) {
                            assert!(j.leq(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restrict_and_quotient_cong_examples() {
        let a3 = named::a3();
        let s = strongify(&a3, &Partition::from_labels(&[0, 1, 0]));
        let r = restrict(&a3, &s, 0b011).unwrap();
        assert!(r.partition.is_discrete());
        assert!(is_strong(&named::b(6), &r));
        let b4 = named::b(4);
        let t1 = gc(2, &[&[0], &[1]], &[(0, 0), (1, 1), (0, 1)]);
        let up = GraphCongruence::universal(&b4);
        let (q1, _) = quotient(&b4, &t1).unwrap();
        let q = quotient_cong(&b4, &t1, &up).unwrap();
        assert_eq!(q, GraphCongruence::universal(&q1));
        assert_eq!(quotient(&q1, &q).unwrap().0, named::t0());
        assert_eq!(quotient_cong(&b4, &t1, &t1).unwrap(), GraphCongruence::identity(&q1));
        assert_eq!(quotient_cong(&b4, &up, &t1), Err(CongruenceError::NotContained));
    }

    /// `f(θ)` from the chain definition.
    fn image_oracle(g: &FiniteGraph, h: &FiniteGraph, f: &[usize], theta: &GraphCongruence) -> GraphCongruence {
        let mut p = Partition::discrete(h.n());
        for a in 0..g.n() {
            for b in 0..g.n() {
                if theta.partition.same(a, b) {
                    let mut key: Vec<usize> = (0..h.n()).collect();
                    key[f[b]] = f[a];
                    p = p.join(&Partition::from_labels(&key));
                }
            }
        }
        let blocks = p.block_masks();
        let mut e = EdgeSet::EMPTY;
        for (x, y) in EdgeSet::all_pairs(g.n(), true).pairs() {
            if theta.cedges.contains(x, y) || h.has_edge(f[x], f[y]) {
                e = e.union(EdgeSet::product(blocks[p.block_of(f[x])], blocks[p.block_of(f[y])]));
            }
        }
        GraphCongruence::new(p, e)
    }

    #[test]
    fn image_matches_direct_definition() {
        let gs = loop_graphs(3);
        for g in &gs {
            let cons = congruences(g);
            for h in gs.iter().filter(|h| h.n() <= g.n()) {
                for f in maps(g.n(), h.n()) {
                    if check_hom(g, h, &f).is_err() || check_surjective(g.n(), h.n(), &f).is_err() {
                        continue;
                    }
                    for t in &cons {
                        let im = image(g, h, &f, t).unwrap();
                        validate(h, &im).unwrap();
                        assert_eq!(im, image_oracle(g, h, &f, t));
                        if is_strong(g, t) {
                            assert!(is_strong(h, &im));
                        }
                    }
                    assert_eq!(image(g, h, &f, &GraphCongruence::universal(g)).unwrap(), GraphCongruence::universal(h));
                }
            }
        }
    }

    #[test]
    fn subdirect_examples() {
        let b1 = named::b(1);
        let t1 = gc(2, &[&[0], &[1]], &[(0, 0)]);
        let t2 = gc(2, &[&[0], &[1]], &[(1, 1)]);
        let sd = check_subdirect(&b1, &[t1, t2]).unwrap();
        assert!(sd.holds && embedding_is_faithful(&b1, &sd));
        assert!(check_subdirect(&b1, &[GraphCongruence::identity(&b1)]).unwrap().holds);
        assert!(!check_subdirect(&b1, &[GraphCongruence::universal(&b1)]).unwrap().holds);
    }

    /// Brute force over all families of non-identity congruences.
    fn si_by_families(g: &FiniteGraph) -> bool {
        let iota = GraphCongruence::identity(g);
        let others: Vec<GraphCongruence> = congruences(g).into_iter().filter(|t| *t != iota).collect();
        (1u64..(1 << others.len())).all(|mask| {
            let fam: Vec<GraphCongruence> =
                others.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, t)| t.clone()).collect();
            meet_parts(&fam).unwrap() != iota
        })
    }

    /// Pointwise: some pair of vertices or some non-edge that no non-identity
    /// congruence separates.
    fn si_pointwise(g: &FiniteGraph) -> bool {
        let iota = GraphCongruence::identity(g);
        let others: Vec<GraphCongruence> = congruences(g).into_iter().filter(|t| *t != iota).collect();
        if others.is_empty() {
            return true;
        }
        let unseparated_pair =
            (0..g.n()).any(|a| (a + 1..g.n()).any(|b| others.iter().all(|t| t.partition.same(a, b))));
        let unexcluded_edge = g
            .possible_edges()
            .difference(g.edges())
            .pairs()
            .iter()
            .any(|&(a, b)| others.iter().all(|t| t.cedges.contains(a, b)));
        unseparated_pair || unexcluded_edge
    }

    #[test]
    fn subdirectly_irreducible_graphs() {
        for g in loop_graphs(2) {
            assert_eq!(is_subdirectly_irreducible(&g), si_by_families(&g));
        }
        let expected = [named::b(4), named::b(5), named::b(6), named::a3(), named::t0(), named::t()];
        for g in loop_graphs(3) {
            let si = is_subdirectly_irreducible(&g);
            assert_eq!(si, si_pointwise(&g));
            assert_eq!(si, expected.iter().any(|e| is_iso_graphs(e, &g)), "{g}");
        }
        assert!(!is_subdirectly_irreducible(&named::b(1)));
    }
}

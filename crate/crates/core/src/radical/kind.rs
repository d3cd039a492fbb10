//! The three structure kinds behind one interface.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::bits;
use crate::error::CongruenceError;
use crate::graph_congruence::{self as gc, GraphCongruence};
use crate::loopless_congruence as lc;
use crate::partition::Partition;
use crate::structures::{
    canonical_graph, canonical_space, enumerate_graphs_bounded, enumerate_spaces_bounded, is_homeomorphic,
    is_iso_graphs, named, FiniteGraph, FiniteSpace, LoopPolicy, StructureError,
};
use crate::topo_congruence::{self as tc, TopoCongruence};

/// Which of the three theories a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KindTag {
    TopoSpace,
    LoopGraph,
    LooplessGraph,
}

impl KindTag {
    pub fn keyword(self) -> &'static str {
        match self {
            KindTag::TopoSpace => "topo",
            KindTag::LoopGraph => "graph",
            KindTag::LooplessGraph => "loopless",
        }
    }
}

/// Operations the radical engine needs from a structure kind. Congruence
/// arguments are assumed valid on the structure they accompany.
pub trait Kind: Send + Sync + 'static {
    type S: Clone + Ord + Hash + Debug + Display + Send + Sync;
    type C: Clone + Ord + Hash + Debug + Display + Send + Sync;

    const TAG: KindTag;
    const HAS_JOIN: bool;

    fn size(x: &Self::S) -> usize;
    fn canonical(x: &Self::S) -> Self::S;
    fn enumerate(n: usize, bound: usize) -> Result<Vec<Self::S>, StructureError>;
    /// The one-element structure every abstract class must contain.
    fn trivial() -> Self::S;
    fn substructure(x: &Self::S, subset: u32) -> Self::S;
    /// Element `i` renamed to `perm[i]`.
    fn relabel(x: &Self::S, perm: &[usize]) -> Self::S;
    fn congruences(x: &Self::S) -> Vec<Self::C>;
    fn strong_congruences(x: &Self::S) -> Vec<Self::C>;
    fn strongify(x: &Self::S, p: &Partition) -> Option<Self::C>;
    fn is_strong(x: &Self::S, c: &Self::C) -> bool;
    fn partition(c: &Self::C) -> &Partition;
    fn identity(x: &Self::S) -> Self::C;
    fn quotient(x: &Self::S, c: &Self::C) -> Self::S;
    fn meet(x: &Self::S, cs: &[Self::C]) -> Self::C;
    fn join(x: &Self::S, cs: &[Self::C]) -> Option<Self::C>;
    fn leq(a: &Self::C, b: &Self::C) -> bool;
    fn restrict(x: &Self::S, c: &Self::C, subset: u32) -> Self::C;
    fn is_morphism(x: &Self::S, y: &Self::S, f: &[usize]) -> bool;
    /// Kernel of a morphism `f: x → y`.
    fn kernel(x: &Self::S, y: &Self::S, f: &[usize]) -> Self::C;
    /// `b/a` on `x/a`, for `a ≤ b`.
    fn quotient_cong(x: &Self::S, a: &Self::C, b: &Self::C) -> Self::C;
    /// `f(c) ⊑ d` for a surjective morphism `f: x → y`.
    fn image_below(x: &Self::S, y: &Self::S, f: &[usize], c: &Self::C, d: &Self::C) -> bool;
    fn is_iso(x: &Self::S, y: &Self::S) -> bool;
    fn validate(x: &Self::S, c: &Self::C) -> Result<(), CongruenceError>;

    fn full(x: &Self::S) -> u32 {
        bits::full(Self::size(x))
    }

    fn is_trivial(x: &Self::S) -> bool {
        Self::size(x) == 1
    }

    /// Surjective morphisms `x → y`, in lexicographic order of the map.
    fn surjections(x: &Self::S, y: &Self::S) -> Vec<Vec<usize>> {
        let (n, m) = (Self::size(x), Self::size(y));
        if m > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut f = vec![0usize; n];
        loop {
            if bits::image(bits::full(n), &f) == bits::full(m) && Self::is_morphism(x, y, &f) {
                out.push(f.clone());
            }
            // odometer, last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                f[i] += 1;
                if f[i] < m {
                    break;
                }
                f[i] = 0;
            }
        }
    }
}

/// Finite topological spaces.
pub struct Spaces;
/// Graphs that admit loops.
pub struct LoopGraphs;
/// Graphs without loops.
pub struct LooplessGraphs;

impl Kind for Spaces {
    type S = FiniteSpace;
    type C = TopoCongruence;
    const TAG: KindTag = KindTag::TopoSpace;
    const HAS_JOIN: bool = true;

    fn size(x: &FiniteSpace) -> usize {
        x.n()
    }
    fn canonical(x: &FiniteSpace) -> FiniteSpace {
        canonical_space(x)
    }
    fn enumerate(n: usize, bound: usize) -> Result<Vec<FiniteSpace>, StructureError> {
        enumerate_spaces_bounded(n, bound)
    }
    fn trivial() -> FiniteSpace {
        named::t_space()
    }
    fn substructure(x: &FiniteSpace, subset: u32) -> FiniteSpace {
        x.subspace(subset).expect("non-empty subset")
    }
    fn relabel(x: &FiniteSpace, perm: &[usize]) -> FiniteSpace {
        x.relabel(perm)
    }
    fn congruences(x: &FiniteSpace) -> Vec<TopoCongruence> {
        tc::congruences(x)
    }
    fn strong_congruences(x: &FiniteSpace) -> Vec<TopoCongruence> {
        tc::strong_congruences(x)
    }
    fn strongify(x: &FiniteSpace, p: &Partition) -> Option<TopoCongruence> {
        Some(tc::strongify(x, p))
    }
    fn is_strong(x: &FiniteSpace, c: &TopoCongruence) -> bool {
        tc::is_strong(x, c)
    }
    fn partition(c: &TopoCongruence) -> &Partition {
        &c.partition
    }
    fn identity(x: &FiniteSpace) -> TopoCongruence {
        TopoCongruence::identity(x)
    }
    fn quotient(x: &FiniteSpace, c: &TopoCongruence) -> FiniteSpace {
        tc::quotient(x, c).expect("valid congruence").0
    }
    fn meet(x: &FiniteSpace, cs: &[TopoCongruence]) -> TopoCongruence {
        tc::meet(x, cs).expect("valid congruences")
    }
    fn join(x: &FiniteSpace, cs: &[TopoCongruence]) -> Option<TopoCongruence> {
        Some(tc::join(x, cs).expect("valid congruences"))
    }
    fn leq(a: &TopoCongruence, b: &TopoCongruence) -> bool {
        a.leq(b)
    }
    fn restrict(x: &FiniteSpace, c: &TopoCongruence, subset: u32) -> TopoCongruence {
        tc::restrict(x, c, subset).expect("valid restriction")
    }
    fn is_morphism(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> bool {
        x.is_continuous(y, f)
    }
    fn kernel(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> TopoCongruence {
        tc::kernel(x, y, f).expect("continuous map")
    }
    fn quotient_cong(x: &FiniteSpace, a: &TopoCongruence, b: &TopoCongruence) -> TopoCongruence {
        tc::quotient_cong(x, a, b).expect("contained congruences")
    }
    fn image_below(x: &FiniteSpace, y: &FiniteSpace, f: &[usize], c: &TopoCongruence, d: &TopoCongruence) -> bool {
        tc::image(x, y, f, c).expect("surjective continuous map").leq(d)
    }
    fn is_iso(x: &FiniteSpace, y: &FiniteSpace) -> bool {
        is_homeomorphic(x, y)
    }
    fn validate(x: &FiniteSpace, c: &TopoCongruence) -> Result<(), CongruenceError> {
        tc::validate(x, c)
    }
}

impl Kind for LoopGraphs {
    type S = FiniteGraph;
    type C = GraphCongruence;
    const TAG: KindTag = KindTag::LoopGraph;
    const HAS_JOIN: bool = true;

    fn size(x: &FiniteGraph) -> usize {
        x.n()
    }
    fn canonical(x: &FiniteGraph) -> FiniteGraph {
        canonical_graph(x)
    }
    fn enumerate(n: usize, bound: usize) -> Result<Vec<FiniteGraph>, StructureError> {
        enumerate_graphs_bounded(n, LoopPolicy::LoopsAllowed, bound)
    }
    fn trivial() -> FiniteGraph {
        named::t0()
    }
    fn substructure(x: &FiniteGraph, subset: u32) -> FiniteGraph {
        x.induced(subset).expect("non-empty subset")
    }
    fn relabel(x: &FiniteGraph, perm: &[usize]) -> FiniteGraph {
        x.relabel(perm)
    }
    fn congruences(x: &FiniteGraph) -> Vec<GraphCongruence> {
        gc::congruences(x)
    }
    fn strong_congruences(x: &FiniteGraph) -> Vec<GraphCongruence> {
        gc::strong_congruences(x)
    }
    fn strongify(x: &FiniteGraph, p: &Partition) -> Option<GraphCongruence> {
        Some(gc::strongify(x, p))
    }
    fn is_strong(x: &FiniteGraph, c: &GraphCongruence) -> bool {
        gc::is_strong(x, c)
    }
    fn partition(c: &GraphCongruence) -> &Partition {
        &c.partition
    }
    fn identity(x: &FiniteGraph) -> GraphCongruence {
        GraphCongruence::identity(x)
    }
    fn quotient(x: &FiniteGraph, c: &GraphCongruence) -> FiniteGraph {
        gc::quotient(x, c).expect("valid congruence").0
    }
    fn meet(x: &FiniteGraph, cs: &[GraphCongruence]) -> GraphCongruence {
        gc::meet(x, cs).expect("valid congruences")
    }
    fn join(x: &FiniteGraph, cs: &[GraphCongruence]) -> Option<GraphCongruence> {
        Some(gc::join(x, cs).expect("valid congruences"))
    }
    fn leq(a: &GraphCongruence, b: &GraphCongruence) -> bool {
        a.leq(b)
    }
    fn restrict(x: &FiniteGraph, c: &GraphCongruence, subset: u32) -> GraphCongruence {
        gc::restrict(x, c, subset).expect("valid restriction")
    }
    fn is_morphism(x: &FiniteGraph, y: &FiniteGraph, f: &[usize]) -> bool {
        x.is_homomorphism(y, f)
    }
    fn kernel(x: &FiniteGraph, y: &FiniteGraph, f: &[usize]) -> GraphCongruence {
        gc::kernel(x, y, f).expect("homomorphism")
    }
    fn quotient_cong(x: &FiniteGraph, a: &GraphCongruence, b: &GraphCongruence) -> GraphCongruence {
        gc::quotient_cong(x, a, b).expect("contained congruences")
    }
    fn image_below(x: &FiniteGraph, y: &FiniteGraph, f: &[usize], c: &GraphCongruence, d: &GraphCongruence) -> bool {
        gc::image(x, y, f, c).expect("surjective homomorphism").leq(d)
    }
    fn is_iso(x: &FiniteGraph, y: &FiniteGraph) -> bool {
        is_iso_graphs(x, y)
    }
    fn validate(x: &FiniteGraph, c: &GraphCongruence) -> Result<(), CongruenceError> {
        gc::validate(x, c)
    }
}

impl Kind for LooplessGraphs {
    type S = FiniteGraph;
    type C = GraphCongruence;
    const TAG: KindTag = KindTag::LooplessGraph;
    const HAS_JOIN: bool = false;

    fn size(x: &FiniteGraph) -> usize {
        x.n()
    }
    fn canonical(x: &FiniteGraph) -> FiniteGraph {
        canonical_graph(x)
    }
    fn enumerate(n: usize, bound: usize) -> Result<Vec<FiniteGraph>, StructureError> {
        enumerate_graphs_bounded(n, LoopPolicy::NoLoops, bound)
    }
    fn trivial() -> FiniteGraph {
        named::complete(1)
    }
    fn substructure(x: &FiniteGraph, subset: u32) -> FiniteGraph {
        x.induced(subset).expect("non-empty subset")
    }
    fn relabel(x: &FiniteGraph, perm: &[usize]) -> FiniteGraph {
        x.relabel(perm)
    }
    fn congruences(x: &FiniteGraph) -> Vec<GraphCongruence> {
        lc::congruences(x)
    }
    fn strong_congruences(x: &FiniteGraph) -> Vec<GraphCongruence> {
        lc::strong_congruences(x)
    }
    fn strongify(x: &FiniteGraph, p: &Partition) -> Option<GraphCongruence> {
        lc::strongify(x, p)
    }
    fn is_strong(x: &FiniteGraph, c: &GraphCongruence) -> bool {
        lc::is_strong(x, c)
    }
    fn partition(c: &GraphCongruence) -> &Partition {
        &c.partition
    }
    fn identity(x: &FiniteGraph) -> GraphCongruence {
        GraphCongruence::identity(x)
    }
    fn quotient(x: &FiniteGraph, c: &GraphCongruence) -> FiniteGraph {
        lc::quotient(x, c).expect("valid congruence").0
    }
    fn meet(x: &FiniteGraph, cs: &[GraphCongruence]) -> GraphCongruence {
        lc::meet(x, cs).expect("valid congruences")
    }
    fn join(_: &FiniteGraph, _: &[GraphCongruence]) -> Option<GraphCongruence> {
        None
    }
    fn leq(a: &GraphCongruence, b: &GraphCongruence) -> bool {
        a.leq(b)
    }
    fn restrict(x: &FiniteGraph, c: &GraphCongruence, subset: u32) -> GraphCongruence {
        lc::restrict(x, c, subset).expect("valid restriction")
    }
    fn is_morphism(x: &FiniteGraph, y: &FiniteGraph, f: &[usize]) -> bool {
        x.is_homomorphism(y, f)
    }
    fn kernel(x: &FiniteGraph, y: &FiniteGraph, f: &[usize]) -> GraphCongruence {
        lc::kernel(x, y, f).expect("homomorphism")
    }
    fn quotient_cong(x: &FiniteGraph, a: &GraphCongruence, b: &GraphCongruence) -> GraphCongruence {
        lc::quotient_cong(x, a, b).expect("contained congruences")
    }
    fn image_below(_: &FiniteGraph, _: &FiniteGraph, f: &[usize], c: &GraphCongruence, d: &GraphCongruence) -> bool {
        lc::image_below(f, c, d)
    }
    fn is_iso(x: &FiniteGraph, y: &FiniteGraph) -> bool {
        is_iso_graphs(x, y)
    }
    fn validate(x: &FiniteGraph, c: &GraphCongruence) -> Result<(), CongruenceError> {
        lc::validate(x, c)
    }
}

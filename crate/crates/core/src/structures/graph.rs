use std::fmt;

use super::StructureError;
use crate::bits;

/// Largest vertex count a [`FiniteGraph`] can hold.
pub const MAX_GRAPH_VERTICES: usize = 10;

/// Whether loops `aa` are admitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LoopPolicy {
    LoopsAllowed,
    NoLoops,
}

impl LoopPolicy {
    pub fn keyword(self) -> &'static str {
        match self {
            LoopPolicy::LoopsAllowed => "loops",
            LoopPolicy::NoLoops => "noloops",
        }
    }
}

/// Bit position of the unordered pair `{a, b}`.
#[inline]
pub fn pair_index(a: usize, b: usize) -> usize {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    hi * (hi + 1) / 2 + lo
}

/// A set of unordered vertex pairs, loops included, as a 64-bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut e = EdgeSet::EMPTY;
        for (a, b) in pairs {
            e.insert(a, b);
        }
        e
    }

    /// Every pair on `n` vertices; loops only when `loops` is set.
    pub fn all_pairs(n: usize, loops: bool) -> Self {
        let mut e = EdgeSet::EMPTY;
        for b in 0..n {
            for a in 0..=b {
                if a != b || loops {
                    e.insert(a, b);
                }
            }
        }
        e
    }

    /// All pairs `ab` with `a ∈ left`, `b ∈ right`.
    pub fn product(left: u32, right: u32) -> Self {
        let mut e = EdgeSet::EMPTY;
        for a in bits::members(left) {
            for b in bits::members(right) {
                e.insert(a, b);
            }
        }
        e
    }

    #[inline]
    pub fn contains(self, a: usize, b: usize) -> bool {
        self.0 >> pair_index(a, b) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) {
        self.0 |= 1 << pair_index(a, b);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: EdgeSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Pairs `(a, b)` with `a ≤ b`, in bit order.
    pub fn pairs(self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len());
        let mut b = 0;
        while b * (b + 1) / 2 < 64 {
            for a in 0..=b {
                let idx = pair_index(a, b);
                if idx < 64 && self.0 >> idx & 1 == 1 {
                    out.push((a, b));
                }
            }
            b += 1;
        }
        out
    }

    /// Image of every pair under a vertex map.
    pub fn map(self, f: &[usize]) -> EdgeSet {
        EdgeSet::from_pairs(self.pairs().into_iter().map(|(a, b)| (f[a], f[b])))
    }

    /// Keeps pairs inside `subset` (increasing), renumbered onto its positions.
    pub fn restrict(self, subset: &[usize]) -> EdgeSet {
        let mut e = EdgeSet::EMPTY;
        for (j, &b) in subset.iter().enumerate() {
            for (i, &a) in subset[..=j].iter().enumerate() {
                if self.contains(a, b) {
                    e.insert(i, j);
                }
            }
        }
        e
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", items.join(","))
    }
}

/// A finite undirected graph on vertices `0..n` without multiple edges.
///
/// Ordering is by `(n, policy, edge mask)`, so among graphs of one size and
/// policy the least edge encoding comes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteGraph {
    n: usize,
    policy: LoopPolicy,
    edges: EdgeSet,
}

impl FiniteGraph {
    /// Builds a graph from an explicit edge list.
    pub fn new(n: usize, policy: LoopPolicy, edges: &[(usize, usize)]) -> Result<Self, StructureError> {
        let mut set = EdgeSet::EMPTY;
        for &(a, b) in edges {
            if set.contains_checked(n, a, b)? {
                return Err(StructureError::DuplicateEdge(a, b));
            }
            set.insert(a, b);
        }
        Self::from_edge_set(n, policy, set)
    }

    pub fn from_edge_set(n: usize, policy: LoopPolicy, edges: EdgeSet) -> Result<Self, StructureError> {
        if n == 0 {
            return Err(StructureError::Empty);
        }
        if n > MAX_GRAPH_VERTICES {
            return Err(StructureError::TooLarge { n, max: MAX_GRAPH_VERTICES });
        }
        if !edges.is_subset(EdgeSet::all_pairs(n, true)) {
            return Err(StructureError::OutOfRange);
        }
        if policy == LoopPolicy::NoLoops {
            if let Some(&(a, _)) = edges.pairs().iter().find(|(a, b)| a == b) {
                return Err(StructureError::LoopNotAllowed(a));
            }
        }
        Ok(FiniteGraph { n, policy, edges })
    }

    pub(crate) fn from_parts_unchecked(n: usize, policy: LoopPolicy, edges: EdgeSet) -> Self {
        FiniteGraph { n, policy, edges }
    }

    pub fn edgeless(n: usize, policy: LoopPolicy) -> Result<Self, StructureError> {
        Self::from_edge_set(n, policy, EdgeSet::EMPTY)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn policy(&self) -> LoopPolicy {
        self.policy
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(a, b)
    }

    /// All possible edges: `C_G` with loops, `K_G` without.
    pub fn possible_edges(&self) -> EdgeSet {
        EdgeSet::all_pairs(self.n, self.policy == LoopPolicy::LoopsAllowed)
    }

    /// Vertices carrying a loop.
    pub fn loop_set(&self) -> u32 {
        bits::from_members((0..self.n).filter(|&a| self.has_edge(a, a)))
    }

    pub fn vertex_mask(&self) -> u32 {
        bits::full(self.n)
    }

    /// Neighbours of `a` (including `a` itself when looped) as a mask.
    pub fn neighbourhood(&self, a: usize) -> u32 {
        bits::from_members((0..self.n).filter(|&b| self.has_edge(a, b)))
    }

    pub fn is_complete(&self) -> bool {
        self.edges == self.possible_edges()
    }

    /// Induced subgraph on `subset`, renumbered in increasing order.
    pub fn induced(&self, subset: u32) -> Result<FiniteGraph, StructureError> {
        if subset == 0 {
            return Err(StructureError::EmptySubset);
        }
        if subset & !self.vertex_mask() != 0 {
            return Err(StructureError::OutOfRange);
        }
        let members: Vec<usize> = bits::members(subset).collect();
        Ok(FiniteGraph { n: members.len(), policy: self.policy, edges: self.edges.restrict(&members) })
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteGraph {
        FiniteGraph { n: self.n, policy: self.policy, edges: self.edges.map(perm) }
    }

    /// Completion of a loopless graph: same vertices, every non-loop pair.
    pub fn completion(&self) -> Result<FiniteGraph, StructureError> {
        if self.policy != LoopPolicy::NoLoops {
            return Err(StructureError::PolicyMismatch);
        }
        Ok(FiniteGraph { n: self.n, policy: self.policy, edges: self.possible_edges() })
    }

    /// Whether `f` maps every edge onto an edge of `target`.
    pub fn is_homomorphism(&self, target: &FiniteGraph, f: &[usize]) -> bool {
        f.len() == self.n
            && f.iter().all(|&y| y < target.n)
            && self.edges.pairs().iter().all(|&(a, b)| target.has_edge(f[a], f[b]))
    }
}

impl EdgeSet {
    fn contains_checked(self, n: usize, a: usize, b: usize) -> Result<bool, StructureError> {
        if a >= n || b >= n {
            return Err(StructureError::OutOfRange);
        }
        Ok(self.contains(a, b))
    }
}

impl fmt::Display for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph {} {} {}", self.n, self.policy.keyword(), self.edges)
    }
}

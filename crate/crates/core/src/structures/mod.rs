//! Finite graphs and finite topological spaces.

mod enumerate;
mod graph;
mod iso;
pub mod named;
mod space;

pub use enumerate::{
    enumerate_graphs, enumerate_graphs_bounded, enumerate_graphs_upto, enumerate_spaces, enumerate_spaces_bounded,
    enumerate_spaces_upto, labeled_topologies, DEFAULT_GRAPH_BOUND, DEFAULT_SPACE_BOUND,
};
pub use graph::{pair_index, EdgeSet, FiniteGraph, LoopPolicy, MAX_GRAPH_VERTICES};
pub use iso::{
    canonical_graph, canonical_space, homeo_spaces, is_canonical_graph, is_homeomorphic, is_iso_graphs, iso_graphs,
    next_permutation,
};
pub use space::{check_topology, validate_space, FiniteSpace, SetFamily, MAX_SPACE_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("structures must have at least one vertex or point")]
    Empty,
    #[error("{n} elements exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("index out of range")]
    OutOfRange,
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("loop at {0} in a loopless graph")]
    LoopNotAllowed(usize),
    #[error("subset is empty")]
    EmptySubset,
    #[error("loop policies differ")]
    PolicyMismatch,
    #[error("family must contain the empty set and the full set")]
    MissingEmptyOrFull,
    #[error("family is not closed under union")]
    NotClosedUnderUnion,
    #[error("family is not closed under intersection")]
    NotClosedUnderIntersection,
    #[error("size {n} exceeds enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

/// Induced subgraph on `subset`.
pub fn induced(g: &FiniteGraph, subset: u32) -> Result<FiniteGraph, StructureError> {
    g.induced(subset)
}

/// Subspace on `subset`.
pub fn subspace(x: &FiniteSpace, subset: u32) -> Result<FiniteSpace, StructureError> {
    x.subspace(subset)
}

pub fn completion(g: &FiniteGraph) -> Result<FiniteGraph, StructureError> {
    g.completion()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_examples() {
        assert_eq!(induced(&named::b(6), 0b01).unwrap(), named::t0());
        assert_eq!(induced(&named::a3(), 0b011).unwrap(), named::b(6));
        assert_eq!(subspace(&named::s2(), 0b10).unwrap(), named::t_space());
        assert_eq!(induced(&named::b(6), 0), Err(StructureError::EmptySubset));
    }

    #[test]
    fn completion_examples() {
        let b1 = named::edgeless(2, LoopPolicy::NoLoops);
        assert_eq!(completion(&b1).unwrap(), named::complete(2));
        assert_eq!(completion(&named::complete(3)).unwrap(), named::complete(3));
        assert_eq!(completion(&named::path(3)).unwrap(), named::complete(3));
        assert_eq!(completion(&named::b(1)), Err(StructureError::PolicyMismatch));
        for n in 1..=5 {
            for g in enumerate_graphs(n, LoopPolicy::NoLoops).unwrap() {
                let c = completion(&g).unwrap();
                assert_eq!(completion(&c).unwrap(), c);
            }
        }
    }

    #[test]
    fn iso_and_homeo_are_equivalences() {
        let mut graphs = Vec::new();
        for n in 1..=3 {
            graphs.extend(enumerate_graphs(n, LoopPolicy::LoopsAllowed).unwrap());
        }
        // add relabeled copies so non-trivial witnesses occur
        let copies: Vec<FiniteGraph> =
            graphs.iter().map(|g| g.relabel(&(0..g.n()).rev().collect::<Vec<_>>())).collect();
        graphs.extend(copies);
        for g in &graphs {
            assert!(iso_graphs(g, g).unwrap().is_some());
            for h in &graphs {
                let gh = iso_graphs(g, h).unwrap();
                let hg = iso_graphs(h, g).unwrap();
                assert_eq!(gh.is_some(), hg.is_some());
                if let Some(f) = &gh {
                    assert_eq!(&g.relabel(f), h);
                    for k in &graphs {
                        if let Some(p) = iso_graphs(h, k).unwrap() {
                            let comp: Vec<usize> = f.iter().map(|&i| p[i]).collect();
                            assert_eq!(&g.relabel(&comp), k);
                        }
                    }
                }
            }
        }
        let mut spaces = Vec::new();
        for n in 1..=3 {
            spaces.extend(enumerate_spaces(n).unwrap());
        }
        let copies: Vec<FiniteSpace> =
            spaces.iter().map(|x| x.relabel(&(0..x.n()).rev().collect::<Vec<_>>())).collect();
        spaces.extend(copies);
        for x in &spaces {
            for y in &spaces {
                let xy = homeo_spaces(x, y);
                assert_eq!(xy.is_some(), homeo_spaces(y, x).is_some());
                if let Some(f) = xy {
                    assert_eq!(&x.relabel(&f), y);
                }
            }
        }
    }

    #[test]
    fn full_substructure_is_isomorphic() {
        for g in enumerate_graphs(3, LoopPolicy::LoopsAllowed).unwrap() {
            assert!(is_iso_graphs(&induced(&g, g.vertex_mask()).unwrap(), &g));
        }
        for x in enumerate_spaces(3).unwrap() {
            assert!(is_homeomorphic(&subspace(&x, x.full()).unwrap(), &x));
        }
    }
}

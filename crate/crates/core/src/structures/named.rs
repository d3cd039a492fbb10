//! Small structures that come up everywhere.

use super::graph::EdgeSet;
use super::{FiniteGraph, FiniteSpace, LoopPolicy, SetFamily};

fn loop_graph(n: usize, edges: &[(usize, usize)]) -> FiniteGraph {
    FiniteGraph::new(n, LoopPolicy::LoopsAllowed, edges).expect("named graph")
}

/// One vertex, no loop.
pub fn t() -> FiniteGraph {
    loop_graph(1, &[])
}

/// One vertex with a loop.
pub fn t0() -> FiniteGraph {
    loop_graph(1, &[(0, 0)])
}

/// The two-vertex graphs `B1..B6`.
///
/// # Panics
/// If `i` is not in `1..=6`.
pub fn b(i: usize) -> FiniteGraph {
    let edges: &[(usize, usize)] = match i {
        1 => &[],
        2 => &[(0, 1)],
        3 => &[(0, 0)],
        4 => &[(0, 0), (1, 1)],
        5 => &[(0, 1), (1, 1)],
        6 => &[(0, 0), (0, 1), (1, 1)],
        _ => panic!("no graph B{i}"),
    };
    loop_graph(2, edges)
}

pub fn b_set() -> Vec<FiniteGraph> {
    (1..=6).map(b).collect()
}

/// Three looped vertices with edges `01` and `21`.
pub fn a3() -> FiniteGraph {
    loop_graph(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (2, 1)])
}

/// Complete loopless graph `K_n`.
pub fn complete(n: usize) -> FiniteGraph {
    FiniteGraph::from_edge_set(n, LoopPolicy::NoLoops, EdgeSet::all_pairs(n, false)).expect("K_n")
}

/// Loopless path `0-1-...-(n-1)`.
pub fn path(n: usize) -> FiniteGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|b| (b - 1, b)).collect();
    FiniteGraph::new(n, LoopPolicy::NoLoops, &edges).expect("path")
}

/// Loopless cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> FiniteGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|b| (b - 1, b)).collect();
    edges.push((0, n - 1));
    FiniteGraph::new(n, LoopPolicy::NoLoops, &edges).expect("cycle")
}

pub fn edgeless(n: usize, policy: LoopPolicy) -> FiniteGraph {
    FiniteGraph::edgeless(n, policy).expect("edgeless")
}

/// The one-point space.
pub fn t_space() -> FiniteSpace {
    FiniteSpace::indiscrete(1).expect("T")
}

/// Sierpiński space `{∅, {0}, {0,1}}`.
pub fn s2() -> FiniteSpace {
    FiniteSpace::from_family(2, SetFamily::from_sets([0, 0b01, 0b11])).expect("S2")
}

pub fn i2() -> FiniteSpace {
    FiniteSpace::indiscrete(2).expect("I2")
}

pub fn d2() -> FiniteSpace {
    FiniteSpace::discrete(2).expect("D2")
}

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::graph::EdgeSet;
use super::iso::{canonical_space, is_canonical_graph};
use super::{FiniteGraph, FiniteSpace, LoopPolicy, SetFamily, StructureError, MAX_GRAPH_VERTICES, MAX_SPACE_POINTS};
use crate::bits;

pub const DEFAULT_GRAPH_BOUND: usize = 6;
pub const DEFAULT_SPACE_BOUND: usize = 4;

/// One canonical graph per isomorphism class on `n` vertices, sorted.
pub fn enumerate_graphs(n: usize, policy: LoopPolicy) -> Result<Vec<FiniteGraph>, StructureError> {
    enumerate_graphs_bounded(n, policy, DEFAULT_GRAPH_BOUND)
}

pub fn enumerate_graphs_bounded(
    n: usize,
    policy: LoopPolicy,
    bound: usize,
) -> Result<Vec<FiniteGraph>, StructureError> {
    if n > bound || n > MAX_GRAPH_VERTICES {
        return Err(StructureError::BoundExceeded { n, bound: bound.min(MAX_GRAPH_VERTICES) });
    }
    if n == 0 {
        return Err(StructureError::Empty);
    }
    let slots = EdgeSet::all_pairs(n, policy == LoopPolicy::LoopsAllowed).pairs();
    let total: u64 = 1 << slots.len();
    let mut out: Vec<FiniteGraph> = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let edges =
                EdgeSet::from_pairs(slots.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p));
            let g = FiniteGraph::from_parts_unchecked(n, policy, edges);
            is_canonical_graph(&g).then_some(g)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All graphs with `1..=max_n` vertices, up to isomorphism.
pub fn enumerate_graphs_upto(max_n: usize, policy: LoopPolicy) -> Result<Vec<FiniteGraph>, StructureError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs_bounded(n, policy, max_n)?);
    }
    Ok(out)
}

/// One canonical space per homeomorphism class on `n` points, sorted.
pub fn enumerate_spaces(n: usize) -> Result<Vec<FiniteSpace>, StructureError> {
    enumerate_spaces_bounded(n, DEFAULT_SPACE_BOUND)
}

pub fn enumerate_spaces_bounded(n: usize, bound: usize) -> Result<Vec<FiniteSpace>, StructureError> {
    if n > bound || n > MAX_SPACE_POINTS {
        return Err(StructureError::BoundExceeded { n, bound: bound.min(MAX_SPACE_POINTS) });
    }
    if n == 0 {
        return Err(StructureError::Empty);
    }
    // Every topology is reached from the indiscrete one by adding one set at a
    // time, and adding a set commutes with relabeling, so the search can stay
    // on canonical forms.
    let start = FiniteSpace::indiscrete(n)?;
    let mut seen: BTreeSet<FiniteSpace> = BTreeSet::from([start]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let next: HashSet<FiniteSpace> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                let opens = x.opens();
                (1..bits::full(n))
                    .filter(move |&s| !opens.contains(s))
                    .map(move |s| canonical_space(&FiniteSpace::from_parts_unchecked(n, opens.close_with(s))))
            })
            .collect();
        frontier = next.into_iter().filter(|x| seen.insert(*x)).collect();
    }
    Ok(seen.into_iter().collect())
}

pub fn enumerate_spaces_upto(max_n: usize) -> Result<Vec<FiniteSpace>, StructureError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_spaces_bounded(n, max_n)?);
    }
    Ok(out)
}

/// Every topology on `0..n` (labeled, not up to homeomorphism).
pub fn labeled_topologies(n: usize) -> Vec<SetFamily> {
    let start = SetFamily::indiscrete(n);
    let mut seen: BTreeSet<SetFamily> = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(f) = stack.pop() {
        for s in 1..bits::full(n) {
            if !f.contains(s) {
                let g = f.close_with(s);
                if seen.insert(g) {
                    stack.push(g);
                }
            }
        }
    }
    seen.into_iter().collect()
}

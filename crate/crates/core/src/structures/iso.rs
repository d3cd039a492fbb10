//! Isomorphism, homeomorphism and canonical forms.

use super::graph::EdgeSet;
use super::{FiniteGraph, FiniteSpace, SetFamily, StructureError};
use crate::bits;

/// Advances `p` to the next permutation in lexicographic order.
/// Returns `false` (leaving `p` sorted) after the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Depth-first search for a bijection `0..n → 0..n` in lexicographic order.
/// `ok(partial, x, y)` decides whether `x ↦ y` is compatible with the
/// assignments already made to `0..x`.
fn search_bijection<F>(n: usize, mut ok: F) -> Option<Vec<usize>>
where
    F: FnMut(&[usize], usize, usize) -> bool,
{
    fn rec<F: FnMut(&[usize], usize, usize) -> bool>(
        x: usize,
        n: usize,
        used: &mut [bool],
        map: &mut Vec<usize>,
        ok: &mut F,
    ) -> bool {
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || !ok(map, x, y) {
                continue;
            }
            used[y] = true;
            map.push(y);
            if rec(x + 1, n, used, map, ok) {
                return true;
            }
            map.pop();
            used[y] = false;
        }
        false
    }
    let mut used = vec![false; n];
    let mut map = Vec::with_capacity(n);
    rec(0, n, &mut used, &mut map, &mut ok).then_some(map)
}

/// Lexicographically least isomorphism `G → H`, if any.
pub fn iso_graphs(g: &FiniteGraph, h: &FiniteGraph) -> Result<Option<Vec<usize>>, StructureError> {
    if g.policy() != h.policy() {
        return Err(StructureError::PolicyMismatch);
    }
    if g.n() != h.n() || g.edges().len() != h.edges().len() {
        return Ok(None);
    }
    let degree = |x: &FiniteGraph, a: usize| (x.neighbourhood(a).count_ones(), x.has_edge(a, a));
    let dg: Vec<_> = (0..g.n()).map(|a| degree(g, a)).collect();
    let dh: Vec<_> = (0..h.n()).map(|a| degree(h, a)).collect();
    Ok(search_bijection(g.n(), |map, x, y| {
        dg[x] == dh[y] && map.iter().enumerate().all(|(a, &b)| g.has_edge(a, x) == h.has_edge(b, y))
    }))
}

/// Lexicographically least homeomorphism `X → Y`, if any.
///
/// A finite topology is determined by its minimal neighbourhoods, so it is
/// enough to match the specialization preorder pointwise.
pub fn homeo_spaces(x: &FiniteSpace, y: &FiniteSpace) -> Option<Vec<usize>> {
    if x.n() != y.n() || x.opens().len() != y.opens().len() {
        return None;
    }
    let nx = x.neighbourhoods();
    let ny = y.neighbourhoods();
    let sig = |nb: &[u32], a: usize| {
        let up = nb.iter().filter(|&&u| bits::contains(u, a)).count();
        (nb[a].count_ones(), up)
    };
    let sx: Vec<_> = (0..x.n()).map(|a| sig(&nx, a)).collect();
    let sy: Vec<_> = (0..y.n()).map(|a| sig(&ny, a)).collect();
    search_bijection(x.n(), |map, a, b| {
        sx[a] == sy[b]
            && bits::contains(nx[a], a) == bits::contains(ny[b], b)
            && map.iter().enumerate().all(|(c, &d)| {
                bits::contains(nx[a], c) == bits::contains(ny[b], d)
                    && bits::contains(nx[c], a) == bits::contains(ny[d], b)
            })
    })
}

pub fn is_iso_graphs(g: &FiniteGraph, h: &FiniteGraph) -> bool {
    matches!(iso_graphs(g, h), Ok(Some(_)))
}

pub fn is_homeomorphic(x: &FiniteSpace, y: &FiniteSpace) -> bool {
    homeo_spaces(x, y).is_some()
}

/// The isomorphic copy with the least edge encoding.
pub fn canonical_graph(g: &FiniteGraph) -> FiniteGraph {
    let pairs = g.edges().pairs();
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut best = g.edges();
    loop {
        let e = EdgeSet::from_pairs(pairs.iter().map(|&(a, b)| (perm[a], perm[b])));
        if e < best {
            best = e;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    FiniteGraph::from_parts_unchecked(g.n(), g.policy(), best)
}

/// Whether no relabeling gives a smaller edge encoding.
pub fn is_canonical_graph(g: &FiniteGraph) -> bool {
    let pairs = g.edges().pairs();
    let mut perm: Vec<usize> = (0..g.n()).collect();
    while next_permutation(&mut perm) {
        let e = EdgeSet::from_pairs(pairs.iter().map(|&(a, b)| (perm[a], perm[b])));
        if e < g.edges() {
            return false;
        }
    }
    true
}

/// The homeomorphic copy with the least open-set encoding.
pub fn canonical_space(x: &FiniteSpace) -> FiniteSpace {
    let sets = x.opens().sets();
    let mut perm: Vec<usize> = (0..x.n()).collect();
    let mut best = x.opens();
    loop {
        let f = SetFamily::from_sets(sets.iter().map(|&s| bits::image(s, &perm)));
        if f < best {
            best = f;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    FiniteSpace::from_parts_unchecked(x.n(), best)
}

//! The ideal-hereditary radicals of spaces (a-e) and of graphs with loops (a-h).

use super::engine::{Provenance, RadicalAssignment};
use super::kind::{LoopGraphs, Spaces};
use super::RadicalError;
use crate::bits;
use crate::error::CongruenceError;
use crate::graph_congruence::{self as gc, GraphCongruence};
use crate::structures::{EdgeSet, FiniteGraph, FiniteSpace, LoopPolicy, SetFamily};
use crate::topo_congruence::TopoCongruence;
use crate::Partition;

pub const TOPO_IDS: [char; 5] = ['a', 'b', 'c', 'd', 'e'];
pub const GRAPH_IDS: [char; 8] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'];

fn parse_id(id: &str, ids: &[char]) -> Result<char, RadicalError> {
    let mut chars = id.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if ids.contains(&c) => Ok(c),
        _ => Err(RadicalError::BadCatalogId(id.to_string())),
    }
}

fn topo_entry(x: &FiniteSpace, id: char) -> TopoCongruence {
    let n = x.n();
    match id {
        'a' => TopoCongruence::universal(x),
        // points with the same open sets
        'b' => TopoCongruence::new(Partition::from_labels(&x.neighbourhoods()), x.opens()),
        'c' => TopoCongruence::identity(x),
        'd' => TopoCongruence::new(Partition::discrete(n), SetFamily::indiscrete(n)),
        'e' => {
            let ctop = if x.is_t1() { x.opens() } else { SetFamily::indiscrete(n) };
            TopoCongruence::new(Partition::discrete(n), ctop)
        }
        _ => unreachable!("catalog id checked"),
    }
}

pub fn topo_catalog(x: &FiniteSpace, id: &str) -> Result<TopoCongruence, RadicalError> {
    let c = topo_entry(x, parse_id(id, &TOPO_IDS)?);
    crate::topo_congruence::validate(x, &c)?;
    Ok(c)
}

pub fn topo_catalog_rule(id: &str) -> Result<RadicalAssignment<Spaces>, RadicalError> {
    let c = parse_id(id, &TOPO_IDS)?;
    Ok(RadicalAssignment::new(Provenance::Catalog(c), move |x| Ok(topo_entry(x, c))))
}

fn graph_entry(g: &FiniteGraph, id: char) -> GraphCongruence {
    let n = g.n();
    let e = g.edges();
    let loops = g.loop_set();
    let looped = |mask: u32| EdgeSet::from_pairs(bits::members(mask).map(|t| (t, t)));
    match id {
        'a' => gc::strongify(g, &Partition::indiscrete(n)),
        'b' => GraphCongruence::universal(g),
        'c' => {
            let labels: Vec<usize> = (0..n).map(|a| if bits::contains(loops, a) { n } else { a }).collect();
            gc::strongify(g, &Partition::from_labels(&labels))
        }
        'd' => GraphCongruence::new(Partition::discrete(n), e.union(looped(g.vertex_mask() & !loops))),
        'e' => GraphCongruence::new(Partition::discrete(n), g.possible_edges()),
        'f' => GraphCongruence::identity(g),
        'g' => GraphCongruence::new(Partition::discrete(n), e.union(EdgeSet::product(loops, loops))),
        'h' => GraphCongruence::new(Partition::discrete(n), e.union(EdgeSet::product(loops, g.vertex_mask()))),
        _ => unreachable!("catalog id checked"),
    }
}

pub fn graph_catalog(g: &FiniteGraph, id: &str) -> Result<GraphCongruence, RadicalError> {
    let c = parse_id(id, &GRAPH_IDS)?;
    if g.policy() != LoopPolicy::LoopsAllowed {
        return Err(CongruenceError::PolicyMismatch.into());
    }
    let theta = graph_entry(g, c);
    gc::validate(g, &theta)?;
    Ok(theta)
}

pub fn graph_catalog_rule(id: &str) -> Result<RadicalAssignment<LoopGraphs>, RadicalError> {
    let c = parse_id(id, &GRAPH_IDS)?;
    Ok(RadicalAssignment::new(Provenance::Catalog(c), move |g| Ok(graph_entry(g, c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{semisimple_members, Universe};
    use crate::structures::named;

    #[test]
    fn topo_examples() {
        let s2 = named::s2();
        assert_eq!(topo_catalog(&s2, "b").unwrap(), TopoCongruence::identity(&s2));
        let i2 = named::i2();
        assert_eq!(topo_catalog(&i2, "b").unwrap(), TopoCongruence::universal(&i2));
        let e = topo_catalog(&s2, "e").unwrap();
        assert_eq!(e, TopoCongruence::new(Partition::discrete(2), SetFamily::indiscrete(2)));
        assert_eq!(topo_catalog(&named::d2(), "e").unwrap(), TopoCongruence::identity(&named::d2()));
        assert!(matches!(topo_catalog(&s2, "f"), Err(RadicalError::BadCatalogId(_))));
        assert!(matches!(topo_catalog(&s2, "ab"), Err(RadicalError::BadCatalogId(_))));
    }

    #[test]
    fn catalog_values_validate() {
        for x in Universe::<Spaces>::new(3).unwrap().members() {
            for id in TOPO_IDS {
                topo_catalog(x, &id.to_string()).unwrap();
            }
        }
        for g in Universe::<LoopGraphs>::new(3).unwrap().members() {
            for id in GRAPH_IDS {
                graph_catalog(g, &id.to_string()).unwrap();
            }
        }
    }

    #[test]
    fn graph_examples() {
        let b3 = named::b(3);
        assert_eq!(graph_catalog(&b3, "c").unwrap(), GraphCongruence::identity(&b3));
        let b4 = named::b(4);
        let c = graph_catalog(&b4, "c").unwrap();
        assert!(c.partition.is_indiscrete());
        assert_eq!(gc::quotient(&b4, &c).unwrap().0, named::t0());
        let b6 = named::b(6);
        assert_eq!(graph_catalog(&b6, "e").unwrap(), GraphCongruence::identity(&b6));
        assert!(graph_catalog(&named::complete(2), "a").is_err());
    }

    #[test]
    fn semisimple_traces_on_two_vertices() {
        let u = Universe::from_members(&named::b_set());
        let index = |g: &FiniteGraph| (1..=6).find(|&i| crate::structures::is_iso_graphs(g, &named::b(i))).unwrap();
        let expected: [(char, &[usize]); 8] = [
            ('a', &[]),
            ('b', &[]),
            ('c', &[1, 2, 3, 5]),
            ('d', &[4, 6]),
            ('e', &[6]),
            ('f', &[1, 2, 3, 4, 5, 6]),
            ('g', &[1, 2, 3, 5, 6]),
            ('h', &[1, 2, 5, 6]),
        ];
        for (id, want) in expected {
            let sigma = graph_catalog_rule(&id.to_string()).unwrap();
            let mut got: Vec<usize> = semisimple_members(&sigma, &u).unwrap().iter().map(index).collect();
            got.sort();
            assert_eq!(got, want, "catalog ({id})");
        }
    }
}

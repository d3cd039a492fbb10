//! Abstract classes of structures.

use std::fmt;
use std::sync::Arc;

use super::kind::{Kind, KindTag, LoopGraphs, LooplessGraphs, Spaces};
use super::RadicalError;
use crate::structures::{named, FiniteGraph, FiniteSpace};

type Member<S> = Arc<dyn Fn(&S) -> bool + Send + Sync>;

/// A named class of structures. Membership is decided on the canonical form,
/// and the trivial structure of the kind is always a member.
pub struct ClassPredicate<K: Kind> {
    name: String,
    member: Member<K::S>,
}

impl<K: Kind> Clone for ClassPredicate<K> {
    fn clone(&self) -> Self {
        ClassPredicate { name: self.name.clone(), member: Arc::clone(&self.member) }
    }
}

impl<K: Kind> fmt::Debug for ClassPredicate<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassPredicate({}, {})", K::TAG.keyword(), self.name)
    }
}

impl<K: Kind> ClassPredicate<K> {
    /// `rule` sees canonical representatives only.
    pub fn new(name: impl Into<String>, rule: impl Fn(&K::S) -> bool + Send + Sync + 'static) -> Self {
        ClassPredicate { name: name.into(), member: Arc::new(rule) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> KindTag {
        K::TAG
    }

    pub fn contains(&self, x: &K::S) -> bool {
        let c = K::canonical(x);
        c == K::canonical(&K::trivial()) || (self.member)(&c)
    }

    /// Members of the finite list `among`.
    pub fn filter<'a>(&self, among: &'a [K::S]) -> Vec<&'a K::S> {
        among.iter().filter(|x| self.contains(x)).collect()
    }

    pub fn all() -> Self {
        Self::new("all", |_| true)
    }

    /// One-element structures only.
    pub fn trivial() -> Self {
        Self::new("trivial", |x| K::size(x) == 1)
    }

    pub fn from_members(name: impl Into<String>, members: &[K::S]) -> Self {
        let set: Vec<K::S> = members.iter().map(K::canonical).collect();
        Self::new(name, move |x| set.contains(x))
    }
}

/// Built-in classes by name.
pub trait ClassCatalog: Kind + Sized {
    fn class_names() -> &'static [&'static str];
    fn lookup(name: &str) -> Option<ClassPredicate<Self>>;

    fn class(name: &str) -> Result<ClassPredicate<Self>, RadicalError> {
        if let Some(c) = Self::lookup(name) {
            return Ok(c);
        }
        let found = if Spaces::lookup(name).is_some() {
            Some(KindTag::TopoSpace)
        } else if LoopGraphs::lookup(name).is_some() {
            Some(KindTag::LoopGraph)
        } else if LooplessGraphs::lookup(name).is_some() {
            Some(KindTag::LooplessGraph)
        } else {
            None
        };
        match found {
            Some(tag) => Err(RadicalError::KindMismatch {
                name: name.to_string(),
                expected: Self::TAG.keyword(),
                found: tag.keyword(),
            }),
            None => Err(RadicalError::UnknownClass(name.to_string())),
        }
    }
}

impl ClassCatalog for Spaces {
    fn class_names() -> &'static [&'static str] {
        &["all", "trivial", "indiscrete", "t0", "t1", "discrete", "sierpinski"]
    }

    fn lookup(name: &str) -> Option<ClassPredicate<Spaces>> {
        let c = match name {
            "all" => ClassPredicate::all(),
            "trivial" => ClassPredicate::trivial(),
            "indiscrete" => ClassPredicate::new(name, FiniteSpace::is_indiscrete),
            "t0" => ClassPredicate::new(name, FiniteSpace::is_t0),
            "t1" => ClassPredicate::new(name, FiniteSpace::is_t1),
            "discrete" => ClassPredicate::new(name, FiniteSpace::is_discrete),
            // S2, I2 and the one-point space
            "sierpinski" => ClassPredicate::from_members(name, &[named::s2(), named::i2()]),
            _ => return None,
        };
        Some(c)
    }
}

fn all_looped(g: &FiniteGraph) -> bool {
    g.loop_set() == g.vertex_mask()
}

impl ClassCatalog for LoopGraphs {
    fn class_names() -> &'static [&'static str] {
        &["all", "trivial", "loops-everywhere", "at-most-one-loop", "complete-looped", "edgeless"]
    }

    fn lookup(name: &str) -> Option<ClassPredicate<LoopGraphs>> {
        let c = match name {
            "all" => ClassPredicate::all(),
            "trivial" => ClassPredicate::trivial(),
            "loops-everywhere" => ClassPredicate::new(name, |g: &FiniteGraph| g.n() == 1 || all_looped(g)),
            "at-most-one-loop" => ClassPredicate::new(name, |g: &FiniteGraph| g.loop_set().count_ones() <= 1),
            "complete-looped" => ClassPredicate::new(name, FiniteGraph::is_complete),
            "edgeless" => ClassPredicate::new(name, |g: &FiniteGraph| g.edges().is_empty()),
            _ => return None,
        };
        Some(c)
    }
}

/// Whether `g` has `k` pairwise adjacent vertices.
pub(crate) fn has_clique(g: &FiniteGraph, k: usize) -> bool {
    let n = g.n();
    if k > n {
        return false;
    }
    (1u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| crate::bits::members(s).all(|a| crate::bits::members(s).all(|b| a == b || g.has_edge(a, b))))
}

fn clique_order(name: &str, suffix: &str) -> Option<usize> {
    let k: usize = name.strip_prefix('k')?.strip_suffix(suffix)?.parse().ok()?;
    (k >= 1).then_some(k)
}

impl ClassCatalog for LooplessGraphs {
    fn class_names() -> &'static [&'static str] {
        &["all", "trivial", "complete", "edgeless", "k<n>-containing", "k<n>-free"]
    }

    fn lookup(name: &str) -> Option<ClassPredicate<LooplessGraphs>> {
        let c = match name {
            "all" => ClassPredicate::all(),
            "trivial" => ClassPredicate::trivial(),
            "complete" => ClassPredicate::new(name, FiniteGraph::is_complete),
            "edgeless" => ClassPredicate::new(name, |g: &FiniteGraph| g.edges().is_empty()),
            _ => {
                if let Some(k) = clique_order(name, "-containing") {
                    ClassPredicate::new(name, move |g: &FiniteGraph| has_clique(g, k))
                } else {
                    let k = clique_order(name, "-free")?;
                    ClassPredicate::new(name, move |g: &FiniteGraph| !has_clique(g, k))
                }
            }
        };
        Some(c)
    }
}

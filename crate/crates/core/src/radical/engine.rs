//! Radical assignments and the checks quantified over a finite universe.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::class::ClassPredicate;
use super::kind::{Kind, LooplessGraphs};
use super::{RadicalError, Verdict};
use crate::bits;
use crate::structures::{named, StructureError};

/// Where a radical assignment came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    FromClass(String),
    Catalog(char),
    Custom(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::FromClass(name) => write!(f, "class {name}"),
            Provenance::Catalog(id) => write!(f, "catalog ({id})"),
            Provenance::Custom(name) => write!(f, "{name}"),
        }
    }
}

type Rule<K> = Arc<dyn Fn(&<K as Kind>::S) -> Result<<K as Kind>::C, RadicalError> + Send + Sync>;

/// A rule assigning a congruence to each structure. Values are memoised.
pub struct RadicalAssignment<K: Kind> {
    provenance: Provenance,
    rule: Rule<K>,
    cache: Mutex<HashMap<K::S, K::C>>,
}

impl<K: Kind> RadicalAssignment<K> {
    pub fn new(
        provenance: Provenance,
        rule: impl Fn(&K::S) -> Result<K::C, RadicalError> + Send + Sync + 'static,
    ) -> Self {
        RadicalAssignment { provenance, rule: Arc::new(rule), cache: Mutex::new(HashMap::new()) }
    }

    /// The Hoehnke radical determined by `m`.
    pub fn from_class(m: &ClassPredicate<K>) -> Self {
        let m = m.clone();
        Self::new(Provenance::FromClass(m.name().to_string()), move |x| hoehnke_radical(x, &m))
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn eval(&self, x: &K::S) -> Result<K::C, RadicalError> {
        if let Some(c) = self.cache.lock().expect("cache lock").get(x) {
            return Ok(c.clone());
        }
        let c = (self.rule)(x)?;
        self.cache.lock().expect("cache lock").insert(x.clone(), c.clone());
        Ok(c)
    }
}

/// Canonical representatives of every structure with `1..=max_n` elements.
#[derive(Clone, Debug)]
pub struct Universe<K: Kind> {
    max_n: usize,
    members: Vec<K::S>,
}

impl<K: Kind> Universe<K> {
    pub fn new(max_n: usize) -> Result<Self, StructureError> {
        let mut members = Vec::new();
        for n in 1..=max_n {
            members.extend(K::enumerate(n, max_n)?);
        }
        Ok(Universe { max_n, members })
    }

    /// A universe listing exactly the given structures, canonicalised.
    pub fn from_members(list: &[K::S]) -> Self {
        let mut members: Vec<K::S> = list.iter().map(K::canonical).collect();
        members.sort();
        members.dedup();
        let max_n = members.iter().map(K::size).max().unwrap_or(0);
        Universe { max_n, members }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn members(&self) -> &[K::S] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Runs `check` on every item in parallel and reports the first failure in
/// list order.
fn first_witness<T, F>(items: &[T], check: F) -> Result<Verdict, RadicalError>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>, RadicalError> + Sync + Send,
{
    let results: Vec<Result<Option<String>, RadicalError>> = items.par_iter().map(check).collect();
    for r in results {
        if let Some(w) = r? {
            return Ok(Verdict::fail(w));
        }
    }
    Ok(Verdict::pass())
}

fn proper_subsets(n: usize) -> impl Iterator<Item = u32> {
    1u32..=bits::full(n)
}

/// Congruences on `x` whose quotient lies in `m`.
pub fn qualifying_congruences<K: Kind>(x: &K::S, m: &ClassPredicate<K>) -> Vec<K::C> {
    K::congruences(x).into_iter().filter(|c| m.contains(&K::quotient(x, c))).collect()
}

/// Meet of all congruences on `x` with quotient in `m`.
pub fn hoehnke_radical<K: Kind>(x: &K::S, m: &ClassPredicate<K>) -> Result<K::C, RadicalError> {
    let q = qualifying_congruences(x, m);
    if q.is_empty() {
        return Err(RadicalError::NoQualifyingCongruence(x.to_string()));
    }
    Ok(K::meet(x, &q))
}

/// `f(σx) ⊑ σy` for one surjective morphism `f: x → y`.
pub fn verify_h1<K: Kind>(sigma: &RadicalAssignment<K>, x: &K::S, y: &K::S, f: &[usize]) -> Result<bool, RadicalError> {
    use crate::error::CongruenceError;
    if f.len() != K::size(x) || f.iter().any(|&v| v >= K::size(y)) {
        return Err(CongruenceError::SizeMismatch { expected: K::size(x), got: f.len() }.into());
    }
    if bits::image(K::full(x), f) != K::full(y) {
        return Err(CongruenceError::NotSurjective.into());
    }
    if !K::is_morphism(x, y, f) {
        return Err(match K::TAG {
            super::KindTag::TopoSpace => CongruenceError::NotContinuous,
            _ => CongruenceError::NotHomomorphism,
        }
        .into());
    }
    Ok(K::image_below(x, y, f, &sigma.eval(x)?, &sigma.eval(y)?))
}

/// `σ(x/σx) = ι`.
pub fn verify_h2<K: Kind>(sigma: &RadicalAssignment<K>, x: &K::S) -> Result<bool, RadicalError> {
    let c = sigma.eval(x)?;
    K::validate(x, &c)?;
    let q = K::quotient(x, &c);
    Ok(sigma.eval(&q)? == K::identity(&q))
}

/// H1 over every surjective morphism between universe members.
pub fn h1_holds<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    first_witness(u.members(), |x| {
        let sx = sigma.eval(x)?;
        for y in u.members() {
            if K::size(y) > K::size(x) {
                continue;
            }
            let sy = sigma.eval(y)?;
            for f in K::surjections(x, y) {
                if !K::image_below(x, y, &f, &sx, &sy) {
                    return Ok(Some(format!("{x} onto {y} by {f:?}: image of {sx} is not below {sy}")));
                }
            }
        }
        Ok(None)
    })
}

pub fn h2_holds<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    first_witness(u.members(), |x| {
        if verify_h2(sigma, x)? {
            Ok(None)
        } else {
            let q = K::quotient(x, &sigma.eval(x)?);
            Ok(Some(format!("{x}: radical of the quotient {q} is {}", sigma.eval(&q)?)))
        }
    })
}

/// `x/σx` is trivial.
pub fn in_radical_class<K: Kind>(sigma: &RadicalAssignment<K>, x: &K::S) -> Result<bool, RadicalError> {
    Ok(K::partition(&sigma.eval(x)?).is_indiscrete())
}

/// `σx = ι`.
pub fn is_semisimple<K: Kind>(sigma: &RadicalAssignment<K>, x: &K::S) -> Result<bool, RadicalError> {
    Ok(sigma.eval(x)? == K::identity(x))
}

pub fn semisimple_members<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Vec<K::S>, RadicalError> {
    let mut out = Vec::new();
    for x in u.members() {
        if is_semisimple(sigma, x)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

pub fn radical_members<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Vec<K::S>, RadicalError> {
    let mut out = Vec::new();
    for x in u.members() {
        if in_radical_class(sigma, x)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

fn blocks_in_radical_class<K: Kind>(
    sigma: &RadicalAssignment<K>,
    x: &K::S,
    c: &K::C,
) -> Result<Option<u32>, RadicalError> {
    for block in K::partition(c).block_masks() {
        if !in_radical_class(sigma, &K::substructure(x, block))? {
            return Ok(Some(block));
        }
    }
    Ok(None)
}

/// Every strong congruence whose classes lie in the radical class is below
/// the radical.
pub fn is_complete<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    first_witness(u.members(), |x| {
        let sx = sigma.eval(x)?;
        for theta in K::strong_congruences(x) {
            if blocks_in_radical_class(sigma, x, &theta)?.is_none() && !K::leq(&theta, &sx) {
                return Ok(Some(format!("{x}: {theta} has radical classes but is not below {sx}")));
            }
        }
        Ok(None)
    })
}

/// Every class of the radical lies in the radical class.
pub fn is_idempotent<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    first_witness(u.members(), |x| {
        let sx = sigma.eval(x)?;
        Ok(blocks_in_radical_class(sigma, x, &sx)?
            .map(|b| format!("{x}: class {} of {sx} is not in the radical class", bits::show(b))))
    })
}

pub fn is_strong_everywhere<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    first_witness(u.members(), |x| {
        let sx = sigma.eval(x)?;
        Ok((!K::is_strong(x, &sx)).then(|| format!("{x}: {sx} is not strong")))
    })
}

/// Complete, idempotent and strong, reported in that order.
pub fn is_ka<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    let v = is_complete(sigma, u)?;
    if !v.holds {
        return Ok(v);
    }
    let v = is_idempotent(sigma, u)?;
    if !v.holds {
        return Ok(v);
    }
    is_strong_everywhere(sigma, u)
}

/// Structures with no quotient of size at least two in `m`.
pub fn u_class<K: Kind>(m: &ClassPredicate<K>) -> ClassPredicate<K> {
    let inner = m.clone();
    ClassPredicate::new(format!("U({})", m.name()), move |x| {
        K::congruences(x).iter().all(|c| {
            let q = K::quotient(x, c);
            K::size(&q) < 2 || !inner.contains(&q)
        })
    })
}

/// Structures with no substructure of size at least two in `m`.
pub fn s_class<K: Kind>(m: &ClassPredicate<K>) -> ClassPredicate<K> {
    let inner = m.clone();
    ClassPredicate::new(format!("S({})", m.name()), move |x| {
        proper_subsets(K::size(x)).filter(|s| s.count_ones() >= 2).all(|s| !inner.contains(&K::substructure(x, s)))
    })
}

pub fn u_operator<K: Kind>(m: &ClassPredicate<K>, u: &Universe<K>) -> Vec<K::S> {
    u_class(m).filter(u.members()).into_iter().cloned().collect()
}

pub fn s_operator<K: Kind>(m: &ClassPredicate<K>, u: &Universe<K>) -> Vec<K::S> {
    s_class(m).filter(u.members()).into_iter().cloned().collect()
}

fn same_on<K: Kind>(a: &ClassPredicate<K>, b: &ClassPredicate<K>, u: &Universe<K>) -> Verdict {
    let found = u.members().par_iter().find_first(|x| a.contains(x) != b.contains(x));
    match found {
        Some(x) => {
            Verdict::fail(format!("{x}: {} says {}, {} says {}", a.name(), a.contains(x), b.name(), b.contains(x)))
        }
        None => Verdict::pass(),
    }
}

/// Every quotient of size at least two has a non-trivial `C`-congruence.
fn congruence_form<K: Kind>(c: &ClassPredicate<K>, x: &K::S) -> Result<bool, RadicalError> {
    for theta in K::congruences(x) {
        let q = K::quotient(x, &theta);
        if K::size(&q) < 2 {
            continue;
        }
        let mut found = false;
        for alpha in K::strong_congruences(&q) {
            if !K::partition(&alpha).is_discrete() && c_congruence_p(c, &q, &alpha)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C = USC` on the universe. For kinds with joins the characterisation by
/// `C`-congruences is evaluated too, and disagreement is reported as a defect.
pub fn is_connectedness<K: Kind>(c: &ClassPredicate<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    let usc = u_class(&s_class(c));
    let fixed_point = same_on(c, &usc, u);
    if K::HAS_JOIN {
        let by_congruences =
            first_witness(u.members(), |x| Ok((congruence_form(c, x)? != c.contains(x)).then(|| x.to_string())))?;
        if by_congruences.holds != fixed_point.holds {
            return Err(RadicalError::Defect(format!(
                "connectedness tests disagree for {}: fixed point {}, congruence form {}",
                c.name(),
                fixed_point.holds,
                by_congruences.holds
            )));
        }
    }
    Ok(fixed_point)
}

/// `D = SUD` on the universe.
pub fn is_disconnectedness<K: Kind>(d: &ClassPredicate<K>, u: &Universe<K>) -> Verdict {
    same_on(d, &s_class(&u_class(d)), u)
}

/// `rho` is strong and each of its classes lies in `c`. One-element classes
/// always qualify, so the identity is a `C`-congruence.
pub fn c_congruence_p<K: Kind>(c: &ClassPredicate<K>, x: &K::S, rho: &K::C) -> Result<bool, RadicalError> {
    K::validate(x, rho)?;
    if !K::is_strong(x, rho) {
        return Ok(false);
    }
    Ok(K::partition(rho).block_masks().into_iter().all(|b| b.count_ones() == 1 || c.contains(&K::substructure(x, b))))
}

pub fn c_congruences<K: Kind>(c: &ClassPredicate<K>, x: &K::S) -> Result<Vec<K::C>, RadicalError> {
    let mut out = Vec::new();
    for rho in K::strong_congruences(x) {
        if c_congruence_p(c, x, &rho)? {
            out.push(rho);
        }
    }
    Ok(out)
}

/// Join of all `C`-congruences on `x`.
pub fn rho_sum<K: Kind>(c: &ClassPredicate<K>, x: &K::S) -> Result<K::C, RadicalError> {
    if !K::HAS_JOIN {
        return Err(RadicalError::KindUnsupported(K::TAG.keyword()));
    }
    let list = c_congruences(c, x)?;
    K::join(x, &list).ok_or(RadicalError::KindUnsupported(K::TAG.keyword()))
}

fn heredity<K: Kind>(
    sigma: &RadicalAssignment<K>,
    u: &Universe<K>,
    restricted_below: bool,
    restricted_above: bool,
) -> Result<Verdict, RadicalError> {
    first_witness(u.members(), |x| {
        let sx = sigma.eval(x)?;
        for s in proper_subsets(K::size(x)) {
            let sub = K::substructure(x, s);
            let r = K::restrict(x, &sx, s);
            let ss = sigma.eval(&sub)?;
            if restricted_below && !K::leq(&r, &ss) {
                return Ok(Some(format!("{x} on {}: restriction {r} is not below {ss}", bits::show(s))));
            }
            if restricted_above && !K::leq(&ss, &r) {
                return Ok(Some(format!("{x} on {}: {ss} is not below restriction {r}", bits::show(s))));
            }
        }
        Ok(None)
    })
}

/// The radical of a structure restricts below the radical of each substructure.
pub fn r_hereditary<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    heredity(sigma, u, true, false)
}

/// The radical of each substructure is below the restricted radical.
pub fn s_hereditary<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    heredity(sigma, u, false, true)
}

pub fn ideal_hereditary<K: Kind>(sigma: &RadicalAssignment<K>, u: &Universe<K>) -> Result<Verdict, RadicalError> {
    heredity(sigma, u, true, true)
}

/// Members admitting a family of congruences with quotients in `m` and meet
/// the identity.
pub fn subdirect_closure<K: Kind>(m: &ClassPredicate<K>, u: &Universe<K>) -> Vec<K::S> {
    u.members().iter().filter(|&x| matches!(hoehnke_radical(x, m), Ok(c) if c == K::identity(x))).cloned().collect()
}

/// `C ∩ D` is trivial, `C ∪ D` is everything, `D = SC` and `C = UD`.
pub fn complementary_pair_check<K: Kind>(c: &ClassPredicate<K>, d: &ClassPredicate<K>, u: &Universe<K>) -> Verdict {
    let found = u.members().iter().find_map(|x| {
        let (in_c, in_d) = (c.contains(x), d.contains(x));
        if in_c && in_d && !K::is_trivial(x) {
            Some(format!("{x} lies in both {} and {}", c.name(), d.name()))
        } else if !in_c && !in_d {
            Some(format!("{x} lies in neither {} nor {}", c.name(), d.name()))
        } else {
            None
        }
    });
    if let Some(w) = found {
        return Verdict::fail(w);
    }
    same_on(d, &s_class(c), u).and(|| same_on(c, &u_class(d), u))
}

/// With every complete graph in `m`, the radical is the identity everywhere.
pub fn loopless_degeneracy_check(
    u: &Universe<LooplessGraphs>,
    m: &ClassPredicate<LooplessGraphs>,
) -> Result<Verdict, RadicalError> {
    let missing: Vec<String> =
        (1..=u.max_n()).filter(|&k| !m.contains(&named::complete(k))).map(|k| format!("K{k}")).collect();
    if !missing.is_empty() {
        return Err(RadicalError::LemmaConditionFailed(missing.join(", ")));
    }
    first_witness(u.members(), |g| {
        let r = hoehnke_radical(g, m)?;
        Ok((r != LooplessGraphs::identity(g)).then(|| format!("{g}: radical is {r}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_congruence::GraphCongruence;
    use crate::radical::{ClassCatalog, LoopGraphs, Spaces};
    use crate::structures::{FiniteGraph, SetFamily};
    use crate::topo_congruence::TopoCongruence;
    use crate::Partition;

    fn spaces(n: usize) -> Universe<Spaces> {
        Universe::new(n).unwrap()
    }

    #[test]
    fn hoehnke_examples() {
        let t0 = Spaces::class("t0").unwrap();
        assert_eq!(hoehnke_radical(&named::i2(), &t0).unwrap(), TopoCongruence::universal(&named::i2()));
        let ind = Spaces::class("indiscrete").unwrap();
        let d2 = named::d2();
        let expected = TopoCongruence::new(Partition::discrete(2), SetFamily::indiscrete(2));
        assert_eq!(hoehnke_radical(&d2, &ind).unwrap(), expected);
        let complete = LooplessGraphs::class("complete").unwrap();
        for g in Universe::<LooplessGraphs>::new(4).unwrap().members() {
            assert_eq!(hoehnke_radical(g, &complete).unwrap(), GraphCongruence::identity(g));
        }
    }

    #[test]
    fn hoehnke_radical_is_minimal_and_h_radical() {
        let u = spaces(3);
        for name in Spaces::class_names() {
            let m = Spaces::class(name).unwrap();
            let sigma = RadicalAssignment::from_class(&m);
            for x in u.members() {
                let r = sigma.eval(x).unwrap();
                for theta in qualifying_congruences(x, &m) {
                    assert!(r.leq(&theta));
                }
            }
            assert!(h2_holds(&sigma, &u).unwrap().holds, "{name}");
            assert!(h1_holds(&sigma, &u).unwrap().holds, "{name}");
        }
    }

    #[test]
    fn broken_universal_rule_fails_h2() {
        // universal on one vertex, edge-saturated single class elsewhere
        let sigma = RadicalAssignment::<LoopGraphs>::new(Provenance::Custom("broken".into()), |g| {
            Ok(if g.n() == 1 {
                GraphCongruence::universal(g)
            } else {
                crate::graph_congruence::strongify(g, &Partition::indiscrete(g.n()))
            })
        });
        assert!(!verify_h2(&sigma, &named::b(1)).unwrap());
        let u = Universe::from_members(&named::b_set());
        let v = h2_holds(&sigma, &u).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().starts_with(&named::b(1).to_string()));
    }

    #[test]
    fn universal_graph_rule_satisfies_h2() {
        // the quotient by the universal congruence is the looped vertex
        let sigma = RadicalAssignment::<LoopGraphs>::new(Provenance::Custom("upsilon".into()), |g| {
            Ok(GraphCongruence::universal(g))
        });
        assert!(verify_h2(&sigma, &named::b(1)).unwrap());
        assert!(h2_holds(&sigma, &Universe::new(3).unwrap()).unwrap().holds);
    }

    #[test]
    fn identity_rule_satisfies_h1() {
        let sigma = RadicalAssignment::<LoopGraphs>::new(Provenance::Custom("iota".into()), |g| {
            Ok(GraphCongruence::identity(g))
        });
        let u = Universe::<LoopGraphs>::new(2).unwrap();
        assert!(h1_holds(&sigma, &u).unwrap().holds);
        let f = [0, 0];
        assert!(verify_h1(&sigma, &named::b(4), &named::t0(), &f).unwrap());
        assert!(verify_h1(&sigma, &named::b(4), &named::t(), &f).is_err());
    }

    #[test]
    fn edgeless_and_complete_operators() {
        let u = Universe::<LooplessGraphs>::new(3).unwrap();
        let complete = LooplessGraphs::class("complete").unwrap();
        let d = s_operator(&complete, &u);
        assert!(d.iter().all(|g| g.edges().is_empty()));
        assert_eq!(d.len(), 3);
        let dclass = ClassPredicate::from_members("D", &d);
        let c = u_operator(&dclass, &u);
        let expected: Vec<FiniteGraph> =
            u.members().iter().filter(|g| g.n() == 1 || !g.edges().is_empty()).cloned().collect();
        assert_eq!(c, expected);
        let all = ClassPredicate::<LooplessGraphs>::all();
        assert!(u_operator(&all, &u).iter().all(|g| g.n() == 1));
    }

    #[test]
    fn connectedness_and_disconnectedness() {
        let u = Universe::<LooplessGraphs>::new(3).unwrap();
        let c = LooplessGraphs::class("k2-containing").unwrap();
        assert!(is_connectedness(&c, &u).unwrap().holds);
        let d = LooplessGraphs::class("k2-free").unwrap();
        assert!(is_disconnectedness(&d, &u).holds);
        assert!(complementary_pair_check(&c, &d, &u).holds);

        let su = spaces(3);
        let ind = Spaces::class("indiscrete").unwrap();
        assert!(is_connectedness(&ind, &su).unwrap().holds);
        // every space maps onto I2, so only T has no indiscrete image
        assert!(!is_disconnectedness(&ind, &su).holds);
        let t0 = Spaces::class("t0").unwrap();
        assert!(is_disconnectedness(&t0, &su).holds);
        assert!(!complementary_pair_check(&ind, &t0, &su).holds);
        let disc = Spaces::class("discrete").unwrap();
        assert!(!is_connectedness(&disc, &su).unwrap().holds);
    }

    #[test]
    fn c_congruence_sums() {
        let ind = Spaces::class("indiscrete").unwrap();
        assert_eq!(rho_sum(&ind, &named::i2()).unwrap(), TopoCongruence::universal(&named::i2()));
        assert_eq!(rho_sum(&ind, &named::d2()).unwrap(), TopoCongruence::identity(&named::d2()));
        let le = LoopGraphs::class("loops-everywhere").unwrap();
        let b4 = named::b(4);
        let expected = crate::graph_congruence::strongify(&b4, &Partition::indiscrete(2));
        assert_eq!(rho_sum(&le, &b4).unwrap(), expected);
        let c = LooplessGraphs::class("complete").unwrap();
        assert!(matches!(rho_sum(&c, &named::complete(2)), Err(RadicalError::KindUnsupported(_))));
        let bad = GraphCongruence::new(Partition::indiscrete(2), crate::structures::EdgeSet::EMPTY);
        assert!(c_congruence_p(&le, &b4, &bad).is_err());
    }

    #[test]
    fn subdirect_closures() {
        let su = spaces(3);
        let m = Spaces::class("sierpinski").unwrap();
        assert_eq!(subdirect_closure(&m, &su).len(), su.len());
        let triv = ClassPredicate::<Spaces>::trivial();
        let closure = subdirect_closure(&triv, &su);
        assert!(closure.iter().all(|x| x.n() == 1));
        let lu = Universe::<LooplessGraphs>::new(4).unwrap();
        let complete = LooplessGraphs::class("complete").unwrap();
        assert_eq!(subdirect_closure(&complete, &lu).len(), lu.len());
    }

    #[test]
    fn degeneracy() {
        let u = Universe::<LooplessGraphs>::new(4).unwrap();
        for name in ["complete", "all"] {
            let m = LooplessGraphs::class(name).unwrap();
            assert!(loopless_degeneracy_check(&u, &m).unwrap().holds);
        }
        let edgeless = LooplessGraphs::class("edgeless").unwrap();
        assert!(matches!(loopless_degeneracy_check(&u, &edgeless), Err(RadicalError::LemmaConditionFailed(_))));
        assert!(matches!(
            hoehnke_radical(&named::complete(2), &edgeless),
            Err(RadicalError::NoQualifyingCongruence(_))
        ));
    }

    #[test]
    fn universal_space_rule_is_ideal_hereditary() {
        let sigma = RadicalAssignment::<Spaces>::new(Provenance::Custom("upsilon".into()), |x| {
            Ok(TopoCongruence::universal(x))
        });
        assert!(ideal_hereditary(&sigma, &spaces(3)).unwrap().holds);
    }

    #[test]
    fn universe_from_members_canonicalises() {
        let u = Universe::<LoopGraphs>::from_members(&[named::b(5), named::b(5), named::t0()]);
        assert_eq!(u.len(), 2);
        assert_eq!(u.max_n(), 2);
    }
}

//! Congruences on finite topological spaces.
//!
//! A congruence is a pair `(∼, 𝕋)` of a partition of the points and a
//! topology `𝕋 ⊆ 𝒯` all of whose members are unions of classes.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits;
use crate::error::CongruenceError;
use crate::partition::Partition;
use crate::structures::{homeo_spaces, named, FiniteSpace, SetFamily, StructureError};
use crate::subdirect::Subdirect;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TopoCongruence {
    pub partition: Partition,
    pub ctop: SetFamily,
}

impl TopoCongruence {
    pub fn new(partition: Partition, ctop: SetFamily) -> Self {
        TopoCongruence { partition, ctop }
    }

    /// `ι = (≗, 𝒯)`.
    pub fn identity(x: &FiniteSpace) -> Self {
        Self::new(Partition::discrete(x.n()), x.opens())
    }

    /// `υ = (↭, I_X)`.
    pub fn universal(x: &FiniteSpace) -> Self {
        Self::new(Partition::indiscrete(x.n()), SetFamily::indiscrete(x.n()))
    }

    /// `ρ ⊑ γ`: finer partition and larger topology.
    pub fn leq(&self, other: &TopoCongruence) -> bool {
        self.partition.refines(&other.partition) && other.ctop.is_subset(self.ctop)
    }
}

impl fmt::Display for TopoCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.partition, self.ctop)
    }
}

pub fn validate(x: &FiniteSpace, rho: &TopoCongruence) -> Result<(), CongruenceError> {
    if rho.partition.len() != x.n() {
        return Err(CongruenceError::SizeMismatch { expected: x.n(), got: rho.partition.len() });
    }
    if !rho.ctop.is_subset(SetFamily::discrete(x.n())) || crate::structures::check_topology(x.n(), rho.ctop).is_err() {
        return Err(CongruenceError::NotATopology);
    }
    if !rho.ctop.is_subset(x.opens()) {
        return Err(CongruenceError::NotSubTopology);
    }
    if let Some(u) = rho.ctop.sets().into_iter().find(|&u| !rho.partition.is_saturated(u)) {
        return Err(CongruenceError::NotSaturated(bits::show(u)));
    }
    Ok(())
}

fn checked(x: &FiniteSpace, rho: &TopoCongruence) -> Result<(), CongruenceError> {
    validate(x, rho).map_err(CongruenceError::invalid)
}

/// Opens of `x` that are unions of classes of `p`.
pub fn saturated_opens(x: &FiniteSpace, p: &Partition) -> SetFamily {
    SetFamily::from_sets(x.opens().sets().into_iter().filter(|&u| p.is_saturated(u)))
}

/// The strong congruence determined by `p`.
pub fn strongify(x: &FiniteSpace, p: &Partition) -> TopoCongruence {
    TopoCongruence::new(p.clone(), saturated_opens(x, p))
}

pub fn is_strong(x: &FiniteSpace, rho: &TopoCongruence) -> bool {
    rho.ctop == saturated_opens(x, &rho.partition)
}

fn check_map(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> Result<(), CongruenceError> {
    if f.len() != x.n() || f.iter().any(|&v| v >= y.n()) {
        return Err(StructureError::OutOfRange.into());
    }
    if !x.is_continuous(y, f) {
        return Err(CongruenceError::NotContinuous);
    }
    Ok(())
}

/// `ker f = (∼_f, {f⁻¹(V)})`.
pub fn kernel(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> Result<TopoCongruence, CongruenceError> {
    check_map(x, y, f)?;
    Ok(TopoCongruence::new(Partition::from_labels(f), y.opens().preimage(f)))
}

/// `sker f`: the strong congruence with the partition of `ker f`.
pub fn strong_kernel(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> Result<TopoCongruence, CongruenceError> {
    check_map(x, y, f)?;
    Ok(strongify(x, &Partition::from_labels(f)))
}

/// Weak quotient `X/ρ` and the projection onto it.
pub fn quotient(x: &FiniteSpace, rho: &TopoCongruence) -> Result<(FiniteSpace, Vec<usize>), CongruenceError> {
    checked(x, rho)?;
    let proj = rho.partition.labels().to_vec();
    let opens = rho.ctop.image(&proj);
    let q = FiniteSpace::from_family(rho.partition.num_blocks(), opens)?;
    Ok((q, proj))
}

/// Greatest lower bound under `⊑`.
pub fn meet(x: &FiniteSpace, list: &[TopoCongruence]) -> Result<TopoCongruence, CongruenceError> {
    let (first, rest) = list.split_first().ok_or(CongruenceError::EmptyList)?;
    for r in list {
        checked(x, r)?;
    }
    let mut p = first.partition.clone();
    let mut sub = first.ctop;
    for r in rest {
        p = p.meet(&r.partition);
        sub = sub.union(r.ctop);
    }
    Ok(TopoCongruence::new(p, sub.generated_topology(x.n())))
}

/// Least upper bound under `⊑`.
pub fn join(x: &FiniteSpace, list: &[TopoCongruence]) -> Result<TopoCongruence, CongruenceError> {
    let (first, rest) = list.split_first().ok_or(CongruenceError::EmptyList)?;
    for r in list {
        checked(x, r)?;
    }
    let mut p = first.partition.clone();
    let mut top = first.ctop;
    for r in rest {
        p = p.join(&r.partition);
        top = top.intersection(r.ctop);
    }
    Ok(TopoCongruence::new(p, top))
}

/// `S ∩ ρ` on the subspace `S`.
pub fn restrict(x: &FiniteSpace, rho: &TopoCongruence, subset: u32) -> Result<TopoCongruence, CongruenceError> {
    checked(x, rho)?;
    if subset == 0 {
        return Err(StructureError::EmptySubset.into());
    }
    if subset & !x.full() != 0 {
        return Err(StructureError::OutOfRange.into());
    }
    let members: Vec<usize> = bits::members(subset).collect();
    Ok(TopoCongruence::new(rho.partition.restrict(&members), rho.ctop.trace(subset)))
}

/// `β/α` on `X/α`, for `α ⊑ β`.
pub fn quotient_cong(
    x: &FiniteSpace,
    alpha: &TopoCongruence,
    beta: &TopoCongruence,
) -> Result<TopoCongruence, CongruenceError> {
    checked(x, alpha)?;
    checked(x, beta)?;
    if !alpha.leq(beta) {
        return Err(CongruenceError::NotContained);
    }
    let reps = alpha.partition.representatives();
    let key: Vec<usize> = reps.iter().map(|&r| beta.partition.block_of(r)).collect();
    Ok(TopoCongruence::new(Partition::from_labels(&key), beta.ctop.image(alpha.partition.labels())))
}

/// `f(ρ) = (ρ + ker f)/ker f`, carried onto `Y` along `[x] ↦ f(x)`.
pub fn image(
    x: &FiniteSpace,
    y: &FiniteSpace,
    f: &[usize],
    rho: &TopoCongruence,
) -> Result<TopoCongruence, CongruenceError> {
    let alpha = kernel(x, y, f)?;
    if bits::image(x.full(), f) != y.full() {
        return Err(CongruenceError::NotSurjective);
    }
    let sum = join(x, &[rho.clone(), alpha.clone()])?;
    let q = quotient_cong(x, &alpha, &sum)?;
    // block b of ker f corresponds to the point f(rep b) of Y
    let to_y: Vec<usize> = alpha.partition.representatives().iter().map(|&r| f[r]).collect();
    let mut key = vec![0; y.n()];
    for (b, &pt) in to_y.iter().enumerate() {
        key[pt] = q.partition.block_of(b);
    }
    Ok(TopoCongruence::new(Partition::from_labels(&key), q.ctop.image(&to_y)))
}

/// Whether the family meets to `ι`, with the factors and coordinate map.
pub fn check_subdirect(x: &FiniteSpace, list: &[TopoCongruence]) -> Result<Subdirect<FiniteSpace>, CongruenceError> {
    let m = meet(x, list)?;
    let mut factors = Vec::with_capacity(list.len());
    for r in list {
        factors.push(quotient(x, r)?.0);
    }
    let embedding = (0..x.n()).map(|p| list.iter().map(|r| r.partition.block_of(p)).collect()).collect();
    Ok(Subdirect { holds: m == TopoCongruence::identity(x), factors, embedding })
}

/// Every topology contained in `top` (a topology on `0..n`).
fn subtopologies(n: usize, top: SetFamily) -> Vec<SetFamily> {
    let start = SetFamily::indiscrete(n);
    let mut seen: BTreeSet<SetFamily> = BTreeSet::from([start]);
    let mut stack = vec![start];
    let candidates = top.sets();
    while let Some(f) = stack.pop() {
        for &s in &candidates {
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

/// All congruences on `x`, sorted.
pub fn congruences(x: &FiniteSpace) -> Vec<TopoCongruence> {
    let mut out = Vec::new();
    for p in Partition::all(x.n()) {
        let sat = saturated_opens(x, &p);
        for t in subtopologies(x.n(), sat) {
            out.push(TopoCongruence::new(p.clone(), t));
        }
    }
    out.sort();
    out
}

pub fn strong_congruences(x: &FiniteSpace) -> Vec<TopoCongruence> {
    let mut out: Vec<TopoCongruence> = Partition::all(x.n()).iter().map(|p| strongify(x, p)).collect();
    out.sort();
    out
}

/// Congruences with quotient `S2` or `I2` whose meet is `ι`.
///
/// Starts from every such congruence and drops members, last first, while
/// the meet stays `ι`.
pub fn sierpinski_decomposition(x: &FiniteSpace) -> Result<Vec<TopoCongruence>, CongruenceError> {
    if x.n() < 2 {
        return Err(CongruenceError::TrivialSpace);
    }
    let targets = [named::s2(), named::i2()];
    let mut chosen: Vec<TopoCongruence> = congruences(x)
        .into_iter()
        .filter(|r| {
            let q = quotient(x, r).expect("enumerated congruence").0;
            targets.iter().any(|t| homeo_spaces(&q, t).is_some())
        })
        .collect();
    let iota = TopoCongruence::identity(x);
    if chosen.is_empty() || meet(x, &chosen)? != iota {
        return Err(CongruenceError::SearchExhausted);
    }
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        let mut trial = chosen.clone();
        trial.remove(i);
        if !trial.is_empty() && meet(x, &trial)? == iota {
            chosen = trial;
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{check_topology, enumerate_spaces, is_homeomorphic, validate_space};

    fn tc(x: &FiniteSpace, blocks: &[&[usize]], opens: &[u32]) -> TopoCongruence {
        let r = TopoCongruence::new(
            Partition::from_blocks(x.n(), blocks).unwrap(),
            SetFamily::from_sets(opens.iter().copied()),
        );
        validate(x, &r).unwrap();
        r
    }

    /// Every (partition, family) pair checked against the definition directly.
    fn congruences_by_brute_force(x: &FiniteSpace) -> Vec<TopoCongruence> {
        let n = x.n();
        let mut out = Vec::new();
        for p in Partition::all(n) {
            for fam in 0..(1u64 << (1u32 << n)) {
                let f = SetFamily(fam);
                if check_topology(n, f).is_ok() && f.is_subset(x.opens()) && f.sets().iter().all(|&u| p.is_saturated(u))
                {
                    out.push(TopoCongruence::new(p.clone(), f));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn congruence_counts_on_two_points() {
        assert_eq!(congruences(&named::i2()).len(), 2);
        assert_eq!(congruences(&named::s2()).len(), 3);
        assert_eq!(congruences(&named::d2()).len(), 5);
        for n in 1..=3 {
            for x in enumerate_spaces(n).unwrap() {
                assert_eq!(congruences(&x), congruences_by_brute_force(&x));
            }
        }
    }

    #[test]
    fn validation_examples() {
        let s2 = named::s2();
        assert!(validate(&s2, &TopoCongruence::identity(&s2)).is_ok());
        assert!(validate(&s2, &TopoCongruence::universal(&s2)).is_ok());
        let bad = TopoCongruence::new(Partition::indiscrete(2), s2.opens());
        assert_eq!(validate(&s2, &bad), Err(CongruenceError::NotSaturated("{0}".into())));
        let too_big = TopoCongruence::new(Partition::discrete(2), SetFamily::discrete(2));
        assert_eq!(validate(&s2, &too_big), Err(CongruenceError::NotSubTopology));
    }

    #[test]
    fn strongify_examples() {
        let s2 = named::s2();
        assert_eq!(strongify(&s2, &Partition::discrete(2)), TopoCongruence::identity(&s2));
        let d2 = named::d2();
        assert_eq!(
            strongify(&d2, &Partition::indiscrete(2)),
            TopoCongruence::new(Partition::indiscrete(2), SetFamily::indiscrete(2))
        );
        let weak = TopoCongruence::new(Partition::discrete(2), SetFamily::indiscrete(2));
        assert!(!is_strong(&s2, &weak));
    }

    #[test]
    fn kernel_examples() {
        let (s2, d2) = (named::s2(), named::d2());
        let t = named::t_space();
        assert_eq!(kernel(&s2, &t, &[0, 0]).unwrap(), TopoCongruence::universal(&s2));
        assert_eq!(kernel(&d2, &s2, &[0, 1]).unwrap(), tc(&d2, &[&[0], &[1]], &[0, 1, 3]));
        assert_eq!(kernel(&s2, &s2, &[0, 1]).unwrap(), TopoCongruence::identity(&s2));
        assert_eq!(kernel(&s2, &d2, &[0, 1]), Err(CongruenceError::NotContinuous));
    }

    #[test]
    fn quotient_examples() {
        let s2 = named::s2();
        let (q, _) = quotient(&s2, &TopoCongruence::universal(&s2)).unwrap();
        assert_eq!(q, named::t_space());
        let d2 = named::d2();
        let (q, _) = quotient(&d2, &tc(&d2, &[&[0], &[1]], &[0, 3])).unwrap();
        assert_eq!(q, named::i2());
        let x = validate_space(3, &[0, 0b001, 0b011, 0b111]).unwrap();
        let (q, _) = quotient(&x, &tc(&x, &[&[0], &[1, 2]], &[0, 0b001, 0b111])).unwrap();
        assert!(is_homeomorphic(&q, &named::s2()));
    }

    #[test]
    fn meet_join_examples() {
        let d2 = named::d2();
        let weak = tc(&d2, &[&[0], &[1]], &[0, 3]);
        assert_eq!(meet(&d2, &[weak.clone(), TopoCongruence::universal(&d2)]).unwrap(), weak);
        for x in enumerate_spaces(2).unwrap() {
            for r in congruences(&x) {
                assert_eq!(join(&x, &[r.clone(), TopoCongruence::identity(&x)]).unwrap(), r);
                assert_eq!(meet(&x, &[r.clone(), TopoCongruence::universal(&x)]).unwrap(), r);
                assert_eq!(meet(&x, &[r.clone(), r.clone()]).unwrap(), r);
            }
        }
        assert_eq!(meet(&d2, &[]), Err(CongruenceError::EmptyList));
    }

    #[test]
    fn lattice_laws_exhaustive() {
        for n in 1..=3 {
            for x in enumerate_spaces(n).unwrap() {
                let all = congruences(&x);
                for a in &all {
                    for b in &all {
                        let m = meet(&x, &[a.clone(), b.clone()]).unwrap();
                        let j = join(&x, &[a.clone(), b.clone()]).unwrap();
                        validate(&x, &m).unwrap();
                        validate(&x, &j).unwrap();
                        assert!(m.leq(a) && m.leq(b) && a.leq(&j) && b.leq(&j));
                        for c in &all {
                            if c.leq(a) && c.leq(b) {
                                assert!(c.leq(&m));
                            }
                            if a.leq(c) && b.leq(c) {
                                assert!(j.leq(c));
                            }
                        }
                        if is_strong(&x, a) && is_strong(&x, b) {
                            assert!(is_strong(&x, &j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_quotients_characterize_bounds() {
        for n in 1..=3 {
            for x in enumerate_spaces(n).unwrap() {
                for r in congruences(&x) {
                    let (q, _) = quotient(&x, &r).unwrap();
                    assert_eq!(is_homeomorphic(&q, &x), r == TopoCongruence::identity(&x));
                    assert_eq!(is_homeomorphic(&q, &named::t_space()), r == TopoCongruence::universal(&x));
                }
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let d2 = named::d2();
        let weak = tc(&d2, &[&[0], &[1]], &[0, 3]);
        let r = restrict(&d2, &weak, 0b01).unwrap();
        assert_eq!(r, TopoCongruence::identity(&named::t_space()));
        let x = validate_space(3, &[0, 0b001, 0b011, 0b111]).unwrap();
        let sub = x.subspace(0b101).unwrap();
        assert_eq!(restrict(&x, &TopoCongruence::universal(&x), 0b101).unwrap(), TopoCongruence::universal(&sub));
        assert_eq!(restrict(&x, &TopoCongruence::identity(&x), 0b101).unwrap(), TopoCongruence::identity(&sub));
        assert_eq!(restrict(&x, &TopoCongruence::identity(&x), 0), Err(StructureError::EmptySubset.into()));
    }

    #[test]
    fn quotient_cong_examples() {
        let d2 = named::d2();
        let alpha = tc(&d2, &[&[0], &[1]], &[0, 1, 3]);
        let (qa, _) = quotient(&d2, &alpha).unwrap();
        assert_eq!(quotient_cong(&d2, &alpha, &alpha).unwrap(), TopoCongruence::identity(&qa));
        let up = TopoCongruence::universal(&d2);
        let q = quotient_cong(&d2, &alpha, &up).unwrap();
        assert_eq!(q, TopoCongruence::universal(&qa));
        assert_eq!(quotient(&qa, &q).unwrap().0, named::t_space());
        assert_eq!(quotient_cong(&d2, &up, &alpha), Err(CongruenceError::NotContained));
    }

    /// `f(ρ)` straight from the definition: chains for the relation, and the
    /// opens of `Y` whose preimage lies in `𝕋_ρ`.
    fn image_oracle(x: &FiniteSpace, y: &FiniteSpace, f: &[usize], rho: &TopoCongruence) -> TopoCongruence {
        let mut p = Partition::discrete(y.n());
        for a in 0..x.n() {
            for b in 0..x.n() {
                if rho.partition.same(a, b) {
                    let mut key: Vec<usize> = (0..y.n()).collect();
                    key[f[b]] = f[a];
                    p = p.join(&Partition::from_labels(&key));
                }
            }
        }
        let ctop =
            SetFamily::from_sets(y.opens().sets().into_iter().filter(|&v| rho.ctop.contains(bits::preimage(v, f))));
        TopoCongruence::new(p, ctop)
    }

    fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let f: Vec<usize> = (0..n)
                .map(|_| {
                    let v = c % m;
                    c /= m;
                    v
                })
                .collect();
            if bits::image(bits::full(n), &f) == bits::full(m) {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn image_matches_direct_definition() {
        let spaces: Vec<FiniteSpace> = (1..=3).flat_map(|n| enumerate_spaces(n).unwrap()).collect();
        for x in &spaces {
            let cons = congruences(x);
            for y in spaces.iter().filter(|y| y.n() <= x.n()) {
                for f in surjections(x.n(), y.n()) {
                    if !x.is_continuous(y, &f) {
                        continue;
                    }
                    assert_eq!(image(x, y, &f, &TopoCongruence::identity(x)).unwrap(), TopoCongruence::identity(y));
                    assert_eq!(image(x, y, &f, &TopoCongruence::universal(x)).unwrap(), TopoCongruence::universal(y));
                    for r in &cons {
                        let got = image(x, y, &f, r).unwrap();
                        assert_eq!(got, image_oracle(x, y, &f, r));
                        validate(y, &got).unwrap();
                    }
                }
            }
        }
        let (d2, i2) = (named::d2(), named::i2());
        let s = tc(&d2, &[&[0], &[1]], &[0, 1, 3]);
        assert_eq!(image(&d2, &i2, &[0, 1], &s).unwrap(), TopoCongruence::identity(&i2));
        assert_eq!(image(&d2, &d2, &[0, 1], &s).unwrap(), s);
    }

    #[test]
    fn subdirect_examples() {
        let d2 = named::d2();
        let a = tc(&d2, &[&[0], &[1]], &[0, 0b01, 0b11]);
        let b = tc(&d2, &[&[0], &[1]], &[0, 0b10, 0b11]);
        let s = check_subdirect(&d2, &[a, b]).unwrap();
        assert!(s.holds && s.is_injective());
        assert!(s.factors.iter().all(|q| is_homeomorphic(q, &named::s2())));
        assert!(!check_subdirect(&d2, &[TopoCongruence::universal(&d2)]).unwrap().holds);
        let single = check_subdirect(&d2, &[TopoCongruence::identity(&d2)]).unwrap();
        assert!(single.holds);
        assert_eq!(single.factors, vec![d2]);
    }

    #[test]
    fn sierpinski_examples() {
        let d2 = named::d2();
        let dec = sierpinski_decomposition(&d2).unwrap();
        assert_eq!(dec.len(), 2);
        assert_eq!(sierpinski_decomposition(&named::i2()).unwrap(), vec![TopoCongruence::identity(&named::i2())]);
        assert_eq!(sierpinski_decomposition(&named::s2()).unwrap(), vec![TopoCongruence::identity(&named::s2())]);
        assert_eq!(sierpinski_decomposition(&named::t_space()), Err(CongruenceError::TrivialSpace));
        for n in 2..=4 {
            for x in enumerate_spaces(n).unwrap() {
                let dec = sierpinski_decomposition(&x).unwrap();
                assert!(check_subdirect(&x, &dec).unwrap().holds);
            }
        }
    }
}

//! The isomorphism theorems and the correspondence theorem, checked
//! exhaustively on small universes and on seeded random instances.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits;
use crate::radical::{Kind, KindTag, LoopGraphs, LooplessGraphs, Spaces, Universe};
use crate::structures::{EdgeSet, FiniteGraph, FiniteSpace, LoopPolicy, SetFamily, StructureError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    First,
    Second,
    Third,
    Correspondence,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::First, Theorem::Second, Theorem::Third, Theorem::Correspondence];

    pub fn keyword(self) -> &'static str {
        match self {
            Theorem::First => "first",
            Theorem::Second => "second",
            Theorem::Third => "third",
            Theorem::Correspondence => "correspondence",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub kind: KindTag,
    pub theorem: Theorem,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} checked={} failures={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.kind.keyword(),
            self.theorem.keyword(),
            self.checked,
            self.failures.len()
        )
    }
}

/// `x / ker f ≅ y` for a surjective morphism `f`.
pub fn check_first<K: Kind>(x: &K::S, y: &K::S, f: &[usize]) -> bool {
    K::is_iso(&K::quotient(x, &K::kernel(x, y, f)), y)
}

/// `S / (S ∩ c)` is isomorphic to the substructure of `x/c` on the classes
/// meeting `S`.
pub fn check_second<K: Kind>(x: &K::S, c: &K::C, subset: u32) -> bool {
    let left = K::quotient(&K::substructure(x, subset), &K::restrict(x, c, subset));
    let q = K::quotient(x, c);
    let classes = bits::image(subset, K::partition(c).labels());
    K::is_iso(&left, &K::substructure(&q, classes))
}

/// `(x/a)/(b/a) ≅ x/b` for `a ≤ b`.
pub fn check_third<K: Kind>(x: &K::S, a: &K::C, b: &K::C) -> bool {
    let qa = K::quotient(x, a);
    K::is_iso(&K::quotient(&qa, &K::quotient_cong(x, a, b)), &K::quotient(x, b))
}

/// `α ↦ α/θ` is a bijection from the congruences above `θ` onto those of
/// `x/θ`, preserving and reflecting order and preserving meets.
pub fn check_correspondence<K: Kind>(x: &K::S, theta: &K::C) -> bool {
    let upper: Vec<K::C> = K::congruences(x).into_iter().filter(|a| K::leq(theta, a)).collect();
    let q = K::quotient(x, theta);
    let mut images: Vec<K::C> = upper.iter().map(|a| K::quotient_cong(x, theta, a)).collect();
    for (a, ia) in upper.iter().zip(&images) {
        for (b, ib) in upper.iter().zip(&images) {
            if K::leq(a, b) != K::leq(ia, ib) {
                return false;
            }
            let m = K::meet(x, &[a.clone(), b.clone()]);
            if K::quotient_cong(x, theta, &m) != K::meet(&q, &[ia.clone(), ib.clone()]) {
                return false;
            }
        }
    }
    images.sort();
    images.dedup();
    images.len() == upper.len() && images == K::congruences(&q)
}

/// Random labelled structures for the sampled suites.
pub trait Sample: Kind {
    fn sample(rng: &mut ChaCha8Rng, n: usize) -> Self::S;
}

impl Sample for Spaces {
    fn sample(rng: &mut ChaCha8Rng, n: usize) -> FiniteSpace {
        let full = bits::full(n);
        let k = rng.gen_range(0..=n + 1);
        let sub = SetFamily::from_sets((0..k).map(|_| rng.gen_range(0..=full)));
        FiniteSpace::from_family(n, sub.generated_topology(n)).expect("generated topology")
    }
}

fn sample_edges(rng: &mut ChaCha8Rng, n: usize, loops: bool) -> EdgeSet {
    EdgeSet::from_pairs(EdgeSet::all_pairs(n, loops).pairs().into_iter().filter(|_| rng.gen_bool(0.5)))
}

impl Sample for LoopGraphs {
    fn sample(rng: &mut ChaCha8Rng, n: usize) -> FiniteGraph {
        FiniteGraph::from_edge_set(n, LoopPolicy::LoopsAllowed, sample_edges(rng, n, true)).expect("random graph")
    }
}

impl Sample for LooplessGraphs {
    fn sample(rng: &mut ChaCha8Rng, n: usize) -> FiniteGraph {
        FiniteGraph::from_edge_set(n, LoopPolicy::NoLoops, sample_edges(rng, n, false)).expect("random graph")
    }
}

fn report<K: Kind>(theorem: Theorem, results: Vec<Option<String>>) -> SuiteReport {
    SuiteReport { kind: K::TAG, theorem, checked: results.len(), failures: results.into_iter().flatten().collect() }
}

fn fail_if(ok: bool, describe: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(describe)
}

/// Every instance over the universe of structures with at most `max_n`
/// elements: all surjective morphisms, congruences, subsets and comparable
/// pairs.
pub fn exhaustive_suite<K: Kind>(max_n: usize) -> Result<Vec<SuiteReport>, StructureError> {
    let u = Universe::<K>::new(max_n)?;
    let members = u.members();

    let first: Vec<Option<String>> = members
        .par_iter()
        .flat_map_iter(|x| {
            members.iter().flat_map(move |y| {
                K::surjections(x, y)
                    .into_iter()
                    .map(move |f| fail_if(check_first::<K>(x, y, &f), || format!("{x} onto {y} by {f:?}")))
            })
        })
        .collect();

    let second: Vec<Option<String>> = members
        .par_iter()
        .flat_map_iter(|x| {
            let full = K::full(x);
            K::congruences(x).into_iter().flat_map(move |c| {
                (1..=full)
                    .map(move |s| fail_if(check_second::<K>(x, &c, s), || format!("{x} with {c} on {}", bits::show(s))))
            })
        })
        .collect();

    let third: Vec<Option<String>> = members
        .par_iter()
        .flat_map_iter(|x| {
            let cons = K::congruences(x);
            let mut out = Vec::new();
            for a in &cons {
                for b in cons.iter().filter(|b| K::leq(a, b)) {
                    out.push(fail_if(check_third::<K>(x, a, b), || format!("{x} with {a} below {b}")));
                }
            }
            out
        })
        .collect();

    let correspondence: Vec<Option<String>> = members
        .par_iter()
        .flat_map_iter(|x| {
            K::congruences(x)
                .into_iter()
                .map(move |t| fail_if(check_correspondence::<K>(x, &t), || format!("{x} over {t}")))
        })
        .collect();

    Ok(vec![
        report::<K>(Theorem::First, first),
        report::<K>(Theorem::Second, second),
        report::<K>(Theorem::Third, third),
        report::<K>(Theorem::Correspondence, correspondence),
    ])
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("non-empty choice")
}

/// `count` random instances per theorem on labelled structures with
/// `1..=max_n` elements. Morphisms are projections onto a random quotient
/// followed by a random relabelling.
pub fn random_suite<K: Sample>(seed: u64, count: usize, max_n: usize) -> Vec<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first = Vec::with_capacity(count);
    let mut second = Vec::with_capacity(count);
    let mut third = Vec::with_capacity(count);
    let mut corr = Vec::with_capacity(count);
    // instances are drawn sequentially so the seed fixes them; checks run in parallel
    for _ in 0..count {
        let n = rng.gen_range(1..=max_n);

        let x = K::sample(&mut rng, n);
        let cons = K::congruences(&x);
        let c = pick(&mut rng, &cons);
        let q = K::quotient(&x, c);
        let mut perm: Vec<usize> = (0..K::size(&q)).collect();
        perm.shuffle(&mut rng);
        let y = K::relabel(&q, &perm);
        let f: Vec<usize> = K::partition(c).labels().iter().map(|&b| perm[b]).collect();
        first.push((x, y, f));

        let x = K::sample(&mut rng, n);
        let cons = K::congruences(&x);
        let c = pick(&mut rng, &cons).clone();
        let s = rng.gen_range(1..=K::full(&x));
        second.push((x, c, s));

        let x = K::sample(&mut rng, n);
        let cons = K::congruences(&x);
        let b = pick(&mut rng, &cons).clone();
        let below: Vec<K::C> = cons.iter().filter(|a| K::leq(a, &b)).cloned().collect();
        let a = pick(&mut rng, &below).clone();
        third.push((x, a, b));

        let x = K::sample(&mut rng, n);
        let cons = K::congruences(&x);
        let t = pick(&mut rng, &cons).clone();
        corr.push((x, t));
    }
    let r0 = first
        .par_iter()
        .map(|(x, y, f)| fail_if(check_first::<K>(x, y, f), || format!("{x} onto {y} by {f:?}")))
        .collect();
    let r1 = second
        .par_iter()
        .map(|(x, c, s)| fail_if(check_second::<K>(x, c, *s), || format!("{x} with {c} on {}", bits::show(*s))))
        .collect();
    let r2 = third
        .par_iter()
        .map(|(x, a, b)| fail_if(check_third::<K>(x, a, b), || format!("{x} with {a} below {b}")))
        .collect();
    let r3 =
        corr.par_iter().map(|(x, t)| fail_if(check_correspondence::<K>(x, t), || format!("{x} over {t}"))).collect();
    vec![
        report::<K>(Theorem::First, r0),
        report::<K>(Theorem::Second, r1),
        report::<K>(Theorem::Third, r2),
        report::<K>(Theorem::Correspondence, r3),
    ]
}

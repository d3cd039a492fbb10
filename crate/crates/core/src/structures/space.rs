use std::fmt;

use super::StructureError;
use crate::bits;

/// Largest point count a [`FiniteSpace`] can hold.
pub const MAX_SPACE_POINTS: usize = 6;

/// A family of subsets of `0..n` (`n ≤ 6`): bit `s` is set when the subset
/// with mask `s` belongs to the family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetFamily(pub u64);

impl SetFamily {
    pub const EMPTY: SetFamily = SetFamily(0);

    pub fn from_sets<I: IntoIterator<Item = u32>>(sets: I) -> Self {
        let mut f = SetFamily::EMPTY;
        for s in sets {
            f.insert(s);
        }
        f
    }

    /// `{∅, X}`.
    pub fn indiscrete(n: usize) -> Self {
        Self::from_sets([0, bits::full(n)])
    }

    /// Every subset of `0..n`.
    pub fn discrete(n: usize) -> Self {
        let count = 1u32 << n;
        if count == 64 {
            SetFamily(u64::MAX)
        } else {
            SetFamily((1u64 << count) - 1)
        }
    }

    #[inline]
    pub fn contains(self, set: u32) -> bool {
        self.0 >> set & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, set: u32) {
        self.0 |= 1 << set;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SetFamily) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: SetFamily) -> SetFamily {
        SetFamily(self.0 & other.0)
    }

    pub fn union(self, other: SetFamily) -> SetFamily {
        SetFamily(self.0 | other.0)
    }

    /// Member sets in increasing mask order.
    pub fn sets(self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        let mut rest = self.0;
        while rest != 0 {
            out.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        out
    }

    /// Every member set mapped pointwise through `f`.
    pub fn image(self, f: &[usize]) -> SetFamily {
        SetFamily::from_sets(self.sets().into_iter().map(|s| bits::image(s, f)))
    }

    /// Preimages of every member set under `f`.
    pub fn preimage(self, f: &[usize]) -> SetFamily {
        SetFamily::from_sets(self.sets().into_iter().map(|s| bits::preimage(s, f)))
    }

    /// `{U ∩ sub}` renumbered onto `0..|sub|`.
    pub fn trace(self, sub: u32) -> SetFamily {
        SetFamily::from_sets(self.sets().into_iter().map(|s| bits::compress(s, sub)))
    }

    /// Closes under pairwise union and intersection.
    pub fn lattice_closure(self) -> SetFamily {
        let mut fam = self;
        loop {
            let sets = fam.sets();
            let mut next = fam;
            for (i, &a) in sets.iter().enumerate() {
                for &b in &sets[i + 1..] {
                    next.insert(a | b);
                    next.insert(a & b);
                }
            }
            if next == fam {
                return fam;
            }
            fam = next;
        }
    }

    /// Smallest topology on `0..n` containing every member.
    pub fn generated_topology(self, n: usize) -> SetFamily {
        self.union(SetFamily::indiscrete(n)).lattice_closure()
    }

    /// Topology generated by a topology `self` and one extra set `s`:
    /// `{V ∪ (s ∩ U)}`.
    pub fn close_with(self, s: u32) -> SetFamily {
        let sets = self.sets();
        let mut out = SetFamily::EMPTY;
        for &u in &sets {
            for &v in &sets {
                out.insert(v | (s & u));
            }
        }
        out
    }

    pub fn show(self) -> String {
        let items: Vec<String> = self.sets().into_iter().map(bits::show).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.show())
    }
}

/// A finite topological space on points `0..n`.
///
/// Ordered by `(n, open-set mask)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSpace {
    n: usize,
    opens: SetFamily,
}

/// Checks that `family` is a topology on `0..n`.
pub fn check_topology(n: usize, family: SetFamily) -> Result<(), StructureError> {
    if !family.contains(0) || !family.contains(bits::full(n)) {
        return Err(StructureError::MissingEmptyOrFull);
    }
    let sets = family.sets();
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            if !family.contains(a | b) {
                return Err(StructureError::NotClosedUnderUnion);
            }
        }
    }
    for (i, &a) in sets.iter().enumerate() {
        for &b in &sets[i + 1..] {
            if !family.contains(a & b) {
                return Err(StructureError::NotClosedUnderIntersection);
            }
        }
    }
    Ok(())
}

/// Builds a space from an explicit list of open sets (as masks).
pub fn validate_space(n: usize, opens: &[u32]) -> Result<FiniteSpace, StructureError> {
    if n == 0 {
        return Err(StructureError::Empty);
    }
    if n > MAX_SPACE_POINTS {
        return Err(StructureError::TooLarge { n, max: MAX_SPACE_POINTS });
    }
    if opens.iter().any(|&s| s & !bits::full(n) != 0) {
        return Err(StructureError::OutOfRange);
    }
    FiniteSpace::from_family(n, SetFamily::from_sets(opens.iter().copied()))
}

impl FiniteSpace {
    pub fn from_family(n: usize, opens: SetFamily) -> Result<Self, StructureError> {
        if n == 0 {
            return Err(StructureError::Empty);
        }
        if n > MAX_SPACE_POINTS {
            return Err(StructureError::TooLarge { n, max: MAX_SPACE_POINTS });
        }
        if !opens.is_subset(SetFamily::discrete(n)) {
            return Err(StructureError::OutOfRange);
        }
        check_topology(n, opens)?;
        Ok(FiniteSpace { n, opens })
    }

    pub(crate) fn from_parts_unchecked(n: usize, opens: SetFamily) -> Self {
        FiniteSpace { n, opens }
    }

    pub fn indiscrete(n: usize) -> Result<Self, StructureError> {
        Self::from_family(n, SetFamily::indiscrete(n))
    }

    pub fn discrete(n: usize) -> Result<Self, StructureError> {
        Self::from_family(n, SetFamily::discrete(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> SetFamily {
        self.opens
    }

    pub fn is_open(&self, set: u32) -> bool {
        self.opens.contains(set)
    }

    pub fn full(&self) -> u32 {
        bits::full(self.n)
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> u32 {
        self.opens.sets().into_iter().filter(|&u| bits::contains(u, x)).fold(self.full(), |acc, u| acc & u)
    }

    pub fn neighbourhoods(&self) -> Vec<u32> {
        (0..self.n).map(|x| self.neighbourhood(x)).collect()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.opens == SetFamily::indiscrete(self.n)
    }

    pub fn is_discrete(&self) -> bool {
        self.opens == SetFamily::discrete(self.n)
    }

    /// Distinct points have distinct neighbourhoods.
    pub fn is_t0(&self) -> bool {
        let nb = self.neighbourhoods();
        (0..self.n).all(|x| (x + 1..self.n).all(|y| nb[x] != nb[y]))
    }

    /// Every neighbourhood is a singleton; for finite spaces this is discreteness.
    pub fn is_t1(&self) -> bool {
        self.neighbourhoods().iter().enumerate().all(|(x, &u)| u == 1 << x)
    }

    /// Subspace on a non-empty subset, renumbered in increasing order.
    pub fn subspace(&self, subset: u32) -> Result<FiniteSpace, StructureError> {
        if subset == 0 {
            return Err(StructureError::EmptySubset);
        }
        if subset & !self.full() != 0 {
            return Err(StructureError::OutOfRange);
        }
        Ok(FiniteSpace { n: subset.count_ones() as usize, opens: self.opens.trace(subset) })
    }

    /// The space with point `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSpace {
        FiniteSpace { n: self.n, opens: self.opens.image(perm) }
    }

    /// Whether `f` is a continuous map into `target`.
    pub fn is_continuous(&self, target: &FiniteSpace, f: &[usize]) -> bool {
        f.len() == self.n
            && f.iter().all(|&y| y < target.n)
            && target.opens.sets().into_iter().all(|v| self.is_open(bits::preimage(v, f)))
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "space {} {}", self.n, self.opens)
    }
}

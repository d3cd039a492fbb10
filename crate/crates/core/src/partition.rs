//! Equivalence relations on `0..n`, stored in a canonical form.

use std::fmt;

use crate::bits;

/// An equivalence relation on `0..n`.
///
/// Each element carries the index of its block. Blocks are numbered in the
/// order of their least element, so two equal relations always have the same
/// representation and `==` is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// The identity relation: every element alone.
    pub fn discrete(n: usize) -> Self {
        Partition { labels: (0..n).collect() }
    }

    /// The universal relation: one block.
    pub fn indiscrete(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    /// Builds the relation `a ~ b iff key[a] == key[b]`.
    pub fn from_labels<T: PartialEq>(key: &[T]) -> Self {
        let mut labels = Vec::with_capacity(key.len());
        let mut firsts: Vec<usize> = Vec::new();
        for (i, k) in key.iter().enumerate() {
            match firsts.iter().position(|&f| key[f] == *k) {
                Some(b) => labels.push(b),
                None => {
                    firsts.push(i);
                    labels.push(firsts.len() - 1);
                }
            }
        }
        Partition { labels }
    }

    /// Builds a partition from explicit blocks. Returns `None` unless the
    /// blocks are non-empty, disjoint and cover `0..n`.
    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Option<Self> {
        let mut key = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return None;
            }
            for &x in block {
                if x >= n || key[x] != usize::MAX {
                    return None;
                }
                key[x] = b;
            }
        }
        if key.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&key))
    }

    pub fn from_block_masks(n: usize, masks: &[u32]) -> Option<Self> {
        let blocks: Vec<Vec<usize>> = masks.iter().map(|&m| bits::members(m).collect()).collect();
        Self::from_blocks(n, &blocks)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.len()
    }

    pub fn is_indiscrete(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Blocks as bitmasks, indexed by block number.
    pub fn block_masks(&self) -> Vec<u32> {
        let mut masks = vec![0u32; self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            masks[b] |= 1 << i;
        }
        masks
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.block_masks().into_iter().map(|m| bits::members(m).collect()).collect()
    }

    /// Least element of each block, indexed by block number.
    pub fn representatives(&self) -> Vec<usize> {
        self.block_masks().into_iter().map(|m| m.trailing_zeros() as usize).collect()
    }

    /// The union of all blocks that meet `mask`.
    pub fn saturate_set(&self, mask: u32) -> u32 {
        let blocks = self.block_masks();
        bits::members(mask).fold(0, |acc, i| acc | blocks[self.labels[i]])
    }

    /// Whether `mask` is a union of blocks.
    pub fn is_saturated(&self, mask: u32) -> bool {
        self.saturate_set(mask) == mask
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.len(), other.len());
        let mut seen = vec![usize::MAX; self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            let o = other.labels[i];
            if seen[b] == usize::MAX {
                seen[b] = o;
            } else if seen[b] != o {
                return false;
            }
        }
        true
    }

    /// Common refinement (intersection of relations).
    pub fn meet(&self, other: &Partition) -> Partition {
        let key: Vec<(usize, usize)> = self.labels.iter().zip(&other.labels).map(|(&a, &b)| (a, b)).collect();
        Self::from_labels(&key)
    }

    /// Transitive closure of the union of relations.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in [self, other] {
            let reps = p.representatives();
            for (i, &b) in p.labels.iter().enumerate() {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, reps[b]));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        Self::from_labels(&roots)
    }

    /// The relation restricted to the elements of `subset` (given in
    /// increasing order), renumbered onto `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let key: Vec<usize> = subset.iter().map(|&x| self.labels[x]).collect();
        Self::from_labels(&key)
    }

    /// All partitions of `0..n` in restricted-growth order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut labels = vec![0usize; n];
        fn rec(i: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == labels.len() {
                out.push(Partition { labels: labels.clone() });
                return;
            }
            for b in 0..=max {
                labels[i] = b;
                rec(i + 1, if b == max { max + 1 } else { max }, labels, out);
            }
        }
        if n == 0 {
            return vec![Partition { labels }];
        }
        rec(1, 1, &mut labels, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in self.block_masks() {
            write!(f, "{}", bits::show(m))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=6).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn normalization_is_canonical() {
        let a = Partition::from_labels(&[7, 3, 7, 1]);
        let b = Partition::from_blocks(4, &[vec![3], vec![1], vec![0, 2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.labels(), &[0, 1, 0, 2]);
    }

    #[test]
    fn from_blocks_rejects_bad_cover() {
        assert!(Partition::from_blocks(3, &[vec![0, 1]]).is_none());
        assert!(Partition::from_blocks(2, &[vec![0, 1], vec![1]]).is_none());
        assert!(Partition::from_blocks(2, &[vec![0, 1], vec![]]).is_none());
    }

    #[test]
    fn join_chains_blocks() {
        let a = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        let b = Partition::from_blocks(3, &[vec![0], vec![1, 2]]).unwrap();
        assert!(a.join(&b).is_indiscrete());
        assert!(a.meet(&b).is_discrete());
    }

    fn arb_partition(n: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0..n, n).prop_map(|k| Partition::from_labels(&k))
    }

    proptest! {
        #[test]
        fn meet_join_are_glb_lub(
            (a, b, c) in (1usize..7).prop_flat_map(|n| (arb_partition(n), arb_partition(n), arb_partition(n)))
        ) {
            let m = a.meet(&b);
            let j = a.join(&b);
            prop_assert!(m.refines(&a) && m.refines(&b));
            prop_assert!(a.refines(&j) && b.refines(&j));
            if c.refines(&a) && c.refines(&b) {
                prop_assert!(c.refines(&m));
            }
            if a.refines(&c) && b.refines(&c) {
                prop_assert!(j.refines(&c));
            }
            // absorption
            prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
            prop_assert_eq!(a.join(&a.meet(&b)), a);
        }
    }
}

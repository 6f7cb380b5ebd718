//! Fixed-width subsets of ring elements.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of `0..len` stored as a dense bit-vector.
///
/// Used for every element set the crate computes: units, nilpotents, the
/// Jacobson radical, ideals and so on. Equality and hashing are by content,
/// ordering is lexicographic on the sorted index lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    len: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut mask = Self::empty(len);
        for w in mask.words.iter_mut() {
            *w = u64::MAX;
        }
        mask.trim();
        mask
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = Self::empty(len);
        for i in indices {
            mask.insert(i);
        }
        mask
    }

    pub fn from_predicate(len: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut mask = Self::empty(len);
        for i in 0..len {
            if pred(i) {
                mask.insert(i);
            }
        }
        mask
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the universe this mask lives in.
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] & (1u64 << (i & 63)) != 0
    }

    /// Returns `true` if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.len, "index {i} outside mask of width {}", self.len);
        let word = &mut self.words[i >> 6];
        let bit = 1u64 << (i & 63);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut out = Self {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.len, other.len, "mask width mismatch");
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "mask width mismatch");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    /// Least element, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_mask_respects_width() {
        let m = SubsetMask::full(70);
        assert_eq!(m.count(), 70);
        assert!(m.complement().is_empty());
        assert_eq!(SubsetMask::full(0).count(), 0);
    }

    #[test]
    fn ordering_is_lexicographic_on_indices() {
        let a = SubsetMask::from_indices(8, [0, 5]);
        let b = SubsetMask::from_indices(8, [0, 2, 7]);
        assert!(b < a);
        assert!(SubsetMask::from_indices(8, [0]) < b);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(xs in prop::collection::btree_set(0usize..130, 0..40),
                                        ys in prop::collection::btree_set(0usize..130, 0..40)) {
            let a = SubsetMask::from_indices(130, xs.iter().copied());
            let b = SubsetMask::from_indices(130, ys.iter().copied());
            prop_assert_eq!(a.union(&b).to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.intersection(&b).to_vec(), xs.intersection(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.difference(&b).to_vec(), xs.difference(&ys).copied().collect::<Vec<_>>());
            prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
            prop_assert_eq!(a.count(), xs.len());
        }
    }
}

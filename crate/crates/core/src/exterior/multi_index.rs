use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension a [`MultiIndex`] can address.
pub const MAX_DIM: usize = 16;

/// A strictly increasing set of 1-based coordinate indices, stored as a
/// bitmask (bit `i-1` set for index `i`).
///
/// Ordering is lexicographic on the index sequences, so `{1,2,3} < {1,2,4}
/// < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u16);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    /// Builds from a strictly increasing list of indices in `1..=n`.
    pub fn new(indices: &[usize], n: usize) -> Result<Self> {
        let bad = || Error::InvalidMultiIndex {
            indices: indices.to_vec(),
            n,
        };
        if n > MAX_DIM {
            return Err(bad());
        }
        let mut bits = 0u16;
        let mut last = 0;
        for &i in indices {
            if i <= last || i > n {
                return Err(bad());
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(MultiIndex(bits))
    }

    pub fn single(index: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&index));
        MultiIndex(1 << (index - 1))
    }

    /// All indices `1..=n`.
    pub fn full(n: usize) -> Self {
        MultiIndex(((1u32 << n) - 1) as u16)
    }

    pub fn from_bits(bits: u16) -> Self {
        MultiIndex(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << (index - 1)) != 0
    }

    /// Highest index present, 0 for the empty index.
    pub fn max_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_DIM).filter(move |&i| self.0 & (1 << (i - 1)) != 0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn remove(self, index: usize) -> Self {
        MultiIndex(self.0 & !(1 << (index - 1)))
    }

    pub fn complement(self, n: usize) -> Self {
        MultiIndex(!self.0 & Self::full(n).0)
    }

    /// Shifts every index up by `offset`.
    pub fn shift(self, offset: usize) -> Self {
        MultiIndex(self.0 << offset)
    }

    /// Sign of the shuffle taking the concatenation `self ++ other` to
    /// sorted order; `None` if the two share an index.
    pub fn wedge_sign(self, other: MultiIndex) -> Option<i32> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        for j in other.iter() {
            // indices of self strictly greater than j
            inversions += (self.0 >> j).count_ones();
        }
        Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
    }

    /// Zero-based position of `index` inside the sorted sequence.
    pub fn position(self, index: usize) -> usize {
        (self.0 & ((1u16 << (index - 1)) - 1)).count_ones() as usize
    }

    /// Every multi-index of the given degree in dimension `n`, in canonical
    /// order.
    pub fn all(n: usize, degree: usize) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = (0u32..(1 << n))
            .filter(|b| b.count_ones() as usize == degree)
            .map(|b| MultiIndex(b as u16))
            .collect();
        out.sort();
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

/// `dx1^dx2^dx3`, or `1` for the empty index.
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.iter().map(|i| format!("dx{i}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_increasing() {
        assert!(MultiIndex::new(&[2, 1], 7).is_err());
        assert!(MultiIndex::new(&[1, 1], 7).is_err());
        assert!(MultiIndex::new(&[0], 7).is_err());
        assert!(MultiIndex::new(&[8], 7).is_err());
        assert!(MultiIndex::new(&[1, 3, 7], 7).is_ok());
    }

    #[test]
    fn lexicographic_order() {
        let a = MultiIndex::new(&[1, 2, 3], 7).unwrap();
        let b = MultiIndex::new(&[1, 2, 4], 7).unwrap();
        let c = MultiIndex::new(&[1, 3], 7).unwrap();
        let d = MultiIndex::new(&[2], 7).unwrap();
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn wedge_sign_counts_inversions() {
        let i = |v: &[usize]| MultiIndex::new(v, 7).unwrap();
        assert_eq!(i(&[1]).wedge_sign(i(&[2])), Some(1));
        assert_eq!(i(&[2]).wedge_sign(i(&[1])), Some(-1));
        assert_eq!(i(&[1, 2]).wedge_sign(i(&[2])), None);
        // (3,4,1,2) -> 4 inversions
        assert_eq!(i(&[3, 4]).wedge_sign(i(&[1, 2])), Some(1));
        // (2,3,1) -> 2 inversions
        assert_eq!(i(&[2, 3]).wedge_sign(i(&[1])), Some(1));
        // (3,1,2) -> 2 inversions; (2,1,3) -> 1
        assert_eq!(i(&[3]).wedge_sign(i(&[1, 2])), Some(1));
        assert_eq!(i(&[2]).wedge_sign(i(&[1, 3])), Some(-1));
    }

    #[test]
    fn counts_and_positions() {
        assert_eq!(MultiIndex::all(7, 3).len(), 35);
        assert_eq!(MultiIndex::all(7, 4).len(), 35);
        assert_eq!(MultiIndex::all(14, 4).len(), 1001);
        let i = MultiIndex::new(&[2, 5, 7], 7).unwrap();
        assert_eq!(i.position(2), 0);
        assert_eq!(i.position(5), 1);
        assert_eq!(i.position(7), 2);
        assert_eq!(i.max_index(), 7);
        assert_eq!(i.complement(7).to_vec(), vec![1, 3, 4, 6]);
        assert_eq!(i.shift(7).to_vec(), vec![9, 12, 14]);
    }
}

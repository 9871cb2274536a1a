//! Subsets of a finite carrier, stored as bit masks.

use std::fmt;

/// Hard upper bound on carrier size: one mask word.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the elements `0..n` of a finite algebra.
///
/// The derived ordering compares masks first, so sorting a list of sets
/// from the same algebra yields ascending-mask order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    mask: u64,
    n: usize,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "carrier size {n} exceeds {MAX_ELEMENTS}");
        ElementSet { mask: 0, n }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "carrier size {n} exceeds {MAX_ELEMENTS}");
        let mask = if n == MAX_ELEMENTS { !0 } else { (1u64 << n) - 1 };
        ElementSet { mask, n }
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        Self::empty(n).with(x)
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        let full = Self::full(n);
        assert!(mask & !full.mask == 0, "mask has bits outside 0..{n}");
        ElementSet { mask, n }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.n, "element {x} out of range 0..{}", self.n);
        self.mask |= 1 << x;
    }

    pub fn with(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.mask & (1 << x) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.n)
    }

    /// Size of the carrier this set lives in (not the cardinality).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ElementSet { mask: self.mask | other.mask, n: self.n }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ElementSet { mask: self.mask & other.mask, n: self.n }
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        ElementSet { mask: self.mask & !other.mask, n: self.n }
    }

    pub fn complement(&self) -> Self {
        ElementSet { mask: Self::full(self.n).mask & !self.mask, n: self.n }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n);
        self.mask & !other.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of this set under a total map given as an index vector.
    pub fn map_through(&self, map: &[usize], target_n: usize) -> ElementSet {
        assert_eq!(map.len(), self.n);
        ElementSet::from_indices(target_n, self.iter().map(|x| map[x]))
    }

    /// Preimage of this set under a total map out of a carrier of size
    /// `source_n`.
    pub fn preimage(&self, map: &[usize], source_n: usize) -> ElementSet {
        assert_eq!(map.len(), source_n);
        ElementSet::from_indices(source_n, (0..source_n).filter(|&x| self.contains(map[x])))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops_are_exact() {
        let a = ElementSet::from_indices(5, [0, 1, 2]);
        let b = ElementSet::from_indices(5, [0, 1, 3]);
        assert_eq!(a.intersect(&b), ElementSet::from_indices(5, [0, 1]));
        assert_eq!(a.union(&b), ElementSet::from_indices(5, [0, 1, 2, 3]));
        assert_eq!(a.minus(&b), ElementSet::singleton(5, 2));
        assert!(ElementSet::from_indices(5, [0, 1]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.complement(), ElementSet::from_indices(5, [3, 4]));
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn ordering_is_ascending_mask() {
        let mut v = vec![
            ElementSet::from_indices(3, [0, 2]),
            ElementSet::from_indices(3, [0]),
            ElementSet::from_indices(3, [0, 1]),
        ];
        v.sort();
        let masks: Vec<u64> = v.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0b001, 0b011, 0b101]);
    }

    #[test]
    fn map_and_preimage() {
        let map = vec![0, 0, 1, 2];
        let s = ElementSet::from_indices(4, [1, 3]);
        assert_eq!(s.map_through(&map, 3), ElementSet::from_indices(3, [0, 2]));
        let t = ElementSet::singleton(3, 0);
        assert_eq!(t.preimage(&map, 4), ElementSet::from_indices(4, [0, 1]));
    }

    #[test]
    fn full_at_word_boundary() {
        let s = ElementSet::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.contains(63));
    }

    #[test]
    #[should_panic]
    fn out_of_range_insert_panics() {
        let mut s = ElementSet::empty(3);
        s.insert(3);
    }
}

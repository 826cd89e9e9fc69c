//! Small vertex sets stored as 64-bit masks over canonical vertex indices.

use std::fmt;

/// Maximum number of vertices a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        // Standard submask enumeration in increasing order.
        let nxt = cur.wrapping_sub(self.mask) & self.mask;
        self.next = (nxt != 0).then_some(nxt);
        Some(VertexSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all() {
        let s = VertexSet::from_indices([0, 2, 5]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(all[0], VertexSet::EMPTY);
        assert_eq!(*all.last().unwrap(), s);
    }

    #[test]
    fn full_and_iter() {
        assert_eq!(VertexSet::full(4).iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::EMPTY.first(), None);
    }
}

//! Fixed-width subsets of a ground set.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest supported ground set. Element ids must be below this bound.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of `{0, .., MAX_ELEMENTS - 1}` stored as a bitmask.
///
/// Iteration is always in ascending id order, which the algorithms in this
/// crate rely on for deterministic tie-breaking.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet(0)
    }

    /// `{0, .., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of {n} elements exceeds {MAX_ELEMENTS}"
        );
        if n == MAX_ELEMENTS {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = Self::empty();
        s.insert(e);
        s
    }

    pub const fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) -> bool {
        assert!(e < MAX_ELEMENTS, "element {e} out of range");
        let fresh = !self.contains(e);
        self.0 |= 1 << e;
        fresh
    }

    pub fn remove(&mut self, e: usize) -> bool {
        let present = self.contains(e);
        if present {
            self.0 &= !(1 << e);
        }
        present
    }

    #[must_use]
    pub fn with(mut self, e: usize) -> Self {
        self.insert(e);
        self
    }

    #[must_use]
    pub fn without(mut self, e: usize) -> Self {
        self.remove(e);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing order of their bitmask.
    ///
    /// Yields `2^len` sets; only meant for small ground sets.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

impl BitOr for ElementSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    universe: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // Standard submask enumeration: (cur - universe) & universe steps upward.
        self.next = if cur == self.universe {
            None
        } else {
            Some(cur.wrapping_sub(self.universe) & self.universe)
        };
        Some(ElementSet(cur))
    }
}

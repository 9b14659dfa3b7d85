//! Small fixed-width bitsets for reflection sets and subsets of simple
//! generators.

use std::fmt;

/// A set of reflections, indexed by positive-root index.
///
/// Every group within the enumeration cap has at most 64 reflections, so a
/// single word suffices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflSet(pub u64);

impl ReflSet {
    pub const EMPTY: ReflSet = ReflSet(0);

    pub fn full(len: usize) -> Self {
        if len >= 64 {
            ReflSet(u64::MAX)
        } else {
            ReflSet((1u64 << len) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ReflSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(ReflSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        ReflSet(self.0 | 1u64 << i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ReflSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ReflSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Lower-case hexadecimal rendering, used as a stable text key.
    pub fn to_hex(self) -> String {
        format!("{:#x}", self.0)
    }
}

impl fmt::Debug for ReflSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ReflSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// A subset of the simple generators `S`, bit `i` standing for `s_{i+1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        GenSet((1u32 << rank) - 1)
    }

    pub fn singleton(i: usize) -> Self {
        GenSet(1u32 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(GenSet::EMPTY, |acc, i| GenSet(acc.0 | 1 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        GenSet(self.0 | 1 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        GenSet(self.0 & !(1 << i))
    }

    #[must_use]
    pub fn complement(self, rank: usize) -> Self {
        GenSet(!self.0 & ((1u32 << rank) - 1))
    }

    pub fn intersection(self, other: Self) -> Self {
        GenSet(self.0 & other.0)
    }

    pub fn union(self, other: Self) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0 as u64)
    }

    /// All subsets of `self`, in increasing numeric order of their masks.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(GenSet(cur))
        })
    }

    /// Sorted list of member indices; lexicographic comparison of these
    /// lists is the order used to pick standard parabolic representatives.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s = GenSet::from_indices([0, 2, 3]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], GenSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
        assert_eq!(GenSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn refl_set_basics() {
        let a = ReflSet::from_indices([1, 5, 63]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(63));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 5, 63]);
        assert!(ReflSet::singleton(5).is_subset(a));
        assert_eq!(ReflSet::full(64).len(), 64);
        assert_eq!(GenSet::from_indices([0, 1]).complement(3), GenSet::singleton(2));
    }
}

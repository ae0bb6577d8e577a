//! Bitset newtypes for element subsets and point subsets of a spectrum.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Index of a ring element in the deterministic enumeration `0..N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub u32);

impl Element {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for Element {
    fn from(i: usize) -> Self {
        Element(i as u32)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the ring's elements.
///
/// Ordered by cardinality first, then lexicographically on the sorted member
/// list. This is the canonical order of the ideal lattice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for i in items {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.0.is_full()
    }

    #[inline]
    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.ones().map(Element::from)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.0.union_with(&other.0);
        out
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.0.intersect_with(&other.0);
        out
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.0.difference_with(&other.0);
        out
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Deserializes as a bare index list; the universe is the smallest one that
/// fits, so callers re-embed into the ring's universe with [`ElementSet::resized`].
impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(d)?;
        let universe = items.iter().max().map_or(0, |m| m + 1);
        Ok(ElementSet::from_indices(universe, items))
    }
}

impl ElementSet {
    pub fn resized(&self, universe: usize) -> ElementSet {
        ElementSet::from_indices(universe, self.iter().filter(|&i| i < universe))
    }
}

/// A subset of the prime spectrum, as a bitmask over the spectrum's
/// deterministic prime ordering. Finite rings of admissible size have far
/// fewer than 64 primes.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn first_n(n: usize) -> PointSet {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> PointSet {
        PointSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> PointSet {
        PointSet(items.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing mask order, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(PointSet(cur))
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_set_order_is_cardinality_then_lex() {
        let a = ElementSet::from_indices(12, [0, 6]);
        let b = ElementSet::from_indices(12, [0, 4, 8]);
        let c = ElementSet::from_indices(12, [0, 3, 6, 9]);
        let d = ElementSet::from_indices(12, [0, 2, 4, 6, 8, 10]);
        let mut v = vec![d.clone(), c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c, d]);

        let x = ElementSet::from_indices(4, [0, 1]);
        let y = ElementSet::from_indices(4, [0, 2]);
        assert!(x < y);
    }

    #[test]
    fn point_set_subsets_enumerates_every_submask() {
        let s = PointSet::from_indices([0, 2, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], PointSet::EMPTY);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn element_set_serializes_as_sorted_list() {
        let s = ElementSet::from_indices(12, [8, 0, 4]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,4,8]");
        let back: ElementSet = serde_json::from_str("[0,4,8]").unwrap();
        assert_eq!(back.resized(12), s);
    }
}

//! Subsets of a small ground set `{0, .., n-1}`, packed into a machine word.
//!
//! Ground sets never exceed 16 points, so a `u16` bitmask gives constant-time
//! set algebra and lets families of subsets be enumerated as `0..1<<n`.

use std::fmt;

use serde::de::{Deserializer, Error as DeError, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Largest supported ground-set size.
pub const MAX_POINTS: usize = 16;

/// A subset of `{0, .., n-1}` for some ground set of size `n <= 16`.
///
/// The ground-set size is not stored; operations that need it (complement,
/// subset streams) take it as a parameter or live on [`crate::FiniteSpace`].
/// Serializes as a sorted list of point indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u16);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u16) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_POINTS);
        PointSet(1 << x)
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn universe(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == 0 {
            PointSet(0)
        } else {
            PointSet(u16::MAX >> (MAX_POINTS - n))
        }
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 & (1 << x) != 0
    }

    pub fn with(self, x: usize) -> Self {
        debug_assert!(x < MAX_POINTS);
        PointSet(self.0 | 1 << x)
    }

    pub fn without(self, x: usize) -> Self {
        PointSet(self.0 & !(1 << x))
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        PointSet(self.0 ^ other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Self::universe(n).minus(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_POINTS).filter(move |&x| self.contains(x))
    }

    /// All `2^n` subsets of `{0, .., n-1}` in ascending bitmask order.
    pub fn subsets_of(n: usize) -> impl Iterator<Item = PointSet> {
        debug_assert!(n <= MAX_POINTS);
        (0..1u32 << n).map(|bits| PointSet(bits as u16))
    }

    /// Sorted member list; the canonical JSON form.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        let mut bits = 0u16;
        for x in points {
            debug_assert!(x < MAX_POINTS);
            bits |= 1 << x;
        }
        PointSet(bits)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_points(iter)
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = PointSet;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of point indices below 16")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<PointSet, A::Error> {
                let mut bits = 0u16;
                while let Some(x) = seq.next_element::<u64>()? {
                    if x as usize >= MAX_POINTS {
                        return Err(A::Error::custom(format!(
                            "point {x} out of range (ground sets hold at most {MAX_POINTS} points)"
                        )));
                    }
                    bits |= 1 << x;
                }
                Ok(PointSet(bits))
            }
        }
        deserializer.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_on_words() {
        let a = PointSet::from_points([0, 2]);
        let b = PointSet::from_points([2, 3]);
        assert_eq!(a.union(b), PointSet::from_points([0, 2, 3]));
        assert_eq!(a.intersect(b), PointSet::singleton(2));
        assert_eq!(a.minus(b), PointSet::singleton(0));
        assert_eq!(a.symmetric_difference(b), PointSet::from_points([0, 3]));
        assert_eq!(a.complement(4), PointSet::from_points([1, 3]));
        assert!(a.is_subset(PointSet::universe(4)));
        assert!(!b.is_subset(a));
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn universe_edges() {
        assert_eq!(PointSet::universe(0), PointSet::EMPTY);
        assert_eq!(PointSet::universe(16).len(), 16);
        assert_eq!(PointSet::subsets_of(4).count(), 16);
        assert_eq!(PointSet::subsets_of(0).count(), 1);
    }

    #[test]
    fn display_sorted() {
        assert_eq!(PointSet::from_points([3, 0, 2]).to_string(), "{0,2,3}");
        assert_eq!(PointSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn serde_roundtrip() {
        let a = PointSet::from_points([1, 4]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, "[1,4]");
        assert_eq!(serde_json::from_str::<PointSet>(&js).unwrap(), a);
        assert!(serde_json::from_str::<PointSet>("[99]").is_err());
    }
}

//! Fixed-capacity vertex sets.
//!
//! A `VertexSet` is a 512-bit set stored as eight machine words, so every
//! set operation is allocation-free and `Copy`. 512 comfortably covers the
//! graph6 streams we ingest; the enumeration and canonical-form kernels
//! impose much smaller caps of their own.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub, SubAssign};

/// Hard capacity of a [`VertexSet`] (and therefore of [`crate::Graph`]).
pub const MAX_VERTICES: usize = 512;

const WORDS: usize = MAX_VERTICES / 64;

/// A subset of vertex indices `0..512` as a multi-word bit-set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set.
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{v}`.
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn all_below(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex capacity is {MAX_VERTICES}");
        let mut s = Self::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.words[w] = u64::MAX;
            } else if n > lo {
                s.words[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest element, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    /// Members collected into a `Vec`, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Serializes as the ascending list of members.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word * 64 + tz)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

macro_rules! word_op {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $op:tt) => {
        impl $assign_trait for VertexSet {
            fn $assign_method(&mut self, rhs: VertexSet) {
                for w in 0..WORDS {
                    self.words[w] $op rhs.words[w];
                }
            }
        }
        impl $trait for VertexSet {
            type Output = VertexSet;
            fn $method(mut self, rhs: VertexSet) -> VertexSet {
                self.$assign_method(rhs);
                self
            }
        }
    };
}

word_op!(BitOr, bitor, BitOrAssign, bitor_assign, |=);
word_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &=);

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(mut self, rhs: VertexSet) -> VertexSet {
        for w in 0..WORDS {
            self.words[w] ^= rhs.words[w];
        }
        self
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        for w in 0..WORDS {
            self.words[w] &= !rhs.words[w];
        }
        self
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        for w in 0..WORDS {
            self.words[w] &= !rhs.words[w];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

//! Fixed-width edge subsets.
//!
//! Every subgraph in this crate (perfect matchings, cores, cycles) is an
//! [`EdgeSet`] over the edge indices of its host graph.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, BitXorAssign, Sub, SubAssign};

const WORDS: usize = 3;

/// Maximum number of edges a graph may have.
pub const MAX_EDGES: usize = WORDS * 64;

/// Maximum number of vertices a graph may have.
pub const MAX_VERTICES: usize = 128;

/// A set of edge indices `< MAX_EDGES`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet([u64; WORDS]);

impl EdgeSet {
    pub const fn empty() -> Self {
        EdgeSet([0; WORDS])
    }

    /// The set `{0, .., m-1}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_EDGES, "edge count {m} exceeds capacity");
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if m >= lo + 64 {
                *w = u64::MAX;
            } else if m > lo {
                *w = (1u64 << (m - lo)) - 1;
            }
        }
        EdgeSet(words)
    }

    pub fn singleton(e: usize) -> Self {
        let mut s = Self::empty();
        s.insert(e);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0[e >> 6] |= 1 << (e & 63);
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0[e >> 6] &= !(1 << (e & 63));
    }

    #[inline]
    pub fn toggle(&mut self, e: usize) {
        self.0[e >> 6] ^= 1 << (e & 63);
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e < MAX_EDGES && self.0[e >> 6] >> (e & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == 0)
    }

    /// Lowest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Highest member, if any.
    pub fn last(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &EdgeSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, $op:tt) => {
        impl $tr for EdgeSet {
            type Output = EdgeSet;
            #[inline]
            fn $f(self, rhs: EdgeSet) -> EdgeSet {
                let mut out = self;
                out.$fa(rhs);
                out
            }
        }
        impl $tra for EdgeSet {
            #[inline]
            fn $fa(&mut self, rhs: EdgeSet) {
                for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
                    *a = *a $op *b;
                }
            }
        }
    };
}

bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |);
bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
bitop!(BitXor, bitxor, BitXorAssign, bitxor_assign, ^);

impl Sub for EdgeSet {
    type Output = EdgeSet;
    #[inline]
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        let mut out = self;
        out -= rhs;
        out
    }
}

impl SubAssign for EdgeSet {
    #[inline]
    fn sub_assign(&mut self, rhs: EdgeSet) {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a &= !*b;
        }
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

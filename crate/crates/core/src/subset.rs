//! Fixed-length bitsets over element ids.
//!
//! [`SubgroupSet`] is the currency passed between every algorithm in the
//! crate. The bitset itself is the canonical form: two subgroups are equal
//! iff their bits are equal, and hashing is over the words.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    len: usize,
    words: Box<[u64]>,
    count: usize,
}

impl SubgroupSet {
    /// The empty set over `len` elements. Not a subgroup until the identity is
    /// inserted.
    pub fn empty(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)].into_boxed_slice(),
            count: 0,
        }
    }

    /// `{0}`, the trivial subgroup.
    pub fn trivial(len: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(0);
        s
    }

    pub fn full(len: usize) -> Self {
        let mut words = vec![u64::MAX; len.div_ceil(WORD)];
        if !len.is_multiple_of(WORD) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (len % WORD)) - 1;
            }
        }
        Self {
            len,
            words: words.into_boxed_slice(),
            count: len,
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(len: usize, elements: I) -> Self {
        let mut s = Self::empty(len);
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// Length of the ambient universe (the group order).
    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    /// Number of elements (the subgroup order).
    #[inline]
    pub fn order(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < self.len);
        self.words[e / WORD] >> (e % WORD) & 1 == 1
    }

    /// Returns true when `e` was newly inserted.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        debug_assert!(e < self.len);
        let w = &mut self.words[e / WORD];
        let bit = 1u64 << (e % WORD);
        if *w & bit == 0 {
            *w |= bit;
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.count == 1 && self.contains(0)
    }

    pub fn is_full(&self) -> bool {
        self.count == self.len
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.count <= other.count
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let words: Box<[u64]> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        let count = words.iter().map(|w| w.count_ones() as usize).sum();
        Self {
            len: self.len,
            words,
            count,
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        let mut count = 0;
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
            count += a.count_ones() as usize;
        }
        self.count = count;
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let words: Box<[u64]> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a | b)
            .collect();
        let count = words.iter().map(|w| w.count_ones() as usize).sum();
        Self {
            len: self.len,
            words,
            count,
        }
    }

    /// Elements in ascending id order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + tz);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a SubgroupSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Canonical order: by subgroup order, then lexicographically on the
/// ascending element lists.
impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count
            .cmp(&other.count)
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.len.cmp(&other.len))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count <= 32 {
            f.debug_set().entries(self.iter()).finish()
        } else {
            write!(f, "SubgroupSet(order={}, of {})", self.count, self.len)
        }
    }
}

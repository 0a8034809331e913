//! Fixed-width vertex subsets.

use core::cmp::Ordering;
use core::fmt;

use alloc::vec::Vec;

use crate::error::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 1024;

const WORD_BITS: usize = 64;
const WORDS: usize = MAX_VERTICES / WORD_BITS;

/// A subset of `{0, .., n-1}` stored as a packed bit vector.
///
/// The same type doubles as a GF(2) vector of length `n`: symmetric
/// difference is vector addition. Only the first `ceil(n / 64)` words are
/// touched, so graphs with at most 64 vertices run on single-word operations.
///
/// Sets are ordered lexicographically by their ascending element lists, so
/// `{0} < {0, 2} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: u16,
    words: [u64; WORDS],
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// The empty subset of an `n`-element universe.
    ///
    /// # Panics
    /// If `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe of {n} exceeds {MAX_VERTICES}");
        VertexSet {
            n: n as u16,
            words: [0; WORDS],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..word_count(n) {
            s.words[w] = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    /// Builds a set from 0-based indices, rejecting indices `>= n`.
    pub fn try_from_indices<I: IntoIterator<Item = usize>>(
        n: usize,
        items: I,
    ) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut s = Self::empty(n);
        for v in items {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from 0-based indices.
    ///
    /// # Panics
    /// If any index is `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    /// Builds a set from 1-based labels, as used in all I/O.
    pub fn try_from_labels<I: IntoIterator<Item = usize>>(
        n: usize,
        labels: I,
    ) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut s = Self::empty(n);
        for l in labels {
            if l == 0 || l > n {
                return Err(Error::VertexOutOfRange {
                    vertex: l.wrapping_sub(1),
                    n,
                });
            }
            s.insert(l - 1);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of `mask` (`n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS);
        let mut s = Self::empty(n);
        s.words[0] = mask;
        s.clear_tail();
        s
    }

    /// The low 64 bits. Lossless when `n <= 64`.
    pub fn low_word(&self) -> u64 {
        self.words[0]
    }

    /// Universe size `n`.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words[..word_count(self.universe())]
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        let k = word_count(self.universe());
        &mut self.words[..k]
    }

    fn clear_tail(&mut self) {
        let n = self.universe();
        let k = word_count(n);
        let rem = n % WORD_BITS;
        if rem != 0 {
            self.words[k - 1] &= (1u64 << rem) - 1;
        }
    }

    /// # Panics
    /// If `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.n
        );
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
    }

    #[inline]
    pub fn toggle(&mut self, v: usize) {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.n
        );
        self.words[v / WORD_BITS] ^= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe() && (self.words[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words().iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words().iter().all(|&w| w == 0)
    }

    /// Smallest element.
    pub fn first(&self) -> Option<usize> {
        self.words()
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Ascending iterator over the elements.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: self.words(),
            index: 0,
            current: self.words().first().copied().unwrap_or(0),
        }
    }

    /// 1-based labels in ascending order.
    pub fn labels(&self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    #[inline]
    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.n, other.n, "universe mismatch");
        let mut out = Self::empty(self.universe());
        for i in 0..word_count(self.universe()) {
            out.words[i] = f(self.words[i], other.words[i]);
        }
        out
    }

    #[inline]
    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// In-place symmetric difference (GF(2) addition).
    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n, "universe mismatch");
        for i in 0..word_count(self.universe()) {
            self.words[i] ^= other.words[i];
        }
    }

    /// `|self ∩ other|`.
    #[inline]
    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words()
            .iter()
            .zip(other.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Parity of `|self ∩ other|`, i.e. the GF(2) dot product.
    #[inline]
    pub fn dot(&self, other: &Self) -> bool {
        self.words()
            .iter()
            .zip(other.words())
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words()
            .iter()
            .zip(other.words())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words()
            .iter()
            .zip(other.words())
            .all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({self} of {})", self.n)
    }
}

/// Iterator returned by [`VertexSet::iter`].
#[derive(Debug, Clone)]
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

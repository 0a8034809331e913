//! Dense linear algebra over GF(2).
//!
//! Rows are packed 64 columns to a word and reduced with word-wide XOR, so a
//! full elimination costs `O(rows * cols * min(rows, cols) / 64)` word
//! operations. Over GF(2) every nonzero pivot is 1, which means fraction-free
//! (Bareiss) elimination and ordinary Gauss-Jordan elimination perform the
//! same row operations; this module implements the latter.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{VertexSet, MAX_VERTICES};

const WORD_BITS: usize = 64;

/// A dense `rows x cols` matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD_BITS);
        BitMatrix {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks `rows` as matrix rows. All sets must share the universe `cols`.
    pub fn from_rows(cols: usize, rows: &[VertexSet]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, set) in rows.iter().enumerate() {
            assert_eq!(set.universe(), cols, "row {r} has the wrong width");
            m.row_words_mut(r).copy_from_slice(set.words());
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.bits[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.bits[r * self.stride + c / WORD_BITS];
        if value {
            *w |= 1 << (c % WORD_BITS);
        } else {
            *w &= !(1 << (c % WORD_BITS));
        }
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.bits[r * self.stride..(r + 1) * self.stride]
    }

    /// Row `r` as a vertex set over `cols` columns.
    pub fn row(&self, r: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.cols);
        s.words_mut().copy_from_slice(self.row_words(r));
        s
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row_words(r).iter().all(|&w| w == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.bits.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// `row[dst] ^= row[src]`.
    fn xor_row(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let s = self.stride;
        let (lo, hi) = self.bits.split_at_mut(dst.max(src) * s);
        let (d, r) = if dst < src {
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (a, b) in d.iter_mut().zip(r) {
            *a ^= b;
        }
    }

    /// `M v (mod 2)`.
    pub fn mul_vec(&self, v: &VertexSet) -> VertexSet {
        assert_eq!(v.universe(), self.cols, "vector length mismatch");
        assert!(self.rows <= MAX_VERTICES);
        let mut out = VertexSet::empty(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if parity & 1 == 1 {
                out.insert(r);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            f.write_str("  ")?;
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        f.write_str("]")
    }
}

/// Result of [`rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row-echelon form; the first `rank` rows are nonzero.
    pub matrix: BitMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, ascending.
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form over GF(2).
pub fn rref(m: &BitMatrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..a.cols {
        if rank == a.rows {
            break;
        }
        let Some(p) = (rank..a.rows).find(|&r| a.get(r, c)) else {
            continue;
        };
        a.swap_rows(rank, p);
        for r in 0..a.rows {
            if r != rank && a.get(r, c) {
                a.xor_row(r, rank);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    Rref {
        matrix: a,
        rank,
        pivots,
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    rref(m).rank
}

/// Basis of `{v : M v = 0 (mod 2)}` in canonical form.
///
/// The basis vectors, stacked as rows, form a matrix in reduced row-echelon
/// form, listed by ascending pivot column. Two matrices with the same kernel
/// therefore produce identical bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelBasis {
    cols: usize,
    vectors: Vec<VertexSet>,
    pivots: Vec<usize>,
}

impl KernelBasis {
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vectors(&self) -> &[VertexSet] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<VertexSet> {
        self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Leading column of each basis vector.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership in the span, by elimination against the pivots.
    pub fn span_contains(&self, v: &VertexSet) -> bool {
        let mut r = *v;
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            if r.contains(p) {
                r.xor_assign(b);
            }
        }
        r.is_empty()
    }
}

/// Canonical basis of the span of `vectors`: the nonzero rows of their RREF.
pub fn canonical_basis(cols: usize, vectors: &[VertexSet]) -> KernelBasis {
    let reduced = rref(&BitMatrix::from_rows(cols, vectors));
    KernelBasis {
        cols,
        vectors: (0..reduced.rank).map(|r| reduced.matrix.row(r)).collect(),
        pivots: reduced.pivots,
    }
}

/// Null space of `m` over GF(2).
///
/// # Panics
/// If `m` has more than [`MAX_VERTICES`] columns.
pub fn kernel(m: &BitMatrix) -> KernelBasis {
    assert!(
        m.cols() <= MAX_VERTICES,
        "kernel limited to {MAX_VERTICES} columns"
    );
    let reduced = rref(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &reduced.pivots {
        is_pivot[p] = true;
    }
    // One vector per free column f: x_f = 1, pivot variables solved from the
    // reduced rows, other free variables 0.
    let raw: Vec<VertexSet> = (0..m.cols())
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = VertexSet::singleton(m.cols(), f);
            for (r, &p) in reduced.pivots.iter().enumerate() {
                if reduced.matrix.get(r, f) {
                    v.insert(p);
                }
            }
            v
        })
        .collect();
    canonical_basis(m.cols(), &raw)
}

//! Induced stabilizers, X-chain groups, bias degrees and overlaps.
//!
//! For a vertex subset `xi`, the product of the generators `g_i = X_i Z_{N_i}`
//! over `i in xi` equals `pi(xi) X^{xi} Z^{c_xi}` as an operator, with all
//! `X` factors to the left of all `Z` factors. Here `c_xi = Δ_{i in xi} N_i`
//! is the correlation index and `pi(xi) = (-1)^{|E(G[xi])|}` the parity:
//! commuting each `X_j` leftwards past `Z_{N_i}` costs one sign per edge of
//! the induced subgraph.

use core::fmt;
use core::ops::Mul;

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::gf2::{self, KernelBasis};
use crate::graph::{check_subset, graph_symmetric_difference, Graph};

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    #[inline]
    pub fn from_parity(k: usize) -> Sign {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    #[inline]
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The operator `sign * X^{x} Z^{z}`, with the `X` block to the left.
///
/// A qubit in both supports carries the product `X Z` (which is `-iY`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stabilizer {
    pub sign: Sign,
    pub x: VertexSet,
    pub z: VertexSet,
}

impl Stabilizer {
    pub fn identity(n: usize) -> Self {
        Stabilizer {
            sign: Sign::Plus,
            x: VertexSet::empty(n),
            z: VertexSet::empty(n),
        }
    }

    /// The generator `g_v = X_v Z_{N_v}`.
    pub fn generator(g: &Graph, v: usize) -> Self {
        Stabilizer {
            sign: Sign::Plus,
            x: VertexSet::singleton(g.n(), v),
            z: *g.neighbors(v),
        }
    }

    pub fn n(&self) -> usize {
        self.x.universe()
    }

    /// No qubit carries both `X` and `Z`.
    pub fn is_y_free(&self) -> bool {
        self.x.is_disjoint(&self.z)
    }

    pub fn negated(mut self) -> Self {
        self.sign = self.sign.flip();
        self
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign.is_minus() { "-" } else { "+" })?;
        write!(f, "X{}", self.x)?;
        if !self.z.is_empty() {
            write!(f, " Z{}", self.z)?;
        }
        Ok(())
    }
}

/// `c_xi = Δ_{j in xi} N_j`.
pub fn correlation_index(g: &Graph, xi: &VertexSet) -> Result<VertexSet, Error> {
    check_subset(g, xi)?;
    let mut c = VertexSet::empty(g.n());
    for v in xi.iter() {
        c.xor_assign(g.neighbors(v));
    }
    Ok(c)
}

/// `pi(xi) = (-1)^{|E(G[xi])|}`.
pub fn stabilizer_parity(g: &Graph, xi: &VertexSet) -> Result<Sign, Error> {
    check_subset(g, xi)?;
    Ok(Sign::from_parity(g.induced_edge_count(xi)))
}

/// `s^(xi) = prod_{i in xi} g_i = pi(xi) X^{xi} Z^{c_xi}`.
pub fn induced_stabilizer(g: &Graph, xi: &VertexSet) -> Result<Stabilizer, Error> {
    Ok(Stabilizer {
        sign: stabilizer_parity(g, xi)?,
        x: *xi,
        z: correlation_index(g, xi)?,
    })
}

/// True when every vertex has an even number of neighbours in `xi`.
///
/// Evaluated vertex by vertex, independently of the kernel computation.
pub fn is_xchain(g: &Graph, xi: &VertexSet) -> Result<bool, Error> {
    check_subset(g, xi)?;
    Ok((0..g.n()).all(|v| g.neighbors(v).intersection_len(xi) % 2 == 0))
}

/// The X-chain group `<Γ_G>`, stored as a canonical generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XChainGroup {
    basis: KernelBasis,
    parities: Vec<Sign>,
}

impl XChainGroup {
    pub fn n(&self) -> usize {
        self.basis.cols()
    }

    /// Generators in reduced row-echelon order.
    pub fn generators(&self) -> &[VertexSet] {
        self.basis.vectors()
    }

    /// Parity of each generator, aligned with [`generators`](Self::generators).
    pub fn parities(&self) -> &[Sign] {
        &self.parities
    }

    pub fn dimension(&self) -> usize {
        self.basis.dim()
    }

    /// `log2` of the group order.
    pub fn order_log2(&self) -> usize {
        self.dimension()
    }

    /// True if some generator has negative parity.
    pub fn is_z_balanced(&self) -> bool {
        self.parities.iter().any(|s| s.is_minus())
    }

    /// Membership test by elimination against the generator pivots.
    pub fn contains(&self, xi: &VertexSet) -> bool {
        xi.universe() == self.n() && self.basis.span_contains(xi)
    }

    pub fn basis(&self) -> &KernelBasis {
        &self.basis
    }

    /// All `2^dim` X-chains, in binary-counter order over the generators.
    ///
    /// # Panics
    /// If the dimension exceeds 32.
    pub fn elements(&self) -> Elements<'_> {
        assert!(self.dimension() <= 32, "group too large to enumerate");
        Elements {
            generators: self.generators(),
            next: 0,
            end: 1u64 << self.dimension(),
            n: self.n(),
        }
    }
}

/// Iterator returned by [`XChainGroup::elements`].
#[derive(Debug, Clone)]
pub struct Elements<'a> {
    generators: &'a [VertexSet],
    next: u64,
    end: u64,
    n: usize,
}

impl Iterator for Elements<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.next >= self.end {
            return None;
        }
        let mut acc = VertexSet::empty(self.n);
        let mut bits = self.next;
        while bits != 0 {
            acc.xor_assign(&self.generators[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        self.next += 1;
        Some(acc)
    }
}

/// X-chain group of `g`: the canonical GF(2) kernel of the adjacency matrix,
/// with the parity of each generator.
pub fn xchain_group(g: &Graph) -> XChainGroup {
    let basis = gf2::kernel(&g.adjacency_matrix());
    let parities = basis
        .vectors()
        .iter()
        .map(|v| Sign::from_parity(g.induced_edge_count(v)))
        .collect();
    XChainGroup { basis, parities }
}

/// The bias degree `<+^n|G>`, held exactly.
///
/// It is either zero or `±2^{-k/2}` for an integer `k >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BiasDegree {
    Zero,
    /// `sign * 2^{-half_exponent / 2}`.
    Power {
        sign: Sign,
        half_exponent: u32,
    },
}

impl BiasDegree {
    /// `+2^{-half_exponent / 2}`.
    pub const fn positive(half_exponent: u32) -> Self {
        BiasDegree::Power {
            sign: Sign::Plus,
            half_exponent,
        }
    }

    pub fn is_zero(self) -> bool {
        self == BiasDegree::Zero
    }

    pub fn abs(self) -> Self {
        match self {
            BiasDegree::Zero => BiasDegree::Zero,
            BiasDegree::Power { half_exponent, .. } => BiasDegree::positive(half_exponent),
        }
    }

    pub fn value(self) -> f64 {
        match self {
            BiasDegree::Zero => 0.0,
            BiasDegree::Power {
                sign,
                half_exponent,
            } => sign.value() as f64 * crate::inv_sqrt2_pow(half_exponent),
        }
    }
}

impl fmt::Display for BiasDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, k) = match *self {
            BiasDegree::Zero => return f.write_str("0"),
            BiasDegree::Power {
                sign,
                half_exponent,
            } => (sign, half_exponent),
        };
        if sign.is_minus() {
            f.write_str("-")?;
        }
        match k {
            0 => f.write_str("1"),
            k if k % 2 == 0 => write!(f, "2^-{}", k / 2),
            k => write!(f, "2^-{k}/2"),
        }
    }
}

/// `|<+^n|G>|` from a computed group: zero if any generator has negative
/// parity, else `2^{-(n - |Γ|)/2}`.
pub fn bias_magnitude_of(group: &XChainGroup) -> BiasDegree {
    if group.is_z_balanced() {
        BiasDegree::Zero
    } else {
        BiasDegree::positive((group.n() - group.dimension()) as u32)
    }
}

/// `|<+^n|G>|`.
pub fn bias_magnitude(g: &Graph) -> BiasDegree {
    bias_magnitude_of(&xchain_group(g))
}

/// `<+^n|G>` with its sign.
///
/// `2^n <+^n|G> = sum_y (-1)^{q(y)}` with `q(y) = |E(G[y])| mod 2`, a
/// quadratic form whose polar form is `x^T A y` and whose radical is the
/// X-chain group. The sum vanishes when `q` is nonzero on the radical;
/// otherwise its sign is `(-1)^{Arf(q)}` on any complement of the radical.
pub fn bias_degree(g: &Graph) -> BiasDegree {
    match bias_magnitude(g) {
        BiasDegree::Zero => BiasDegree::Zero,
        BiasDegree::Power { half_exponent, .. } => BiasDegree::Power {
            sign: arf_sign(g),
            half_exponent,
        },
    }
}

/// `(-1)^{Arf}` of the edge-parity form, via a symplectic basis.
fn arf_sign(g: &Graph) -> Sign {
    let n = g.n();
    let polar = |x: &VertexSet, y: &VertexSet| {
        y.iter()
            .filter(|&v| g.neighbors(v).intersection_len(x) % 2 == 1)
            .count()
            % 2
            == 1
    };
    let q = |x: &VertexSet| g.induced_edge_count(x) % 2 == 1;
    let mut pool: Vec<VertexSet> = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
    let mut arf = false;
    while let Some(e) = pool.pop() {
        let Some(pos) = pool.iter().position(|w| polar(&e, w)) else {
            // Orthogonal to everything left: a radical direction.
            continue;
        };
        let f = pool.swap_remove(pos);
        arf ^= q(&e) && q(&f);
        for w in &mut pool {
            let (we, wf) = (polar(w, &e), polar(w, &f));
            if wf {
                w.xor_assign(&e);
            }
            if we {
                w.xor_assign(&f);
            }
        }
    }
    if arf {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// `<G|H>` as the bias degree of `G Δ H`.
pub fn overlap(g: &Graph, h: &Graph) -> Result<BiasDegree, Error> {
    Ok(bias_degree(&graph_symmetric_difference(g, h)?))
}

/// Representatives of the correlation group `P_G / <Γ_G>`.
///
/// Returns the singletons at the non-pivot columns of the canonical X-chain
/// basis. Their span meets the X-chain group only in the empty set, and
/// together with the generators they span every subset.
pub fn correlation_group_representatives(g: &Graph) -> Vec<VertexSet> {
    let group = xchain_group(g);
    let n = g.n();
    let mut pivot = VertexSet::empty(n);
    for &p in group.basis.pivots() {
        pivot.insert(p);
    }
    (0..n)
        .filter(|&v| !pivot.contains(v))
        .map(|v| VertexSet::singleton(n, v))
        .collect()
}

//! Euler chains and graph-state Bell operators.
//!
//! A vertex subset is an Euler chain when every vertex of its induced
//! subgraph has even degree. Its induced stabilizer then has disjoint `X` and
//! `Z` supports, so it can be measured with the two local settings `X` and
//! `Z`. For an Euler chain `xi` the operator
//!
//! ```text
//! B_xi = sum_{i in xi} g_i + s^(xi)
//! ```
//!
//! has quantum value `|xi| + 1` on the graph state. When `pi(xi) = -1`, local
//! hidden variable (LHV) models are confined to
//! `[-|xi| + (-1)^{|xi|+1}, |xi| - 1]`.
//!
//! Both LHV extrema are brute-forced two ways: over every assignment of `±1`
//! to the `X` and `Z` observables at each site ([`lhv_extrema_full`]), and over
//! the `2^|xi|` sign patterns of `a_1 + .. + a_k + pi * a_1 .. a_k`
//! ([`lhv_extrema_reduced`]).

use core::cmp::Ordering;

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::{check_subset, Graph};
use crate::stabilizer::{induced_stabilizer, Sign, Stabilizer};

/// Largest graph accepted by the LHV brute force.
pub const MAX_BELL_VERTICES: usize = 16;

/// Default size cap for Euler-chain enumeration.
pub const DEFAULT_MAX_CHAIN_SIZE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerClass {
    NotEuler,
    /// The induced subgraph has no edges.
    Trivial,
    NonTrivial,
}

impl EulerClass {
    pub fn is_euler(self) -> bool {
        self != EulerClass::NotEuler
    }
}

/// Classifies `xi` by the degrees of `G[xi]`. Costs `O(|xi| n / 64)`.
pub fn is_euler_chain(g: &Graph, xi: &VertexSet) -> Result<EulerClass, Error> {
    check_subset(g, xi)?;
    let mut any_edge = false;
    for v in xi.iter() {
        let d = g.induced_degree(xi, v);
        if d % 2 == 1 {
            return Ok(EulerClass::NotEuler);
        }
        any_edge |= d > 0;
    }
    Ok(if any_edge {
        EulerClass::NonTrivial
    } else {
        EulerClass::Trivial
    })
}

/// An Euler chain with its (σ_Y-free) stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerChainInfo {
    pub vertices: VertexSet,
    pub trivial: bool,
    pub parity: Sign,
    pub stabilizer: Stabilizer,
}

pub fn euler_chain_info(g: &Graph, xi: &VertexSet) -> Result<EulerChainInfo, Error> {
    let class = is_euler_chain(g, xi)?;
    if !class.is_euler() {
        return Err(Error::NotEulerChain {
            chain: alloc::boxed::Box::new(*xi),
        });
    }
    let stabilizer = induced_stabilizer(g, xi)?;
    debug_assert!(stabilizer.is_y_free());
    Ok(EulerChainInfo {
        vertices: *xi,
        trivial: class == EulerClass::Trivial,
        parity: stabilizer.sign,
        stabilizer,
    })
}

/// `V_G` is an X-chain exactly when every vertex degree is even.
pub fn whole_graph_xchain_test(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) % 2 == 0)
}

/// Extremal values of a Bell operator over deterministic LHV assignments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LhvExtrema {
    pub max: i64,
    pub min: i64,
}

/// LHV extrema of `B_xi`, sweeping every joint `±1` assignment to the `X` and
/// `Z` observables.
///
/// An assignment fixes `x_v, z_v` for every site; a term
/// `sign X^{x} Z^{z}` then takes the value `sign * prod x_v * prod z_w`.
/// Observables that no term touches do not change the value, so the sweep
/// runs over the touched ones only: `x_v` for `v in xi` and `z_w` for
/// `w in N(xi)`.
pub fn lhv_extrema_full(g: &Graph, xi: &VertexSet) -> Result<LhvExtrema, Error> {
    if g.n() > MAX_BELL_VERTICES {
        return Err(Error::BruteForceTooLarge {
            n: g.n(),
            max: MAX_BELL_VERTICES,
        });
    }
    let terms = bell_terms(g, xi)?;
    for t in &terms {
        if !t.is_y_free() {
            return Err(Error::NotEulerChain {
                chain: alloc::boxed::Box::new(*xi),
            });
        }
    }
    Ok(sweep_assignments(g.n(), &terms))
}

/// Brute-force sweep over the observables touched by `terms`.
fn sweep_assignments(n: usize, terms: &[Stabilizer]) -> LhvExtrema {
    // Variable k < n is x_k, variable n + k is z_k. Compress to the touched ones.
    let mut touched_x = VertexSet::empty(n);
    let mut touched_z = VertexSet::empty(n);
    for t in terms {
        touched_x = touched_x.union(&t.x);
        touched_z = touched_z.union(&t.z);
    }
    let mut slot = [usize::MAX; 2 * MAX_BELL_VERTICES];
    let mut vars = 0usize;
    for v in touched_x.iter() {
        slot[v] = vars;
        vars += 1;
    }
    for v in touched_z.iter() {
        slot[n + v] = vars;
        vars += 1;
    }
    // by_var[k] = terms containing variable k.
    let mut by_var: Vec<Vec<usize>> = alloc::vec![Vec::new(); vars];
    for (i, t) in terms.iter().enumerate() {
        for v in t.x.iter() {
            by_var[slot[v]].push(i);
        }
        for v in t.z.iter() {
            by_var[slot[n + v]].push(i);
        }
    }

    // Gray-code order: step k flips one variable, so only the terms that
    // contain it change sign. Starts from all variables at +1.
    let mut values: Vec<i64> = terms.iter().map(|t| t.sign.value()).collect();
    let mut sum: i64 = values.iter().sum();
    let mut best = LhvExtrema { max: sum, min: sum };
    for step in 1u64..(1u64 << vars) {
        for &i in &by_var[step.trailing_zeros() as usize] {
            sum -= 2 * values[i];
            values[i] = -values[i];
        }
        best.max = best.max.max(sum);
        best.min = best.min.min(sum);
    }
    best
}

/// Extrema of `a_1 + .. + a_k + parity * a_1 a_2 .. a_k` over `a_i = ±1`.
///
/// # Panics
/// If `k > 30`.
pub fn lhv_extrema_reduced(k: usize, parity: Sign) -> LhvExtrema {
    assert!(k <= 30, "reduced sweep limited to 30 sites");
    let p = parity.value();
    let mut best = LhvExtrema {
        max: i64::MIN,
        min: i64::MAX,
    };
    for pattern in 0u64..(1u64 << k) {
        let minus = pattern.count_ones() as i64;
        let sum = k as i64 - 2 * minus;
        let product = if minus % 2 == 0 { 1 } else { -1 };
        let value = sum + p * product;
        best.max = best.max.max(value);
        best.min = best.min.min(value);
    }
    best
}

/// The terms `g_i` (`i in xi`, ascending) followed by `s^(xi)`.
pub fn bell_terms(g: &Graph, xi: &VertexSet) -> Result<Vec<Stabilizer>, Error> {
    check_subset(g, xi)?;
    let mut terms: Vec<Stabilizer> = xi.iter().map(|i| Stabilizer::generator(g, i)).collect();
    terms.push(induced_stabilizer(g, xi)?);
    Ok(terms)
}

/// A Bell inequality built from an Euler chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellReport {
    pub chain: VertexSet,
    pub parity: Sign,
    /// `g_i` for `i in chain`, then `s^(chain)`.
    pub operator_terms: Vec<Stabilizer>,
    /// From the full assignment sweep.
    pub lhv_max: i64,
    pub lhv_min: i64,
    /// `|xi| - 1`.
    pub lhv_formula_upper: i64,
    /// `-|xi| + (-1)^{|xi|+1}`.
    pub lhv_formula_lower: i64,
    /// `|xi| + 1`.
    pub quantum_value: i64,
    pub violated: bool,
    /// The chain has negative parity, so the closed-form bounds apply.
    pub meets_hypothesis: bool,
}

impl BellReport {
    /// `quantum_value / lhv_max` compared without division. A nonpositive
    /// LHV maximum ranks above any positive one.
    fn cmp_ratio(&self, other: &Self) -> Ordering {
        match (self.lhv_max > 0, other.lhv_max > 0) {
            (true, true) => {
                (self.quantum_value * other.lhv_max).cmp(&(other.quantum_value * self.lhv_max))
            }
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => Ordering::Equal,
        }
    }
}

/// Builds `B_xi` and brute-forces its LHV range.
///
/// `xi` must be an Euler chain. Positive-parity chains are accepted with
/// `meets_hypothesis = false`; their `violated` flag reflects the sweep.
pub fn bell_operator(g: &Graph, xi: &VertexSet) -> Result<BellReport, Error> {
    if g.n() > MAX_BELL_VERTICES {
        return Err(Error::BruteForceTooLarge {
            n: g.n(),
            max: MAX_BELL_VERTICES,
        });
    }
    let info = euler_chain_info(g, xi)?;
    let operator_terms = bell_terms(g, xi)?;
    let lhv = sweep_assignments(g.n(), &operator_terms);
    let k = xi.len() as i64;
    let quantum_value = k + 1;
    Ok(BellReport {
        chain: *xi,
        parity: info.parity,
        operator_terms,
        lhv_max: lhv.max,
        lhv_min: lhv.min,
        lhv_formula_upper: k - 1,
        lhv_formula_lower: -k + if (k + 1) % 2 == 0 { 1 } else { -1 },
        quantum_value,
        violated: quantum_value > lhv.max,
        meets_hypothesis: info.parity.is_minus(),
    })
}

/// All Euler chains with `1 <= |xi| <= max_size`, by size then
/// lexicographically, plus `V_G` when `G` is itself Eulerian.
///
/// Subsets are grown in ascending vertex order. A branch is cut once some
/// chosen vertex has odd degree in the partial subgraph and no neighbour left
/// among the vertices still available to add.
pub fn euler_chains(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    // later[v] = vertices with index > v.
    let later: Vec<VertexSet> = (0..n)
        .map(|v| VertexSet::from_indices(n, v + 1..n))
        .collect();
    for size in 1..=max_size.min(n) {
        let mut current = VertexSet::empty(n);
        grow(g, &later, &mut current, 0, size, &mut out);
    }
    let all = g.vertex_set();
    if n > max_size && whole_graph_xchain_test(g) {
        out.push(all);
    }
    out
}

fn grow(
    g: &Graph,
    later: &[VertexSet],
    current: &mut VertexSet,
    start: usize,
    remaining: usize,
    out: &mut Vec<VertexSet>,
) {
    if remaining == 0 {
        if is_euler_chain(g, current)
            .map(EulerClass::is_euler)
            .unwrap_or(false)
        {
            out.push(*current);
        }
        return;
    }
    let n = g.n();
    if n - start < remaining {
        return;
    }
    for v in start..=n - remaining {
        current.insert(v);
        let pruned = current.iter().any(|u| {
            g.induced_degree(current, u) % 2 == 1 && g.neighbors(u).is_disjoint(&later[v])
        });
        if !pruned {
            grow(g, later, current, v + 1, remaining - 1, out);
        }
        current.remove(v);
    }
}

/// Bell reports for every negative-parity Euler chain up to `max_chain_size`
/// (plus `V_G` when Eulerian), strongest quantum/LHV ratio first.
pub fn euler_bell_scan(g: &Graph, max_chain_size: usize) -> Result<Vec<BellReport>, Error> {
    if g.n() > MAX_BELL_VERTICES {
        return Err(Error::BruteForceTooLarge {
            n: g.n(),
            max: MAX_BELL_VERTICES,
        });
    }
    let mut reports = Vec::new();
    for chain in euler_chains(g, max_chain_size) {
        if g.induced_edge_count(&chain) % 2 == 1 {
            reports.push(bell_operator(g, &chain)?);
        }
    }
    reports.sort_by(|a, b| {
        b.cmp_ratio(a)
            .then_with(|| a.chain.len().cmp(&b.chain.len()))
            .then_with(|| a.chain.cmp(&b.chain))
    });
    Ok(reports)
}

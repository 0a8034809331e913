//! X-chain groups of graph states.
//!
//! A graph state on `n` qubits is stabilized by `g_i = X_i Z_{N_i}` for every
//! vertex `i`. Products of generators over a vertex subset `xi` have the form
//! `pi(xi) X^{xi} Z^{c_xi}`, where the correlation index `c_xi` is the mod-2
//! neighbourhood of `xi` and the parity `pi(xi)` is the sign of the induced
//! edge count. Subsets with an empty correlation index are X-chains; they form
//! a group equal to the GF(2) kernel of the adjacency matrix.
//!
//! This crate computes, for arbitrary simple graphs:
//!
//! - ranks, reduced row-echelon forms and canonical kernels over GF(2) ([`gf2`]),
//! - correlation indices, parities, X-chain groups, bias degrees and
//!   overlaps ([`stabilizer`]),
//! - X-chain fragments via the merge/exclusion rules, validated exactly
//!   ([`fragments`]),
//! - Euler chains and the Bell operators built from them, with brute-forced
//!   local-hidden-variable bounds ([`euler_bell`]),
//! - a dense statevector [`oracle`] for checking all of the above on small graphs.
//!
//! Everything is `no_std` with `alloc`. File formats and the command-line
//! front end live in the companion `xchain` crate.
//!
//! Vertices are 0-based in the API. `Display` impls print 1-based labels.
//!
//! ```
//! use xchain_core::graph::{family, FamilyKind};
//! use xchain_core::stabilizer::{bias_degree, xchain_group};
//!
//! let k3 = family(FamilyKind::Complete, 3).unwrap();
//! let group = xchain_group(&k3);
//! assert_eq!(group.generators().len(), 1);
//! assert!(bias_degree(&k3).is_zero());
//! ```

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod error;
pub mod euler_bell;
pub mod fragments;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod stabilizer;

pub use bitset::VertexSet;
pub use error::Error;
pub use graph::Graph;

/// `2^{-k/2}` without `std` float intrinsics. Exact for even `k`.
pub(crate) fn inv_sqrt2_pow(k: u32) -> f64 {
    let mut v = 1.0f64;
    for _ in 0..k / 2 {
        v *= 0.5;
    }
    if k % 2 == 1 {
        v *= core::f64::consts::FRAC_1_SQRT_2;
    }
    v
}

//! Dense statevectors of small graph states.
//!
//! Used only to cross-check the stabilizer-formalism results. Graph states
//! have real amplitudes in the computational basis, and every operator
//! evaluated here is a signed product `X^x Z^z`, so the arithmetic stays
//! real throughout.
//!
//! Basis index bit `v` holds the value of qubit `v`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::stabilizer::Stabilizer;

/// Largest qubit count the oracle will build (4096 amplitudes).
pub const MAX_ORACLE_QUBITS: usize = 12;

/// Real amplitudes of an `n`-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<f64>,
}

impl StateVector {
    /// `|+>^n`.
    pub fn plus(n: usize) -> Result<Self, Error> {
        if n > MAX_ORACLE_QUBITS {
            return Err(Error::OracleTooLarge {
                n,
                max: MAX_ORACLE_QUBITS,
            });
        }
        let a = crate::inv_sqrt2_pow(n as u32);
        Ok(StateVector {
            n,
            amplitudes: vec![a; 1 << n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    /// Phase flip on `|..1..1..>` components of qubits `a` and `b`.
    pub fn apply_cz(&mut self, a: usize, b: usize) {
        let mask = (1usize << a) | (1usize << b);
        for (i, amp) in self.amplitudes.iter_mut().enumerate() {
            if i & mask == mask {
                *amp = -*amp;
            }
        }
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    /// Number of strictly positive and strictly negative amplitudes.
    pub fn sign_census(&self) -> (usize, usize) {
        let pos = self.amplitudes.iter().filter(|&&a| a > 0.0).count();
        let neg = self.amplitudes.iter().filter(|&&a| a < 0.0).count();
        (pos, neg)
    }
}

/// `prod_{(a,b) in E} CZ_{ab} |+>^n`.
pub fn build_graph_state(g: &Graph) -> Result<StateVector, Error> {
    let mut sv = StateVector::plus(g.n())?;
    for (a, b) in g.edges() {
        sv.apply_cz(a, b);
    }
    Ok(sv)
}

fn low_mask(s: &crate::VertexSet) -> usize {
    s.low_word() as usize
}

/// `<psi| sign X^x Z^z |psi>`.
///
/// `Z^z` acts first, then `X^x`; for a basis state `y` that gives
/// `(X^x Z^z psi)(y) = (-1)^{|(y ^ x) & z|} psi(y ^ x)`.
pub fn expectation(sv: &StateVector, s: &Stabilizer) -> Result<f64, Error> {
    if s.n() != sv.n {
        return Err(Error::VertexCountMismatch {
            left: sv.n,
            right: s.n(),
        });
    }
    let x = low_mask(&s.x);
    let z = low_mask(&s.z);
    let amps = &sv.amplitudes;
    let mut acc = 0.0;
    for (y, &a) in amps.iter().enumerate() {
        let src = y ^ x;
        let phase = if (src & z).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        acc += a * phase * amps[src];
    }
    Ok(s.sign.value() as f64 * acc)
}

/// `sum_i a_i b_i`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<f64, Error> {
    if a.n != b.n {
        return Err(Error::VertexCountMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(a.amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x * y)
        .sum())
}

/// `<+^n|psi>`.
pub fn plus_overlap(sv: &StateVector) -> f64 {
    sv.amplitudes.iter().sum::<f64>() * crate::inv_sqrt2_pow(sv.n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use crate::stabilizer::{induced_stabilizer, Sign};
    use crate::VertexSet;

    const TOL: f64 = 1e-12;

    #[test]
    fn small_states() {
        let e = build_graph_state(&Graph::new(2)).unwrap();
        assert!(e.amplitudes().iter().all(|&a| (a - 0.5).abs() < TOL));
        let one = build_graph_state(&family(FamilyKind::Linear, 2).unwrap()).unwrap();
        let expected = [0.5, 0.5, 0.5, -0.5];
        for (a, b) in one.amplitudes().iter().zip(expected) {
            assert!((a - b).abs() < TOL);
        }
        let k3 = build_graph_state(&family(FamilyKind::Complete, 3).unwrap()).unwrap();
        assert_eq!(k3.sign_census(), (4, 4));
        assert!((k3.norm_squared() - 1.0).abs() < TOL);
    }

    #[test]
    fn too_many_qubits() {
        assert_eq!(
            build_graph_state(&Graph::new(13)),
            Err(Error::OracleTooLarge { n: 13, max: 12 })
        );
    }

    #[test]
    fn expectations() {
        let g = family(FamilyKind::Cycle, 5).unwrap();
        let sv = build_graph_state(&g).unwrap();
        let xi = VertexSet::from_indices(5, [0, 1, 3]);
        let s = induced_stabilizer(&g, &xi).unwrap();
        assert!((expectation(&sv, &s).unwrap() - 1.0).abs() < TOL);
        assert!((expectation(&sv, &s.negated()).unwrap() + 1.0).abs() < TOL);

        let k3 = family(FamilyKind::Complete, 3).unwrap();
        let sv = build_graph_state(&k3).unwrap();
        let all_x = Stabilizer {
            sign: Sign::Plus,
            x: VertexSet::full(3),
            z: VertexSet::empty(3),
        };
        assert!((expectation(&sv, &all_x).unwrap() + 1.0).abs() < TOL);
    }

    #[test]
    fn inner_products() {
        let l3 = build_graph_state(&family(FamilyKind::Linear, 3).unwrap()).unwrap();
        let k3 = build_graph_state(&family(FamilyKind::Complete, 3).unwrap()).unwrap();
        assert!((inner_product(&l3, &l3).unwrap() - 1.0).abs() < TOL);
        assert!((inner_product(&l3, &k3).unwrap().abs() - 0.5).abs() < TOL);
        let l4 = build_graph_state(&family(FamilyKind::Linear, 4).unwrap()).unwrap();
        let plus = StateVector::plus(4).unwrap();
        assert!((inner_product(&plus, &l4).unwrap() - 0.25).abs() < TOL);
        assert!((plus_overlap(&l4) - 0.25).abs() < TOL);
        assert!(inner_product(&l3, &l4).is_err());
    }
}

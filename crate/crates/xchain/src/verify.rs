//! Cross-checks of every analysis on one graph.
//!
//! The exhaustive checks sweep all `2^n` subsets and need
//! `n <= MAX_BELL_VERTICES`; the statevector checks need
//! `n <= MAX_ORACLE_QUBITS`.

use xchain_core::euler_bell::{
    bell_operator, euler_bell_scan, euler_chains, is_euler_chain, lhv_extrema_full,
    lhv_extrema_reduced, MAX_BELL_VERTICES,
};
use xchain_core::fragments::fragment_fixpoint;
use xchain_core::oracle::{build_graph_state, expectation, plus_overlap, MAX_ORACLE_QUBITS};
use xchain_core::stabilizer::{
    bias_degree, correlation_index, induced_stabilizer, is_xchain, xchain_group, Sign,
};
use xchain_core::{Error, Graph, VertexSet};

use crate::report::{Check, GraphSummary, VerifyReport};

pub const TOLERANCE: f64 = 1e-12;

/// Largest group dimension enumerated for the fragment check.
const MAX_ENUMERATED_DIMENSION: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub oracle: bool,
    pub max_chain_size: usize,
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

pub fn verify(g: &Graph, opts: VerifyOptions) -> Result<VerifyReport, Error> {
    let n = g.n();
    if n > MAX_BELL_VERTICES {
        return Err(Error::BruteForceTooLarge {
            n,
            max: MAX_BELL_VERTICES,
        });
    }
    if opts.oracle && n > MAX_ORACLE_QUBITS {
        return Err(Error::OracleTooLarge {
            n,
            max: MAX_ORACLE_QUBITS,
        });
    }
    let group = xchain_group(g);
    let mut checks = Vec::new();

    let mut mismatches = 0usize;
    let mut chains = 0u64;
    for xi in subsets(n) {
        let by_criterion = is_xchain(g, &xi)?;
        mismatches += (by_criterion != group.contains(&xi)) as usize;
        chains += by_criterion as u64;
    }
    let order_ok = chains == 1u64 << group.dimension();
    checks.push(check(
        "criterion-vs-kernel",
        mismatches == 0 && order_ok,
        format!(
            "{} subsets, {chains} X-chains, {mismatches} mismatches",
            1u64 << n
        ),
    ));

    let fr = fragment_fixpoint(g);
    let frags = fr.fragments.clone().unwrap_or_default();
    if group.dimension() <= MAX_ENUMERATED_DIMENSION {
        let elements: Vec<VertexSet> = group.elements().collect();
        let bad = frags
            .iter()
            .filter(|f| {
                let inside = elements.iter().any(|xi| f.is_subset(xi));
                let split = elements
                    .iter()
                    .any(|xi| !f.is_subset(xi) && !f.is_disjoint(xi));
                !inside || split
            })
            .count();
        checks.push(check(
            "fragment-soundness",
            bad == 0,
            format!("{} fragments, {bad} unsound", frags.len()),
        ));
    } else {
        checks.push(check(
            "fragment-soundness",
            true,
            format!("skipped: group dimension {} too large", group.dimension()),
        ));
    }

    let euler_failures = group
        .elements()
        .take(1 << 16)
        .filter(|xi| !is_euler_chain(g, xi).map(|c| c.is_euler()).unwrap_or(false))
        .count();
    let all_euler = euler_chains(g, n);
    let overlapping = all_euler
        .iter()
        .filter(|xi| {
            correlation_index(g, xi)
                .map(|c| !c.is_disjoint(xi))
                .unwrap_or(true)
        })
        .count();
    checks.push(check(
        "euler-chains",
        euler_failures == 0 && overlapping == 0,
        format!(
            "{} Euler chains; {euler_failures} X-chains not Euler, {overlapping} with overlapping supports",
            all_euler.len()
        ),
    ));

    let scan = euler_bell_scan(g, opts.max_chain_size)?;
    let mut bad_bounds = 0;
    for r in &scan {
        let full = lhv_extrema_full(g, &r.chain)?;
        let reduced = lhv_extrema_reduced(r.chain.len(), Sign::Minus);
        let ok = full.max == r.lhv_max
            && full.min == r.lhv_min
            && reduced == full
            && r.lhv_max == r.lhv_formula_upper
            && r.lhv_min == r.lhv_formula_lower;
        bad_bounds += (!ok) as usize;
    }
    checks.push(check(
        "bell-bounds",
        bad_bounds == 0,
        format!(
            "{} negative-parity chains, {bad_bounds} off the closed form",
            scan.len()
        ),
    ));

    if opts.oracle {
        let sv = build_graph_state(g)?;
        let bias = bias_degree(g);
        let numeric = plus_overlap(&sv);
        checks.push(check(
            "bias-degree",
            (bias.value() - numeric).abs() < TOLERANCE,
            format!("exact {bias}, statevector {numeric}"),
        ));

        let (pos, neg) = sv.sign_census();
        let census = (pos as f64 - neg as f64) / (1u64 << n) as f64;
        checks.push(check(
            "sign-census",
            (census - bias.value()).abs() < TOLERANCE,
            format!("{pos} positive, {neg} negative amplitudes"),
        ));

        let mut worst = 0.0f64;
        for xi in subsets(n) {
            let e = expectation(&sv, &induced_stabilizer(g, &xi)?)?;
            worst = worst.max((e - 1.0).abs());
        }
        checks.push(check(
            "stabilizer-expectations",
            worst < TOLERANCE,
            format!("max |<s> - 1| = {worst:e} over {} subsets", 1u64 << n),
        ));

        let mut worst = 0.0f64;
        for r in &scan {
            let report = bell_operator(g, &r.chain)?;
            let mut q = 0.0;
            for t in &report.operator_terms {
                q += expectation(&sv, t)?;
            }
            worst = worst.max((q - report.quantum_value as f64).abs());
        }
        checks.push(check(
            "bell-quantum-values",
            worst < TOLERANCE,
            format!("max deviation {worst:e} over {} chains", scan.len()),
        ));
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        graph: GraphSummary::of(g),
        checks,
        passed,
    })
}

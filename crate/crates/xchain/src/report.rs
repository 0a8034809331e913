//! Serializable reports and their text rendering.
//!
//! Every vertex list is 1-based and ascending. Generator lists follow the
//! canonical (reduced row-echelon) order of the core crate.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use xchain_core::euler_bell::{BellReport, EulerClass};
use xchain_core::fragments::{CandidateStatus, FragmentReport};
use xchain_core::stabilizer::{
    bias_degree, bias_magnitude_of, correlation_group_representatives, correlation_index,
    induced_stabilizer, xchain_group, BiasDegree, Sign,
};
use xchain_core::{Graph, VertexSet};

pub type Labels = Vec<usize>;

fn labels(s: &VertexSet) -> Labels {
    s.labels()
}

fn sign_value(s: Sign) -> i8 {
    s.value() as i8
}

fn join_sets(sets: &[Labels]) -> String {
    if sets.is_empty() {
        return "(none)".into();
    }
    sets.iter().map(|s| braces(s)).collect::<Vec<_>>().join(" ")
}

fn braces(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// `["+A", "-B"]` as `A - B`.
fn signed_sum(terms: &[String]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (sign, body) = t.split_at(1);
        match (i, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            (_, s) => {
                out.push(' ');
                out.push_str(s);
                out.push(' ');
            }
        }
        out.push_str(body);
    }
    out
}

fn sign_text(v: i8) -> &'static str {
    if v < 0 {
        "-1"
    } else {
        "+1"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }
}

/// An exact dyadic value `sign * 2^{-half_exponent/2}`, or zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dyadic {
    pub value: f64,
    pub exact: String,
    /// `-1`, `0` or `+1`.
    pub sign: i8,
    pub half_exponent: Option<u32>,
}

impl From<BiasDegree> for Dyadic {
    fn from(b: BiasDegree) -> Self {
        let (sign, half_exponent) = match b {
            BiasDegree::Zero => (0, None),
            BiasDegree::Power {
                sign,
                half_exponent,
            } => (sign_value(sign), Some(half_exponent)),
        };
        Dyadic {
            value: b.value(),
            exact: b.to_string(),
            sign,
            half_exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct XChainsReport {
    pub graph: GraphSummary,
    pub generators: Vec<Labels>,
    pub parities: Vec<i8>,
    pub dimension: usize,
    /// The group has `2^group_order_log2` elements.
    pub group_order_log2: usize,
    /// `<+^n|G>`, signed.
    pub bias_degree: Dyadic,
    /// `2^{-(n - |Γ|)/2}`, or zero when Z-balanced.
    pub bias_magnitude: Dyadic,
    pub z_balanced: bool,
    pub correlation_representatives: Vec<Labels>,
    /// `<+^n|G>` from the statevector, when computed.
    pub oracle_plus_overlap: Option<f64>,
}

impl XChainsReport {
    pub fn new(g: &Graph, oracle_plus_overlap: Option<f64>) -> Self {
        let group = xchain_group(g);
        XChainsReport {
            graph: GraphSummary::of(g),
            generators: group.generators().iter().map(labels).collect(),
            parities: group.parities().iter().map(|&s| sign_value(s)).collect(),
            dimension: group.dimension(),
            group_order_log2: group.order_log2(),
            bias_degree: bias_degree(g).into(),
            bias_magnitude: bias_magnitude_of(&group).into(),
            z_balanced: group.is_z_balanced(),
            correlation_representatives: correlation_group_representatives(g)
                .iter()
                .map(labels)
                .collect(),
            oracle_plus_overlap,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graph: {} vertices, {} edges",
            self.graph.n,
            self.graph.edges.len()
        );
        let _ = writeln!(out, "X-chain generators ({}):", self.dimension);
        for (gen, &p) in self.generators.iter().zip(&self.parities) {
            let _ = writeln!(out, "  {}  parity {}", braces(gen), sign_text(p));
        }
        let _ = writeln!(out, "group order: 2^{}", self.group_order_log2);
        let _ = writeln!(
            out,
            "bias degree: {} = {}",
            self.bias_degree.exact, self.bias_degree.value
        );
        let _ = writeln!(out, "|bias degree|: {}", self.bias_magnitude.exact);
        let _ = writeln!(
            out,
            "Z-balanced: {}",
            if self.z_balanced { "yes" } else { "no" }
        );
        let _ = writeln!(
            out,
            "correlation group representatives: {}",
            join_sets(&self.correlation_representatives)
        );
        if let Some(v) = self.oracle_plus_overlap {
            let _ = writeln!(out, "statevector <+|G>: {v}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub n: usize,
    pub symmetric_difference: GraphSummary,
    /// `<G|H>`, signed.
    pub overlap: Dyadic,
    pub oracle_inner_product: Option<f64>,
}

impl OverlapReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "symmetric difference: {} vertices, {} edges\n<G|H> = {} = {}\n",
            self.n,
            self.symmetric_difference.edges.len(),
            self.overlap.exact,
            self.overlap.value
        );
        if let Some(v) = self.oracle_inner_product {
            let _ = writeln!(out, "statevector <G|H>: {v}");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub vertices: Labels,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExclusionJson {
    pub vertices: Labels,
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergeJson {
    pub rule: String,
    pub inputs: [Labels; 2],
    pub output: Labels,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FragmentsReport {
    pub graph: GraphSummary,
    /// `None` when too many candidates survived for fragment analysis.
    pub fragments: Option<Vec<Labels>>,
    pub xchain_fragments: Vec<Labels>,
    pub candidates: Vec<CandidateJson>,
    pub excluded: Vec<ExclusionJson>,
    pub merge_trace: Vec<MergeJson>,
    pub fragment_generators: Option<Vec<Labels>>,
    pub kernel_generators: Vec<Labels>,
    /// The fragments recover the whole X-chain group.
    pub complete: bool,
}

impl FragmentsReport {
    pub fn new(g: &Graph, r: &FragmentReport) -> Self {
        let list = |v: &[VertexSet]| v.iter().map(labels).collect::<Vec<_>>();
        FragmentsReport {
            graph: GraphSummary::of(g),
            fragments: r.fragments.as_deref().map(list),
            xchain_fragments: list(&r.xchain_fragments),
            candidates: r
                .candidates
                .iter()
                .map(|c| CandidateJson {
                    vertices: labels(&c.vertices),
                    status: match c.status {
                        CandidateStatus::Candidate => "candidate",
                        CandidateStatus::Confirmed => "confirmed-fragment",
                        CandidateStatus::Excluded => "excluded",
                    }
                    .into(),
                })
                .collect(),
            excluded: r
                .excluded
                .iter()
                .map(|e| ExclusionJson {
                    vertices: labels(&e.vertices),
                    rule: e.rule.name().into(),
                })
                .collect(),
            merge_trace: r
                .trace
                .iter()
                .map(|m| MergeJson {
                    rule: m.rule.name().into(),
                    inputs: [labels(&m.inputs[0]), labels(&m.inputs[1])],
                    output: labels(&m.output),
                })
                .collect(),
            fragment_generators: r.fragment_generators.as_deref().map(list),
            kernel_generators: list(&r.kernel_generators),
            complete: r.is_complete(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.fragments {
            Some(f) => {
                let _ = writeln!(out, "fragments: {}", join_sets(f));
                let _ = writeln!(
                    out,
                    "fragments that are X-chains: {}",
                    join_sets(&self.xchain_fragments)
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "fragments: not computed ({} candidates left)",
                    self.candidates.len()
                );
            }
        }
        let _ = writeln!(out, "merges:");
        for m in &self.merge_trace {
            let _ = writeln!(
                out,
                "  {:<18} {} + {} -> {}",
                m.rule,
                braces(&m.inputs[0]),
                braces(&m.inputs[1]),
                braces(&m.output)
            );
        }
        let _ = writeln!(out, "excluded:");
        for e in &self.excluded {
            let _ = writeln!(out, "  {:<18} {}", e.rule, braces(&e.vertices));
        }
        if let Some(gens) = &self.fragment_generators {
            let _ = writeln!(out, "generators from fragments: {}", join_sets(gens));
        }
        let _ = writeln!(
            out,
            "generators from kernel: {}",
            join_sets(&self.kernel_generators)
        );
        let _ = writeln!(
            out,
            "fragments recover the group: {}",
            if self.complete { "yes" } else { "no" }
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerReport {
    pub chain: Labels,
    /// `not-euler`, `trivial` or `non-trivial`.
    pub class: String,
    pub induced_edges: usize,
    pub parity: i8,
    pub stabilizer: String,
    pub x_support: Labels,
    pub z_support: Labels,
    pub disjoint_supports: bool,
}

impl EulerReport {
    pub fn new(g: &Graph, xi: &VertexSet, class: EulerClass) -> Self {
        let s = induced_stabilizer(g, xi).expect("subset validated by caller");
        let c = correlation_index(g, xi).expect("subset validated by caller");
        EulerReport {
            chain: labels(xi),
            class: match class {
                EulerClass::NotEuler => "not-euler",
                EulerClass::Trivial => "trivial",
                EulerClass::NonTrivial => "non-trivial",
            }
            .into(),
            induced_edges: g.induced_edge_count(xi),
            parity: sign_value(s.sign),
            stabilizer: s.to_string(),
            x_support: labels(&s.x),
            z_support: labels(&c),
            disjoint_supports: xi.is_disjoint(&c),
        }
    }

    pub fn render_text(&self) -> String {
        format!(
            "chain: {}\nclass: {}\ninduced edges: {}\nparity: {}\nstabilizer: {}\nsupports disjoint: {}\n",
            braces(&self.chain),
            self.class,
            self.induced_edges,
            sign_text(self.parity),
            self.stabilizer,
            if self.disjoint_supports { "yes" } else { "no" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BellJson {
    pub chain: Labels,
    pub parity: i8,
    pub terms: Vec<String>,
    pub lhv_max: i64,
    pub lhv_min: i64,
    pub lhv_formula_upper: i64,
    pub lhv_formula_lower: i64,
    pub quantum_value: i64,
    /// Sum of the term expectations on the statevector, when computed.
    pub oracle_quantum_value: Option<f64>,
    pub violated: bool,
    pub meets_hypothesis: bool,
}

impl BellJson {
    pub fn new(r: &BellReport, oracle_quantum_value: Option<f64>) -> Self {
        BellJson {
            chain: labels(&r.chain),
            parity: sign_value(r.parity),
            terms: r.operator_terms.iter().map(ToString::to_string).collect(),
            lhv_max: r.lhv_max,
            lhv_min: r.lhv_min,
            lhv_formula_upper: r.lhv_formula_upper,
            lhv_formula_lower: r.lhv_formula_lower,
            quantum_value: r.quantum_value,
            oracle_quantum_value,
            violated: r.violated,
            meets_hypothesis: r.meets_hypothesis,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "chain {}  parity {}",
            braces(&self.chain),
            sign_text(self.parity)
        );
        let _ = writeln!(out, "  B = {}", signed_sum(&self.terms));
        let _ = writeln!(
            out,
            "  LHV range [{}, {}] (closed form [{}, {}]), quantum {}",
            self.lhv_min,
            self.lhv_max,
            self.lhv_formula_lower,
            self.lhv_formula_upper,
            self.quantum_value
        );
        if let Some(q) = self.oracle_quantum_value {
            let _ = writeln!(out, "  statevector value {q}");
        }
        let _ = writeln!(
            out,
            "  violated: {}{}",
            if self.violated { "yes" } else { "no" },
            if self.meets_hypothesis {
                ""
            } else {
                " (positive parity)"
            }
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BellScanReport {
    pub graph: GraphSummary,
    pub max_chain_size: usize,
    pub reports: Vec<BellJson>,
}

impl BellScanReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "{} negative-parity Euler chains (size <= {}, plus V when Eulerian)\n",
            self.reports.len(),
            self.max_chain_size
        );
        for r in &self.reports {
            out.push_str(&r.render_text());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub graph: GraphSummary,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{} {:<24} {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed {
                "all checks passed"
            } else {
                "some checks failed"
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use xchain_core::graph::{family, FamilyKind};

    #[test]
    fn triangle_xchains() {
        let r = XChainsReport::new(&family(FamilyKind::Complete, 3).unwrap(), None);
        assert_eq!(r.generators, vec![vec![1, 2, 3]]);
        assert_eq!(r.parities, vec![-1]);
        assert_eq!(r.bias_degree.value, 0.0);
        assert!(r.z_balanced);
        let text = r.render_text();
        assert!(text.contains("{1,2,3}  parity -1"));
        let json = serde_json::to_string(&r).unwrap();
        let back: XChainsReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn bell_terms_read_as_a_sum() {
        let terms = ["+X{1} Z{2,3}", "-X{1,2,3}"].map(String::from);
        assert_eq!(signed_sum(&terms), "X{1} Z{2,3} - X{1,2,3}");
        assert_eq!(signed_sum(&["-X{1}".to_string()]), "-X{1}");
    }

    #[test]
    fn dyadic_from_bias() {
        let d: Dyadic = BiasDegree::positive(2).into();
        assert_eq!((d.value, d.sign, d.half_exponent), (0.5, 1, Some(2)));
        assert_eq!(d.exact, "2^-1");
        let d: Dyadic = BiasDegree::Zero.into();
        assert_eq!((d.sign, d.half_exponent), (0, None));
    }
}

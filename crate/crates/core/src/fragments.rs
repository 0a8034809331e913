//! X-chain fragments.
//!
//! A fragment is a vertex block `f` that lies inside at least one X-chain and
//! that every X-chain either contains whole or avoids: `f ∩ xi ∈ {∅, f}`.
//! Fragments are found here by local rewriting, starting from singletons:
//!
//! - exclusion: `alpha` is no fragment if some `N_v ⊆ alpha` has odd size;
//! - two fragments that intersect merge into their union;
//! - rule I: disjoint `f1, f2` merge if some `N_v ⊆ f1 ∪ f2` meets both in
//!   an odd number of vertices;
//! - rule II: disjoint `f1, f2` merge if `N_{v1} \ N_{v2} = f1`,
//!   `N_{v2} \ N_{v1} = f2` and `|N_{vi} ∩ fi|` is odd for both.
//!
//! The merge rules are only sound when their inputs already are fragments.
//! Applied to unconfirmed candidates they produce candidates, so every block
//! that survives the fixpoint is checked against the exact X-chain group
//! before it is reported. `K_4` is the standard example: rule II joins every
//! pair although the graph has no X-chains at all.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::gf2::canonical_basis;
use crate::graph::{check_subset, Graph};
use crate::stabilizer::{is_xchain, xchain_group, XChainGroup};

/// Candidates left after the fixpoint above which fragment analysis is skipped.
pub const MAX_FRAGMENT_CANDIDATES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    NegativeCriterion,
    MergeIntersecting,
    MergeRuleI,
    MergeRuleII,
    /// Rejected by the exact check against the X-chain group.
    Validation,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::NegativeCriterion => "negative-criterion",
            Rule::MergeIntersecting => "merge-intersecting",
            Rule::MergeRuleI => "merge-rule-i",
            Rule::MergeRuleII => "merge-rule-ii",
            Rule::Validation => "validation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CandidateStatus {
    Candidate,
    Confirmed,
    Excluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FragmentCandidate {
    pub vertices: VertexSet,
    pub status: CandidateStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exclusion {
    pub vertices: VertexSet,
    pub rule: Rule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MergeStep {
    pub rule: Rule,
    pub inputs: [VertexSet; 2],
    pub output: VertexSet,
}

/// Outcome of [`fragment_fixpoint`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentReport {
    /// Blocks left at the fixpoint, sorted, with their final status.
    pub candidates: Vec<FragmentCandidate>,
    /// Everything discarded, in the order it happened.
    pub excluded: Vec<Exclusion>,
    /// Every merge, in the order it happened.
    pub trace: Vec<MergeStep>,
    /// Confirmed fragments (pairwise disjoint), or `None` when more than
    /// [`MAX_FRAGMENT_CANDIDATES`] candidates remained.
    pub fragments: Option<Vec<VertexSet>>,
    /// Confirmed fragments that are X-chains themselves.
    pub xchain_fragments: Vec<VertexSet>,
    /// Canonical basis of the X-chains assembled from confirmed fragments.
    pub fragment_generators: Option<Vec<VertexSet>>,
    /// Canonical X-chain generators from the kernel.
    pub kernel_generators: Vec<VertexSet>,
}

impl FragmentReport {
    /// The fragment route recovered the whole X-chain group.
    pub fn is_complete(&self) -> bool {
        self.fragment_generators.as_deref() == Some(self.kernel_generators.as_slice())
    }
}

/// True if `alpha` provably is no fragment: some `N_v ⊆ alpha` has odd size.
pub fn negative_criterion(g: &Graph, alpha: &VertexSet) -> Result<bool, Error> {
    check_subset(g, alpha)?;
    Ok((0..g.n()).any(|v| {
        let nv = g.neighbors(v);
        nv.len() % 2 == 1 && nv.is_subset(alpha)
    }))
}

/// `f1 ∪ f2` when the two intersect.
pub fn merge_intersecting(f1: &VertexSet, f2: &VertexSet) -> Option<VertexSet> {
    f1.intersects(f2).then(|| f1.union(f2))
}

/// Rule I for disjoint `f1`, `f2`. Returns `None` if the rule does not fire
/// or the inputs intersect.
pub fn merge_rule_i(g: &Graph, f1: &VertexSet, f2: &VertexSet) -> Result<Option<VertexSet>, Error> {
    check_subset(g, f1)?;
    check_subset(g, f2)?;
    if f1.intersects(f2) {
        return Ok(None);
    }
    let u = f1.union(f2);
    let fires = (0..g.n()).any(|v| {
        let nv = g.neighbors(v);
        nv.is_subset(&u) && nv.intersection_len(f1) % 2 == 1 && nv.intersection_len(f2) % 2 == 1
    });
    Ok(fires.then_some(u))
}

/// Rule II for disjoint `f1`, `f2`. Returns `None` if the rule does not fire
/// or the inputs intersect.
pub fn merge_rule_ii(
    g: &Graph,
    f1: &VertexSet,
    f2: &VertexSet,
) -> Result<Option<VertexSet>, Error> {
    check_subset(g, f1)?;
    check_subset(g, f2)?;
    if f1.intersects(f2) {
        return Ok(None);
    }
    let n = g.n();
    for v1 in 0..n {
        let n1 = g.neighbors(v1);
        if !f1.is_subset(n1) || n1.intersection_len(f1) % 2 == 0 {
            continue;
        }
        for v2 in 0..n {
            if v2 == v1 {
                continue;
            }
            let n2 = g.neighbors(v2);
            if n1.difference(n2) == *f1
                && n2.difference(n1) == *f2
                && n2.intersection_len(f2) % 2 == 1
            {
                return Ok(Some(f1.union(f2)));
            }
        }
    }
    Ok(None)
}

/// Exact fragment test against a computed X-chain group.
///
/// Checking the generators suffices: `f ∩ (a Δ b) = (f ∩ a) Δ (f ∩ b)`, and
/// `{∅, f}` is closed under `Δ`.
pub fn is_fragment(group: &XChainGroup, f: &VertexSet) -> bool {
    if f.is_empty() || f.universe() != group.n() {
        return false;
    }
    let mut inside_some = false;
    for gen in group.generators() {
        let k = f.intersection_len(gen);
        if k == f.len() {
            inside_some = true;
        } else if k != 0 {
            return false;
        }
    }
    inside_some
}

/// Merges intersecting blocks until the pool is pairwise disjoint.
fn close_intersections(pool: &mut Vec<VertexSet>, trace: &mut Vec<MergeStep>) -> bool {
    let mut changed = false;
    'outer: loop {
        pool.sort();
        pool.dedup();
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                if let Some(u) = merge_intersecting(&pool[i], &pool[j]) {
                    trace.push(MergeStep {
                        rule: Rule::MergeIntersecting,
                        inputs: [pool[i], pool[j]],
                        output: u,
                    });
                    pool[i] = u;
                    pool.remove(j);
                    changed = true;
                    continue 'outer;
                }
            }
        }
        return changed;
    }
}

/// Runs exclusion and the three merge rules from singletons to a fixpoint,
/// then validates the survivors against the exact X-chain group.
///
/// Each pass applies, in order: exclusion, intersecting merges, rule I, rule
/// II, sweeping pairs in ascending lexicographic order. Rule I/II unions are
/// added next to their inputs and absorbed by the next intersecting merge.
/// A union removed by exclusion is not proposed again, which bounds the loop.
pub fn fragment_fixpoint(g: &Graph) -> FragmentReport {
    let n = g.n();
    let mut pool: Vec<VertexSet> = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
    let mut excluded = Vec::new();
    let mut trace = Vec::new();
    // Unions ever added by rules I/II; each is tried at most once.
    let mut tried: Vec<VertexSet> = Vec::new();

    loop {
        let before = pool.len();
        pool.retain(|alpha| {
            let out = negative_criterion(g, alpha).unwrap_or(false);
            if out {
                excluded.push(Exclusion {
                    vertices: *alpha,
                    rule: Rule::NegativeCriterion,
                });
            }
            !out
        });
        let mut changed = pool.len() != before;

        changed |= close_intersections(&mut pool, &mut trace);

        let mut additions: Vec<VertexSet> = Vec::new();
        for rule in [Rule::MergeRuleI, Rule::MergeRuleII] {
            for i in 0..pool.len() {
                for j in i + 1..pool.len() {
                    let merged = match rule {
                        Rule::MergeRuleI => merge_rule_i(g, &pool[i], &pool[j]),
                        _ => merge_rule_ii(g, &pool[i], &pool[j]),
                    }
                    .ok()
                    .flatten();
                    if let Some(u) = merged {
                        if !tried.contains(&u) {
                            tried.push(u);
                            trace.push(MergeStep {
                                rule,
                                inputs: [pool[i], pool[j]],
                                output: u,
                            });
                            additions.push(u);
                        }
                    }
                }
            }
        }
        changed |= !additions.is_empty();
        pool.extend(additions);

        if !changed {
            break;
        }
    }
    pool.sort();

    let group = xchain_group(g);
    let kernel_generators = group.generators().to_vec();

    if pool.len() > MAX_FRAGMENT_CANDIDATES {
        return FragmentReport {
            candidates: pool
                .into_iter()
                .map(|vertices| FragmentCandidate {
                    vertices,
                    status: CandidateStatus::Candidate,
                })
                .collect(),
            excluded,
            trace,
            fragments: None,
            xchain_fragments: Vec::new(),
            fragment_generators: None,
            kernel_generators,
        };
    }

    let mut candidates = Vec::with_capacity(pool.len());
    let mut fragments = Vec::new();
    for vertices in pool {
        let status = if is_fragment(&group, &vertices) {
            fragments.push(vertices);
            CandidateStatus::Confirmed
        } else {
            excluded.push(Exclusion {
                vertices,
                rule: Rule::Validation,
            });
            CandidateStatus::Excluded
        };
        candidates.push(FragmentCandidate { vertices, status });
    }

    let xchain_fragments = fragments
        .iter()
        .filter(|f| is_xchain(g, f).unwrap_or(false))
        .copied()
        .collect();

    // Unions of fragments that pass the criterion; at most 2^16 of them.
    let mut chains = Vec::new();
    for mask in 1u32..(1u32 << fragments.len()) {
        let mut u = VertexSet::empty(n);
        let mut bits = mask;
        while bits != 0 {
            u = u.union(&fragments[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        if is_xchain(g, &u).unwrap_or(false) {
            chains.push(u);
        }
    }
    let fragment_generators = canonical_basis(n, &chains).into_vectors();

    FragmentReport {
        candidates,
        excluded,
        trace,
        fragments: Some(fragments),
        xchain_fragments,
        fragment_generators: Some(fragment_generators),
        kernel_generators,
    }
}

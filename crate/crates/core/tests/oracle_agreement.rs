mod common;

use common::{all_subsets, random_graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use xchain_core::graph::{family, FamilyKind};
use xchain_core::oracle::{build_graph_state, expectation, inner_product, plus_overlap};
use xchain_core::stabilizer::{
    bias_degree, bias_magnitude, induced_stabilizer, overlap, Stabilizer,
};
use xchain_core::Graph;

const TOL: f64 = 1e-12;

fn random_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_graph(&mut rng, 1 + i % 10, 0.2 + 0.6 * (i % 7) as f64 / 6.0))
        .collect()
}

#[test]
fn bias_degree_equals_plus_overlap() {
    for g in random_graphs(200, 1) {
        let sv = build_graph_state(&g).unwrap();
        let bias = bias_degree(&g);
        assert!((bias.value() - plus_overlap(&sv)).abs() < TOL, "{g:?}");
        assert_eq!(bias.abs(), bias_magnitude(&g));
        let (pos, neg) = sv.sign_census();
        let diff = (pos as f64 - neg as f64) / (1u64 << g.n()) as f64;
        assert!((diff - bias.value()).abs() < TOL);
        assert_eq!(bias.is_zero(), pos == neg);
    }
}

#[test]
fn overlaps_match_inner_products() {
    let graphs = random_graphs(60, 2);
    for g in &graphs {
        for h in graphs.iter().filter(|h| h.n() == g.n()) {
            let a = build_graph_state(g).unwrap();
            let b = build_graph_state(h).unwrap();
            let exact = overlap(g, h).unwrap();
            let numeric = inner_product(&a, &b).unwrap();
            assert!((exact.value() - numeric).abs() < TOL);
            assert!((exact.abs().value() - numeric.abs()).abs() < TOL);
        }
    }
    let l3 = family(FamilyKind::Linear, 3).unwrap();
    let k3 = family(FamilyKind::Complete, 3).unwrap();
    assert!((overlap(&l3, &k3).unwrap().value() - 0.5).abs() < TOL);
    assert!((overlap(&l3, &l3).unwrap().value() - 1.0).abs() < TOL);
    assert_eq!(overlap(&l3, &Graph::new(3)).unwrap(), bias_degree(&l3));
}

#[test]
fn every_induced_stabilizer_has_expectation_one() {
    for g in random_graphs(80, 3).into_iter().filter(|g| g.n() <= 8) {
        let sv = build_graph_state(&g).unwrap();
        for v in 0..g.n() {
            let e = expectation(&sv, &Stabilizer::generator(&g, v)).unwrap();
            assert!((e - 1.0).abs() < TOL);
        }
        for xi in all_subsets(g.n()) {
            let s = induced_stabilizer(&g, &xi).unwrap();
            assert!(
                (expectation(&sv, &s).unwrap() - 1.0).abs() < TOL,
                "{g:?} {xi}"
            );
        }
    }
}

#[test]
fn state_is_normalized() {
    for g in random_graphs(50, 4) {
        let sv = build_graph_state(&g).unwrap();
        assert!((sv.norm_squared() - 1.0).abs() < TOL);
    }
}

use cubic_covers::cores::{build_core, classify_core, component_structure};
use cubic_covers::covers::{fulkerson_witness, mu_k};
use cubic_covers::cyclecover::{
    bipartite_core_cover, canonical_cover, cover_from_core, four_cover_cycles, scc_exact, scc_exact_on,
};
use cubic_covers::generators::flower_snark;
use cubic_covers::matching::{enumerate_perfect_matchings, three_edge_coloring, DEFAULT_PM_CAP};
use cubic_covers::structure::{bridges, is_connected};
use cubic_covers::{EdgeSet, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random connected simple cubic graph on `n` vertices (pairing model).
fn random_cubic(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
        edges.sort();
        let simple = edges.iter().all(|&(a, b)| a != b) && edges.windows(2).all(|w| w[0] != w[1]);
        if !simple {
            continue;
        }
        if let Ok(g) = Graph::cubic(n, edges) {
            if is_connected(&g) {
                return g;
            }
        }
    }
}

fn graphs() -> impl Strategy<Value = Graph> {
    (2usize..=6, any::<u64>()).prop_map(|(half, seed)| random_cubic(2 * half, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cores_satisfy_invariants(g in graphs()) {
        let pms = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
        for i in 0..pms.len().min(6) {
            for j in i + 1..pms.len().min(7) {
                for l in j + 1..pms.len().min(8) {
                    let core = build_core(&g, &pms, [i, j, l]).unwrap();
                    let cls = classify_core(&g, &core);
                    prop_assert_eq!(component_structure(&g, &core, &cls), Ok(()));
                    if cls.bipartite {
                        prop_assert!(cls.bridgeless);
                        let c = bipartite_core_cover(&g, &core).unwrap();
                        prop_assert!(c.valid && c.even && c.count <= 2);
                        prop_assert_eq!(c.length, 2 * core.k);
                        let full = cover_from_core(&g, &core, &c.cycles).unwrap();
                        prop_assert!(full.valid && full.even);
                        prop_assert!(3 * full.length <= 4 * g.m() + 2 * core.k);
                    }
                }
            }
        }
    }

    #[test]
    fn mu_is_monotone_and_covers_follow(g in graphs()) {
        prop_assume!(bridges(&g).is_empty());
        let pms = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
        let mus: Vec<usize> = (1..=4).map(|k| mu_k(&g, &pms, k).unwrap().mu).collect();
        prop_assert!(mus.windows(2).all(|w| w[0] >= w[1]));
        let w = mu_k(&g, &pms, 4).unwrap();
        let f: [EdgeSet; 4] = std::array::from_fn(|i| pms[w.factors[i]]);
        if let Ok(c) = four_cover_cycles(&g, &f) {
            prop_assert!(c.valid);
            prop_assert_eq!(3 * c.length, 4 * g.m() + 12 * w.mu);
        }
        let exact = scc_exact(&g, g.m(), 16).unwrap();
        prop_assert!(3 * exact.length >= 4 * g.m());
        if let Some(col) = three_edge_coloring(&g, &pms) {
            prop_assert_eq!(canonical_cover(&g, &col).unwrap().length, exact.length);
        }
        prop_assert!(fulkerson_witness(&g, &pms).is_some());
    }
}

#[test]
fn bipartite_cores_with_triple_edges_on_flower_snark() {
    let g = flower_snark(5).unwrap();
    let pms = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
    let mut seen = 0;
    for i in 0..pms.len() {
        for j in i + 1..pms.len() {
            for l in j + 1..pms.len() {
                let core = build_core(&g, &pms, [i, j, l]).unwrap();
                let cls = classify_core(&g, &core);
                if core.triple.is_empty() || !cls.bipartite {
                    continue;
                }
                seen += 1;
                let c = bipartite_core_cover(&g, &core).unwrap();
                assert!(c.valid && c.even);
                assert_eq!(c.length, 2 * core.k);
                assert!(core.triple.iter().all(|e| c.depth(e) == 2));
                let exact = scc_exact_on(&g, &core.edges, 4, 16).unwrap();
                assert!(exact.length <= c.length);
            }
        }
    }
    assert!(seen > 0);
}

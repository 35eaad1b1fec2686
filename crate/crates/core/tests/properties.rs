mod common;

use hitclique::cliques::{
    clique_graph, enumerate_maximal_cliques, hajnal_check, maximum_cliques, CliqueFamily,
};
use hitclique::counterexample::{build_counterexample, satisfies_inequality, Census, Rational};
use hitclique::generators::{random_partitioned_instance, seeded_rng};
use hitclique::hitting::{verify_certificate, CertificateDoc, Solver};
use hitclique::io::{parse_graph, write_graph, GraphFormat};
use hitclique::oracle::{oracle_hitting_max, OracleLimits};
use hitclique::structure::{analyze_component, recognize_hole_product};
use hitclique::transversal::independent_transversal;
use hitclique::{
    complete_graph, cycle_graph, strong_product, Classification, Error, Graph, HittingCertificate,
    VertexSet,
};
use proptest::prelude::*;

use common::{hits_all, is_stable, naive_maximal_cliques, naive_maximum_cliques};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.n(), &edges).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_degree_formula(g in graph(6), h in graph(5)) {
        let p = strong_product(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        for u in 0..g.n() {
            for a in 0..h.n() {
                let expected = (g.degree(u) + 1) * (h.degree(a) + 1) - 1;
                prop_assert_eq!(p.degree(u * h.n() + a), expected);
            }
        }
    }

    #[test]
    fn product_with_single_vertex_is_identity(g in graph(9)) {
        let k1 = complete_graph(1).unwrap();
        prop_assert_eq!(&strong_product(&g, &k1).unwrap(), &g);
        prop_assert_eq!(&strong_product(&k1, &g).unwrap(), &g);
    }

    #[test]
    fn io_round_trip(g in graph(70)) {
        for f in [GraphFormat::EdgeList, GraphFormat::Graph6, GraphFormat::Json] {
            let text = write_graph(&g, f);
            prop_assert_eq!(&parse_graph(&text, f).unwrap(), &g);
        }
    }

    #[test]
    fn maximal_cliques_match_naive(g in graph(12)) {
        let fam = enumerate_maximal_cliques(&g).unwrap();
        let mut got = fam.to_lists();
        got.sort();
        prop_assert_eq!(got, naive_maximal_cliques(&g));
        let (omega, max) = maximum_cliques(&g).unwrap();
        prop_assert!(max.iter().all(|c| c.len() == omega));
        prop_assert!(max.iter().all(|c| fam.iter().any(|d| d == c)));
    }

    #[test]
    fn hajnal_on_random_subfamilies(g in graph(12), picks in proptest::collection::vec(any::<bool>(), 64)) {
        let (_, max) = maximum_cliques(&g).unwrap();
        let chosen: Vec<usize> = (0..max.len()).filter(|&i| picks[i % 64]).collect();
        let indices = if chosen.is_empty() { vec![0] } else { chosen };
        let sub = max.select(&indices).unwrap();
        let report = hajnal_check(&g, &sub).unwrap();
        prop_assert!(report.holds, "{:?}", report);
    }

    #[test]
    fn clique_graph_components_partition(g in graph(12)) {
        let (_, max) = maximum_cliques(&g).unwrap();
        let cg = clique_graph(&max).unwrap();
        let mut seen: Vec<usize> = cg.components().iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, max.all_indices());
        for (a, ca) in cg.components().iter().enumerate() {
            for cb in &cg.components()[a + 1..] {
                for &i in ca {
                    for &j in cb {
                        prop_assert!(max.get(i).is_disjoint(max.get(j)));
                    }
                }
            }
        }
    }

    #[test]
    fn strict_bound_never_gives_chains(g in graph(10)) {
        prop_assume!(g.is_connected());
        let (omega, max) = maximum_cliques(&g).unwrap();
        prop_assume!(3 * omega > 2 * (g.max_degree() + 1));
        let cg = clique_graph(&max).unwrap();
        for comp in 0..cg.components().len() {
            let a = analyze_component(&g, &cg, comp).unwrap();
            prop_assert_eq!(a.classification, Classification::LargeIntersection);
        }
    }

    #[test]
    fn transversal_always_found(seed in any::<u64>(), parts in 1usize..8, k in 1usize..5) {
        let inst = random_partitioned_instance(parts, k, 1.0, &mut seeded_rng(seed)).unwrap();
        let s = independent_transversal(&inst).unwrap();
        prop_assert!(inst.is_transversal(&s));
        prop_assert!(is_stable(inst.graph(), &s.to_vec()));
    }

    #[test]
    fn solver_output_verifies(g in graph(11)) {
        prop_assume!(common::meets_bound(&g) && g.is_connected());
        let (_, max) = naive_maximum_cliques(&g);
        match Solver::default().hitting_stable_set(&g).unwrap() {
            HittingCertificate::StableSetHit(s) => {
                let s = s.to_vec();
                prop_assert!(is_stable(&g, &s) && hits_all(&s, &max));
            }
            HittingCertificate::OddHoleProduct { witness, .. } => {
                prop_assert!(witness.is_odd());
                prop_assert!(!common::subset_hitting_exists(&g, &max));
            }
        }
    }

    #[test]
    fn solver_rejects_graphs_below_bound(g in graph(10)) {
        prop_assume!(g.is_connected() && !common::meets_bound(&g));
        prop_assert!(matches!(
            Solver::default().hitting_stable_set(&g),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn hole_products_recognised_under_relabelling(
        (k, m, perm) in (4usize..10, 1usize..4).prop_flat_map(|(k, m)| (Just(k), Just(m), permutation(k * m)))
    ) {
        let g = relabel(
            &strong_product(&cycle_graph(k).unwrap(), &complete_graph(m).unwrap()).unwrap(),
            &perm,
        );
        let w = recognize_hole_product(&g).unwrap();
        prop_assert_eq!((w.hole_length, w.clique_size), (k, m));
        prop_assert!(w.validate(&g).is_ok());
        let odd = k % 2 == 1;
        let cert = Solver::default().hitting_stable_set(&g).unwrap();
        prop_assert_eq!(matches!(cert, HittingCertificate::OddHoleProduct { .. }), odd);
        if k * m <= 16 {
            let found = oracle_hitting_max(&g, &OracleLimits::default()).unwrap();
            prop_assert_eq!(found.is_none(), odd);
        }
    }

    #[test]
    fn recognition_only_accepts_valid_witnesses(g in graph(12)) {
        prop_assume!(g.is_connected());
        if let Some(w) = recognize_hole_product(&g) {
            prop_assert!(w.validate(&g).is_ok());
        }
    }

    #[test]
    fn tampered_certificates_rejected(g in graph(10), extra in 0usize..10) {
        prop_assume!(common::meets_bound(&g) && g.is_connected());
        if let HittingCertificate::StableSetHit(s) = Solver::default().hitting_stable_set(&g).unwrap() {
            let good = CertificateDoc::StableSet { vertices: s.to_vec() };
            prop_assert!(verify_certificate(&g, &good, 1_000_000).unwrap().valid);
            // Dropping a vertex or adding a neighbour must break it unless the
            // result happens to be another valid hitting stable set.
            let mut tampered = s.clone();
            let v = extra % g.n();
            if tampered.contains(v) { tampered.remove(v); } else { tampered.insert(v); }
            let (_, max) = naive_maximum_cliques(&g);
            let t = tampered.to_vec();
            let really_valid = is_stable(&g, &t) && hits_all(&t, &max);
            let doc = CertificateDoc::StableSet { vertices: t };
            prop_assert_eq!(verify_certificate(&g, &doc, 1_000_000).unwrap().valid, really_valid);
        }
    }

    #[test]
    fn counterexample_census_matches_enumeration(k in 1usize..5, t in 1usize..6) {
        let n = k * t + 5 * t;
        prop_assume!(n <= 30);
        let census = Census::new(k, t);
        // ε close to 1 admits every (k, t) whose cliques clear the threshold.
        let eps = Rational::new(999, 1000);
        prop_assume!(census.all_above(eps));
        let inst = build_counterexample(k, t, eps).unwrap();
        let g = &inst.graph;
        let cliques = naive_maximal_cliques(g);
        prop_assert_eq!(cliques.len(), census.maximal_count);
        prop_assert_eq!(g.max_degree(), census.delta);
        let a = inst.a().to_vec();
        prop_assert_eq!(cliques.iter().filter(|c| **c == a).count(), 1);
        prop_assert!(cliques.iter().filter(|c| **c != a).all(|c| c.len() == census.other_maximal));
        if n <= 20 {
            prop_assert!(!common::subset_hitting_exists(g, &cliques));
        }
    }

    #[test]
    fn inequality_is_monotone_in_epsilon(k in 1usize..30, t in 1usize..30, p in 1i64..99, d in 1i64..50) {
        let e1 = Rational::new(p, 100);
        let e2 = Rational::new((p + d).min(99), 100);
        if satisfies_inequality(k, t, e1) {
            prop_assert!(satisfies_inequality(k, t, e2));
        }
    }
}

#[test]
fn family_queries_on_product() {
    let g = strong_product(&cycle_graph(5).unwrap(), &complete_graph(3).unwrap()).unwrap();
    let (_, max) = maximum_cliques(&g).unwrap();
    assert!(max.intersection(&max.all_indices()).unwrap().is_empty());
    assert_eq!(max.union(&max.all_indices()).unwrap().len(), 15);
    let cg = clique_graph(&max).unwrap();
    let i = 0;
    let j = cg.neighbors(i)[0];
    assert_eq!(max.intersection(&[i, j]).unwrap().len(), 3);
    let fam = CliqueFamily::new(&g, vec![VertexSet::from_members(15, [0, 1])]).unwrap();
    assert!(hajnal_check(&g, &fam).is_err());
}

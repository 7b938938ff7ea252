use nalgebra::DMatrix;
use proptest::prelude::*;
use threshold_spectra::graphs::{
    find_forbidden_subgraph, is_stepwise, is_threshold, is_threshold_by_reduction, Step,
};
use threshold_spectra::spectra::{alpha_matrix, spectral_radius, Alpha};
use threshold_spectra::transforms::{apply, certify, valid_specs};
use threshold_spectra::{LabeledGraph, ThresholdGraph};

fn graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            LabeledGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn threshold(max_n: usize) -> impl Strategy<Value = ThresholdGraph> {
    proptest::collection::vec(any::<bool>(), 0..max_n).prop_map(|tail| {
        let steps = std::iter::once(Step::Isolated)
            .chain(
                tail.into_iter()
                    .map(|d| if d { Step::Dominating } else { Step::Isolated }),
            )
            .collect();
        ThresholdGraph::from_creation_sequence(steps).unwrap()
    })
}

fn alpha() -> impl Strategy<Value = Alpha> {
    (0i64..20).prop_map(|p| Alpha::new(p, 20).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn dense_radius(g: &LabeledGraph, a: Alpha) -> f64 {
    let n = g.n();
    let m = alpha_matrix(g, a);
    let dense = DMatrix::from_fn(n, n, |i, j| m[(i, j)]);
    dense.symmetric_eigen().eigenvalues.max()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn radius_matches_dense_eigensolver(g in graph(9), a in alpha()) {
        let s = spectral_radius(&g, a).unwrap();
        let reference = dense_radius(&g, a);
        prop_assert!((s.rho - reference).abs() <= 1e-9 * reference.max(1.0), "{} vs {}", s.rho, reference);
        prop_assert!(s.perron.iter().all(|&x| x >= -1e-12));
    }

    #[test]
    fn adding_an_edge_never_lowers_the_radius(g in graph(9), a in alpha(), pick in any::<usize>()) {
        let missing: Vec<_> = (0..g.n())
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick % missing.len()];
        let h = g.with_edge(u, v).unwrap();
        let before = spectral_radius(&g, a).unwrap().rho;
        let after = spectral_radius(&h, a).unwrap().rho;
        prop_assert!(after >= before - 1e-10, "{before} -> {after}");
    }

    #[test]
    fn threshold_tests_agree(g in graph(8)) {
        let t = is_threshold(&g);
        prop_assert_eq!(t, is_threshold_by_reduction(&g));
        prop_assert_eq!(t, find_forbidden_subgraph(&g).is_none());
        prop_assert_eq!(t, ThresholdGraph::from_labeled(&g).is_ok());
    }

    #[test]
    fn degree_sequence_round_trip(t in threshold(16)) {
        let back = ThresholdGraph::from_degree_sequence(&t.degree_sequence()).unwrap();
        prop_assert_eq!(&back, &t);
        let text = t.to_string();
        prop_assert_eq!(text.parse::<ThresholdGraph>().unwrap(), t);
    }

    #[test]
    fn stepwise_labeling(t in threshold(16)) {
        let g = t.to_labeled();
        prop_assert!(is_stepwise(&g));
        prop_assert_eq!(g.m(), t.m());
        prop_assert_eq!(g.degree_sequence(), t.degree_sequence());
        let d = g.degrees();
        prop_assert!(d.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn relabeling_keeps_the_class(
        (t, perm) in threshold(12).prop_flat_map(|t| { let n = t.n(); (Just(t), permutation(n)) })
    ) {
        let g = t.to_labeled().relabeled(&perm);
        prop_assert!(is_threshold(&g));
        prop_assert_eq!(ThresholdGraph::from_labeled(&g).unwrap(), t);
    }

    #[test]
    fn transforms_stay_threshold(t in threshold(9), a in (10i64..20).prop_map(|p| Alpha::new(p, 20).unwrap())) {
        prop_assume!(t.is_connected());
        for spec in valid_specs(&t).into_iter().take(12) {
            let out = apply(&t, &spec).unwrap();
            prop_assert_eq!(out.m(), t.m());
            if spec.k == spec.q + 1 {
                let c = certify(&t, &spec, a).unwrap();
                prop_assert!(c.holds(), "{} {}: {:?}", t, spec, c);
            }
        }
    }
}

use polysimp::generate::pairwise_quantile;
use polysimp::io::{format_polyline, parse_polyline};
use polysimp::*;
use proptest::prelude::*;

fn exponent() -> impl Strategy<Value = LpExponent> {
    prop_oneof![Just(1.0), Just(1.5), Just(2.0), Just(3.0), Just(f64::INFINITY)].prop_map(|p| LpExponent::new(p).unwrap())
}

fn grid_curve(max_len: usize) -> impl Strategy<Value = Polyline> {
    (1usize..=3).prop_flat_map(move |d| {
        prop::collection::vec(prop::collection::vec(-4i32..=4, d), 2..=max_len).prop_map(|rows| {
            Polyline::from_rows(rows.into_iter().map(|r| r.into_iter().map(f64::from).collect()).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_algorithms_match_oracle(curve in grid_curve(9), p in exponent(), frac in 0.05f64..0.9) {
        let metric = Metric::new(p);
        let delta = pairwise_quantile(&curve, p, 1.0) * frac;
        let results = [
            simplify_local(&curve, delta, metric, LocalMeasure::Hausdorff).unwrap(),
            simplify_local(&curve, delta, metric, LocalMeasure::Frechet).unwrap(),
            simplify_global_frechet(&curve, delta, metric).unwrap(),
        ];
        for r in results {
            prop_assert!(r.validate(&curve, metric).unwrap());
            prop_assert_eq!(r.indices.first(), Some(&0));
            prop_assert_eq!(r.indices.last(), Some(&curve.segments()));
            let oracle = brute_force_min_simplification(&curve, delta, metric, r.variant).unwrap();
            prop_assert_eq!(r.size, oracle.size, "{}", r.variant);
        }
    }

    #[test]
    fn sizes_are_ordered_and_monotone(curve in grid_curve(14), p in exponent(), frac in 0.05f64..0.5) {
        let metric = Metric::new(p);
        let base = pairwise_quantile(&curve, p, 1.0) * frac;
        let mut previous = [usize::MAX; 3];
        for step in 0..5 {
            let delta = base * (1.0 + step as f64 * 0.3);
            let s = [
                simplify_local(&curve, delta, metric, LocalMeasure::Hausdorff).unwrap().size,
                simplify_local(&curve, delta, metric, LocalMeasure::Frechet).unwrap().size,
                simplify_global_frechet(&curve, delta, metric).unwrap().size,
            ];
            prop_assert!(s[0] <= s[1] && s[2] <= s[1], "{:?}", s);
            for v in 0..3 {
                prop_assert!(s[v] <= previous[v]);
            }
            previous = s;
        }
    }

    #[test]
    fn fast_global_matches_reference(curve in grid_curve(14), p in exponent(), frac in 0.05f64..0.6) {
        let metric = Metric::new(p);
        let delta = pairwise_quantile(&curve, p, 1.0) * frac;
        let fast = simplify_global_frechet(&curve, delta, metric).unwrap();
        let reference = simplify_global_frechet_reference(&curve, delta, metric).unwrap();
        prop_assert_eq!(fast.size, reference.size);
        prop_assert!(reference.validate(&curve, metric).unwrap());
        let kappa = kappa_table(&curve, delta, metric).unwrap();
        prop_assert_eq!(kappa.get(curve.segments(), curve.segments() - 1), Some(fast.size as u32));
    }

    #[test]
    fn polyline_text_round_trip(rows in prop::collection::vec(prop::collection::vec(-1e12f64..1e12, 3), 1..20)) {
        let curve = Polyline::from_rows(rows).unwrap();
        prop_assert_eq!(parse_polyline(&format_polyline(&curve)).unwrap(), curve);
    }

    #[test]
    fn frechet_decision_is_monotone_in_delta(curve in grid_curve(6), p in exponent(), frac in 0.0f64..1.0) {
        let metric = Metric::new(p);
        let q = curve.select(&[0, curve.segments()]).unwrap();
        let delta = pairwise_quantile(&curve, p, 1.0) * frac;
        if frechet_decide_polylines(&curve, &q, delta, metric).unwrap() {
            prop_assert!(frechet_decide_polylines(&curve, &q, delta * 1.5 + 0.1, metric).unwrap());
            prop_assert!(hausdorff_decide_polylines(&curve, &q, delta, metric).unwrap());
        }
    }
}

#[test]
fn every_vertex_is_always_feasible() {
    let curve = Polyline::from_rows(vec![vec![0.0, 0.0], vec![5.0, 1.0], vec![-3.0, 2.0], vec![4.0, -4.0]]).unwrap();
    let metric = Metric::new(LpExponent::TWO);
    for variant in Variant::ALL {
        let r = brute_force_min_simplification(&curve, 0.0, metric, variant).unwrap();
        assert_eq!(r.indices, vec![0, 1, 2, 3]);
    }
    assert_eq!(simplify_global_frechet(&curve, 0.0, metric).unwrap().size, 4);
}

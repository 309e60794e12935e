use polysimp::generate::rng_from_seed;
use polysimp::hardness::{count_common_ones, Role};
use polysimp::io::{format_ov_instance, parse_ov_instance};
use polysimp::*;

fn bits(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}

fn sizes(hard: &HardCurve, p: f64) -> [usize; 3] {
    let metric = Metric::new(LpExponent::new(p).unwrap());
    [
        simplify_global_frechet(&hard.curve, hard.delta, metric).unwrap().size,
        simplify_local(&hard.curve, hard.delta, metric, LocalMeasure::Frechet)
            .unwrap()
            .size,
        simplify_local(&hard.curve, hard.delta, metric, LocalMeasure::Hausdorff)
            .unwrap()
            .size,
    ]
}

#[test]
fn yes_instance_needs_five_vertices() {
    let inst = OvInstance::new(vec![bits("10")], vec![bits("11")], vec![bits("01")]).unwrap();
    assert!(solve_ov_bruteforce(&inst));
    for p in [1.0, 1.5, 3.0] {
        assert_eq!(sizes(&build_hard_curve(&inst, p).unwrap(), p), [5; 3], "p = {p}");
    }
}

#[test]
fn no_instance_admits_four_vertices() {
    let inst = OvInstance::new(
        vec![bits("11"), bits("01")],
        vec![bits("11"), bits("10")],
        vec![bits("11"), bits("10")],
    )
    .unwrap();
    assert!(!solve_ov_bruteforce(&inst));
    for p in [1.0, 3.0, 4.0] {
        let hard = build_hard_curve(&inst, p).unwrap();
        assert_eq!(sizes(&hard, p), [4; 3], "p = {p}");
        let metric = Metric::new(LpExponent::new(p).unwrap());
        let r = simplify_global_frechet(&hard.curve, hard.delta, metric).unwrap();
        assert!(r.validate(&hard.curve, metric).unwrap());
    }
}

#[test]
fn four_vertex_witness_uses_the_bad_pair() {
    // Only (a_1, b_0) lacks an orthogonal partner.
    let inst = OvInstance::new(
        vec![bits("0"), bits("1")],
        vec![bits("1"), bits("0")],
        vec![bits("1"), bits("1")],
    )
    .unwrap();
    assert!(!solve_ov_bruteforce(&inst));
    let hard = build_hard_curve(&inst, 1.0).unwrap();
    let r = simplify_local(&hard.curve, hard.delta, Metric::new(LpExponent::ONE), LocalMeasure::Hausdorff).unwrap();
    assert_eq!(r.size, 4);
    assert_eq!(r.indices[1], hard.vertex_of(Role::A, 1));
    assert_eq!(r.indices[2], hard.vertex_of(Role::B, 0));
}

#[test]
fn random_instances_round_trip_and_verify() {
    let mut rng = rng_from_seed(99);
    for _ in 0..10 {
        let inst = OvInstance::random(3, 3, 0.7, &mut rng).unwrap();
        assert_eq!(parse_ov_instance(&format_ov_instance(&inst)).unwrap(), inst);
        let answer = solve_ov_bruteforce(&inst);
        let brute = inst.a().iter().all(|a| {
            inst.b()
                .iter()
                .all(|b| inst.c().iter().any(|c| count_common_ones(a, b, c).unwrap() == 0))
        });
        assert_eq!(answer, brute);
        let report = verify_gadget_properties(&inst, 3.0, 300).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.checks.len(), 6);
    }
}

#[test]
fn unsupported_exponents() {
    let inst = OvInstance::new(vec![bits("1")], vec![bits("1")], vec![bits("1")]).unwrap();
    assert!(matches!(build_hard_curve(&inst, 2.0), Err(Error::UnsupportedExponent(_))));
    assert!(build_hard_curve(&inst, f64::INFINITY).is_err());
}

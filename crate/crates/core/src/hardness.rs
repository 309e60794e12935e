//! Hard instances from ∀∀∃ orthogonal vectors.
//!
//! Given sets `A, B, C` of `n` binary vectors of dimension `d`, the curve
//! `Q = ⟨s, ã_1 … ã_n, c̃_1 … c̃_n, b̃_1 … b̃_n, s⟩` in `ℝ^{9d+3}` has a
//! simplification of size 4 within `δ` exactly when some pair `(a, b)` has no
//! orthogonal partner `c`, and of size 5 otherwise. This holds for all three
//! measures. The construction works for every `p ∈ [1, ∞)` except `p = 2`.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_argmin, lerp, lp_norm_diff, lp_norm_pow, LpExponent, Polyline};

/// Three sets of binary vectors of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvInstance {
    a: Vec<Vec<bool>>,
    b: Vec<Vec<bool>>,
    c: Vec<Vec<bool>>,
}

impl OvInstance {
    pub fn new(a: Vec<Vec<bool>>, b: Vec<Vec<bool>>, c: Vec<Vec<bool>>) -> Result<Self> {
        let n = a.len();
        if n == 0 || b.len() != n || c.len() != n {
            return Err(Error::MalformedInstance(format!(
                "the three sets must have the same positive size, got {}, {}, {}",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        let d = a[0].len();
        if d == 0 {
            return Err(Error::MalformedInstance("vectors must have dimension at least 1".into()));
        }
        for v in a.iter().chain(&b).chain(&c) {
            if v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        Ok(OvInstance { a, b, c })
    }

    /// Uniform random instance; each bit is set with probability `density`.
    pub fn random<R: Rng + ?Sized>(n: usize, d: usize, density: f64, rng: &mut R) -> Result<Self> {
        let mut set = || -> Vec<Vec<bool>> { (0..n).map(|_| (0..d).map(|_| rng.gen_bool(density)).collect()).collect() };
        let (a, b, c) = (set(), set(), set());
        OvInstance::new(a, b, c)
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn dim(&self) -> usize {
        self.a[0].len()
    }

    pub fn a(&self) -> &[Vec<bool>] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<bool>] {
        &self.b
    }

    pub fn c(&self) -> &[Vec<bool>] {
        &self.c
    }
}

/// Number of coordinates where all three vectors are 1.
pub fn count_common_ones(a: &[bool], b: &[bool], c: &[bool]) -> Result<usize> {
    if a.len() != b.len() || a.len() != c.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: if a.len() != b.len() { b.len() } else { c.len() },
        });
    }
    Ok(a.iter().zip(b).zip(c).filter(|((x, y), z)| **x && **y && **z).count())
}

/// Whether every pair `(a, b)` has some `c` with no common 1-coordinate.
pub fn solve_ov_bruteforce(inst: &OvInstance) -> bool {
    inst.a.iter().all(|a| {
        inst.b.iter().all(|b| {
            inst.c
                .iter()
                .any(|c| a.iter().zip(b).zip(c).all(|((x, y), z)| !(*x && *y && *z)))
        })
    })
}

/// The three point sets, by vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    A,
    B,
    C,
}

/// Constants of the construction for a given `p` and `d`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GadgetParams {
    pub p: f64,
    pub d: usize,
    pub theta: [f64; 5],
    pub beta1: f64,
    pub beta2: f64,
    pub eta1: f64,
    pub eta2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub delta: f64,
}

/// Constants for exponent `p` and vector dimension `d`.
///
/// `γ₁` is taken as `2η₂` so that points of one cluster stay strictly closer
/// than `δ` to each other.
pub fn gadget_params(p: f64, d: usize) -> Result<GadgetParams> {
    let exponent = LpExponent::new(p)?;
    if exponent.is_infinite() {
        return Err(Error::UnsupportedExponent("the construction needs a finite p".into()));
    }
    if p == 2.0 {
        return Err(Error::UnsupportedExponent("the construction does not exist for p = 2".into()));
    }
    if d == 0 {
        return Err(Error::Precondition("vector dimension must be positive".into()));
    }
    let two_p = 2f64.powf(p);
    let root = |x: f64| x.max(0.0).powf(1.0 / p);
    let (theta, beta1, beta2) = if p < 2.0 {
        let t1 = root(2f64.powf(p - 1.0) - 1.0);
        let t5 = 2f64.powf((p - 1.0) / p);
        ([t1, 0.0, 1.0, 0.0, t5], two_p * (2f64.powf(p - 1.0) - 1.0), two_p)
    } else {
        let t2 = root(two_p - 2.0);
        let t3 = root(two_p - 4.0);
        let t5 = root(two_p * two_p - 3.0 * two_p);
        ([0.0, t2, t3, t2, t5], 4.0 * two_p - 8.0, two_p * two_p - 8.0)
    };
    let eta1 = theta.iter().copied().fold(0.0, f64::max);
    let eta2 = 36.0 * d as f64 * eta1;
    let gamma1 = 2.0 * eta2;
    let far_pow = gamma1.powf(p) + d as f64 * beta2;
    let far = far_pow.powf(1.0 / p);
    let delta = (far_pow - (beta2 - beta1)).powf(1.0 / p);
    // far − δ without cancellation.
    let gap = -far * (((-(beta2 - beta1) / far_pow).ln_1p()) / p).exp_m1();
    let gamma2 = (4.0 * delta).max(eta2 * (1.0 + far / gap));
    Ok(GadgetParams {
        p,
        d,
        theta,
        beta1,
        beta2,
        eta1,
        eta2,
        gamma1,
        gamma2,
        delta,
    })
}

/// The nine-coordinate gadget for one bit of a vector in the given set.
pub fn coordinate_gadget(role: Role, bit: bool, params: &GadgetParams) -> [f64; 9] {
    let [t1, t2, t3, t4, t5] = params.theta;
    match (role, bit) {
        (Role::A, false) => [-t1, 0.0, -t2, 0.0, t3, 2.0 * t3, t4, -2.0 * t4, 0.0],
        (Role::A, true) => [t1, 2.0 * t1, t2, -2.0 * t2, -t3, 0.0, -t4, 0.0, 0.0],
        (Role::B, false) => [-t1, 0.0, t2, 2.0 * t2, t3, -2.0 * t3, -t4, 0.0, 0.0],
        (Role::B, true) => [t1, -2.0 * t1, -t2, 0.0, -t3, 0.0, t4, 2.0 * t4, 0.0],
        (Role::C, false) => [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, t5],
        (Role::C, true) => [-t1, 0.0, -t2, 0.0, -t3, 0.0, -t4, 0.0, 0.0],
    }
}

/// `‖c° − P_{a°b°}(0)‖_p^p` as predicted for the bit triple `(c, a, b)`.
pub fn predicted_gadget_distance(params: &GadgetParams, c: bool, a: bool, b: bool) -> f64 {
    if a && b && c {
        params.beta1
    } else {
        params.beta2
    }
}

/// `(x + y) / 2`, the point `P_{xy}(0)`.
pub fn midpoint(x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(u, v)| 0.5 * (u + v)).collect()
}

/// Where a vertex of the hard curve comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexLabel {
    Start,
    Vector(Role, usize),
    End,
}

/// The curve `Q`, its threshold and the origin of every vertex.
#[derive(Clone, Debug)]
pub struct HardCurve {
    pub curve: Polyline,
    pub delta: f64,
    pub params: GadgetParams,
    pub labels: Vec<VertexLabel>,
}

impl HardCurve {
    /// Index in `Q` of the `index`-th vector of a set.
    pub fn vertex_of(&self, role: Role, index: usize) -> usize {
        let n = (self.labels.len() - 2) / 3;
        1 + index
            + match role {
                Role::A => 0,
                Role::C => n,
                Role::B => 2 * n,
            }
    }
}

fn vector_point(role: Role, bits: &[bool], params: &GadgetParams) -> Vec<f64> {
    let mut out = Vec::with_capacity(9 * bits.len() + 3);
    for &bit in bits {
        out.extend_from_slice(&coordinate_gadget(role, bit, params));
    }
    let (g1, g2) = (params.gamma1, params.gamma2);
    out.extend_from_slice(&match role {
        Role::A => [g1, 0.0, 0.0],
        Role::B => [g1, g2, 0.0],
        Role::C => [0.0, 0.5 * g2, 0.0],
    });
    out
}

fn start_point(d: usize, params: &GadgetParams) -> Vec<f64> {
    let mut out = vec![0.0; 9 * d];
    out.extend_from_slice(&[0.0, 0.5 * params.gamma2, params.gamma2]);
    out
}

/// Builds `Q` and `δ` in `O(nd)` time.
pub fn build_hard_curve(inst: &OvInstance, p: f64) -> Result<HardCurve> {
    let params = gadget_params(p, inst.dim())?;
    let n = inst.size();
    let start = start_point(inst.dim(), &params);
    let mut rows = Vec::with_capacity(3 * n + 2);
    let mut labels = Vec::with_capacity(3 * n + 2);
    rows.push(start.clone());
    labels.push(VertexLabel::Start);
    for (role, set) in [(Role::A, &inst.a), (Role::C, &inst.c), (Role::B, &inst.b)] {
        for (k, bits) in set.iter().enumerate() {
            rows.push(vector_point(role, bits, &params));
            labels.push(VertexLabel::Vector(role, k));
        }
    }
    rows.push(start);
    labels.push(VertexLabel::End);
    Ok(HardCurve {
        curve: Polyline::from_rows(rows)?,
        delta: params.delta,
        params,
        labels,
    })
}

/// Outcome of one property check. `margin` is the slack by which the
/// property holds (negative when violated).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GadgetReport {
    pub delta: f64,
    pub checks: Vec<PropertyCheck>,
}

impl GadgetReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Relative agreement used when comparing p-th powers.
const POW_RTOL: f64 = 1e-9;

/// Smallest distance from `target` to the segment `xy`, over an α-grid with
/// `grid` steps plus the analytic candidates, and a direct minimization.
fn segment_clearance(x: &[f64], y: &[f64], target: &[f64], p: LpExponent, grid: usize) -> f64 {
    let at = |t: f64| lp_norm_diff(&lerp(x, y, t), target, p);
    // α ∈ {−1/2, −1/6, 0, 1/2} correspond to t = α + 1/2.
    let analytic = [0.0, 1.0 / 3.0, 0.5, 1.0].into_iter().map(at);
    let sampled = (0..=grid).map(|s| at(s as f64 / grid as f64));
    let exact = convex_argmin(at).1;
    analytic.chain(sampled).fold(exact, f64::min)
}

/// Numerically checks the six properties the reduction relies on.
pub fn verify_gadget_properties(inst: &OvInstance, p: f64, grid: usize) -> Result<GadgetReport> {
    if inst.size() > 8 || inst.dim() > 6 {
        return Err(Error::TooLarge(format!(
            "verification supports n <= 8 and d <= 6, got n = {} and d = {}",
            inst.size(),
            inst.dim()
        )));
    }
    let hard = build_hard_curve(inst, p)?;
    let params = &hard.params;
    let delta = hard.delta;
    let norm = LpExponent::new(p)?;
    let grid = grid.max(1);
    let n = inst.size();
    let point = |role: Role, k: usize| hard.curve.vertex(hard.vertex_of(role, k));
    let s = hard.curve.vertex(0);
    let delta_pow = delta.powf(p);

    // P1 and P2 over all triples.
    let mut p1 = (true, f64::INFINITY);
    let mut p2 = (true, f64::INFINITY);
    for (ia, a) in inst.a.iter().enumerate() {
        for (ib, b) in inst.b.iter().enumerate() {
            let (pa, pb) = (point(Role::A, ia), point(Role::B, ib));
            let mid = midpoint(pa, pb);
            for (ic, c) in inst.c.iter().enumerate() {
                let pc = point(Role::C, ic);
                let ones = count_common_ones(a, b, c)?;
                let diff: Vec<f64> = pc.iter().zip(&mid).map(|(u, v)| u - v).collect();
                let mid_pow = lp_norm_pow(&diff, p);
                let predicted =
                    params.gamma1.powf(p) + params.d as f64 * params.beta2 - (params.beta2 - params.beta1) * ones as f64;
                let close = mid_pow <= delta_pow * (1.0 + POW_RTOL);
                p2.0 &= (mid_pow - predicted).abs() <= POW_RTOL * predicted && close == (ones >= 1);
                if ones == 0 {
                    let mid_dist = mid_pow.powf(1.0 / p);
                    p2.1 = p2.1.min(mid_dist - delta);
                    let clearance = segment_clearance(pa, pb, pc, norm, grid);
                    p1.1 = p1.1.min(clearance - delta);
                    p1.0 &= clearance > delta;
                }
            }
        }
    }
    p2.0 &= p2.1 > 0.0;

    // P3: clusters are tight.
    let mut p3 = f64::INFINITY;
    for role in [Role::A, Role::B, Role::C] {
        for x in 0..n {
            for y in x + 1..n {
                p3 = p3.min(delta - lp_norm_diff(point(role, x), point(role, y), norm));
            }
        }
    }

    // P4–P6: segments between other points keep away from a cluster.
    let clearance_of = |sources: &[&[f64]], pairs_with_start_only: bool, targets: &[&[f64]]| -> f64 {
        let mut segments: Vec<(&[f64], &[f64])> = Vec::new();
        if pairs_with_start_only {
            segments.extend(sources.iter().map(|y| (s, *y)));
        } else {
            let mut all: Vec<&[f64]> = vec![s];
            all.extend_from_slice(sources);
            for x in 0..all.len() {
                for y in x..all.len() {
                    segments.push((all[x], all[y]));
                }
            }
        }
        segments
            .par_iter()
            .map(|(x, y)| {
                targets
                    .iter()
                    .map(|t| segment_clearance(x, y, t, norm, grid) - delta)
                    .fold(f64::INFINITY, f64::min)
            })
            .reduce(|| f64::INFINITY, f64::min)
    };
    let cluster = |role: Role| -> Vec<&[f64]> { (0..n).map(|k| point(role, k)).collect() };
    let (ca, cb, cc) = (cluster(Role::A), cluster(Role::B), cluster(Role::C));
    let p4 = clearance_of(&[cb.as_slice(), cc.as_slice()].concat(), false, &ca);
    let p5 = clearance_of(&[ca.as_slice(), cc.as_slice()].concat(), false, &cb);
    let p6 = clearance_of(&[cb.as_slice(), ca.as_slice()].concat(), true, &cc);

    let check = |name: &str, passed: bool, margin: f64| PropertyCheck {
        name: name.to_string(),
        passed,
        margin,
    };
    Ok(GadgetReport {
        delta,
        checks: vec![
            check("P1", p1.0 && p1.1 > 0.0, p1.1),
            check("P2", p2.0, p2.1),
            check("P3", p3 > 0.0, p3),
            check("P4", p4 > 0.0, p4),
            check("P5", p5 > 0.0, p5),
            check("P6", p6 > 0.0, p6),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn common_ones() {
        assert_eq!(count_common_ones(&bits("11"), &bits("11"), &bits("11")).unwrap(), 2);
        assert_eq!(count_common_ones(&bits("000"), &bits("000"), &bits("000")).unwrap(), 0);
        assert_eq!(count_common_ones(&bits("10"), &bits("11"), &bits("01")).unwrap(), 0);
        assert!(count_common_ones(&bits("10"), &bits("1"), &bits("01")).is_err());
    }

    #[test]
    fn ov_bruteforce() {
        let one = |s: &str| OvInstance::new(vec![bits(s)], vec![bits(s)], vec![bits(s)]).unwrap();
        assert!(solve_ov_bruteforce(&one("0")));
        assert!(!solve_ov_bruteforce(&one("1")));
        let inst = OvInstance::new(vec![bits("10")], vec![bits("11")], vec![bits("01")]).unwrap();
        assert!(solve_ov_bruteforce(&inst));
    }

    #[test]
    fn params_examples() {
        let p3 = gadget_params(3.0, 1).unwrap();
        assert_eq!((p3.beta1, p3.beta2), (24.0, 56.0));
        let p1 = gadget_params(1.0, 2).unwrap();
        assert_eq!(p1.theta, [0.0, 0.0, 1.0, 0.0, 1.0]);
        assert_eq!(
            (p1.beta1, p1.beta2, p1.eta1, p1.eta2, p1.gamma1),
            (0.0, 2.0, 1.0, 72.0, 144.0)
        );
        assert!((p1.delta - 146.0).abs() < 1e-9);
        assert!((p1.gamma2 - 5400.0).abs() < 1e-6);
        assert!(matches!(gadget_params(2.0, 3), Err(Error::UnsupportedExponent(_))));
        assert!(gadget_params(f64::INFINITY, 3).is_err());
        assert!(gadget_params(0.5, 3).is_err());
    }

    #[test]
    fn gadget_rows() {
        let params = gadget_params(1.0, 1).unwrap();
        let c0 = coordinate_gadget(Role::C, false, &params);
        assert_eq!(c0, [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, params.theta[4]]);
        assert_eq!(
            coordinate_gadget(Role::A, false, &params),
            [0.0, 0.0, 0.0, 0.0, 1.0, 2.0, 0.0, 0.0, 0.0]
        );
        let mid = midpoint(
            &coordinate_gadget(Role::A, true, &params),
            &coordinate_gadget(Role::B, true, &params),
        );
        assert_eq!(mid, vec![0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0]);
        let c1 = coordinate_gadget(Role::C, true, &params);
        assert_eq!(
            lp_norm_pow(&c1.iter().zip(&mid).map(|(x, y)| x - y).collect::<Vec<_>>(), 1.0),
            0.0
        );
    }

    #[test]
    fn gadget_distance_table() {
        for p in [1.0, 1.5, 3.0, 4.0] {
            let params = gadget_params(p, 1).unwrap();
            for mask in 0..8u8 {
                let (c, a, b) = (mask & 1 == 1, mask & 2 == 2, mask & 4 == 4);
                let mid = midpoint(
                    &coordinate_gadget(Role::A, a, &params),
                    &coordinate_gadget(Role::B, b, &params),
                );
                let diff: Vec<f64> = coordinate_gadget(Role::C, c, &params)
                    .iter()
                    .zip(&mid)
                    .map(|(x, y)| x - y)
                    .collect();
                let got = lp_norm_pow(&diff, p);
                let want = predicted_gadget_distance(&params, c, a, b);
                assert!(
                    (got - want).abs() <= 1e-9 * want.max(1.0),
                    "p={p} mask={mask}: {got} vs {want}"
                );
            }
            assert!(params.beta1 < params.beta2);
        }
    }

    #[test]
    fn curve_shape() {
        let inst = OvInstance::new(vec![bits("1")], vec![bits("0")], vec![bits("1")]).unwrap();
        let hard = build_hard_curve(&inst, 1.0).unwrap();
        assert_eq!(hard.curve.len(), 5);
        assert_eq!(hard.curve.dim(), 12);
        assert_eq!(hard.curve.vertex(0), hard.curve.vertex(4));
        assert_eq!(hard.labels[2], VertexLabel::Vector(Role::C, 0));
        assert_eq!(hard.vertex_of(Role::B, 0), 3);
    }

    #[test]
    fn vector_gadget_distances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [1.0, 3.0] {
            let inst = OvInstance::random(4, 3, 0.6, &mut rng).unwrap();
            let hard = build_hard_curve(&inst, p).unwrap();
            let prm = &hard.params;
            for (ia, a) in inst.a().iter().enumerate() {
                for (ib, b) in inst.b().iter().enumerate() {
                    let mid = midpoint(
                        hard.curve.vertex(hard.vertex_of(Role::A, ia)),
                        hard.curve.vertex(hard.vertex_of(Role::B, ib)),
                    );
                    for (ic, c) in inst.c().iter().enumerate() {
                        let pc = hard.curve.vertex(hard.vertex_of(Role::C, ic));
                        let diff: Vec<f64> = pc.iter().zip(&mid).map(|(x, y)| x - y).collect();
                        let ones = count_common_ones(a, b, c).unwrap() as f64;
                        let want = prm.gamma1.powf(p) + prm.d as f64 * prm.beta2 - (prm.beta2 - prm.beta1) * ones;
                        assert!((lp_norm_pow(&diff, p) - want).abs() <= 1e-9 * want);
                    }
                }
            }
            // Clusters are tight: within η₂ < γ₁ ≤ δ.
            let (x, y) = (hard.curve.vertex(1), hard.curve.vertex(2));
            let dist = lp_norm_diff(x, y, LpExponent::new(p).unwrap());
            assert!(dist <= prm.eta2 && prm.eta2 < prm.gamma1 && prm.gamma1 <= prm.delta);
        }
    }

    #[test]
    fn block_norms_add_up() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [1.0, 1.5, 3.0] {
            let blocks: Vec<Vec<f64>> = (0..4).map(|_| (0..5).map(|_| rng.gen_range(-3.0..3.0)).collect()).collect();
            let joined: Vec<f64> = blocks.concat();
            let sum: f64 = blocks.iter().map(|b| lp_norm_pow(b, p)).sum();
            assert!((lp_norm_pow(&joined, p) - sum).abs() <= 1e-12 * sum);
        }
    }

    #[test]
    fn properties_hold_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [1.0, 3.0] {
            let inst = OvInstance::random(3, 2, 0.5, &mut rng).unwrap();
            let report = verify_gadget_properties(&inst, p, 200).unwrap();
            assert!(report.all_passed(), "{report:?}");
        }
    }

    #[test]
    fn non_orthogonal_triple_is_close() {
        let inst = OvInstance::new(vec![bits("1")], vec![bits("1")], vec![bits("1")]).unwrap();
        let hard = build_hard_curve(&inst, 1.0).unwrap();
        let mid = midpoint(hard.curve.vertex(1), hard.curve.vertex(3));
        let dist = lp_norm_diff(&mid, hard.curve.vertex(2), LpExponent::ONE);
        assert!(dist <= hard.delta + 1e-9);
        assert!(verify_gadget_properties(&inst, 1.0, 100).unwrap().all_passed());
    }

    #[test]
    fn verifier_size_limit() {
        let inst = OvInstance::new(vec![bits("1"); 9], vec![bits("1"); 9], vec![bits("1"); 9]).unwrap();
        assert!(matches!(verify_gadget_properties(&inst, 1.0, 10), Err(Error::TooLarge(_))));
    }
}

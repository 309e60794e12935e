//! Seeded instance generators for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cell_reach::CellReachInstance;
use crate::geometry::{LpExponent, Polyline, UnitInterval};

/// Deterministic generator used throughout the crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A planar random walk with `n` vertices: the heading drifts slowly and the
/// step length varies, which gives smooth but non-trivial curves.
pub fn random_walk<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Polyline {
    let mut rows = Vec::with_capacity(n);
    let (mut x, mut y, mut heading) = (0.0f64, 0.0f64, rng.gen_range(0.0..std::f64::consts::TAU));
    for _ in 0..n.max(1) {
        rows.push(vec![x, y]);
        heading += rng.gen_range(-0.8..0.8);
        let step = rng.gen_range(0.5..1.5);
        x += step * heading.cos();
        y += step * heading.sin();
    }
    Polyline::from_rows(rows).expect("finite coordinates")
}

/// Vertices with integer coordinates in `[-range, range]^d`.
pub fn random_grid_polyline<R: Rng + ?Sized>(n: usize, d: usize, range: i32, rng: &mut R) -> Polyline {
    let rows = (0..n.max(1))
        .map(|_| (0..d.max(1)).map(|_| rng.gen_range(-range..=range) as f64).collect())
        .collect();
    Polyline::from_rows(rows).expect("finite coordinates")
}

/// The `q`-quantile of all pairwise vertex distances.
pub fn pairwise_quantile(curve: &Polyline, p: LpExponent, q: f64) -> f64 {
    let mut dists = Vec::with_capacity(curve.len() * curve.len() / 2);
    for i in 0..curve.len() {
        for k in i + 1..curve.len() {
            dists.push(crate::geometry::lp_norm_diff(curve.vertex(i), curve.vertex(k), p));
        }
    }
    if dists.is_empty() {
        return 0.0;
    }
    dists.sort_by(f64::total_cmp);
    let idx = ((dists.len() - 1) as f64 * q.clamp(0.0, 1.0)).round() as usize;
    dists[idx]
}

/// Random Cell Reachability instance; `empty_rate` and `infeasible_rate` are
/// the probabilities of an empty passage and an infeasible entry cost.
pub fn random_cell_reach<R: Rng + ?Sized>(n: usize, empty_rate: f64, infeasible_rate: f64, rng: &mut R) -> CellReachInstance {
    let n = n.max(1);
    let passages = (1..n)
        .map(|_| {
            if rng.gen_bool(empty_rate) {
                UnitInterval::Empty
            } else {
                let mut ends = [rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0)];
                // Occasional point passages and shared endpoints.
                if rng.gen_bool(0.05) {
                    ends[1] = ends[0];
                }
                if rng.gen_bool(0.1) {
                    *ends.choose_mut(rng).unwrap() = [0.0, 1.0][rng.gen_range(0..2)];
                }
                ends.sort_by(f64::total_cmp);
                UnitInterval::new(ends[0], ends[1]).expect("sorted endpoints in [0, 1]")
            }
        })
        .collect();
    let costs = (0..n)
        .map(|_| (!rng.gen_bool(infeasible_rate)).then(|| rng.gen_range(1..=n as u32)))
        .collect();
    CellReachInstance::new(passages, costs).expect("generated instances are well formed")
}

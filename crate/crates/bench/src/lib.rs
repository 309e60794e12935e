//! Shared fixtures for the criterion benchmarks in `benches/`.

use polysimp::generate::{pairwise_quantile, random_cell_reach, random_walk, rng_from_seed};
use polysimp::{CellReachInstance, LpExponent, Metric, Polyline};

/// A seeded planar random walk and the 25th percentile of its pairwise
/// vertex distances, the threshold every benchmark uses.
pub fn walk_fixture(n: usize, seed: u64) -> (Polyline, f64, Metric) {
    let curve = random_walk(n, &mut rng_from_seed(seed));
    let metric = Metric::new(LpExponent::TWO);
    let delta = pairwise_quantile(&curve, metric.p, 0.25);
    (curve, delta, metric)
}

/// Cell Reachability instance with a few empty passages and infeasible cells.
pub fn cell_reach_fixture(n: usize, seed: u64) -> CellReachInstance {
    random_cell_reach(n, 0.02, 0.1, &mut rng_from_seed(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(walk_fixture(32, 1).0, walk_fixture(32, 1).0);
        assert_eq!(cell_reach_fixture(40, 2), cell_reach_fixture(40, 2));
    }
}

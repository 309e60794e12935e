//! Global-Fréchet simplification.
//!
//! `DP(k, i, j)` is the smallest `t ∈ [j, j + 1]` such that some simplification
//! of `P[0 … i]` with at most `k` vertices, ending in `v_i`, is within Fréchet
//! distance `δ` of `P[0 … t]`. The answer is the smallest `k` for which
//! `DP(k, n, n − 1)` is finite.
//!
//! [`simplify_global_frechet`] runs in `O(n³)` time and `O(n²)` memory plus the
//! witness records. [`simplify_global_frechet_reference`] evaluates the same
//! table directly from earliest-arrival sweeps and serves as a cross-check.

mod fast;
mod reference;

pub use fast::{kappa_table, simplify_global_frechet};
pub use reference::{simplify_global_frechet_reference, ReferenceDp};

use crate::cell_reach::{CellReachSolver, NO_COST};
use crate::error::{Error, Result};
use crate::geometry::{segment_ball, Metric, Polyline};

/// Smallest feasible size per `(i, j)`, `None` where `DP(·, i, j) = ∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaTable {
    segments: usize,
    values: Vec<u32>,
}

impl KappaTable {
    pub(crate) fn new(segments: usize) -> Self {
        KappaTable {
            segments,
            values: vec![NO_COST; (segments + 1) * segments],
        }
    }

    pub fn segments(&self) -> usize {
        self.segments
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        let v = self.raw(i, j);
        (v != NO_COST).then_some(v)
    }

    #[inline]
    pub(crate) fn raw(&self, i: usize, j: usize) -> u32 {
        self.values[i * self.segments + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: u32) {
        self.values[i * self.segments + j] = v;
    }
}

/// `(t_{i,j}, s_{i,j})` for all vertices and segments, infinite when empty.
pub(crate) struct ReachTable {
    segments: usize,
    bounds: Vec<(f64, f64)>,
}

impl ReachTable {
    pub(crate) fn build(curve: &Polyline, delta: f64, metric: Metric) -> Self {
        let n = curve.segments();
        let mut bounds = Vec::with_capacity((n + 1) * n);
        for i in 0..=n {
            for j in 0..n {
                let interval = segment_ball(curve.vertex(i), curve.vertex(j), curve.vertex(j + 1), delta, metric);
                bounds.push(match interval.bounds() {
                    Some((lo, hi)) => (j as f64 + lo, j as f64 + hi),
                    None => (f64::INFINITY, f64::INFINITY),
                });
            }
        }
        ReachTable { segments: n, bounds }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> (f64, f64) {
        self.bounds[i * self.segments + j]
    }
}

/// Largest `j0` with every `v_j`, `j ≤ j0`, within `δ` of `v_0`.
pub(crate) fn start_reach(curve: &Polyline, delta: f64, metric: Metric) -> usize {
    let v0 = curve.vertex(0);
    (1..curve.len())
        .take_while(|&j| metric.within(v0, curve.vertex(j), delta))
        .last()
        .unwrap_or(0)
}

/// One entry of the `κ₂` row: the smallest size reaching `(1, t_{i,j})` through
/// the bottom edge of cell `j`, with the vertex `i'` and cell `j'` it starts
/// from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Kappa2Entry {
    pub value: Option<u32>,
    pub from_vertex: usize,
    pub from_cell: usize,
}

impl Kappa2Entry {
    const NONE: Kappa2Entry = Kappa2Entry {
        value: None,
        from_vertex: usize::MAX,
        from_cell: usize::MAX,
    };
}

/// `κ₂(i, j)` for all cells `j`, given `κ(i', ·)` for every `i' < i`.
///
/// For each `i'` the free space against `v_{i'} v_i` is a Cell Reachability
/// instance: the passage below cell `j` is the free part of its bottom edge
/// and the entry cost of cell `j` is `1 + κ(i', j)`.
pub fn kappa2_subroutine(curve: &Polyline, i: usize, kappa: &KappaTable, delta: f64, metric: Metric) -> Result<Vec<Kappa2Entry>> {
    let n = curve.segments();
    if kappa.segments() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: kappa.segments(),
        });
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, limit: n + 1 });
    }
    let table = ReachTable::build(curve, delta, metric);
    let mut solver = CellReachSolver::new();
    let mut out = vec![Kappa2Entry::NONE; n];
    kappa2_row(curve, i, kappa, &table, delta, metric, &mut solver, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn kappa2_row(
    curve: &Polyline,
    i: usize,
    kappa: &KappaTable,
    table: &ReachTable,
    delta: f64,
    metric: Metric,
    solver: &mut CellReachSolver,
    out: &mut [Kappa2Entry],
) {
    let n = curve.segments();
    out.fill(Kappa2Entry::NONE);
    let entry_cost = |ip: usize, j: usize| match kappa.raw(ip, j) {
        NO_COST => NO_COST,
        k => k + 1,
    };
    let vi = curve.vertex(i);
    for ip in 0..i {
        let vip = curve.vertex(ip);
        solver.start(entry_cost(ip, 0));
        for j in 1..n {
            let passage = segment_ball(curve.vertex(j), vip, vi, delta, metric);
            let (mu, witness) = solver.step(passage, entry_cost(ip, j));
            if mu == NO_COST || !table.get(i, j).0.is_finite() {
                continue;
            }
            let best = &mut out[j];
            if best.value.is_none_or(|v| mu < v) {
                *best = Kappa2Entry {
                    value: Some(mu),
                    from_vertex: ip,
                    from_cell: witness.expect("finite exit costs carry a witness"),
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frechet::earliest_arrivals;
    use crate::geometry::LpExponent;

    fn poly(rows: &[&[f64]]) -> Polyline {
        Polyline::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// `κ₂` from its definition, using the reference table and explicit sweeps.
    fn kappa2_from_definition(
        curve: &Polyline,
        i: usize,
        reference: &ReferenceDp,
        delta: f64,
        metric: Metric,
    ) -> Vec<Option<u32>> {
        let n = curve.segments();
        let table = ReachTable::build(curve, delta, metric);
        let mut out = vec![None; n];
        for ip in 0..i {
            for jp in 0..n {
                let Some(k) = reference.kappa(ip, jp) else { continue };
                let start = reference.dp(k as usize, ip, jp).unwrap();
                let arrivals = earliest_arrivals(curve, curve.vertex(ip), curve.vertex(i), start, delta, metric).unwrap();
                for j in jp + 1..n {
                    if table.get(i, j).0.is_finite() && arrivals[j].is_feasible() {
                        let cand = k + 1;
                        if out[j].is_none_or(|v| cand < v) {
                            out[j] = Some(cand);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn kappa2_matches_definition_on_zigzag() {
        let p = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0], &[3.0, 1.0], &[4.0, 0.0]]);
        let m = Metric::new(LpExponent::TWO);
        for delta in [0.5, 0.8, 1.0, 1.5] {
            let reference = ReferenceDp::build(&p, delta, m, p.len() + 1).unwrap();
            let kappa = kappa_table(&p, delta, m).unwrap();
            for i in 1..=p.segments() {
                let fast: Vec<_> = kappa2_subroutine(&p, i, &kappa, delta, m)
                    .unwrap()
                    .into_iter()
                    .map(|e| e.value)
                    .collect();
                assert_eq!(
                    fast,
                    kappa2_from_definition(&p, i, &reference, delta, m),
                    "i={i} delta={delta}"
                );
            }
        }
    }

    #[test]
    fn kappa2_all_infeasible_when_vertex_is_far() {
        // v_3 is far from every segment, so no vertical target interval exists.
        let p = poly(&[&[0.0], &[1.0], &[2.0], &[50.0]]);
        let m = Metric::new(LpExponent::TWO);
        let kappa = kappa_table(&p, 0.5, m).unwrap();
        let row = kappa2_subroutine(&p, 3, &kappa, 0.5, m).unwrap();
        assert!(row.iter().take(2).all(|e| e.value.is_none()));
    }

    #[test]
    fn start_reach_examples() {
        let p = poly(&[&[0.0], &[0.5], &[0.9], &[3.0], &[0.1]]);
        let m = Metric::new(LpExponent::TWO);
        assert_eq!(start_reach(&p, 1.0, m), 2);
        assert_eq!(start_reach(&p, 0.1, m), 0);
    }
}

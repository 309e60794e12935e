//! Free-space decision procedures.
//!
//! The free space of a curve `P` against a segment `ab` is laid out with the
//! segment on the x-axis (`x ∈ [0, 1]`) and the curve parameter on the y-axis
//! (`y ∈ [0, n]`). Cell `j` is the unit square over segment `j` of `P`.

use crate::error::{Error, Result};
use crate::geometry::{lp_norm_diff, point_segment_distance, segment_ball, Metric, ParamValue, Polyline, UnitInterval};

fn check_point(curve: &Polyline, x: &[f64]) -> Result<()> {
    if x.len() == curve.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: curve.dim(),
            found: x.len(),
        })
    }
}

fn check_range(curve: &Polyline, t0: f64, t1: f64) -> Result<()> {
    let n = curve.segments() as f64;
    if 0.0 <= t0 && t0 <= t1 && t1 <= n {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "parameters must satisfy 0 <= {t0} <= {t1} <= {n}"
        )))
    }
}

/// Splits `t` into a cell index and an in-cell offset, preferring the lower
/// cell on integer boundaries (offset 1) except at `t = 0`.
fn locate(t: f64, segments: usize) -> (usize, f64) {
    if t <= 0.0 {
        return (0, 0.0);
    }
    let j = (t.ceil() as usize).clamp(1, segments) - 1;
    (j, (t - j as f64).clamp(0.0, 1.0))
}

/// For each cell `j` of the free space of `P` against `ab`, the smallest `t ∈
/// [j, j + 1]` such that `(1, t)` is reachable from `(0, tstart)` by a
/// monotone path. Cells that cannot be reached hold
/// [`ParamValue::INFEASIBLE`].
pub fn earliest_arrivals(
    curve: &Polyline,
    a: &[f64],
    b: &[f64],
    tstart: f64,
    delta: f64,
    metric: Metric,
) -> Result<Vec<ParamValue>> {
    check_point(curve, a)?;
    check_point(curve, b)?;
    if curve.segments() == 0 {
        return Err(Error::Precondition("curve has no segments".into()));
    }
    check_range(curve, tstart, curve.segments() as f64)?;
    let gap = metric.dist(&curve.point_at(tstart), a);
    // The start usually comes from an interval endpoint computed under the same
    // radius; allow one extra tolerance for rounding in the evaluation.
    if gap > metric.radius(delta) + metric.tol {
        return Err(Error::Precondition(format!(
            "start point is at distance {gap} > {delta} from the segment start"
        )));
    }
    let mut out = vec![ParamValue::INFEASIBLE; curve.segments()];
    arrivals_in_range(curve, a, b, tstart, curve.segments(), delta, metric, &mut out);
    Ok(out)
}

/// Sweep behind [`earliest_arrivals`], restricted to cells below `end_cell`.
/// The start point is assumed free. Entries of `out` for cells that are not
/// visited are left untouched.
#[allow(clippy::too_many_arguments)]
pub(crate) fn arrivals_in_range(
    curve: &Polyline,
    a: &[f64],
    b: &[f64],
    tstart: f64,
    end_cell: usize,
    delta: f64,
    metric: Metric,
    out: &mut [ParamValue],
) {
    let (first, offset) = locate(tstart, curve.segments());
    // Lower bound on x for points reachable on the bottom edge of the current
    // cell; `None` once nothing more is reachable.
    let mut bottom: Option<f64> = None;
    for j in first..end_cell {
        let (vj, vk) = (curve.vertex(j), curve.vertex(j + 1));
        let right = segment_ball(b, vj, vk, delta, metric);
        let top = segment_ball(vk, a, b, delta, metric);
        let (right_lo, top_lo) = if j == first {
            // From the free start point every free point above it is reachable.
            (offset, 0.0)
        } else {
            match bottom {
                Some(x) => (0.0, x),
                None => break,
            }
        };
        out[j] = match right.bounds() {
            Some((lo, hi)) if lo.max(right_lo) <= hi => ParamValue::new(j as f64 + lo.max(right_lo)),
            _ => ParamValue::INFEASIBLE,
        };
        bottom = match top.bounds() {
            Some((lo, hi)) if lo.max(top_lo) <= hi => Some(lo.max(top_lo)),
            _ => None,
        };
    }
}

/// Whether `δ_F(P[t0 … t1], ab) ≤ δ`.
pub fn frechet_segment_decide(
    curve: &Polyline,
    t0: f64,
    t1: f64,
    a: &[f64],
    b: &[f64],
    delta: f64,
    metric: Metric,
) -> Result<bool> {
    check_point(curve, a)?;
    check_point(curve, b)?;
    check_range(curve, t0, t1)?;
    Ok(segment_decide_unchecked(curve, t0, t1, a, b, delta, metric))
}

pub(crate) fn segment_decide_unchecked(
    curve: &Polyline,
    t0: f64,
    t1: f64,
    a: &[f64],
    b: &[f64],
    delta: f64,
    metric: Metric,
) -> bool {
    let start = curve.point_at(t0);
    if !metric.within(&start, a, delta) {
        return false;
    }
    let end = curve.point_at(t1);
    if !metric.within(&end, b, delta) {
        return false;
    }
    if t0 == t1 {
        return metric.within(&start, b, delta);
    }
    let (last, _) = locate(t1, curve.segments());
    let mut arrivals = vec![ParamValue::INFEASIBLE; last + 1];
    arrivals_in_range(curve, a, b, t0, last + 1, delta, metric, &mut arrivals);
    arrivals[last] <= ParamValue::new(t1)
}

/// `δ_H(P[t0 … t1], ab)`: the largest distance from a vertex of the subcurve
/// (fractional endpoints included) to the segment.
pub fn hausdorff_to_segment(curve: &Polyline, t0: f64, t1: f64, a: &[f64], b: &[f64], metric: Metric) -> Result<f64> {
    check_point(curve, a)?;
    check_point(curve, b)?;
    check_range(curve, t0, t1)?;
    let sub = curve.subcurve(t0, t1)?;
    Ok(sub
        .vertices()
        .map(|v| point_segment_distance(v, a, b, metric.p))
        .fold(0.0, f64::max))
}

/// Integer-range variant used by the shortcut graph; avoids materializing the
/// subcurve.
pub(crate) fn hausdorff_shortcut(curve: &Polyline, i: usize, k: usize, metric: Metric) -> f64 {
    let (a, b) = (curve.vertex(i), curve.vertex(k));
    (i + 1..k)
        .map(|m| point_segment_distance(curve.vertex(m), a, b, metric.p))
        .fold(0.0, f64::max)
}

/// Whether `δ_F(P, Q) ≤ δ`, by reachability propagation through the free
/// space of the two curves.
pub fn frechet_decide_polylines(p: &Polyline, q: &Polyline, delta: f64, metric: Metric) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let (n, m) = (p.segments(), q.segments());
    if !metric.within(p.vertex(0), q.vertex(0), delta) || !metric.within(p.vertex(n), q.vertex(m), delta) {
        return Ok(false);
    }
    // A single point is matched to every point of the other curve; by
    // convexity of balls it suffices to check vertices.
    if n == 0 {
        return Ok(q.vertices().all(|v| metric.within(v, p.vertex(0), delta)));
    }
    if m == 0 {
        return Ok(p.vertices().all(|v| metric.within(v, q.vertex(0), delta)));
    }

    // Columns follow the segments of Q (x), rows the segments of P (y).
    // `bottom[c]` is the reachable part of the bottom edge of column c in the
    // current row.
    let mut bottom: Vec<UnitInterval> = Vec::with_capacity(m);
    let mut open = true;
    for c in 0..m {
        let free = segment_ball(p.vertex(0), q.vertex(c), q.vertex(c + 1), delta, metric);
        let reach = if open && free.contains(0.0) {
            free
        } else {
            UnitInterval::Empty
        };
        open = reach.contains(1.0);
        bottom.push(reach);
    }

    let mut left_open = true;
    let mut last_right = UnitInterval::Empty;
    for r in 0..n {
        let (pa, pb) = (p.vertex(r), p.vertex(r + 1));
        let free_left = segment_ball(q.vertex(0), pa, pb, delta, metric);
        let mut left = if left_open && free_left.contains(0.0) {
            free_left
        } else {
            UnitInterval::Empty
        };
        left_open = left.contains(1.0);
        for c in 0..m {
            let free_right = segment_ball(q.vertex(c + 1), pa, pb, delta, metric);
            let free_top = segment_ball(pb, q.vertex(c), q.vertex(c + 1), delta, metric);
            let below = bottom[c];
            let right = if !below.is_empty() {
                free_right
            } else if let Some((lo, _)) = left.bounds() {
                clip_from(free_right, lo)
            } else {
                UnitInterval::Empty
            };
            let top = if !left.is_empty() {
                free_top
            } else if let Some((lo, _)) = below.bounds() {
                clip_from(free_top, lo)
            } else {
                UnitInterval::Empty
            };
            bottom[c] = top;
            left = right;
        }
        last_right = left;
    }
    Ok(last_right.contains(1.0) || bottom[m - 1].contains(1.0))
}

fn clip_from(interval: UnitInterval, from: f64) -> UnitInterval {
    match interval.bounds() {
        Some((lo, hi)) => UnitInterval::clipped(lo.max(from), hi),
        None => UnitInterval::Empty,
    }
}

/// Whether the directed Hausdorff distance from `P` to `Q` is at most `δ`:
/// every edge of `P` is covered by the union of the sublevel intervals of its
/// distance to the segments of `Q`.
pub fn hausdorff_decide_polylines(p: &Polyline, q: &Polyline, delta: f64, metric: Metric) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let r = metric.radius(delta);
    let near = |x: &[f64]| -> f64 {
        if q.segments() == 0 {
            return lp_norm_diff(x, q.vertex(0), metric.p);
        }
        (0..q.segments())
            .map(|c| point_segment_distance(x, q.vertex(c), q.vertex(c + 1), metric.p))
            .fold(f64::INFINITY, f64::min)
    };
    if p.segments() == 0 {
        return Ok(near(p.vertex(0)) <= r);
    }
    const GAP: f64 = 1e-12;
    for e in 0..p.segments() {
        let (a, b) = (p.vertex(e), p.vertex(e + 1));
        let mut pieces: Vec<(f64, f64)> = Vec::new();
        let targets: Vec<(&[f64], &[f64])> = if q.segments() == 0 {
            vec![(q.vertex(0), q.vertex(0))]
        } else {
            (0..q.segments()).map(|c| (q.vertex(c), q.vertex(c + 1))).collect()
        };
        for (qa, qb) in targets {
            let f = |t: f64| {
                let x = crate::geometry::lerp(a, b, t);
                point_segment_distance(&x, qa, qb, metric.p)
            };
            if let Some(bounds) = crate::geometry::convex_sublevel(f, r).bounds() {
                pieces.push(bounds);
            }
        }
        pieces.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut covered = 0.0_f64;
        let mut started = false;
        for (lo, hi) in pieces {
            if lo > covered + GAP && (started || lo > GAP) {
                break;
            }
            started = true;
            covered = covered.max(hi);
        }
        if !started || covered < 1.0 - GAP {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LpExponent;

    fn poly(rows: &[&[f64]]) -> Polyline {
        Polyline::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn euclid() -> Metric {
        Metric::new(LpExponent::TWO)
    }

    #[test]
    fn identical_segment_arrives_at_top() {
        let p = poly(&[&[0.0, 0.0], &[1.0, 0.0]]);
        let got = earliest_arrivals(&p, &[0.0, 0.0], &[1.0, 0.0], 0.0, 0.0, euclid()).unwrap();
        assert_eq!(got, vec![ParamValue::new(1.0)]);
    }

    #[test]
    fn tent_arrivals() {
        let p = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let got = earliest_arrivals(&p, &[0.0, 0.0], &[2.0, 0.0], 0.0, 1.0, euclid()).unwrap();
        // (1, t) is free only where P[t] is within 1 of (2, 0): never on the
        // first edge, and from 2 − 1/√2 on the second.
        assert!(!got[0].is_feasible());
        assert!((got[1].raw() - (2.0 - 0.5f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn everything_free_gives_monotone_lower_bound() {
        let p = poly(&[&[0.0], &[3.0], &[1.0], &[2.0]]);
        let got = earliest_arrivals(&p, &[0.0], &[2.0], 0.5, 100.0, euclid()).unwrap();
        assert_eq!(got, vec![ParamValue::new(0.5), ParamValue::new(1.0), ParamValue::new(2.0)]);
    }

    #[test]
    fn start_outside_free_space_rejected() {
        let p = poly(&[&[0.0], &[1.0]]);
        assert!(earliest_arrivals(&p, &[5.0], &[1.0], 0.0, 1.0, euclid()).is_err());
    }

    #[test]
    fn segment_decide_examples() {
        let seg = poly(&[&[0.0, 0.0], &[1.0, 0.0]]);
        assert!(frechet_segment_decide(&seg, 0.0, 1.0, &[0.0, 0.0], &[1.0, 0.0], 0.0, euclid()).unwrap());
        let tent = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let (a, b) = ([0.0, 0.0], [2.0, 0.0]);
        assert!(frechet_segment_decide(&tent, 0.0, 2.0, &a, &b, 1.0, euclid()).unwrap());
        assert!(!frechet_segment_decide(&tent, 0.0, 2.0, &a, &b, 0.99, euclid()).unwrap());
    }

    #[test]
    fn reversed_segment_fails() {
        let tent = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let m = euclid();
        assert!(frechet_segment_decide(&tent, 0.0, 2.0, &[0.0, 0.0], &[2.0, 0.0], 1.0, m).unwrap());
        assert!(!frechet_segment_decide(&tent, 0.0, 2.0, &[2.0, 0.0], &[0.0, 0.0], 1.0, m).unwrap());
    }

    #[test]
    fn hausdorff_examples() {
        let m = euclid();
        let line = poly(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        assert_eq!(
            hausdorff_to_segment(&line, 0.0, 2.0, &[0.0, 0.0], &[2.0, 0.0], m).unwrap(),
            0.0
        );
        let tent = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let h = hausdorff_to_segment(&tent, 0.0, 2.0, &[0.0, 0.0], &[2.0, 0.0], m).unwrap();
        assert!((h - 1.0).abs() < 1e-12);
        let h = hausdorff_to_segment(&tent, 1.0, 2.0, &[1.0, 1.0], &[2.0, 0.0], m).unwrap();
        assert!(h.abs() < 1e-12);
    }

    #[test]
    fn polyline_decide_examples() {
        let m = euclid();
        let p = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        assert!(frechet_decide_polylines(&p, &p, 0.0, m).unwrap());
        let base = poly(&[&[0.0, 0.0], &[2.0, 0.0]]);
        assert!(frechet_decide_polylines(&base, &p, 1.0, m).unwrap());
        assert!(!frechet_decide_polylines(&base, &p, 0.9, m).unwrap());
        let shifted = poly(&[&[0.0, 3.0], &[2.0, 0.0]]);
        assert!(!frechet_decide_polylines(&base, &shifted, 2.0, m).unwrap());
    }

    #[test]
    fn polyline_decide_point_curves() {
        let m = euclid();
        let dot = poly(&[&[0.0, 0.0]]);
        let p = poly(&[&[0.0, 0.0], &[1.0, 0.0]]);
        assert!(frechet_decide_polylines(&dot, &p, 1.0, m).unwrap());
        assert!(!frechet_decide_polylines(&p, &dot, 0.5, m).unwrap());
    }

    #[test]
    fn hausdorff_polylines_directed() {
        let m = euclid();
        let long = poly(&[&[0.0, 0.0], &[4.0, 0.0]]);
        let short = poly(&[&[0.0, 0.0], &[1.0, 0.0]]);
        assert!(hausdorff_decide_polylines(&short, &long, 0.0, m).unwrap());
        assert!(!hausdorff_decide_polylines(&long, &short, 2.0, m).unwrap());
        assert!(hausdorff_decide_polylines(&long, &short, 3.0, m).unwrap());
        let bent = poly(&[&[0.0, 0.0], &[2.0, 0.0], &[2.0, 2.0]]);
        assert!(hausdorff_decide_polylines(&bent, &bent, 0.0, m).unwrap());
    }
}

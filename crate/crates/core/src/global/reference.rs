use super::{start_reach, ReachTable};
use crate::error::{Error, Result};
use crate::frechet::arrivals_in_range;
use crate::geometry::{Metric, ParamValue, Polyline};
use crate::local::check_delta;
use crate::result::{SimplificationResult, Variant};

/// The table `DP(k, i, j)` evaluated level by level: each finite entry of
/// level `k − 1` seeds one earliest-arrival sweep against every later vertex.
/// Sweeps return all cells at once, so a level costs `O(n⁴)`.
#[derive(Clone, Debug)]
pub struct ReferenceDp {
    segments: usize,
    /// `levels[k − 1]` holds `DP(k, ·, ·)` row-major over `(i, j)`.
    levels: Vec<Vec<f64>>,
    /// Matching `(i', j')` the value at `(k, i, j)` was reached from.
    preds: Vec<Vec<(u32, u32)>>,
}

const NO_PRED: (u32, u32) = (u32::MAX, u32::MAX);

impl ReferenceDp {
    /// Evaluates levels `1 ..= max_k`, stopping early once
    /// `DP(k, n, n − 1)` is finite and `stop_early` is set.
    fn evaluate(curve: &Polyline, delta: f64, metric: Metric, max_k: usize, stop_early: bool) -> Result<Self> {
        check_delta(delta)?;
        let n = curve.segments();
        if n == 0 {
            return Err(Error::Precondition("curve has no segments".into()));
        }
        let table = ReachTable::build(curve, delta, metric);
        let j0 = start_reach(curve, delta, metric);
        let cells = (n + 1) * n;

        let mut first = vec![f64::INFINITY; cells];
        for (j, v) in first.iter_mut().enumerate().take(n) {
            if j <= j0 {
                *v = j as f64;
            }
        }
        let mut dp = ReferenceDp {
            segments: n,
            levels: vec![first],
            preds: vec![vec![NO_PRED; cells]],
        };
        let mut arrivals = vec![ParamValue::INFEASIBLE; n];
        while dp.levels.len() < max_k {
            if stop_early && dp.levels.last().unwrap()[n * n + n - 1].is_finite() {
                break;
            }
            let prev = dp.levels.last().unwrap();
            let mut level = vec![f64::INFINITY; cells];
            let mut preds = vec![NO_PRED; cells];
            // The start vertex is always available with a single vertex.
            level[..n].copy_from_slice(&prev[..n]);
            for i in 1..=n {
                for ip in 0..i {
                    for jp in 0..n {
                        let start = prev[ip * n + jp];
                        if !start.is_finite() {
                            continue;
                        }
                        arrivals.fill(ParamValue::INFEASIBLE);
                        arrivals_in_range(
                            curve,
                            curve.vertex(ip),
                            curve.vertex(i),
                            start,
                            n,
                            delta,
                            metric,
                            &mut arrivals,
                        );
                        for j in jp..n {
                            let Some(t) = arrivals[j].get() else { continue };
                            debug_assert!(table.get(i, j).0 <= t && t <= table.get(i, j).1);
                            let slot = i * n + j;
                            if t < level[slot] {
                                level[slot] = t;
                                preds[slot] = (ip as u32, jp as u32);
                            }
                        }
                    }
                }
            }
            dp.levels.push(level);
            dp.preds.push(preds);
        }
        Ok(dp)
    }

    /// All levels `k = 1 ..= max_k`.
    pub fn build(curve: &Polyline, delta: f64, metric: Metric, max_k: usize) -> Result<Self> {
        Self::evaluate(curve, delta, metric, max_k.max(1), false)
    }

    pub fn levels(&self) -> usize {
        self.levels.len()
    }

    /// `DP(k, i, j)`, `None` when infinite or beyond the evaluated levels.
    pub fn dp(&self, k: usize, i: usize, j: usize) -> Option<f64> {
        if k == 0 || k > self.levels.len() {
            return None;
        }
        let v = self.levels[k - 1][i * self.segments + j];
        v.is_finite().then_some(v)
    }

    /// Smallest evaluated `k` with `DP(k, i, j)` finite.
    pub fn kappa(&self, i: usize, j: usize) -> Option<u32> {
        (1..=self.levels.len())
            .find(|&k| self.dp(k, i, j).is_some())
            .map(|k| k as u32)
    }

    fn witness(&self, k: usize) -> Vec<usize> {
        let n = self.segments;
        let (mut k, mut i, mut j) = (k, n, n - 1);
        let mut indices = vec![n];
        while i != 0 {
            let (ip, jp) = self.preds[k - 1][i * n + j];
            debug_assert_ne!((ip, jp), NO_PRED);
            (k, i, j) = (k - 1, ip as usize, jp as usize);
            indices.push(i);
        }
        indices.reverse();
        indices
    }
}

/// Minimum-size simplification under Global-Fréchet distance by direct
/// evaluation of the dynamic program; `O(k n⁴)` time, `O(k n²)` memory.
pub fn simplify_global_frechet_reference(curve: &Polyline, delta: f64, metric: Metric) -> Result<SimplificationResult> {
    check_delta(delta)?;
    let n = curve.segments();
    if n == 0 {
        return Ok(SimplificationResult::new(vec![0], Variant::GlobalFrechet, delta, metric.p));
    }
    let dp = ReferenceDp::evaluate(curve, delta, metric, n + 1, true)?;
    let k = dp
        .kappa(n, n - 1)
        .ok_or_else(|| Error::Precondition("no simplification reaches the end of the curve".into()))?;
    let indices = dp.witness(k as usize);
    Ok(SimplificationResult::new(indices, Variant::GlobalFrechet, delta, metric.p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LpExponent;
    use crate::global::simplify_global_frechet;

    fn poly(rows: &[&[f64]]) -> Polyline {
        Polyline::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn shared_examples() {
        let m = Metric::new(LpExponent::TWO);
        let line = poly(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0], &[3.0, 0.0]]);
        assert_eq!(simplify_global_frechet_reference(&line, 0.0, m).unwrap().indices, vec![0, 3]);
        let zig = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        assert_eq!(simplify_global_frechet_reference(&zig, 0.5, m).unwrap().size, 3);
        assert_eq!(simplify_global_frechet_reference(&zig, 1.0, m).unwrap().size, 2);
    }

    #[test]
    fn kappa_tables_agree() {
        let p = poly(&[&[0.0, 0.0], &[1.0, 2.0], &[2.0, -1.0], &[3.0, 1.0], &[3.5, 0.0], &[5.0, 0.5]]);
        for p_exp in [1.0, 2.0, f64::INFINITY] {
            let m = Metric::new(LpExponent::new(p_exp).unwrap());
            for delta in [0.6, 1.1, 1.7] {
                let reference = ReferenceDp::build(&p, delta, m, p.len() + 1).unwrap();
                let fast = crate::global::kappa_table(&p, delta, m).unwrap();
                for i in 0..p.len() {
                    for j in 0..p.segments() {
                        assert_eq!(fast.get(i, j), reference.kappa(i, j), "i={i} j={j} p={p_exp} delta={delta}");
                    }
                }
                let r = simplify_global_frechet_reference(&p, delta, m).unwrap();
                assert!(r.validate(&p, m).unwrap());
                assert_eq!(r.size, simplify_global_frechet(&p, delta, m).unwrap().size);
            }
        }
    }
}

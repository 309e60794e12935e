use super::{kappa2_row, start_reach, Kappa2Entry, KappaTable, ReachTable};
use crate::cell_reach::{CellReachSolver, NO_COST};
use crate::error::{Error, Result};
use crate::geometry::{Metric, Polyline};
use crate::local::check_delta;
use crate::result::{SimplificationResult, Variant};

/// How the value at a breakpoint of `DP(·, i, j)` was obtained.
#[derive(Clone, Copy, Debug)]
enum Pred {
    /// `i = 0`: the curve starts inside the ball around `v_0`.
    Start,
    /// Through the left edge of cell `j`, continuing from `DP(k_b − 1, from, j)`.
    Vertical { from: u32 },
    /// Through the bottom edge of cell `j`, continuing from
    /// `DP(κ(from, cell), from, cell)`.
    Horizontal { from: u32, cell: u32 },
}

/// A point where `k ↦ DP(k, i, j)` strictly decreases.
#[derive(Clone, Copy, Debug)]
struct Breakpoint {
    k: u32,
    pred: Pred,
}

/// The breakpoints of every `DP(·, i, j)`, stored back to back.
struct Profiles {
    segments: usize,
    offsets: Vec<usize>,
    points: Vec<Breakpoint>,
}

impl Profiles {
    fn new(segments: usize) -> Self {
        Profiles {
            segments,
            offsets: vec![0],
            points: Vec::new(),
        }
    }

    /// Closes the profile of the next `(i, j)` in row-major order.
    fn seal(&mut self) {
        self.offsets.push(self.points.len());
    }

    /// The breakpoint governing `DP(k, i, j)`.
    fn lookup(&self, i: usize, j: usize, k: u32) -> Option<Breakpoint> {
        let idx = i * self.segments + j;
        let points = &self.points[self.offsets[idx]..self.offsets[idx + 1]];
        points.iter().rev().find(|bp| bp.k <= k).copied()
    }
}

struct Outcome {
    kappa: KappaTable,
    profiles: Profiles,
}

fn run(curve: &Polyline, delta: f64, metric: Metric) -> Outcome {
    let n = curve.segments();
    let width = n + 2; // k = 0 ..= n + 1
    let table = ReachTable::build(curve, delta, metric);
    let j0 = start_reach(curve, delta, metric);

    let mut kappa = KappaTable::new(n);
    let mut profiles = Profiles::new(n);
    // Row i − 1 of DP, overwritten in place by row i.
    let mut dp = vec![f64::INFINITY; n * width];
    // min over i' < i of DP(k − 1, i', j), with the minimizing i'.
    let mut best_prev = vec![f64::INFINITY; n * width];
    let mut best_arg = vec![u32::MAX; n * width];

    for j in 0..n {
        if j <= j0 {
            dp[j * width + 1..(j + 1) * width].fill(j as f64);
            kappa.set(0, j, 1);
            profiles.points.push(Breakpoint { k: 1, pred: Pred::Start });
        }
        profiles.seal();
    }

    let mut solver = CellReachSolver::new();
    let mut kappa2 = vec![
        Kappa2Entry {
            value: None,
            from_vertex: 0,
            from_cell: 0
        };
        n
    ];
    for i in 1..=n {
        kappa2_row(curve, i, &kappa, &table, delta, metric, &mut solver, &mut kappa2);
        for j in 0..n {
            let row = j * width..(j + 1) * width;
            let (dp_row, prev_row, arg_row) = (&mut dp[row.clone()], &mut best_prev[row.clone()], &mut best_arg[row]);
            for k in (1..width).rev() {
                if dp_row[k - 1] < prev_row[k] {
                    prev_row[k] = dp_row[k - 1];
                    arg_row[k] = (i - 1) as u32;
                }
            }
            let (t, s) = table.get(i, j);
            if !t.is_finite() {
                dp_row.fill(f64::INFINITY);
                profiles.seal();
                continue;
            }
            let k2 = kappa2[j].value.unwrap_or(NO_COST);
            let mut last = f64::INFINITY;
            let mut k1 = NO_COST;
            dp_row[0] = f64::INFINITY;
            for k in 1..width {
                let via_left = if prev_row[k] <= s { prev_row[k].max(t) } else { f64::INFINITY };
                if via_left.is_finite() && k1 == NO_COST {
                    k1 = k as u32;
                }
                let via_bottom = if k as u32 >= k2 { t } else { f64::INFINITY };
                let value = via_left.min(via_bottom);
                if value < last {
                    let pred = if via_left <= via_bottom {
                        Pred::Vertical { from: arg_row[k] }
                    } else {
                        Pred::Horizontal {
                            from: kappa2[j].from_vertex as u32,
                            cell: kappa2[j].from_cell as u32,
                        }
                    };
                    profiles.points.push(Breakpoint { k: k as u32, pred });
                    last = value;
                }
                dp_row[k] = value;
            }
            let kij = k1.min(k2);
            kappa.set(i, j, kij);
            profiles.seal();

            #[cfg(debug_assertions)]
            check_row(dp_row, t, s, kij);
        }
    }
    Outcome { kappa, profiles }
}

/// Shape of `DP(·, i, j)`: infinite below `κ`, then non-increasing inside
/// `[t, s]`.
#[cfg(debug_assertions)]
fn check_row(row: &[f64], t: f64, s: f64, kappa: u32) {
    for (k, &v) in row.iter().enumerate() {
        if (k as u32) < kappa {
            debug_assert!(v.is_infinite(), "DP finite below kappa");
        } else {
            debug_assert!(t <= v && v <= s, "DP outside [t, s]");
        }
        if k > 0 {
            debug_assert!(v <= row[k - 1], "DP increasing in k");
        }
    }
}

fn backtrack(out: &Outcome, n: usize) -> Result<Vec<usize>> {
    let top = out.kappa.raw(n, n - 1);
    if top == NO_COST {
        return Err(Error::Precondition("no simplification reaches the end of the curve".into()));
    }
    let (mut i, mut j, mut k) = (n, n - 1, top);
    let mut indices = vec![n];
    loop {
        let bp = out
            .profiles
            .lookup(i, j, k)
            .ok_or_else(|| Error::Precondition(format!("missing witness record at ({i}, {j}, {k})")))?;
        match bp.pred {
            Pred::Start => break,
            Pred::Vertical { from } => {
                i = from as usize;
                k = bp.k - 1;
            }
            Pred::Horizontal { from, cell } => {
                i = from as usize;
                j = cell as usize;
                k = out.kappa.raw(i, j);
            }
        }
        indices.push(i);
    }
    indices.reverse();
    Ok(indices)
}

/// Minimum-size simplification under Global-Fréchet distance in `O(n³)` time.
pub fn simplify_global_frechet(curve: &Polyline, delta: f64, metric: Metric) -> Result<SimplificationResult> {
    check_delta(delta)?;
    let n = curve.segments();
    if n == 0 {
        return Ok(SimplificationResult::new(vec![0], Variant::GlobalFrechet, delta, metric.p));
    }
    let out = run(curve, delta, metric);
    let indices = backtrack(&out, n)?;
    debug_assert_eq!(indices.len() as u32, out.kappa.raw(n, n - 1));
    Ok(SimplificationResult::new(indices, Variant::GlobalFrechet, delta, metric.p))
}

/// The full table `κ(i, j)` computed by the fast algorithm.
pub fn kappa_table(curve: &Polyline, delta: f64, metric: Metric) -> Result<KappaTable> {
    check_delta(delta)?;
    if curve.segments() == 0 {
        return Ok(KappaTable::new(0));
    }
    Ok(run(curve, delta, metric).kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LpExponent;

    fn poly(rows: &[&[f64]]) -> Polyline {
        Polyline::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn collinear() {
        let p = poly(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0], &[3.0, 0.0]]);
        let r = simplify_global_frechet(&p, 0.0, Metric::new(LpExponent::TWO)).unwrap();
        assert_eq!(r.indices, vec![0, 3]);
        assert_eq!(r.size, 2);
    }

    #[test]
    fn zigzag() {
        let p = poly(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let m = Metric::new(LpExponent::TWO);
        assert_eq!(simplify_global_frechet(&p, 0.5, m).unwrap().indices, vec![0, 1, 2]);
        assert_eq!(simplify_global_frechet(&p, 1.0, m).unwrap().indices, vec![0, 2]);
    }

    #[test]
    fn single_segment_and_point() {
        let m = Metric::new(LpExponent::TWO);
        let p = poly(&[&[0.0], &[1.0]]);
        assert_eq!(simplify_global_frechet(&p, 0.0, m).unwrap().size, 2);
        let p = poly(&[&[4.0]]);
        assert_eq!(simplify_global_frechet(&p, 0.0, m).unwrap().indices, vec![0]);
    }

    #[test]
    fn backtracking_curve() {
        // 0 → 2 → 1.5 → 3: the return trip is absorbed by a leash of 0.25.
        let p = poly(&[&[0.0], &[2.0], &[1.5], &[3.0]]);
        let m = Metric::new(LpExponent::TWO);
        let r = simplify_global_frechet(&p, 0.3, m).unwrap();
        assert!(r.validate(&p, m).unwrap());
        assert_eq!(r.indices, vec![0, 3]);
        assert_eq!(simplify_global_frechet(&p, 0.2, m).unwrap().size, 4);
    }

    #[test]
    fn kappa_table_start_row() {
        let p = poly(&[&[0.0], &[0.5], &[5.0]]);
        let k = kappa_table(&p, 1.0, Metric::new(LpExponent::TWO)).unwrap();
        assert_eq!(k.get(0, 0), Some(1));
        assert_eq!(k.get(0, 1), Some(1));
        assert_eq!(k.get(2, 1), Some(2));
    }
}

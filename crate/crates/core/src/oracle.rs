//! Exhaustive search over vertex subsets, for small curves.

use crate::error::{Error, Result};
use crate::frechet::frechet_decide_polylines;
use crate::geometry::{Metric, Polyline};
use crate::local::check_delta;
use crate::result::{SimplificationResult, Variant};

/// Largest number of segments the oracle accepts.
pub const ORACLE_MAX_SEGMENTS: usize = 22;

/// Smallest simplification found by trying all subsets of interior vertices,
/// by size and then lexicographically.
pub fn brute_force_min_simplification(
    curve: &Polyline,
    delta: f64,
    metric: Metric,
    variant: Variant,
) -> Result<SimplificationResult> {
    check_delta(delta)?;
    let n = curve.segments();
    if n > ORACLE_MAX_SEGMENTS {
        return Err(Error::TooLarge(format!(
            "the oracle handles at most {ORACLE_MAX_SEGMENTS} segments, got {n}"
        )));
    }
    if n == 0 {
        return Ok(SimplificationResult::new(vec![0], variant, delta, metric.p));
    }
    // Shortcut decisions are shared by many subsets: 0 unknown, 1 yes, 2 no.
    let mut memo = vec![0u8; (n + 1) * (n + 1)];
    let mut shortcut = |i: usize, k: usize| -> bool {
        let slot = &mut memo[i * (n + 1) + k];
        if *slot == 0 {
            *slot = if variant.shortcut_ok(curve, i, k, delta, metric) {
                1
            } else {
                2
            };
        }
        *slot == 1
    };
    let interior: Vec<usize> = (1..n).collect();
    for extra in 0..=interior.len() {
        let mut combo: Vec<usize> = (0..extra).collect();
        loop {
            let mut indices = Vec::with_capacity(extra + 2);
            indices.push(0);
            indices.extend(combo.iter().map(|&c| interior[c]));
            indices.push(n);
            let accepted = match variant {
                Variant::GlobalFrechet => frechet_decide_polylines(curve, &curve.select(&indices)?, delta, metric)?,
                _ => indices.windows(2).all(|w| shortcut(w[0], w[1])),
            };
            if accepted {
                return Ok(SimplificationResult::new(indices, variant, delta, metric.p));
            }
            if !next_combination(&mut combo, interior.len()) {
                break;
            }
        }
    }
    unreachable!("keeping every vertex is always a valid simplification")
}

/// Advances `combo` to the next `k`-subset of `0..m` in lexicographic order.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    for pos in (0..k).rev() {
        if combo[pos] < m - k + pos {
            combo[pos] += 1;
            for q in pos + 1..k {
                combo[q] = combo[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

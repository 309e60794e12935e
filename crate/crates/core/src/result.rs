use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frechet::{frechet_decide_polylines, hausdorff_shortcut, segment_decide_unchecked};
use crate::geometry::{LpExponent, Metric, Polyline};

/// The distance measure a simplification is judged by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    LocalHausdorff,
    LocalFrechet,
    GlobalFrechet,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::LocalHausdorff, Variant::LocalFrechet, Variant::GlobalFrechet];

    pub fn name(self) -> &'static str {
        match self {
            Variant::LocalHausdorff => "local-hausdorff",
            Variant::LocalFrechet => "local-frechet",
            Variant::GlobalFrechet => "global-frechet",
        }
    }

    /// Whether replacing `P[i … k]` by the segment `v_i v_k` stays within `δ`
    /// under a local measure.
    pub(crate) fn shortcut_ok(self, curve: &Polyline, i: usize, k: usize, delta: f64, metric: Metric) -> bool {
        match self {
            Variant::LocalHausdorff => hausdorff_shortcut(curve, i, k, metric) <= metric.radius(delta),
            Variant::LocalFrechet | Variant::GlobalFrechet => {
                k == i + 1 || segment_decide_unchecked(curve, i as f64, k as f64, curve.vertex(i), curve.vertex(k), delta, metric)
            }
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown variant {s:?}")))
    }
}

/// A minimum-size simplification together with the vertices it keeps.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimplificationResult {
    pub size: usize,
    pub indices: Vec<usize>,
    pub variant: Variant,
    pub delta: f64,
    pub p: LpExponent,
}

impl SimplificationResult {
    pub(crate) fn new(indices: Vec<usize>, variant: Variant, delta: f64, p: LpExponent) -> Self {
        SimplificationResult {
            size: indices.len(),
            indices,
            variant,
            delta,
            p,
        }
    }

    /// Checks the witness against `curve` with the decision procedure of its
    /// variant.
    pub fn validate(&self, curve: &Polyline, metric: Metric) -> Result<bool> {
        let n = curve.segments();
        let shape_ok = self.size == self.indices.len()
            && self.indices.first() == Some(&0)
            && self.indices.last() == Some(&n)
            && self.indices.windows(2).all(|w| w[0] < w[1]);
        if !shape_ok {
            return Ok(false);
        }
        match self.variant {
            Variant::GlobalFrechet => {
                let simplified = curve.select(&self.indices)?;
                frechet_decide_polylines(curve, &simplified, self.delta, metric)
            }
            local => Ok(self
                .indices
                .windows(2)
                .all(|w| local.shortcut_ok(curve, w[0], w[1], self.delta, metric))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
            assert_eq!(serde_json::to_string(&v).unwrap(), format!("\"{}\"", v.name()));
        }
        assert!("oracle".parse::<Variant>().is_err());
    }

    #[test]
    fn validation_rejects_bad_shapes() {
        let p = Polyline::from_rows(vec![vec![0.0], vec![1.0], vec![2.0]]).unwrap();
        let m = Metric::new(LpExponent::TWO);
        let good = SimplificationResult::new(vec![0, 2], Variant::GlobalFrechet, 0.0, m.p);
        assert!(good.validate(&p, m).unwrap());
        for bad in [vec![0, 1], vec![1, 2], vec![0, 0, 2]] {
            let r = SimplificationResult::new(bad, Variant::LocalFrechet, 0.0, m.p);
            assert!(!r.validate(&p, m).unwrap());
        }
    }
}

//! Points, polylines and L_p geometry.
//!
//! Everything downstream reduces to one primitive: the set of parameters
//! `t ∈ [0, 1]` for which the point `(1 - t)·a + t·b` of a segment lies in the
//! L_p ball of radius `δ` around a center `c`. Since `t ↦ ‖(1-t)a + tb - c‖_p`
//! is convex, that set is always a (possibly empty) interval.
//!
//! All decision procedures in the crate share a single tolerance: a point is
//! considered free when its distance is at most `δ + tol`. Intervals returned by
//! [`ball_segment_interval`] are computed for that inflated radius, so every
//! algorithm sees exactly the same free space.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default slack added to `δ` in every free-space test.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const MAX_ITERATIONS: usize = 200;

/// The exponent `p ∈ [1, ∞]` of an L_p norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LpExponent {
    Finite(f64),
    Infinity,
}

impl LpExponent {
    pub const ONE: LpExponent = LpExponent::Finite(1.0);
    pub const TWO: LpExponent = LpExponent::Finite(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if p == f64::INFINITY {
            Ok(LpExponent::Infinity)
        } else if p.is_nan() || p < 1.0 {
            Err(Error::InvalidExponent(p))
        } else {
            Ok(LpExponent::Finite(p))
        }
    }

    /// The exponent as a float, `f64::INFINITY` for the max-norm.
    pub fn value(self) -> f64 {
        match self {
            LpExponent::Finite(p) => p,
            LpExponent::Infinity => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, LpExponent::Infinity)
    }

    fn kind(self) -> NormKind {
        match self {
            LpExponent::Infinity => NormKind::Max,
            LpExponent::Finite(1.0) => NormKind::Manhattan,
            LpExponent::Finite(2.0) => NormKind::Euclidean,
            LpExponent::Finite(p) => NormKind::General(p),
        }
    }
}

#[derive(Clone, Copy)]
enum NormKind {
    Manhattan,
    Euclidean,
    Max,
    General(f64),
}

impl fmt::Display for LpExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpExponent::Finite(p) => write!(f, "{p}"),
            LpExponent::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for LpExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "max" => Ok(LpExponent::Infinity),
            _ => {
                let p: f64 = s.parse().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("invalid exponent {s:?}"),
                })?;
                LpExponent::new(p)
            }
        }
    }
}

impl Serialize for LpExponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LpExponent::Finite(p) => serializer.serialize_f64(*p),
            LpExponent::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for LpExponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(p) => LpExponent::new(p).map_err(serde::de::Error::custom),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// The norm together with the free-space tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Metric {
    pub p: LpExponent,
    pub tol: f64,
}

impl Metric {
    pub fn new(p: LpExponent) -> Self {
        Metric {
            p,
            tol: DEFAULT_TOLERANCE,
        }
    }

    pub fn with_tolerance(p: LpExponent, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
        }
        Ok(Metric { p, tol })
    }

    /// Effective radius of the free space for threshold `delta`.
    #[inline]
    pub fn radius(&self, delta: f64) -> f64 {
        delta + self.tol
    }

    #[inline]
    pub fn dist(&self, x: &[f64], y: &[f64]) -> f64 {
        lp_norm_diff(x, y, self.p)
    }

    #[inline]
    pub fn within(&self, x: &[f64], y: &[f64], delta: f64) -> bool {
        self.dist(x, y) <= self.radius(delta)
    }
}

/// A point of ℝᵈ with finite coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.coords
    }
}

/// A polygonal curve `⟨v_0, …, v_n⟩`, parametrized over `[0, n]`.
///
/// Vertices are stored row-major in one buffer.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    dim: usize,
    coords: Vec<f64>,
}

impl Polyline {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        Self::from_rows(vertices.into_iter().map(Point::into_coords).collect())
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyPolyline)?;
        let dim = first.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut coords = Vec::with_capacity(dim * rows.len());
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            if row.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFinite);
            }
            coords.extend_from_slice(row);
        }
        Ok(Polyline { dim, coords })
    }

    pub(crate) fn from_flat(dim: usize, coords: Vec<f64>) -> Self {
        debug_assert!(dim > 0 && coords.len().is_multiple_of(dim) && !coords.is_empty());
        Polyline { dim, coords }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vertices, `n + 1`.
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Number of segments, `n`.
    pub fn segments(&self) -> usize {
        self.len() - 1
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn vertices(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    /// `P[t]` for `t ∈ [0, n]`.
    pub fn point_at(&self, t: f64) -> Vec<f64> {
        let n = self.segments();
        if n == 0 {
            return self.vertex(0).to_vec();
        }
        let t = t.clamp(0.0, n as f64);
        let j = (t.floor() as usize).min(n - 1);
        lerp(self.vertex(j), self.vertex(j + 1), t - j as f64)
    }

    /// The subcurve `P[t0 … t1]`, with fractional endpoints materialized.
    pub fn subcurve(&self, t0: f64, t1: f64) -> Result<Polyline> {
        let n = self.segments() as f64;
        if !(0.0 <= t0 && t0 <= t1 && t1 <= n) {
            return Err(Error::Precondition(format!(
                "subcurve bounds must satisfy 0 <= {t0} <= {t1} <= {n}"
            )));
        }
        let mut coords = self.point_at(t0);
        let first_inner = t0.floor() as usize + 1;
        let last_inner = t1.ceil() as usize;
        for k in first_inner..last_inner {
            coords.extend_from_slice(self.vertex(k));
        }
        if t1 > t0 {
            coords.extend(self.point_at(t1));
        }
        Ok(Polyline::from_flat(self.dim, coords))
    }

    /// The curve through the vertices with the given indices.
    pub fn select(&self, indices: &[usize]) -> Result<Polyline> {
        if indices.is_empty() {
            return Err(Error::EmptyPolyline);
        }
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    limit: self.len(),
                });
            }
            coords.extend_from_slice(self.vertex(i));
        }
        Ok(Polyline::from_flat(self.dim, coords))
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.vertices().map(<[f64]>::to_vec).collect()
    }
}

/// A curve parameter, or the infeasible sentinel which orders after every
/// finite value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamValue(f64);

impl ParamValue {
    pub const INFEASIBLE: ParamValue = ParamValue(f64::INFINITY);

    pub fn new(t: f64) -> Self {
        debug_assert!(!t.is_nan());
        ParamValue(t)
    }

    pub fn is_feasible(self) -> bool {
        self.0.is_finite()
    }

    pub fn get(self) -> Option<f64> {
        self.is_feasible().then_some(self.0)
    }

    /// The raw value, `f64::INFINITY` when infeasible.
    pub fn raw(self) -> f64 {
        self.0
    }
}

impl Eq for ParamValue {}

impl PartialOrd for ParamValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ParamValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(t) => write!(f, "{t}"),
            None => f.write_str("infeasible"),
        }
    }
}

/// A closed subinterval of `[0, 1]`, or the empty set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum UnitInterval {
    Empty,
    Closed { lo: f64, hi: f64 },
}

impl UnitInterval {
    pub const FULL: UnitInterval = UnitInterval::Closed { lo: 0.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(0.0 <= lo && lo <= hi && hi <= 1.0) {
            return Err(Error::MalformedInstance(format!(
                "interval [{lo}, {hi}] is not a subinterval of [0, 1]"
            )));
        }
        Ok(UnitInterval::Closed { lo, hi })
    }

    /// Clips `[lo, hi]` to `[0, 1]`; empty when the result is.
    pub fn clipped(lo: f64, hi: f64) -> Self {
        let lo = lo.max(0.0);
        let hi = hi.min(1.0);
        if lo <= hi {
            UnitInterval::Closed { lo, hi }
        } else {
            UnitInterval::Empty
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, UnitInterval::Empty)
    }

    pub fn bounds(&self) -> Option<(f64, f64)> {
        match *self {
            UnitInterval::Empty => None,
            UnitInterval::Closed { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn contains(&self, t: f64) -> bool {
        self.bounds().is_some_and(|(lo, hi)| lo <= t && t <= hi)
    }
}

#[inline]
pub(crate) fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| (1.0 - t) * x + t * y).collect()
}

/// `‖x − y‖_p` on raw coordinate slices of equal length.
#[inline]
pub fn lp_norm_diff(x: &[f64], y: &[f64], p: LpExponent) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    let diffs = x.iter().zip(y).map(|(a, b)| (a - b).abs());
    match p.kind() {
        NormKind::Manhattan => diffs.sum(),
        NormKind::Euclidean => diffs.map(|d| d * d).sum::<f64>().sqrt(),
        NormKind::Max => diffs.fold(0.0, f64::max),
        NormKind::General(p) => {
            // Scale by the largest difference to keep `d^p` in range.
            let scale = x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            if scale == 0.0 {
                return 0.0;
            }
            scale * diffs.map(|d| (d / scale).powf(p)).sum::<f64>().powf(1.0 / p)
        }
    }
}

/// `‖x‖_p^p` for finite `p`, used where the exact p-th power is wanted.
pub fn lp_norm_pow(x: &[f64], p: f64) -> f64 {
    x.iter().map(|v| v.abs().powf(p)).sum()
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `‖x − y‖_p`.
pub fn lp_dist(x: &Point, y: &Point, p: LpExponent) -> Result<f64> {
    check_dims(x.dim(), y.dim())?;
    Ok(lp_norm_diff(x.coords(), y.coords(), p))
}

/// `{t ∈ [0, 1] : ‖(1−t)a + tb − c‖_p ≤ δ + tol}`.
///
/// Closed forms for `p ∈ {1, 2, ∞}`; other exponents locate the minimizer by
/// golden-section search and the two boundary crossings by bisection.
pub fn ball_segment_interval(c: &Point, a: &Point, b: &Point, delta: f64, metric: Metric) -> Result<UnitInterval> {
    check_dims(c.dim(), a.dim())?;
    check_dims(c.dim(), b.dim())?;
    if delta.is_nan() || delta < 0.0 {
        return Err(Error::Precondition(format!("delta must be non-negative, got {delta}")));
    }
    Ok(segment_ball(c.coords(), a.coords(), b.coords(), delta, metric))
}

/// Unchecked form of [`ball_segment_interval`] on raw slices.
pub(crate) fn segment_ball(c: &[f64], a: &[f64], b: &[f64], delta: f64, metric: Metric) -> UnitInterval {
    let r = metric.radius(delta);
    if a == b {
        return if lp_norm_diff(a, c, metric.p) <= r {
            UnitInterval::FULL
        } else {
            UnitInterval::Empty
        };
    }
    match metric.p.kind() {
        NormKind::Euclidean => euclidean_interval(c, a, b, r),
        NormKind::Max => max_norm_interval(c, a, b, r),
        NormKind::Manhattan => manhattan_interval(c, a, b, r),
        NormKind::General(_) => convex_sublevel(|t| segment_point_dist(c, a, b, t, metric.p), r),
    }
}

#[inline]
fn segment_point_dist(c: &[f64], a: &[f64], b: &[f64], t: f64, p: LpExponent) -> f64 {
    let diff: Vec<f64> = a.iter().zip(b).zip(c).map(|((x, y), z)| (1.0 - t) * x + t * y - z).collect();
    let zeros = vec![0.0; diff.len()];
    lp_norm_diff(&diff, &zeros, p)
}

fn euclidean_interval(c: &[f64], a: &[f64], b: &[f64], r: f64) -> UnitInterval {
    // |a − c + t(b − a)|² = A t² + 2B t + C
    let mut qa = 0.0;
    let mut qb = 0.0;
    let mut qc = 0.0;
    for ((x, y), z) in a.iter().zip(b).zip(c) {
        let u = x - z;
        let w = y - x;
        qa += w * w;
        qb += u * w;
        qc += u * u;
    }
    let rhs = qc - r * r;
    let disc = qb * qb - qa * rhs;
    if disc < 0.0 {
        return UnitInterval::Empty;
    }
    let sq = disc.sqrt();
    // Stable pair of roots of A t² + 2B t + rhs.
    let q = -(qb + qb.signum() * sq);
    let (t1, t2) = if q == 0.0 { (0.0, 0.0) } else { (q / qa, rhs / q) };
    let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
    UnitInterval::clipped(lo, hi)
}

fn max_norm_interval(c: &[f64], a: &[f64], b: &[f64], r: f64) -> UnitInterval {
    let mut lo = 0.0_f64;
    let mut hi = 1.0_f64;
    for ((x, y), z) in a.iter().zip(b).zip(c) {
        let u = x - z;
        let w = y - x;
        if w == 0.0 {
            if u.abs() > r {
                return UnitInterval::Empty;
            }
            continue;
        }
        let (l, h) = {
            let t1 = (-r - u) / w;
            let t2 = (r - u) / w;
            if t1 <= t2 {
                (t1, t2)
            } else {
                (t2, t1)
            }
        };
        lo = lo.max(l);
        hi = hi.min(h);
    }
    UnitInterval::clipped(lo, hi)
}

/// Knots of the piecewise-linear `t ↦ Σ|u_k + t w_k|` on `[0, 1]`.
fn manhattan_knots(c: &[f64], a: &[f64], b: &[f64]) -> (Vec<f64>, Vec<(f64, f64)>) {
    let coeffs: Vec<(f64, f64)> = a.iter().zip(b).zip(c).map(|((x, y), z)| (x - z, y - x)).collect();
    let mut knots = vec![0.0, 1.0];
    knots.extend(
        coeffs
            .iter()
            .filter(|(_, w)| *w != 0.0)
            .map(|(u, w)| -u / w)
            .filter(|t| *t > 0.0 && *t < 1.0),
    );
    knots.sort_by(f64::total_cmp);
    knots.dedup();
    (knots, coeffs)
}

fn manhattan_interval(c: &[f64], a: &[f64], b: &[f64], r: f64) -> UnitInterval {
    let (knots, coeffs) = manhattan_knots(c, a, b);
    let eval = |t: f64| coeffs.iter().map(|(u, w)| (u + t * w).abs()).sum::<f64>();
    let values: Vec<f64> = knots.iter().map(|&t| eval(t)).collect();
    let Some(first) = values.iter().position(|&v| v <= r) else {
        return UnitInterval::Empty;
    };
    let last = values.iter().rposition(|&v| v <= r).unwrap_or(first);
    let cross = |i: usize, j: usize| {
        // Linear between knots i and j, f(i) on one side of r and f(j) on the other.
        let (ti, tj, fi, fj) = (knots[i], knots[j], values[i], values[j]);
        if fj == fi {
            ti
        } else {
            ti + (r - fi) / (fj - fi) * (tj - ti)
        }
    };
    let lo = if first == 0 { 0.0 } else { cross(first - 1, first) };
    let hi = if last + 1 == knots.len() { 1.0 } else { cross(last, last + 1) };
    UnitInterval::clipped(lo.min(knots[first]), hi.max(knots[last]))
}

/// Golden-section search for a minimizer of a convex function on `[0, 1]`.
pub(crate) fn convex_argmin(f: impl Fn(f64) -> f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..MAX_ITERATIONS {
        if hi - lo <= 1e-15 {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    for t in [0.0, 1.0] {
        let v = f(t);
        if v < best.1 {
            best = (t, v);
        }
    }
    best
}

/// Sublevel set `{t ∈ [0,1] : f(t) ≤ level}` of a convex function.
///
/// Returned endpoints are always on the inside of the boundary, refined until
/// the bracketing interval stops shrinking.
pub(crate) fn convex_sublevel(f: impl Fn(f64) -> f64, level: f64) -> UnitInterval {
    let f0 = f(0.0);
    let f1 = f(1.0);
    if f0 <= level && f1 <= level {
        return UnitInterval::FULL;
    }
    let (tmin, fmin) = convex_argmin(&f);
    if fmin > level {
        return UnitInterval::Empty;
    }
    let lo = if f0 <= level {
        0.0
    } else {
        bisect_boundary(&f, level, 0.0, tmin)
    };
    let hi = if f1 <= level {
        1.0
    } else {
        bisect_boundary(&f, level, 1.0, tmin)
    };
    UnitInterval::clipped(lo, hi)
}

/// Bisection between `outside` (f > level) and `inside` (f ≤ level); returns
/// the last inside point.
fn bisect_boundary(f: impl Fn(f64) -> f64, level: f64, mut outside: f64, mut inside: f64) -> f64 {
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (outside + inside);
        if mid == outside || mid == inside {
            break;
        }
        if f(mid) <= level {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// Distance from `c` to the segment `ab`.
pub fn point_segment_distance(c: &[f64], a: &[f64], b: &[f64], p: LpExponent) -> f64 {
    debug_assert!(c.len() == a.len() && a.len() == b.len());
    if a == b {
        return lp_norm_diff(a, c, p);
    }
    match p.kind() {
        NormKind::Euclidean => {
            let mut ww = 0.0;
            let mut uw = 0.0;
            for ((x, y), z) in a.iter().zip(b).zip(c) {
                let w = y - x;
                ww += w * w;
                uw += (z - x) * w;
            }
            let t = (uw / ww).clamp(0.0, 1.0);
            segment_point_dist(c, a, b, t, p)
        }
        NormKind::Manhattan => {
            let (knots, coeffs) = manhattan_knots(c, a, b);
            knots
                .iter()
                .map(|&t| coeffs.iter().map(|(u, w)| (u + t * w).abs()).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
        }
        NormKind::Max => max_norm_point_segment(c, a, b),
        NormKind::General(_) => convex_argmin(|t| segment_point_dist(c, a, b, t, p)).1,
    }
}

/// Smallest `r` for which the per-coordinate slabs `|u_k + t w_k| ≤ r` and
/// `t ∈ [0, 1]` intersect. By Helly in one dimension it is the largest of the
/// pairwise thresholds.
fn max_norm_point_segment(c: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let mut r = 0.0_f64;
    // Slab k is the interval center_k ± r·width_k.
    let mut slabs = Vec::with_capacity(c.len());
    for ((x, y), z) in a.iter().zip(b).zip(c) {
        let u = x - z;
        let w = y - x;
        if w == 0.0 {
            r = r.max(u.abs());
        } else {
            slabs.push((-u / w, 1.0 / w.abs()));
        }
    }
    for (i, &(ci, wi)) in slabs.iter().enumerate() {
        r = r.max((ci - 1.0) / wi).max(-ci / wi);
        for &(ck, wk) in &slabs[i + 1..] {
            r = r.max((ci - ck).abs() / (wi + wk));
        }
    }
    r
}

/// `(t_{i,j}, s_{i,j})`: the first and last parameter on segment `j` within
/// `δ` of vertex `v_i`, as absolute curve parameters.
pub fn t_s_values(curve: &Polyline, i: usize, j: usize, delta: f64, metric: Metric) -> Result<(ParamValue, ParamValue)> {
    if i >= curve.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            limit: curve.len(),
        });
    }
    if j >= curve.segments() {
        return Err(Error::IndexOutOfRange {
            index: j,
            limit: curve.segments(),
        });
    }
    Ok(
        match segment_ball(curve.vertex(i), curve.vertex(j), curve.vertex(j + 1), delta, metric) {
            UnitInterval::Empty => (ParamValue::INFEASIBLE, ParamValue::INFEASIBLE),
            UnitInterval::Closed { lo, hi } => (ParamValue::new(j as f64 + lo), ParamValue::new(j as f64 + hi)),
        },
    )
}

//! Minimum-size polyline simplification.
//!
//! Given a polyline `P = ⟨v_0, …, v_n⟩` in `ℝ^d`, a threshold `δ` and an `L_p`
//! norm, find a subsequence of vertices keeping `v_0` and `v_n` that is within
//! `δ` of `P` and has as few vertices as possible. Three distance measures are
//! supported:
//!
//! * Local-Hausdorff and Local-Fréchet, where every shortcut `v_i v_k` must be
//!   close to the piece `P[i … k]` it replaces ([`simplify_local`]);
//! * Global-Fréchet, where the whole simplified curve must be within Fréchet
//!   distance `δ` of `P` ([`simplify_global_frechet`], cubic time).
//!
//! [`brute_force_min_simplification`] and
//! [`simplify_global_frechet_reference`] are slow exact references, and the
//! [`hardness`] module builds instances that encode ∀∀∃ orthogonal vectors.
//!
//! All free-space tests use the radius `δ + tol`, see [`Metric`].

// The table-filling loops index several arrays by the same cell number.
#![allow(clippy::needless_range_loop)]

pub mod cell_reach;
pub mod error;
pub mod frechet;
pub mod generate;
pub mod geometry;
pub mod global;
pub mod hardness;
pub mod io;
pub mod local;
pub mod oracle;
pub mod result;

pub use cell_reach::{
    reaches, solve_cell_reachability, solve_cell_reachability_bruteforce, CellReachInstance, CellReachSolver, ExitCosts, NO_COST,
};
pub use error::{Error, Result};
pub use frechet::{
    earliest_arrivals, frechet_decide_polylines, frechet_segment_decide, hausdorff_decide_polylines, hausdorff_to_segment,
};
pub use geometry::{
    ball_segment_interval, lp_dist, lp_norm_diff, point_segment_distance, t_s_values, LpExponent, Metric, ParamValue, Point,
    Polyline, UnitInterval, DEFAULT_TOLERANCE,
};
pub use global::{
    kappa2_subroutine, kappa_table, simplify_global_frechet, simplify_global_frechet_reference, Kappa2Entry, KappaTable,
};
pub use hardness::{build_hard_curve, solve_ov_bruteforce, verify_gadget_properties, GadgetReport, HardCurve, OvInstance};
pub use local::{build_shortcut_graph, simplify_local, LocalMeasure, ShortcutGraph};
pub use oracle::{brute_force_min_simplification, ORACLE_MAX_SEGMENTS};
pub use result::{SimplificationResult, Variant};

//! Asymptotic zero curves, Plancherel-Rotach approximations and the
//! semicircle law, compared against exact zero sets.
//!
//! Curve formulas are evaluated in ordinary floating point and are generic
//! over `num_traits::Float`; multiprecision work stays in `rootfind`.

mod curves;
mod fit;
mod pr;
mod semicircle;

pub use curves::{
    curve3, curve4_doubled_mid, curve4_doubled_out, curve4_mid, curve4_out, curve_scaled_v,
    curve_unscaled_y, real_zero_asymptotes,
};
pub use fit::{
    curve_csv, curve_fit_report, fit_points, sample_curve, Branch, BranchStats, CurvePoint,
    CurveSpec, Deviation, Family, FitReport, Window,
};
pub use pr::{
    big_phi, chebyshev_t, chi, delta_k, hermite_pr_approx, pr_constant, pr_envelope, theta,
    wronskian2_pr_approx, REGION_DELTA,
};
pub use semicircle::{ks_statistic, semicircle_ks, wigner_cdf};

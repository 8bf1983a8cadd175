//! Exact multiprecision evaluation of orthonormal Hermite functions and
//! their two-column Wronskians, used as the oracle for the asymptotic
//! approximations.
#![allow(dead_code)]

use hermite_wronskian::asympt::{hermite_pr_approx, pr_envelope};
use hermite_wronskian::polyalg::{evaluate, hermite, wronskian_of_indices};
use rug::{Complex, Float};

const PREC: u32 = 256;

/// `ln sqrt(2^n n! sqrt(π))`.
pub fn log_norm(n: u32) -> Float {
    let mut s = Float::with_val(PREC, n) * Float::with_val(PREC, 2).ln();
    s += Float::with_val(PREC, Float::ln_gamma_ref(&Float::with_val(PREC, n + 1)));
    s += Float::with_val(PREC, rug::float::Constant::Pi).ln() / 2u32;
    s / 2u32
}

/// Orthonormal Hermite function at `z = sqrt(2n) w`, evaluated exactly.
pub fn psi(n: u32, z: f64) -> f64 {
    let v = evaluate(&hermite(n as usize), &Complex::with_val(PREC, (z, 0)), PREC);
    let weight = (Float::with_val(PREC, -z * z / 2.0) - log_norm(n)).exp();
    (Float::with_val(PREC, v.real()) * weight).to_f64()
}

/// `W(ψ_n, ψ_{n+k})` at real `z`, from the exact polynomial Wronskian.
pub fn psi_wronskian(n: u32, k: u32, z: f64) -> f64 {
    let w = wronskian_of_indices(&[n, n + k]);
    let v = evaluate(&w, &Complex::with_val(PREC, (z, 0)), PREC);
    let weight = (Float::with_val(PREC, -z * z) - log_norm(n) - log_norm(n + k)).exp();
    (Float::with_val(PREC, v.real()) * weight).to_f64()
}

pub fn pr_error(n: u32, w: f64) -> f64 {
    let z = (2.0 * n as f64).sqrt() * w;
    (hermite_pr_approx(n, w).unwrap() - psi(n, z)).abs() / pr_envelope(n, w)
}

/// Largest error over one local oscillation period centred at `w`: the
/// amplitude of the O(1/n) correction.
pub fn pr_error_amplitude(n: u32, w: f64) -> f64 {
    let period = std::f64::consts::PI / (2.0 * n as f64 * (1.0 - w * w).sqrt());
    (0..=40)
        .map(|i| pr_error(n, w - period / 2.0 + period * i as f64 / 40.0))
        .fold(0.0, f64::max)
}

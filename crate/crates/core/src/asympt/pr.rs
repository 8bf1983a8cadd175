//! Plancherel-Rotach asymptotics of Hermite functions in the oscillatory
//! region `|Re w| < 1 - δ`, with `w = z / sqrt(2n)`.
//!
//! The formulas approximate the orthonormal Hermite functions
//! `ψ_n(z) = H_n(z) e^{-z²/2} / sqrt(2^n n! sqrt(π))`.

use num_complex::Complex;
use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};

/// Default distance δ kept from the turning points `w = ±1`.
pub const REGION_DELTA: f64 = 0.1;

fn lit<T: Float>(x: f64) -> T {
    T::from(x).expect("literal representable")
}

/// `T_k(x)` by the three-term recurrence; defined for every real `x`.
pub fn chebyshev_t<T: Float>(k: u32, x: T) -> T {
    let (mut prev, mut cur) = (T::one(), x);
    if k == 0 {
        return prev;
    }
    let two = lit::<T>(2.0);
    for _ in 1..k {
        let next = two * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn check_cut<T: Float>(w: Complex<T>) -> Result<()> {
    if w.im == T::zero() && w.re.abs() >= T::one() {
        return Err(Error::BranchCut(format!(
            "w = {} lies on a branch cut",
            w.re.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(())
}

/// `Θ(w) = w sqrt(1 - w²)/2 + arcsin(w)/2 - π/4`, principal branches.
pub fn theta<T: Float + FloatConst>(w: Complex<T>) -> Result<Complex<T>> {
    check_cut(w)?;
    let one = Complex::new(T::one(), T::zero());
    let half = lit::<T>(0.5);
    Ok(w * (one - w * w).sqrt() * half + w.asin() * half - T::FRAC_PI_4())
}

/// `χ(w) = arcsin(w) / 2`.
pub fn chi<T: Float + FloatConst>(w: Complex<T>) -> Result<Complex<T>> {
    check_cut(w)?;
    Ok(w.asin() * lit::<T>(0.5))
}

/// `Δ_k(w) = k arccos w`.
pub fn delta_k<T: Float + FloatConst>(k: u32, w: Complex<T>) -> Result<Complex<T>> {
    check_cut(w)?;
    Ok(w.acos() * lit::<T>(k as f64))
}

/// `Φ = 2n Θ(w) + χ(w)`.
pub fn big_phi<T: Float + FloatConst>(n: u32, w: Complex<T>) -> Result<Complex<T>> {
    Ok(theta(w)? * lit::<T>(2.0 * n as f64) + chi(w)?)
}

fn check_region<T: Float>(w: T, delta: f64) -> Result<()> {
    let w = w.to_f64().unwrap_or(f64::NAN);
    if !(w.abs() <= 1.0 - delta) {
        return Err(Error::OutsideRegion(format!("|w| = {} exceeds 1 - {delta}", w.abs())));
    }
    Ok(())
}

/// `C_n = sqrt(2/π) (2n)^(-1/4)`.
pub fn pr_constant<T: Float + FloatConst>(n: u32) -> T {
    (lit::<T>(2.0) / T::PI()).sqrt() * lit::<T>(2.0 * n as f64).powf(lit(-0.25))
}

/// Envelope `C_n (1 - w²)^(-1/4)` of the oscillation.
pub fn pr_envelope<T: Float + FloatConst>(n: u32, w: T) -> T {
    pr_constant::<T>(n) * (T::one() - w * w).powf(lit(-0.25))
}

/// Leading term `C_n (1 - w²)^(-1/4) cos(2n Θ(w) + χ(w))` for the
/// normalized Hermite function `ψ_n` at `z = sqrt(2n) w`.
pub fn hermite_pr_approx<T: Float + FloatConst>(n: u32, w: T) -> Result<T> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    check_region(w, REGION_DELTA)?;
    let phase = big_phi(n, Complex::new(w, T::zero()))?.re;
    Ok(pr_envelope::<T>(n, w) * phase.cos())
}

/// Two-term approximation of `W(ψ_n, ψ_{n+k})` at `z = sqrt(2n) w`.
///
/// With `D = 2kΘ - kwΘ' = -Δ_k` the phase difference between `ψ_n` and
/// `ψ_{n+k}`, the value is `-(2/π) [sin D + (sin D + k sin(2Φ + D)) /
/// (4n (1 - w²))]`, written here in terms of `Δ_k = k arccos w`.
pub fn wronskian2_pr_approx<T: Float + FloatConst>(n: u32, k: u32, w: T) -> Result<T> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    check_region(w, REGION_DELTA)?;
    let wc = Complex::new(w, T::zero());
    let d = delta_k(k, wc)?.re;
    let phi = big_phi(n, wc)?.re;
    let kf = lit::<T>(k as f64);
    let corr = (d.sin() - kf * (lit::<T>(2.0) * phi - d).sin())
        / (lit::<T>(4.0 * n as f64) * (T::one() - w * w));
    Ok(lit::<T>(2.0) / T::PI() * (d.sin() + corr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev_t(0, 0.3), 1.0);
        assert!((chebyshev_t(2, 0.5) + 0.5).abs() < 1e-15);
        assert!(chebyshev_t(5, 0.0).abs() < 1e-15);
        for i in 0..=20 {
            let x = -1.0 + i as f64 / 10.0;
            for k in 0..12 {
                let want = (k as f64 * x.acos()).cos();
                assert!((chebyshev_t(k, x) - want).abs() < 1e-12, "k={k} x={x}");
            }
        }
        // outside [-1, 1] the recurrence continues the polynomial
        assert!((chebyshev_t(3, 2.0) - 26.0).abs() < 1e-12);
    }

    #[test]
    fn phase_functions_at_origin() {
        assert!((theta(c(0.0)).unwrap().re + PI / 4.0).abs() < 1e-15);
        assert_eq!(chi(c(0.0)).unwrap(), c(0.0));
        assert!((delta_k(3, c(0.0)).unwrap().re - 1.5 * PI).abs() < 1e-14);
        assert!(matches!(delta_k(2, c(1.0)), Err(Error::BranchCut(_))));
        assert!(delta_k(2, c(0.999_999)).unwrap().re < 1e-2);
        assert!(matches!(theta(c(-1.5)), Err(Error::BranchCut(_))));
        assert!(theta(Complex::new(1.5, 1e-3)).is_ok());
    }

    #[test]
    fn theta_derivative_is_sqrt() {
        let h = 1e-5;
        for i in 1..=20 {
            let w = Complex::new(-0.95 + 1.9 * i as f64 / 21.0, 0.02 * (i % 3) as f64);
            let fd = (theta(w + h).unwrap() - theta(w - h).unwrap()) / (2.0 * h);
            let want = (Complex::new(1.0, 0.0) - w * w).sqrt();
            assert!((fd - want).norm() < 1e-8, "w={w}");
        }
    }

    #[test]
    fn region_is_enforced() {
        assert!(matches!(hermite_pr_approx(100, 0.999), Err(Error::OutsideRegion(_))));
        assert!(matches!(wronskian2_pr_approx(100, 1, -0.95), Err(Error::OutsideRegion(_))));
        assert!(hermite_pr_approx(100, 0.9f64).is_ok());
    }

    #[test]
    fn generic_over_f32() {
        let a = hermite_pr_approx(40, 0.25f32).unwrap() as f64;
        let b = hermite_pr_approx(40, 0.25f64).unwrap();
        assert!((a - b).abs() < 1e-4);
    }
}

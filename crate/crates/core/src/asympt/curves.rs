//! Asymptotic and empirical zero curves `|y| = f(x)` of multi-term Hermite
//! Wronskians.
//!
//! Every formula shares the shape
//! `pre / sqrt(2n - x²) * (ln A + p ln(1 - x²/2n) + q ln|1 - T_k²(x/sqrt(2n))|)`
//! and may be negative; callers treat a negative value as "no curve point".

use num_traits::{Float, FloatConst};

use super::pr::chebyshev_t;
use crate::error::{Error, Result};

fn lit<T: Float>(x: f64) -> T {
    T::from(x).expect("literal representable")
}

fn nonzero(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be positive")));
    }
    Ok(())
}

/// `(ln(1 - u²), ln|1 - T_k²(u)|)` for `|u| < 1`.
fn logs<T: Float>(u: T, k: u32) -> Result<(T, T)> {
    if !(u.abs() < T::one()) {
        return Err(Error::OutsideRegion(format!(
            "scaled abscissa {} outside (-1, 1)",
            u.to_f64().unwrap_or(f64::NAN)
        )));
    }
    let t = chebyshev_t(k, u);
    let gap = (T::one() - t * t).abs();
    if gap == T::zero() {
        return Err(Error::Singular(format!(
            "T_{k}^2 = 1 at u = {}",
            u.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(((T::one() - u * u).ln(), gap.ln()))
}

struct Shape {
    /// numerator of the prefactor over `sqrt(2n - x²)`
    pre: f64,
    log_a: f64,
    p: f64,
    q: f64,
}

fn unscaled<T: Float>(x: T, n: u32, k: u32, s: Shape) -> Result<T> {
    let two_n = lit::<T>(2.0 * n as f64);
    let u = x / two_n.sqrt();
    let (l1, l2) = logs(u, k)?;
    let body = lit::<T>(s.log_a) + lit::<T>(s.p) * l1 + lit::<T>(s.q) * l2;
    Ok(lit::<T>(s.pre) / (two_n - x * x).sqrt() * body)
}

/// Scaled two-term curve: `|v| = (ln(8n/k) + ln(1-u²) + ½ ln|1-T_k²(u)|) /
/// (4n sqrt(1-u²))`.
pub fn curve_scaled_v<T: Float>(u: T, n: u32, k: u32) -> Result<T> {
    nonzero("n", n)?;
    nonzero("k", k)?;
    let (l1, l2) = logs(u, k)?;
    let body = lit::<T>((8.0 * n as f64 / k as f64).ln()) + l1 + lit::<T>(0.5) * l2;
    Ok(body / (lit::<T>(4.0 * n as f64) * (T::one() - u * u).sqrt()))
}

/// Unscaled two-term curve, `sqrt(2n)` times [`curve_scaled_v`] at
/// `x / sqrt(2n)`.
pub fn curve_unscaled_y<T: Float>(x: T, n: u32, k: u32) -> Result<T> {
    nonzero("n", n)?;
    nonzero("k", k)?;
    let shape = Shape { pre: 0.5, log_a: (8.0 * n as f64 / k as f64).ln(), p: 1.0, q: 0.5 };
    unscaled(x, n, k, shape)
}

/// Predicted real zeros `sqrt(2n) cos(πm/k)`, `m = 1..k-1`, decreasing.
pub fn real_zero_asymptotes<T: Float + FloatConst>(n: u32, k: u32) -> Vec<T> {
    let r = lit::<T>(2.0 * n as f64).sqrt();
    (1..k)
        .map(|m| r * (T::PI() * lit::<T>(m as f64) / lit::<T>(k as f64)).cos())
        .collect()
}

/// Three-term curve with `ln(6n/k)` and unit prefactor.
pub fn curve3<T: Float>(x: T, n: u32, k: u32) -> Result<T> {
    nonzero("n", n)?;
    nonzero("k", k)?;
    let shape = Shape { pre: 1.0, log_a: (6.0 * n as f64 / k as f64).ln(), p: 1.0, q: 0.5 };
    unscaled(x, n, k, shape)
}

/// Middle curve of the equally spaced four-term Wronskian.
pub fn curve4_mid<T: Float>(x: T, n: u32, k: u32) -> Result<T> {
    nonzero("n", n)?;
    nonzero("k", k)?;
    let shape = Shape { pre: 0.5, log_a: (4.0 * n as f64 / k as f64).ln(), p: 1.0, q: 0.5 };
    unscaled(x, n, k, shape)
}

/// Outer curve of the equally spaced four-term Wronskian; three times the
/// middle one.
pub fn curve4_out<T: Float>(x: T, n: u32, k: u32) -> Result<T> {
    nonzero("n", n)?;
    nonzero("k", k)?;
    let shape = Shape { pre: 1.5, log_a: (4.0 * n as f64 / k as f64).ln(), p: 1.0, q: 0.5 };
    unscaled(x, n, k, shape)
}

fn check_doubled(n: u32, l: u32) -> Result<()> {
    nonzero("n", n)?;
    nonzero("l", l)?;
    if l >= n {
        return Err(Error::InvalidParameter(format!("l = {l} must be below n = {n}")));
    }
    Ok(())
}

/// Middle curve of `W(H_n, H_{n+1}, H_{n+l+1}, H_{n+l+2})`.
pub fn curve4_doubled_mid<T: Float>(x: T, n: u32, l: u32) -> Result<T> {
    check_doubled(n, l)?;
    let shape = Shape { pre: 0.5, log_a: (4.0 * n as f64).ln(), p: 1.5, q: -0.5 };
    unscaled(x, n, l, shape)
}

/// Outer curve of `W(H_n, H_{n+1}, H_{n+l+1}, H_{n+l+2})`.
pub fn curve4_doubled_out<T: Float>(x: T, n: u32, l: u32) -> Result<T> {
    check_doubled(n, l)?;
    let nf = n as f64;
    let shape = Shape {
        pre: 1.0,
        log_a: (8.0 * nf * nf / (5.0 * l as f64)).ln(),
        p: 1.5,
        q: 1.0 / l as f64,
    };
    unscaled(x, n, l, shape)
}

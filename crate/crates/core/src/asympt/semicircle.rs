use num_traits::{Float, FloatConst};

use crate::error::{Error, Result};
use crate::rootfind::{RootKind, RootSet};

/// Semicircle CDF `(u sqrt(1-u²) + arcsin u + π/2) / π` on `[-1, 1]`.
pub fn wigner_cdf<T: Float + FloatConst>(u: T) -> Result<T> {
    if !(u.abs() <= T::one()) {
        return Err(Error::OutsideRegion(format!(
            "u = {} outside [-1, 1]",
            u.to_f64().unwrap_or(f64::NAN)
        )));
    }
    let v = (u * (T::one() - u * u).sqrt() + u.asin() + T::FRAC_PI_2()) / T::PI();
    Ok(v.max(T::zero()).min(T::one()))
}

/// Kolmogorov-Smirnov distance between the empirical distribution of
/// `samples` and the semicircle law. Samples outside `[-1, 1]` count at the
/// nearest endpoint.
pub fn ks_statistic(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::Empty("no samples".into()));
    }
    let mut xs: Vec<f64> = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let f = wigner_cdf(x.clamp(-1.0, 1.0))?;
        d = d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n);
    }
    Ok(d)
}

/// KS distance of the real parts of the upper half-plane roots, scaled by
/// `1 / sqrt(2n)`.
pub fn semicircle_ks(rs: &RootSet, n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let scale = (2.0 * n as f64).sqrt();
    let xs: Vec<f64> = rs
        .roots
        .iter()
        .filter(|r| rs.kind(r) != RootKind::Real && r.z.imag().is_sign_positive())
        .map(|r| r.z.real().to_f64() / scale)
        .collect();
    if xs.is_empty() {
        return Err(Error::Empty("no upper half-plane roots".into()));
    }
    ks_statistic(&xs)
}

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::BigPoly;

/// Reduced quotient of integer polynomials: the gcd is removed, the
/// denominator has positive leading coefficient, and numerator and
/// denominator share no integer content.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    pub numerator: BigPoly,
    pub denominator: BigPoly,
}

impl RationalFunction {
    pub fn new(numerator: BigPoly, denominator: BigPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if numerator.is_zero() {
            return Ok(Self { numerator, denominator: BigPoly::one() });
        }
        let g = numerator.gcd(&denominator);
        let mut num = numerator.div_exact(&g)?;
        let mut den = denominator.div_exact(&g)?;
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        num = num.div_scalar_exact(&c)?;
        den = den.div_scalar_exact(&c)?;
        Ok(Self { numerator: num, denominator: den })
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Evaluates at a point where the denominator is nonzero.
    pub fn eval_f64(&self, z: f64) -> f64 {
        let ev = |p: &BigPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * z + c.to_string().parse::<f64>().unwrap_or(f64::NAN))
        };
        ev(&self.numerator) / ev(&self.denominator)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == BigPoly::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// `-2 (log W_λ)'' = -2 (W'' W - W'^2) / W^2`, reduced. Its poles are the
/// zeros of `W_λ`.
pub fn log_deriv2_potential(p: &Partition) -> Result<RationalFunction> {
    let w = super::wronskian_of_partition(p)?;
    if w.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d1 = w.derivative();
    let d2 = d1.derivative();
    let num = (&(&d2 * &w) - &(&d1 * &d1)).scale(&BigInt::from(-2));
    let den = &w * &w;
    if num.is_zero() {
        return Ok(RationalFunction { numerator: BigPoly::zero(), denominator: BigPoly::one() });
    }
    debug_assert!(!den.coeffs().iter().all(Zero::is_zero));
    RationalFunction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::wronskian::from_i64;

    fn pot(s: &str) -> RationalFunction {
        log_deriv2_potential(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn empty_partition_has_zero_potential() {
        assert!(pot("").is_zero());
    }

    #[test]
    fn single_box() {
        let u = pot("1");
        assert_eq!(u.numerator, from_i64(&[2]));
        assert_eq!(u.denominator, from_i64(&[0, 0, 1]));
    }

    #[test]
    fn two_boxes_in_a_column() {
        // W = -4(2z^2 + 1): -2 (log W)'' = (16z^2 - 8) / (2z^2 + 1)^2
        let u = pot("1,1");
        assert_eq!(u.numerator, from_i64(&[-8, 0, 16]));
        assert_eq!(u.denominator, from_i64(&[1, 0, 4, 0, 4]));
    }

    #[test]
    fn matches_finite_differences() {
        // second difference of -2 log|W| against the exact rational function
        let lam: Partition = "3,1".parse().unwrap();
        let w = crate::polyalg::wronskian_of_partition(&lam).unwrap();
        let u = log_deriv2_potential(&lam).unwrap();
        let logw = |z: f64| {
            let v = w
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * z + c.to_string().parse::<f64>().unwrap());
            -2.0 * v.abs().ln()
        };
        for &z in &[0.37, 1.3, 2.1, -0.8] {
            let h = 1e-4;
            let fd = (logw(z + h) - 2.0 * logw(z) + logw(z - h)) / (h * h);
            let exact = u.eval_f64(z);
            assert!((fd - exact).abs() < 1e-4 * exact.abs().max(1.0), "{z}: {fd} vs {exact}");
        }
    }

    #[test]
    fn reduction_normalizes_sign_and_content() {
        let r = RationalFunction::new(from_i64(&[4, 4]), from_i64(&[-2, -2, 0])).unwrap();
        assert_eq!(r.numerator, from_i64(&[-2]));
        assert_eq!(r.denominator, from_i64(&[1]));
        assert!(RationalFunction::new(from_i64(&[1]), BigPoly::zero()).is_err());
    }
}

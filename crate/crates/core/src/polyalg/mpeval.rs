use num_bigint::{BigInt, Sign};
use rug::float::Round;
use rug::integer::Order;
use rug::{Complex, Float, Integer};

use crate::BigPoly;

pub(crate) fn to_rug_integer(c: &BigInt) -> Integer {
    let (sign, digits) = c.to_u64_digits();
    let mag = Integer::from_digits(&digits, Order::Lsf);
    if sign == Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// An integer polynomial converted once to multiprecision floats.
///
/// The working precision is the largest coefficient bit length plus the
/// requested extra bits, so the coefficients are represented exactly.
#[derive(Clone, Debug)]
pub struct MpPoly {
    coeffs: Vec<Float>,
    abs_coeffs: Vec<Float>,
    prec: u32,
}

impl MpPoly {
    pub fn new(p: &BigPoly, extra_bits: u32) -> Self {
        Self::with_precision(p, (p.max_bits() as u32).max(1) + extra_bits)
    }

    /// Working precision `prec` exactly; coefficients wider than that are
    /// rounded, which the error bound of [`MpPoly::eval_with_bound`] covers.
    pub fn with_precision(p: &BigPoly, prec: u32) -> Self {
        let coeffs: Vec<Float> = p
            .coeffs()
            .iter()
            .map(|c| Float::with_val(prec, to_rug_integer(c)))
            .collect();
        let abs_coeffs = coeffs
            .iter()
            .map(|c| Float::with_val_round(64, c.abs_ref(), Round::Up).0)
            .collect();
        Self { coeffs, abs_coeffs, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lift(&self, z: &Complex) -> Complex {
        Complex::with_val(self.prec, z)
    }

    pub fn eval(&self, z: &Complex) -> Complex {
        let z = self.lift(z);
        let mut acc = Complex::new(self.prec);
        for c in self.coeffs.iter().rev() {
            acc *= &z;
            acc += c;
        }
        acc
    }

    /// `(p(z), p'(z))` in one Horner pass.
    pub fn eval_with_derivative(&self, z: &Complex) -> (Complex, Complex) {
        let z = self.lift(z);
        let mut p = Complex::new(self.prec);
        let mut dp = Complex::new(self.prec);
        for c in self.coeffs.iter().rev() {
            dp *= &z;
            dp += &p;
            p *= &z;
            p += c;
        }
        (p, dp)
    }

    /// Value together with an upper bound on its rounding error,
    /// `4 (2d + 2) 2^(1-prec) sum |c_j| |z|^j`, which also covers rounding of
    /// the coefficients themselves.
    pub fn eval_with_bound(&self, z: &Complex) -> (Complex, Float) {
        (self.eval(z), self.rounding_bound(z))
    }

    /// Rounding error bound of a Horner evaluation at `z`, without the
    /// evaluation itself.
    pub fn rounding_bound(&self, z: &Complex) -> Float {
        let factor = 4.0 * (2.0 * self.degree() as f64 + 2.0);
        let mut bound = Float::with_val(64, factor) * self.magnitude_at(z);
        bound >>= self.prec as i32 - 1;
        bound
    }

    /// Sum of `|c_j| |z|^j`, rounded up; the natural scale of `p` at `z`.
    pub fn magnitude_at(&self, z: &Complex) -> Float {
        let r = Float::with_val_round(64, z.abs_ref(), Round::Up).0;
        let mut s = Float::new(64);
        for c in self.abs_coeffs.iter().rev() {
            s.mul_add_round(&r, c, Round::Up);
        }
        s
    }
}

/// Evaluates `p(z)` at working precision `max coefficient bits +
/// precision_bits`.
pub fn evaluate(p: &BigPoly, z: &Complex, precision_bits: u32) -> Complex {
    MpPoly::new(p, precision_bits.max(64)).eval(z)
}

/// Like [`evaluate`], also returning an absolute rounding error bound.
pub fn evaluate_with_bound(p: &BigPoly, z: &Complex, precision_bits: u32) -> (Complex, Float) {
    MpPoly::new(p, precision_bits.max(64)).eval_with_bound(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::wronskian::from_i64;

    #[test]
    fn exact_small_values() {
        let v = evaluate(&from_i64(&[-2, 0, 4]), &Complex::with_val(64, (0, 0)), 64);
        assert_eq!(*v.real(), -2);
        assert_eq!(*v.imag(), 0);
        let v = evaluate(&from_i64(&[0, 2]), &Complex::with_val(64, (0, 1)), 64);
        assert_eq!(*v.real(), 0);
        assert_eq!(*v.imag(), 2);
    }

    #[test]
    fn vanishes_at_root_within_bound() {
        let bits = 200;
        let z = Complex::with_val(bits + 8, (0, Float::with_val(bits + 8, 0.5).sqrt()));
        let (v, err) = evaluate_with_bound(&from_i64(&[-4, 0, -8]), &z, bits);
        let tol = Float::with_val(64, 1) >> bits as i32;
        let mag = Float::with_val(64, v.abs_ref());
        assert!(mag < tol, "{mag}");
        assert!(err < tol * 256u32, "{err}");
    }

    #[test]
    fn derivative_pass_matches_formal_derivative() {
        let p = crate::polyalg::hermite(7);
        let mp = MpPoly::new(&p, 128);
        let dmp = MpPoly::new(&p.derivative(), 128);
        let z = Complex::with_val(128, (1.25, -0.5));
        let (_, d) = mp.eval_with_derivative(&z);
        let want = dmp.eval(&z);
        let diff = Float::with_val(64, (d - want).abs_ref());
        assert!(diff < 1e-30);
    }
}

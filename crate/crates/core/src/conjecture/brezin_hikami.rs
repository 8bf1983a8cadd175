use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{BigPoly, RatPoly};

/// Value of the Gaussian integral
/// `∫ ∏_{i<j} (x_i - x_j)² ∏_k (z - x_k)² e^{-x_k²} dx` over `R^m` as
/// `scale · π^(m/2) · poly(z)`, with `poly` primitive and of positive
/// leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct BrezinHikami {
    pub m: u32,
    pub scale: BigRational,
    pub sqrt_pi_power: u32,
    pub poly: BigPoly,
}

impl BrezinHikami {
    /// The integral divided by `π^(m/2)`.
    pub fn rational_poly(&self) -> RatPoly {
        self.poly.to_rational().scale(&self.scale)
    }
}

/// Polynomial in `x_1..x_m` with coefficients in `Z[z]`.
type Multi = BTreeMap<Vec<u32>, BigPoly>;

fn mul(a: &Multi, b: &Multi) -> Multi {
    let mut out = Multi::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca * cb;
            let slot = out.entry(e).or_insert_with(BigPoly::zero);
            *slot = &*slot + &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn term(m: usize, exps: &[(usize, u32)], c: BigPoly) -> (Vec<u32>, BigPoly) {
    let mut e = vec![0; m];
    for &(i, p) in exps {
        e[i] += p;
    }
    (e, c)
}

/// `∫ x^(2j) e^{-x²} dx / sqrt(π) = (2j - 1)!! / 2^j`; odd moments vanish.
fn moment(p: u32) -> BigRational {
    if p % 2 == 1 {
        return BigRational::zero();
    }
    let j = p / 2;
    let mut num = BigInt::one();
    for i in 0..j {
        num *= BigInt::from(2 * i + 1);
    }
    BigRational::new(num, BigInt::one() << j as usize)
}

/// Exact expansion of the integral by monomials and Gaussian moments, with
/// `sqrt(π)` carried as a separate power. Exponential in `m`, so `m <= 3`.
pub fn brezin_hikami_poly(m: u32) -> Result<BrezinHikami> {
    if m > 3 {
        return Err(Error::InvalidParameter(format!("m = {m} exceeds 3")));
    }
    let k = m as usize;
    let z = BigPoly::x();
    let one = BigPoly::one();
    let mut acc: Multi = [term(k, &[], one.clone())].into_iter().collect();
    for i in 0..k {
        for j in i + 1..k {
            let diff: Multi = [term(k, &[(i, 1)], one.clone()), term(k, &[(j, 1)], -one.clone())]
                .into_iter()
                .collect();
            acc = mul(&acc, &mul(&diff, &diff));
        }
        let lin: Multi = [term(k, &[], z.clone()), term(k, &[(i, 1)], -one.clone())]
            .into_iter()
            .collect();
        acc = mul(&acc, &mul(&lin, &lin));
    }
    let mut total = RatPoly::zero();
    for (e, c) in &acc {
        let w = e.iter().fold(BigRational::one(), |w, &p| w * moment(p));
        if !w.is_zero() {
            total = &total + &c.to_rational().scale(&w);
        }
    }
    // split into rational scale times primitive integer polynomial
    let den = total.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let den_r = BigRational::from_integer(den.clone());
    let ints = BigPoly::new(total.coeffs().iter().map(|c| (c * &den_r).to_integer()).collect());
    let content = ints.content();
    let mut poly = ints.div_scalar_exact(&content)?;
    let mut scale = BigRational::new(content, den);
    if poly.leading().is_some_and(|c| c.is_negative()) {
        poly = -poly;
        scale = -scale;
    }
    Ok(BrezinHikami { m, scale, sqrt_pi_power: m, poly })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::wronskian_of_partition;
    use crate::Partition;

    fn ip(c: &[i64]) -> BigPoly {
        BigPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn small_cases() {
        let b0 = brezin_hikami_poly(0).unwrap();
        assert_eq!(b0.poly, ip(&[1]));
        assert_eq!(b0.scale, BigRational::one());
        // ∫ (z - x)² e^{-x²} dx = sqrt(π) (z² + 1/2)
        let b1 = brezin_hikami_poly(1).unwrap();
        assert_eq!(b1.poly, ip(&[1, 0, 2]));
        assert_eq!(b1.scale, BigRational::new(1.into(), 2.into()));
        assert_eq!(b1.sqrt_pi_power, 1);
        assert!(brezin_hikami_poly(4).is_err());
    }

    #[test]
    fn proportional_to_doubled_wronskians() {
        for m in 0..=3u32 {
            let b = brezin_hikami_poly(m).unwrap();
            assert_eq!(b.poly.degree(), Some(2 * m as usize));
            assert_eq!(b.poly.reflect(), b.poly, "even in z");
            let lam = Partition::new(vec![m; 2].into_iter().filter(|&p| p > 0)).unwrap();
            let w = wronskian_of_partition(&lam).unwrap();
            assert!(w.proportionality(&b.poly).is_some(), "m={m}");
        }
    }
}

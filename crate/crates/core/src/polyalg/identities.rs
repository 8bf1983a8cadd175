use num_bigint::BigInt;
use num_rational::BigRational;

use super::hermite::hermite_table;
use super::wronskian::wronskian;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::BigPoly;

/// Returns `c` with `W_{λ*}(z) = c (-i)^{|λ|} W_λ(iz)`.
///
/// The rotated polynomial is formed coefficientwise: the `z^j` coefficient
/// picks up `i^(j - |λ|)`, which is real exactly when `j` has the parity of
/// `|λ|`.
pub fn check_duality(p: &Partition) -> Result<BigRational> {
    let conj = p.conjugate()?;
    let w = super::wronskian_of_partition(p)?;
    let w_conj = super::wronskian_of_partition(&conj)?;
    let s = p.weight().expect("integer partition") as usize;
    let mut rotated = Vec::with_capacity(w.coeffs().len());
    for (j, c) in w.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            rotated.push(BigInt::from(0));
            continue;
        }
        let gap = j.abs_diff(s);
        if gap % 2 == 1 {
            return Err(Error::NotProportional);
        }
        rotated.push(if (gap / 2) % 2 == 0 { c.clone() } else { -c.clone() });
    }
    w_conj
        .proportionality(&BigPoly::new(rotated))
        .ok_or(Error::NotProportional)
}

/// `k H_{n-k} W(H_n, H_{n+l}) - l H_{n+l} W(H_{n-k}, H_n)`.
pub fn three_term_rhs(n: u32, k: u32, l: u32) -> BigPoly {
    let t = hermite_table((n + l) as usize);
    let h = |i: u32| t[i as usize].clone();
    let a = (&h(n - k) * &wronskian(&[h(n), h(n + l)])).scale(&BigInt::from(k));
    let b = (&h(n + l) * &wronskian(&[h(n - k), h(n)])).scale(&BigInt::from(l));
    &a - &b
}

/// Proportionality constant between `W(H_{n-k}, H_n, H_{n+l})` and
/// [`three_term_rhs`].
pub fn three_term_identity_check(n: u32, k: u32, l: u32) -> Result<BigRational> {
    if k < 1 || l < 1 || n < k {
        return Err(Error::InvalidParameter(format!(
            "three-term identity needs n >= k >= 1 and l >= 1, got ({n},{k},{l})"
        )));
    }
    let t = hermite_table((n + l) as usize);
    let lhs = wronskian(&[
        t[(n - k) as usize].clone(),
        t[n as usize].clone(),
        t[(n + l) as usize].clone(),
    ]);
    lhs.proportionality(&three_term_rhs(n, k, l))
        .ok_or(Error::NotProportional)
}

/// The two weights of the four-term identity: `l(k+l+m)` on
/// `W(n, n+k) W(n+k+l, n+k+l+m)` and `km` on `W(n, n+k+l+m) W(n+k, n+k+l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourTermCoefficients {
    pub outer: u64,
    pub crossed: u64,
}

impl FourTermCoefficients {
    pub fn new(k: u32, l: u32, m: u32) -> Self {
        Self {
            outer: l as u64 * (k + l + m) as u64,
            crossed: k as u64 * m as u64,
        }
    }
}

pub fn four_term_rhs(n: u32, k: u32, l: u32, m: u32) -> BigPoly {
    let t = hermite_table((n + k + l + m) as usize);
    let h = |i: u32| t[i as usize].clone();
    let c = FourTermCoefficients::new(k, l, m);
    let a = &wronskian(&[h(n), h(n + k)]) * &wronskian(&[h(n + k + l), h(n + k + l + m)]);
    let b = &wronskian(&[h(n), h(n + k + l + m)]) * &wronskian(&[h(n + k), h(n + k + l)]);
    &a.scale(&BigInt::from(c.outer)) - &b.scale(&BigInt::from(c.crossed))
}

/// Proportionality constant between `W(H_n, H_{n+k}, H_{n+k+l}, H_{n+k+l+m})`
/// and [`four_term_rhs`].
pub fn four_term_identity_check(n: u32, k: u32, l: u32, m: u32) -> Result<BigRational> {
    if n < 1 || k < 1 || l < 1 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "four-term identity needs positive arguments, got ({n},{k},{l},{m})"
        )));
    }
    let t = hermite_table((n + k + l + m) as usize);
    let lhs = wronskian(&[
        t[n as usize].clone(),
        t[(n + k) as usize].clone(),
        t[(n + k + l) as usize].clone(),
        t[(n + k + l + m) as usize].clone(),
    ]);
    lhs.proportionality(&four_term_rhs(n, k, l, m))
        .ok_or(Error::NotProportional)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::wronskian::from_i64;
    use crate::polyalg::{hermite, wronskian_cofactor};

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn duality_constants() {
        assert_eq!(check_duality(&"1".parse().unwrap()).unwrap(), rat(1));
        assert_eq!(check_duality(&"2".parse().unwrap()).unwrap(), rat(-2));
        // self-conjugate: both sides are multiples of z^3
        let c = check_duality(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(c, rat(1));
        assert!(check_duality(&"5/2".parse().unwrap()).is_err());
    }

    #[test]
    fn three_term_hand_values() {
        assert_eq!(three_term_rhs(1, 1, 1), from_i64(&[8]));
        assert_eq!(three_term_identity_check(1, 1, 1).unwrap(), rat(2));
        assert_eq!(three_term_rhs(2, 1, 1), from_i64(&[0, 96, 0, 64]));
        assert_eq!(three_term_identity_check(2, 1, 1).unwrap(), rat(2));
    }

    #[test]
    fn three_term_against_cofactor_oracle() {
        // (n,k,l) = (3,1,2): W(H_2, H_3, H_5) by the oracle
        let lhs = wronskian_cofactor(&[hermite(2), hermite(3), hermite(5)]);
        let c = lhs.proportionality(&three_term_rhs(3, 1, 2)).unwrap();
        assert_eq!(three_term_identity_check(3, 1, 2).unwrap(), c);
        assert_eq!(c, rat(2));
    }

    #[test]
    fn four_term_against_cofactor_oracle() {
        for &(n, k, l, m) in &[(1, 1, 1, 1), (2, 1, 1, 1), (3, 2, 1, 2)] {
            let lhs = wronskian_cofactor(&[
                hermite(n),
                hermite(n + k),
                hermite(n + k + l),
                hermite(n + k + l + m),
            ]);
            let c = lhs
                .proportionality(&four_term_rhs(n as u32, k as u32, l as u32, m as u32))
                .unwrap();
            assert_eq!(
                four_term_identity_check(n as u32, k as u32, l as u32, m as u32).unwrap(),
                c
            );
            assert_eq!(c, rat(4));
        }
    }

    #[test]
    fn equal_steps_give_three_to_one() {
        for k in 1..6 {
            let c = FourTermCoefficients::new(k, k, k);
            assert_eq!(c.outer, 3 * (k as u64).pow(2));
            assert_eq!(c.crossed, (k as u64).pow(2));
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(three_term_identity_check(1, 2, 1).is_err());
        assert!(three_term_identity_check(3, 0, 1).is_err());
        assert!(four_term_identity_check(1, 0, 1, 1).is_err());
    }
}

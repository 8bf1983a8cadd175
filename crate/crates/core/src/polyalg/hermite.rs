use num_bigint::BigInt;

use crate::BigPoly;

/// Physicists' Hermite polynomial `H_n`, leading coefficient `2^n`, from
/// `H_{n+1} = 2x H_n - 2n H_{n-1}`.
pub fn hermite(n: usize) -> BigPoly {
    hermite_table(n).pop().expect("table holds n + 1 entries")
}

/// `[H_0, ..., H_max]`.
pub fn hermite_table(max: usize) -> Vec<BigPoly> {
    let mut table = Vec::with_capacity(max + 1);
    table.push(BigPoly::one());
    if max == 0 {
        return table;
    }
    table.push(BigPoly::monomial(BigInt::from(2), 1));
    for k in 1..max {
        let two_x_h = table[k].shift(1).scale(&BigInt::from(2));
        let prev = table[k - 1].scale(&BigInt::from(2 * k as u64));
        table.push(&two_x_h - &prev);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Parity;

    fn ip(c: &[i64]) -> BigPoly {
        BigPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn listed_polynomials() {
        assert_eq!(hermite(0), ip(&[1]));
        assert_eq!(hermite(1), ip(&[0, 2]));
        assert_eq!(hermite(2), ip(&[-2, 0, 4]));
        assert_eq!(hermite(3), ip(&[0, -12, 0, 8]));
        assert_eq!(hermite(4), ip(&[12, 0, -48, 0, 16]));
        assert_eq!(hermite(5), ip(&[0, 120, 0, -160, 0, 32]));
    }

    #[test]
    fn leading_coefficient_parity_and_derivative() {
        let table = hermite_table(30);
        for (n, h) in table.iter().enumerate() {
            assert_eq!(h.degree(), Some(n));
            assert_eq!(h.leading().unwrap(), &(BigInt::from(1) << n));
            let want = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
            assert_eq!(h.parity(), Some(want));
            if n > 0 {
                // H_n' = 2n H_{n-1}
                assert_eq!(h.derivative(), table[n - 1].scale(&BigInt::from(2 * n)));
            }
        }
    }
}

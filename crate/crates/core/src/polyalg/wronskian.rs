use super::hermite::hermite_table;
use crate::error::Result;
use crate::partition::Partition;
use crate::BigPoly;

/// Rows are derivative orders `0..n`, columns the functions in the order
/// given.
fn wronskian_matrix(fs: &[BigPoly]) -> Vec<Vec<BigPoly>> {
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    let mut current: Vec<BigPoly> = fs.to_vec();
    for r in 0..n {
        if r > 0 {
            current = current.iter().map(|f| f.derivative()).collect();
        }
        rows.push(current.clone());
    }
    rows
}

/// Wronskian determinant `det[f_c^(r)]`. Cofactor expansion for up to three
/// functions, fraction-free elimination beyond. The empty Wronskian is 1.
pub fn wronskian(fs: &[BigPoly]) -> BigPoly {
    if fs.len() <= 3 {
        wronskian_cofactor(fs)
    } else {
        wronskian_bareiss(fs)
    }
}

/// Wronskian by Laplace expansion along the first row.
pub fn wronskian_cofactor(fs: &[BigPoly]) -> BigPoly {
    determinant_cofactor(&wronskian_matrix(fs))
}

/// Wronskian by Bareiss elimination over `Z[z]`.
pub fn wronskian_bareiss(fs: &[BigPoly]) -> BigPoly {
    determinant_bareiss(wronskian_matrix(fs))
}

/// Determinant by recursive cofactor expansion. Exponential in the size;
/// kept as an independent cross-check for the elimination route.
pub fn determinant_cofactor(m: &[Vec<BigPoly>]) -> BigPoly {
    let n = m.len();
    match n {
        0 => return BigPoly::one(),
        1 => return m[0][0].clone(),
        2 => return &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {}
    }
    let mut det = BigPoly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &determinant_cofactor(&minor);
        det = if c % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

fn determinant_bareiss(mut m: Vec<Vec<BigPoly>>) -> BigPoly {
    let n = m.len();
    if n == 0 {
        return BigPoly::one();
    }
    let mut negate = false;
    let mut prev = BigPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigPoly::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact over an integral domain");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `W(H_{k_1}, ..., H_{k_n})` for the given Hermite degrees.
pub fn wronskian_of_indices(ks: &[u32]) -> BigPoly {
    let max = ks.iter().copied().max().unwrap_or(0) as usize;
    let table = hermite_table(max);
    let fs: Vec<BigPoly> = ks.iter().map(|&k| table[k as usize].clone()).collect();
    wronskian(&fs)
}

/// `W_λ(z) = W(H_{λ_1+n-1}, ..., H_{λ_n})`.
pub fn wronskian_of_partition(p: &Partition) -> Result<BigPoly> {
    let ks = p.degree_sequence().integer_indices()?;
    Ok(wronskian_of_indices(&ks))
}

#[cfg(test)]
pub(crate) fn from_i64(c: &[i64]) -> BigPoly {
    BigPoly::new(c.iter().map(|&v| num_bigint::BigInt::from(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::polyalg::hermite;

    fn w(s: &str) -> BigPoly {
        wronskian_of_partition(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn hand_determinants() {
        let h = hermite_table(2);
        assert_eq!(wronskian(&[h[2].clone(), h[1].clone()]), from_i64(&[-4, 0, -8]));
        assert_eq!(wronskian(&[h[1].clone(), h[2].clone()]), from_i64(&[4, 0, 8]));
        assert_eq!(wronskian(&h), from_i64(&[16]));
    }

    #[test]
    fn partition_wronskians() {
        assert_eq!(w("2,1"), from_i64(&[0, 0, 0, -32]));
        assert_eq!(w("1,1"), from_i64(&[-4, 0, -8]));
        assert_eq!(w("1"), from_i64(&[0, 2]));
        assert_eq!(w("2,2"), from_i64(&[-24, 0, 0, 0, -32]));
        assert_eq!(w("3,3"), from_i64(&[-144, 0, -288, 0, 192, 0, -128]));
        assert_eq!(w(""), BigPoly::one());
        assert!(wronskian_of_partition(&"3/2".parse().unwrap()).is_err());
    }

    #[test]
    fn single_and_repeated_arguments() {
        let h3 = hermite(3);
        assert_eq!(wronskian(std::slice::from_ref(&h3)), h3);
        assert!(wronskian(&[hermite(2), hermite(4), hermite(2)]).is_zero());
        let fs = [hermite(1), hermite(3), hermite(5), hermite(3)];
        assert!(wronskian(&fs).is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        for weight in 1..=9 {
            for lam in partitions_of(weight) {
                let ks = lam.degree_sequence().integer_indices().unwrap();
                let table = hermite_table(ks[0] as usize);
                let fs: Vec<BigPoly> = ks.iter().map(|&k| table[k as usize].clone()).collect();
                if fs.len() > 6 {
                    continue;
                }
                assert_eq!(wronskian_bareiss(&fs), wronskian_cofactor(&fs), "{lam}");
            }
        }
    }

    #[test]
    fn swapping_columns_flips_sign() {
        let fs = [hermite(0), hermite(2), hermite(5), hermite(6)];
        let swapped = [hermite(5), hermite(2), hermite(0), hermite(6)];
        assert_eq!(wronskian(&fs), -wronskian(&swapped));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // H_0 has a vanishing derivative, forcing row exchanges
        let fs = [hermite(1), hermite(0), hermite(3), hermite(2)];
        assert_eq!(wronskian_bareiss(&fs), wronskian_cofactor(&fs));
    }
}

//! Exact real-root counting over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::BigPoly;

/// Sturm chain of `p`, each remainder reduced to its primitive part with
/// the sign fixed so sign variations are preserved.
pub fn sturm_sequence(p: &BigPoly) -> Vec<BigPoly> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut seq = vec![p.clone(), p.derivative()];
    while let Some(last) = seq.last() {
        if last.is_zero() {
            seq.pop();
            break;
        }
        let prev = &seq[seq.len() - 2];
        let dprev = prev.degree().unwrap();
        let dlast = last.degree().unwrap();
        if dlast == 0 {
            break;
        }
        // prem = lc^(δ+1) * rem; the Sturm remainder is -rem
        let r = prev.pseudo_rem(last).expect("last is nonzero");
        let lc_negative = last.leading().unwrap().is_negative();
        let exponent_odd = (dprev - dlast + 1) % 2 == 1;
        let flip = !(lc_negative && exponent_odd);
        let next = if r.is_zero() {
            r
        } else {
            let c = r.content();
            let r = r.div_scalar_exact(&c).expect("content divides");
            if flip {
                -r
            } else {
                r
            }
        };
        seq.push(next);
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|s| *s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_at_pos_inf(p: &BigPoly) -> i8 {
    p.leading().map_or(0, sign)
}

fn sign_at_neg_inf(p: &BigPoly) -> i8 {
    let s = sign_at_pos_inf(p);
    if p.degree().unwrap_or(0) % 2 == 1 {
        -s
    } else {
        s
    }
}

fn sign_at_zero(p: &BigPoly) -> i8 {
    sign(&p.coeff(0))
}

/// Distinct real roots of a squarefree `p` in `(-inf, inf)`.
fn count_all(seq: &[BigPoly]) -> usize {
    variations(seq.iter().map(sign_at_neg_inf)) - variations(seq.iter().map(sign_at_pos_inf))
}

/// Distinct real roots in `(0, inf)`; requires `p(0) != 0`.
fn count_positive(seq: &[BigPoly]) -> usize {
    variations(seq.iter().map(sign_at_zero)) - variations(seq.iter().map(sign_at_pos_inf))
}

fn squarefree(p: &BigPoly) -> BigPoly {
    if p.certainly_squarefree() {
        p.primitive_part()
    } else {
        p.squarefree_part()
    }
}

/// Number of distinct real roots, counted on the exact squarefree part.
pub fn count_real_roots_exact(p: &BigPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(count_all(&sturm_sequence(&squarefree(p))))
}

/// Roots on the imaginary axis away from the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ImaginaryCount {
    pub total: usize,
    pub upper: usize,
}

/// Counts distinct roots `iy`, `y != 0`, of a polynomial with definite
/// parity by counting real roots of the real polynomial `q` with
/// `p(iy) = i^s q(y)`.
pub fn count_imaginary_roots_exact(p: &BigPoly) -> Result<ImaginaryCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (q, _) = p.on_imaginary_axis()?;
    let (_, q) = q.split_valuation().expect("q is nonzero");
    let seq = sturm_sequence(&squarefree(&q));
    Ok(ImaginaryCount { total: count_all(&seq), upper: count_positive(&seq) })
}

/// Exact certificate that every root away from the origin is simple:
/// `gcd(p, p')` must be a constant multiple of `z^max(m-1, 0)`. Returns the
/// flag and the degree of the gcd.
pub fn is_squarefree_away_from_origin(p: &BigPoly) -> Result<(bool, usize)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, q) = p.split_valuation().unwrap();
    if q.certainly_squarefree() {
        // gcd(z^m q, m z^(m-1) q + z^m q') = z^(m-1) when q is squarefree
        // and q(0) != 0
        return Ok((true, m.saturating_sub(1)));
    }
    let g = p.gcd(&p.derivative());
    let deg = g.degree().unwrap();
    let want = m.saturating_sub(1);
    Ok((deg == want && g.valuation() == Some(want), deg))
}

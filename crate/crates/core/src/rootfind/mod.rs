//! Certified multiprecision root finding and exact root-counting
//! certificates.
//!
//! The origin is split off exactly, repeated factors are separated by an
//! exact squarefree decomposition, and only squarefree factors reach the
//! numerical solver.

mod aberth;
mod sturm;
mod symmetry;

use rug::float::Round;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::MpPoly;
use crate::BigPoly;

pub use sturm::{
    count_imaginary_roots_exact, count_real_roots_exact, is_squarefree_away_from_origin,
    sturm_sequence, ImaginaryCount,
};
pub use symmetry::symmetrize_roots;

/// One root with its multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub z: Complex,
    pub mult: usize,
}

impl Root {
    pub fn to_f64(&self) -> (f64, f64) {
        (self.z.real().to_f64(), self.z.imag().to_f64())
    }
}

/// Zeros of a polynomial away from the origin, plus the exact origin
/// multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub label: Option<String>,
    pub degree: usize,
    pub origin_multiplicity: usize,
    pub precision_bits: u32,
    pub target_digits: u32,
    pub residual_bound: Float,
    pub roots: Vec<Root>,
}

/// Where a root sits relative to the axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootKind {
    Real,
    PureImaginary,
    Generic,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub real: usize,
    pub imaginary: usize,
    pub imaginary_upper: usize,
    pub generic: usize,
    pub generic_upper: usize,
}

impl RootSet {
    /// Tolerance for snapping onto the axes, `10^(-digits/2)` relative to
    /// `max(1, |z|)`.
    pub fn axis_tolerance(&self) -> f64 {
        10f64.powf(-(self.target_digits as f64) / 2.0)
    }

    pub fn kind(&self, root: &Root) -> RootKind {
        let (re, im) = root.to_f64();
        let tol = self.axis_tolerance() * re.hypot(im).max(1.0);
        if im.abs() <= tol {
            RootKind::Real
        } else if re.abs() <= tol {
            RootKind::PureImaginary
        } else {
            RootKind::Generic
        }
    }

    /// Counts of distinct roots by kind (multiplicities ignored).
    pub fn classify(&self) -> Classification {
        let mut c = Classification::default();
        for r in &self.roots {
            let upper = r.z.imag().is_sign_positive() && !r.z.imag().is_zero();
            match self.kind(r) {
                RootKind::Real => c.real += 1,
                RootKind::PureImaginary => {
                    c.imaginary += 1;
                    if upper {
                        c.imaginary_upper += 1;
                    }
                }
                RootKind::Generic => {
                    c.generic += 1;
                    if upper {
                        c.generic_upper += 1;
                    }
                }
            }
        }
        c
    }

    /// Roots with positive imaginary part, as `(x, y)` pairs.
    pub fn upper_half_f64(&self) -> Vec<(f64, f64)> {
        self.roots
            .iter()
            .filter(|r| self.kind(r) != RootKind::Real && r.z.imag().is_sign_positive())
            .map(Root::to_f64)
            .collect()
    }

    pub fn roots_f64(&self) -> Vec<(f64, f64)> {
        self.roots.iter().map(Root::to_f64).collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.origin_multiplicity + self.roots.iter().map(|r| r.mult).sum::<usize>()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let digits = self.target_digits as usize + 5;
        let roots: Vec<RootJson> = self
            .roots
            .iter()
            .map(|r| RootJson {
                re: fmt_float(r.z.real(), digits),
                im: fmt_float(r.z.imag(), digits),
                mult: r.mult,
            })
            .collect();
        serde_json::to_value(RootSetJson {
            partition: self.label.clone(),
            degree: self.degree,
            origin_multiplicity: self.origin_multiplicity,
            precision_bits: self.precision_bits,
            residual_bound: self.residual_bound.to_string_radix_round(10, Some(6), Round::Up),
            roots,
        })
        .expect("plain data serializes")
    }
}

fn fmt_float(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        "0".into()
    } else {
        f.to_string_radix(10, Some(digits))
    }
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    re: String,
    im: String,
    mult: usize,
}

#[derive(Serialize, Deserialize)]
struct RootSetJson {
    partition: Option<String>,
    degree: usize,
    origin_multiplicity: usize,
    precision_bits: u32,
    residual_bound: String,
    roots: Vec<RootJson>,
}

/// Splits `p = z^m q` with `q(0) != 0`.
pub fn deflate_origin(p: &BigPoly) -> Result<(usize, BigPoly)> {
    p.split_valuation().ok_or(Error::ZeroPolynomial)
}

/// All roots of `p` to `target_digits` significant digits.
///
/// Each squarefree factor is solved by Aberth-Ehrlich iteration started on
/// circles whose radii come from the Newton polygon of the coefficients
/// (equally spaced points, fixed phase offset); precision starts at
/// `max(256, bits/4)` and doubles up to 32 times that on failure.
pub fn find_roots(p: &BigPoly, target_digits: u32) -> Result<RootSet> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let (m, q) = deflate_origin(p)?;
    let mut roots = Vec::new();
    let mut precision_bits = 0;
    let factors = if q.certainly_squarefree() {
        vec![(q.primitive_part(), 1)]
    } else {
        q.squarefree_decomposition()
    };
    for (factor, mult) in factors {
        let solved = aberth::solve_squarefree(&factor, target_digits)?;
        precision_bits = precision_bits.max(solved.precision_bits);
        roots.extend(solved.roots.into_iter().map(|z| Root { z, mult }));
    }
    if precision_bits == 0 {
        precision_bits = aberth::Schedule::for_poly(p, target_digits).start;
    }
    let mut set = RootSet {
        label: None,
        degree,
        origin_multiplicity: m,
        precision_bits,
        target_digits,
        residual_bound: Float::with_val(64, 0),
        roots,
    };
    sort_roots(&mut set.roots);
    set.residual_bound = residual_bound(p, &set.roots, precision_bits);
    Ok(set)
}

/// Largest `|p(z)|` plus its rounding bound over the roots.
pub(crate) fn residual_bound(p: &BigPoly, roots: &[Root], precision_bits: u32) -> Float {
    let mp = MpPoly::new(p, precision_bits);
    let mut worst = Float::with_val(64, 0);
    for r in roots {
        let (v, err) = mp.eval_with_bound(&r.z);
        let total = Float::with_val_round(64, v.abs_ref(), Round::Up).0 + err;
        if total > worst {
            worst = total;
        }
    }
    worst
}

/// Deterministic order: by real part, then imaginary part.
pub(crate) fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| {
        a.z.real()
            .partial_cmp(b.z.real())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.z.imag().partial_cmp(b.z.imag()).unwrap_or(std::cmp::Ordering::Equal))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{hermite, wronskian_of_partition};
    use num_bigint::BigInt;

    fn ip(c: &[i64]) -> BigPoly {
        BigPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12
    }

    fn contains(rs: &RootSet, z: (f64, f64)) -> bool {
        rs.roots.iter().any(|r| close(r.to_f64(), z))
    }

    #[test]
    fn deflation() {
        assert_eq!(deflate_origin(&ip(&[0, 0, 0, -32])).unwrap(), (3, ip(&[-32])));
        assert_eq!(deflate_origin(&ip(&[-4, 0, -8])).unwrap(), (0, ip(&[-4, 0, -8])));
        assert_eq!(deflate_origin(&ip(&[0, 2])).unwrap(), (1, ip(&[2])));
        assert!(deflate_origin(&BigPoly::zero()).is_err());
    }

    #[test]
    fn quadratic_with_imaginary_roots() {
        let rs = find_roots(&ip(&[-4, 0, -8]), 30).unwrap();
        let h = 0.5f64.sqrt();
        assert_eq!(rs.roots.len(), 2);
        assert!(contains(&rs, (0.0, h)) && contains(&rs, (0.0, -h)));
        // exact check at high precision
        for r in &rs.roots {
            let want = Float::with_val(200, 0.5).sqrt();
            let err = Float::with_val(200, r.z.imag().clone().abs() - want).abs();
            assert!(err < 1e-30, "{err}");
        }
    }

    #[test]
    fn cube_roots_of_unity() {
        let rs = find_roots(&ip(&[-1, 0, 0, 1]), 30).unwrap();
        let s = 3f64.sqrt() / 2.0;
        assert!(contains(&rs, (1.0, 0.0)));
        assert!(contains(&rs, (-0.5, s)));
        assert!(contains(&rs, (-0.5, -s)));
    }

    #[test]
    fn real_pair() {
        let rs = find_roots(&ip(&[-2, 0, 4]), 30).unwrap();
        let h = 0.5f64.sqrt();
        assert!(contains(&rs, (h, 0.0)) && contains(&rs, (-h, 0.0)));
        assert_eq!(rs.classify().real, 2);
    }

    #[test]
    fn multiplicities_and_origin() {
        // z^2 (z^2 + 1)^2 (z - 3)
        let p = &(&ip(&[0, 0, 1]) * &(&ip(&[1, 0, 1]) * &ip(&[1, 0, 1]))) * &ip(&[-3, 1]);
        let rs = find_roots(&p, 25).unwrap();
        assert_eq!(rs.origin_multiplicity, 2);
        assert_eq!(rs.total_multiplicity(), 7);
        assert!(rs.roots.iter().any(|r| r.mult == 2 && close(r.to_f64(), (0.0, 1.0))));
        assert!(rs.roots.iter().any(|r| r.mult == 1 && close(r.to_f64(), (3.0, 0.0))));
    }

    #[test]
    fn triangular_partition_has_only_origin() {
        let p = wronskian_of_partition(&"3,2,1".parse().unwrap()).unwrap();
        let rs = find_roots(&p, 20).unwrap();
        assert_eq!(rs.origin_multiplicity, 6);
        assert!(rs.roots.is_empty());
    }

    #[test]
    fn hermite_roots_are_real_and_residual_is_small() {
        let p = hermite(20);
        let rs = find_roots(&p, 30).unwrap();
        assert_eq!(rs.total_multiplicity(), 20);
        assert_eq!(rs.classify().real, 20);
        let mp = MpPoly::new(&p, rs.precision_bits);
        for r in &rs.roots {
            let (v, _) = mp.eval_with_bound(&r.z);
            assert!(Float::with_val(64, v.abs_ref()) <= rs.residual_bound);
        }
    }

    #[test]
    fn json_shape() {
        let mut rs = find_roots(&ip(&[-4, 0, -8]), 20).unwrap();
        rs.label = Some("(1,1)".into());
        let v = rs.to_json_value();
        assert_eq!(v["partition"], "(1,1)");
        assert_eq!(v["degree"], 2);
        assert_eq!(v["origin_multiplicity"], 0);
        assert_eq!(v["roots"].as_array().unwrap().len(), 2);
        assert!(v["roots"][0]["re"].is_string());
        assert_eq!(v["roots"][0]["mult"], 1);
    }
}

use rug::{Assign, Complex, Float};

use super::{sort_roots, Root, RootSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Map {
    Conj,
    Neg,
    NegConj,
}

fn apply(map: Map, z: &Complex) -> Complex {
    let prec = z.prec();
    match map {
        Map::Conj => Complex::with_val(prec, z.conj_ref()),
        Map::Neg => Complex::with_val(prec, -z),
        Map::NegConj => {
            let c = Complex::with_val(prec, z.conj_ref());
            -c
        }
    }
}

fn dist2(a: &Complex, b: &Complex) -> Float {
    let d = Complex::with_val(a.prec(), a - b);
    Float::with_val(64, d.norm_ref())
}

fn scale(z: &Complex) -> f64 {
    let (re, im) = (z.real().to_f64(), z.imag().to_f64());
    re.hypot(im).max(1.0)
}

/// Makes a root set exactly closed under conjugation, and under negation
/// when `with_negation` is set (polynomials of definite parity).
///
/// Roots within `10^(-digits/2)` of an axis are snapped onto it. Each
/// remaining root is matched with the nearest unmatched root to each of its
/// images; a partner farther than ten times the residual tolerance
/// `10^(-digits)` (relative to `max(1, |z|)`) is a symmetry violation.
/// Matched orbits are replaced by the average of their members mapped back
/// onto one representative.
pub fn symmetrize_roots(rs: &RootSet, with_negation: bool) -> Result<RootSet> {
    let snap = rs.axis_tolerance();
    let matching = 10.0 * 10f64.powf(-(rs.target_digits as f64));
    let mut roots: Vec<Root> = rs.roots.clone();
    for r in roots.iter_mut() {
        let s = scale(&r.z);
        if r.z.imag().to_f64().abs() <= snap * s {
            r.z.mut_imag().assign(0);
        } else if r.z.real().to_f64().abs() <= snap * s {
            r.z.mut_real().assign(0);
        }
    }

    let maps: &[Map] = if with_negation {
        &[Map::Conj, Map::Neg, Map::NegConj]
    } else {
        &[Map::Conj]
    };
    let approx: Vec<(f64, f64)> = roots.iter().map(Root::to_f64).collect();
    let mut used = vec![false; roots.len()];
    let mut out = Vec::with_capacity(roots.len());
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let base = roots[i].z.clone();
        let s = scale(&base);
        let tol2 = Float::with_val(64, matching * s).square();
        let mut orbit: Vec<(Option<Map>, usize)> = vec![(None, i)];
        let mut seen: Vec<Complex> = vec![base.clone()];
        for &map in maps {
            let image = apply(map, &base);
            // the image coincides with an orbit member already (axis roots)
            if seen.contains(&image) {
                continue;
            }
            let (ix, iy) = (image.real().to_f64(), image.imag().to_f64());
            let partner = (0..roots.len())
                .filter(|&j| !used[j])
                .filter(|&j| (approx[j].0 - ix).abs() <= 1e-6 * s && (approx[j].1 - iy).abs() <= 1e-6 * s)
                .min_by(|&a, &b| {
                    dist2(&roots[a].z, &image)
                        .partial_cmp(&dist2(&roots[b].z, &image))
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
            let Some(j) = partner.filter(|&j| dist2(&roots[j].z, &image) <= tol2) else {
                return Err(Error::SymmetryViolation(format!(
                    "no partner for ({:.6e}, {:.6e}) under {map:?}",
                    base.real().to_f64(),
                    base.imag().to_f64()
                )));
            };
            if roots[j].mult != roots[i].mult {
                return Err(Error::SymmetryViolation(format!(
                    "multiplicity {} vs {} under {map:?}",
                    roots[i].mult, roots[j].mult
                )));
            }
            used[j] = true;
            seen.push(image);
            orbit.push((Some(map), j));
        }
        let mut rep = Complex::new(base.prec());
        for &(map, j) in &orbit {
            match map {
                None => rep += &roots[j].z,
                Some(m) => rep += apply(m, &roots[j].z),
            }
        }
        rep /= orbit.len() as u32;
        for &(map, _) in &orbit {
            let z = match map {
                None => rep.clone(),
                Some(m) => apply(m, &rep),
            };
            out.push(Root { z, mult: roots[i].mult });
        }
    }
    sort_roots(&mut out);
    let mut sym = rs.clone();
    sym.roots = out;
    Ok(sym)
}

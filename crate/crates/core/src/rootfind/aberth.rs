//! Aberth-Ehrlich simultaneous iteration at escalating precision.

use rug::float::Round;
use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::polyalg::MpPoly;
use crate::BigPoly;

/// Fixed angular offset of the starting circles. Any value that keeps the
/// starting set off the real-axis mirror symmetry works; this one is fixed
/// for reproducibility.
const PHASE_OFFSET: f64 = 0.7;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Schedule {
    pub start: u32,
    pub ceiling: u32,
}

impl Schedule {
    pub fn for_poly(p: &BigPoly, digits: u32) -> Self {
        let from_digits = (digits as f64 * LOG2_10).ceil() as u32 + 64;
        let start = 256.max((p.max_bits() / 4) as u32).max(from_digits);
        Self { start, ceiling: 32 * start }
    }
}

fn log2_abs(c: &num_bigint::BigInt) -> f64 {
    let f = Float::with_val(64, crate::polyalg::to_rug_integer(c));
    f.abs().log2().to_f64()
}

/// Starting points on circles read off the upper convex hull of
/// `(j, log2 |a_j|)`: each hull edge from `j` to `k` contributes `k - j`
/// points on a circle of radius `|a_j / a_k|^(1/(k - j))`.
pub(crate) fn initial_guesses(p: &BigPoly, prec: u32) -> Vec<Complex> {
    let n = p.degree().unwrap_or(0);
    let pts: Vec<(usize, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(j, c)| (j, log2_abs(c)))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &q in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly above the chord from a to q
            let cross = (b.0 - a.0) as f64 * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0) as f64;
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }
    let mut out = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let ((j, lj), (k, lk)) = (w[0], w[1]);
        let m = k - j;
        let r = ((lj - lk) / m as f64).exp2();
        let offset = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + PHASE_OFFSET;
        for i in 0..m {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / m as f64 + offset;
            out.push(Complex::with_val(prec, (r * theta.cos(), r * theta.sin())));
        }
    }
    out
}

fn scale_of(z: &Complex) -> Float {
    let n = Float::with_val(64, z.norm_ref());
    if n < 1 {
        Float::with_val(64, 1)
    } else {
        n
    }
}

/// `|w|^2 <= eps^2 max(1, |z|^2)`.
fn small_step(w: &Complex, z: &Complex, eps2: &Float) -> bool {
    let wn = Float::with_val(64, w.norm_ref());
    wn <= Float::with_val(64, eps2 * scale_of(z))
}

struct Outcome {
    roots: Vec<Complex>,
    converged: bool,
}

fn iterate(mp: &MpPoly, mut z: Vec<Complex>, prec: u32, eps2: &Float, max_iter: usize) -> Outcome {
    let n = z.len();
    for zi in z.iter_mut() {
        zi.set_prec(prec);
    }
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = mp.eval_with_derivative(&z[i]);
            // the value is indistinguishable from rounding noise: this
            // precision cannot locate the root any better
            let noise = mp.rounding_bound(&z[i]);
            if Float::with_val(64, p.abs_ref()) <= noise {
                done[i] = true;
                continue;
            }
            if dp.real().is_zero() && dp.imag().is_zero() {
                // stationary point: nudge and retry next sweep
                z[i] *= Complex::with_val(prec, (1.0, 1e-3));
                continue;
            }
            let ratio = Complex::with_val(prec, &p / &dp);
            let mut s = Complex::new(prec);
            for j in 0..n {
                if j != i {
                    let d = Complex::with_val(prec, &z[i] - &z[j]);
                    s += d.recip();
                }
            }
            let denom = Complex::with_val(prec, 1) - Complex::with_val(prec, &ratio * &s);
            let w = ratio / denom;
            if !w.real().is_finite() || !w.imag().is_finite() {
                z[i] *= Complex::with_val(prec, (1.0, 1e-3));
                continue;
            }
            z[i] -= &w;
            if small_step(&w, &z[i], eps2) {
                done[i] = true;
            }
        }
        if done.iter().all(|d| *d) {
            return Outcome { roots: z, converged: true };
        }
    }
    Outcome { roots: z, converged: false }
}

/// Newton corrections on `f` at each root; returns the largest correction
/// relative to `max(1, |z|)`, after applying up to `steps` corrections.
fn polish(mp: &MpPoly, z: &mut [Complex], prec: u32, steps: usize) -> Float {
    let mut worst = Float::with_val(64, 0);
    for zi in z.iter_mut() {
        zi.set_prec(prec);
        let mut rel = Float::with_val(64, f64::INFINITY);
        for _ in 0..steps.max(1) {
            let (p, dp) = mp.eval_with_derivative(zi);
            if p.real().is_zero() && p.imag().is_zero() {
                rel = Float::with_val(64, 0);
                break;
            }
            let w = Complex::with_val(prec, &p / &dp);
            rel = Float::with_val(64, w.norm_ref()) / scale_of(zi);
            *zi -= &w;
        }
        let rel = rel.sqrt();
        if rel > worst {
            worst = rel;
        }
    }
    worst
}

/// Result of a squarefree solve.
pub(crate) struct Solved {
    pub roots: Vec<Complex>,
    pub precision_bits: u32,
}

/// Roots of a squarefree polynomial with `f(0) != 0`. Even polynomials are
/// solved in `t = z^2` and lifted back with both square roots.
pub(crate) fn solve_squarefree(f: &BigPoly, digits: u32) -> Result<Solved> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(Solved { roots: Vec::new(), precision_bits: 0 });
    }
    let even = f.parity() == Some(crate::Parity::Even);
    let reduced = if even { f.even_to_square()? } else { f.clone() };
    let schedule = Schedule::for_poly(f, digits);
    let eps_log2 = -(digits as f64 * LOG2_10);
    let max_iter = 500 + 5 * deg;

    let mut prec = schedule.start;
    let mut guesses = initial_guesses(&reduced, prec);
    let mut last_achieved;
    loop {
        let eps2 = Float::with_val(64, 2.0 * eps_log2).exp2();
        let mp_reduced = MpPoly::with_precision(&reduced, prec);
        let out = iterate(&mp_reduced, guesses, prec, &eps2, max_iter);
        let mut roots: Vec<Complex> = if even {
            out.roots
                .iter()
                .flat_map(|t| {
                    let s = Complex::with_val(prec, t.sqrt_ref());
                    let neg = Complex::with_val(prec, -&s);
                    [s, neg]
                })
                .collect()
        } else {
            out.roots.clone()
        };
        let mp = MpPoly::with_precision(f, prec);
        let achieved = polish(&mp, &mut roots, prec, 2);
        let eps = Float::with_val(64, eps_log2).exp2();
        if out.converged && achieved < eps && distinct(&roots, prec) {
            return Ok(Solved { roots, precision_bits: prec });
        }
        last_achieved = achieved;
        if prec * 2 > schedule.ceiling {
            break;
        }
        prec *= 2;
        guesses = out.roots;
    }
    Err(Error::NoConvergence {
        achieved: last_achieved.to_string_radix_round(10, Some(6), Round::Up),
        precision_bits: prec,
    })
}

/// Guards against two iterates collapsing onto one root of a squarefree
/// polynomial.
fn distinct(roots: &[Complex], prec: u32) -> bool {
    let tiny = Float::with_val(64, -(prec as f64) / 2.0).exp2();
    let mut approx: Vec<(f64, f64, usize)> = roots
        .iter()
        .enumerate()
        .map(|(i, z)| (z.real().to_f64(), z.imag().to_f64(), i))
        .collect();
    approx.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    for w in approx.windows(2) {
        if (w[0].0 - w[1].0).abs() < 1e-12 && (w[0].1 - w[1].1).abs() < 1e-12 {
            let d = Complex::with_val(prec, &roots[w[0].2] - &roots[w[1].2]);
            if Float::with_val(64, d.norm_ref()) < tiny {
                return false;
            }
        }
    }
    true
}

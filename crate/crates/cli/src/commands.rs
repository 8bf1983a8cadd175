use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use hermite_wronskian::asympt::{
    curve_csv, curve_fit_report, real_zero_asymptotes, sample_curve, semicircle_ks, wigner_cdf,
    Branch, CurveSpec, Family, Window,
};
use hermite_wronskian::conjecture::{self, Check, ConjectureReport, FamilySpec};
use hermite_wronskian::polyalg::{wronskian_of_indices, wronskian_of_partition};
use hermite_wronskian::rootfind::{
    count_imaginary_roots_exact, count_real_roots_exact, find_roots, symmetrize_roots, RootKind,
    RootSet,
};
use hermite_wronskian::{BigPoly, Convention, DegreeSequence, Parity, Partition};
use serde_json::json;

use crate::output::{partition_slug, Outputs};
use crate::svg::{self, Layout, Panel, Series};
use crate::{CurvesArgs, ScanArgs};

fn outputs(dir: &Path, stem: Option<String>, default: String) -> Result<Outputs> {
    Outputs::new(dir, stem.unwrap_or(default))
}

fn parity_name(p: &BigPoly) -> &'static str {
    match p.parity() {
        Some(Parity::Even) => "even",
        Some(Parity::Odd) => "odd",
        None => "none",
    }
}

fn json_text(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Finds and symmetrizes the zeros of `p`.
fn solve(p: &BigPoly, label: String, digits: u32) -> Result<RootSet> {
    let mut rs = find_roots(p, digits).with_context(|| format!("solving {label}"))?;
    rs.label = Some(label);
    Ok(symmetrize_roots(&rs, p.parity().is_some())?)
}

fn print_roots_summary(rs: &RootSet) {
    let c = rs.classify();
    println!("degree {}", rs.degree);
    println!("origin multiplicity {}", rs.origin_multiplicity);
    println!("precision bits {}", rs.precision_bits);
    println!("residual bound {:e}", rs.residual_bound.to_f64());
    println!(
        "distinct roots away from 0: {} real, {} imaginary ({} upper), {} generic ({} upper)",
        c.real, c.imaginary, c.imaginary_upper, c.generic, c.generic_upper
    );
}

fn roots_panel(title: String, rs: &RootSet) -> Panel {
    let mut pts = rs.roots_f64();
    if rs.origin_multiplicity > 0 {
        pts.push((0.0, 0.0));
    }
    let mut panel = Panel::new(title, Layout::Square);
    panel.push(Series::dots(pts, "black"));
    panel
}

pub fn wronskian(dir: &Path, stem: Option<String>, lam: &Partition) -> Result<ExitCode> {
    let w = wronskian_of_partition(lam)?;
    let degree = w.degree().context("W vanishes identically")?;
    let m = w.valuation().unwrap_or(0);
    println!("W_{lam} = {w}");
    println!("degree {degree}");
    println!("parity {}", parity_name(&w));
    println!("origin multiplicity {m}");
    let coeffs: Vec<String> = w.coeffs().iter().map(|c| c.to_string()).collect();
    let doc = json!({
        "partition": lam.to_string(),
        "degree": degree,
        "parity": parity_name(&w),
        "origin_multiplicity": m,
        "coeffs": coeffs,
    });
    let out = outputs(dir, stem, format!("wronskian-{}", partition_slug(lam)))?;
    out.write(".json", &json_text(&doc)?)?;
    Ok(ExitCode::SUCCESS)
}

pub fn roots(dir: &Path, stem: Option<String>, lam: &Partition, digits: u32, certify: bool) -> Result<ExitCode> {
    let w = wronskian_of_partition(lam)?;
    let rs = solve(&w, lam.to_string(), digits)?;
    print_roots_summary(&rs);
    if certify {
        println!("exact real roots {}", count_real_roots_exact(&w)?);
        let im = count_imaginary_roots_exact(&w)?;
        println!("exact imaginary roots {} ({} upper)", im.total, im.upper);
    }
    let out = outputs(dir, stem, format!("roots-{}", partition_slug(lam)))?;
    out.write(".json", &json_text(&rs.to_json_value())?)?;
    out.write(".svg", &svg::render(&[roots_panel(format!("zeros of W_{lam}"), &rs)]))?;
    Ok(ExitCode::SUCCESS)
}

/// Least-squares scale `s` minimizing `sum (s r_i - ρ_i)²` over the radii
/// of diagram points and zeros, paired by rank.
fn fitted_scale(diagram: &[(f64, f64)], zeros: &[(f64, f64)]) -> Option<f64> {
    let radii = |v: &[(f64, f64)]| {
        let mut r: Vec<f64> = v.iter().map(|p| p.0.hypot(p.1)).collect();
        r.sort_by(f64::total_cmp);
        r
    };
    let (a, b) = (radii(diagram), radii(zeros));
    let (num, den) = a.iter().zip(&b).fold((0.0, 0.0), |(n, d), (r, rho)| (n + r * rho, d + r * r));
    (den > 0.0).then(|| num / den)
}

pub fn overlay(
    dir: &Path,
    stem: Option<String>,
    lam: &Partition,
    doubled: bool,
    superimpose: bool,
    digits: u32,
) -> Result<ExitCode> {
    let (nu, convention) = if doubled {
        (lam.doubled(), Convention::FourQuadrant)
    } else {
        (lam.clone(), Convention::French)
    };
    let diagram = lam.diagram_points(convention);
    let w = wronskian_of_partition(&nu)?;
    let rs = solve(&w, nu.to_string(), digits)?;
    print_roots_summary(&rs);
    let mut zeros = rs.roots_f64();
    let zero_pts: Vec<(f64, f64)> = rs
        .roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.to_f64(), r.mult))
        .chain(std::iter::repeat_n((0.0, 0.0), rs.origin_multiplicity))
        .collect();
    if rs.origin_multiplicity > 0 {
        zeros.push((0.0, 0.0));
    }
    let bullets = diagram.to_f64();
    let panels = if superimpose {
        let s = fitted_scale(&bullets, &zero_pts).context("empty diagram")?;
        println!("fitted scale {s}");
        let mut panel = Panel::new(format!("W_{nu} zeros with diagram of {lam} scaled by {s:.4}"), Layout::Square);
        panel.push(Series::dots(bullets.iter().map(|&(x, y)| (s * x, s * y)).collect(), "#d33"));
        panel.push(Series::dots(zeros, "black"));
        vec![panel]
    } else {
        let mut left = Panel::new(format!("diagram of {lam}"), Layout::Square);
        left.push(Series::dots(bullets, "#d33"));
        let mut right = Panel::new(format!("zeros of W_{nu}"), Layout::Square);
        right.push(Series::dots(zeros, "black"));
        vec![left, right]
    };
    let prefix = if doubled { "overlay-doubled" } else { "overlay" };
    let out = outputs(dir, stem, format!("{prefix}-{}", partition_slug(lam)))?;
    out.write(".svg", &svg::render(&panels))?;
    out.write("-diagram.csv", &diagram.to_csv())?;
    out.write("-roots.json", &json_text(&rs.to_json_value())?)?;
    Ok(ExitCode::SUCCESS)
}

/// Partition label of a set of Hermite indices given in any order.
fn label_of_indices(ks: &[u32]) -> Result<String> {
    let mut desc = ks.to_vec();
    desc.sort_unstable_by(|a, b| b.cmp(a));
    Ok(DegreeSequence::from_indices(desc)?.to_partition()?.to_string())
}

pub fn curves(dir: &Path, stem: Option<String>, args: &CurvesArgs) -> Result<ExitCode> {
    let (family, k, tag) = if args.two_term {
        (Family::TwoTerm, args.k, "two-term")
    } else if args.three_term {
        (Family::ThreeTerm, args.k, "three-term")
    } else if args.four_equal {
        (Family::FourTermEqual, args.k, "four-equal")
    } else {
        (Family::FourTermDoubled, args.l.context("--four-doubled needs -l")?, "four-doubled")
    };
    let spec = CurveSpec::new(family, args.n, k)?;
    let window = Window { a: args.window_a, b: args.window_b };
    let ks = spec.indices();
    let name = format!(
        "W({})",
        ks.iter().map(|k| format!("H_{k}")).collect::<Vec<_>>().join(",")
    );
    println!("{name}, partition {}", label_of_indices(&ks)?);
    let w = wronskian_of_indices(&ks);
    let rs = solve(&w, label_of_indices(&ks)?, args.precision.digits)?;
    print_roots_summary(&rs);
    let points = sample_curve(&spec, args.samples, window.a)?;
    let report = curve_fit_report(&rs, &spec, window)?;
    println!(
        "fit: {} roots in window, {} unmatched, median rel dev {:.4}, max {:.4}, within 20%: {:.3}",
        report.in_window,
        report.unmatched,
        report.median_rel_dev,
        report.max_rel_dev,
        report.fraction_within(0.2)
    );
    for b in &report.branches {
        println!("  branch {:?}: {} roots, median {:?}", b.branch, b.count, b.median_rel_dev);
    }
    if family == Family::TwoTerm {
        let predicted: Vec<f64> = real_zero_asymptotes(args.n, k);
        let mut real: Vec<f64> = rs
            .roots
            .iter()
            .filter(|r| rs.kind(r) == RootKind::Real)
            .map(|r| r.to_f64().0)
            .collect();
        real.sort_by(|a, b| b.total_cmp(a));
        println!("real zeros {real:?}");
        println!("predicted  {predicted:?}");
    }

    let mut panel = Panel::new(name.clone(), Layout::Centred);
    panel.push(Series::dots(rs.roots_f64(), "black"));
    for (branch, color) in [(Branch::Single, "#d33"), (Branch::Mid, "#d33"), (Branch::Out, "#36c")] {
        // split at gaps so that singular points are not bridged
        let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
        let step = 2.0 * window.a * spec.half_width() / (args.samples.max(2) - 1) as f64;
        for p in points.iter().filter(|p| p.branch == branch) {
            match runs.last_mut() {
                Some(run) if (p.x - run.last().unwrap().0) <= 1.5 * step => run.push((p.x, p.y)),
                _ => runs.push(vec![(p.x, p.y)]),
            }
        }
        for run in runs {
            for half in svg::mirrored(&run) {
                panel.push(Series::line(half, color));
            }
        }
    }
    let out = outputs(dir, stem, format!("curves-{tag}-n{}-{}{k}", args.n, if family == Family::FourTermDoubled { "l" } else { "k" }))?;
    out.write(".csv", &curve_csv(&points))?;
    out.write("-fit.json", &json_text(&report)?)?;
    out.write("-roots.json", &json_text(&rs.to_json_value())?)?;
    out.write(".svg", &svg::render(&[panel]))?;
    Ok(ExitCode::SUCCESS)
}

pub fn scan(dir: &Path, stem: Option<String>, args: &ScanArgs) -> Result<ExitCode> {
    let (reports, default_stem) = if args.conjecture1 {
        let r = conjecture::scan(&FamilySpec::AllUpToWeight { max_weight: args.max_weight })?;
        (r, format!("scan-conjecture1-w{}", args.max_weight))
    } else {
        let mut r = conjecture::scan(&FamilySpec::DistinctMu { max_part: args.max_part, max_len: args.max_len })?;
        let extra = FamilySpec::Explicit { check: Check::Doubled, partitions: args.mu.clone() };
        r.extend(conjecture::scan(&extra)?);
        (r, format!("scan-conjecture2-p{}-l{}", args.max_part, args.max_len))
    };
    let mut lines = String::new();
    for r in &reports {
        lines.push_str(&r.to_json_line());
        lines.push('\n');
    }
    let out = outputs(dir, stem, default_stem)?;
    out.write(".jsonl", &lines)?;

    let formula_failures: Vec<&ConjectureReport> = reports.iter().filter(|r| !r.origin_formula_holds()).collect();
    let violations: Vec<&ConjectureReport> = reports.iter().filter(|r| r.is_violation()).collect();
    let total_reading = reports
        .iter()
        .filter_map(|r| r.doubled)
        .filter(|d| d.total_reading)
        .count();
    println!("{} partitions checked", reports.len());
    if args.conjecture2 {
        println!(
            "pair reading holds in {} cases, total reading in {total_reading}",
            reports.iter().filter_map(|r| r.doubled).filter(|d| d.pair_reading).count()
        );
    }
    for r in &violations {
        eprintln!("VIOLATION {}: {}", r.partition, r.violations().join("; "));
    }
    if violations.is_empty() {
        println!("no violations");
    }
    if !formula_failures.is_empty() {
        bail!("{} origin multiplicity formula failures", formula_failures.len());
    }
    Ok(ExitCode::SUCCESS)
}

pub fn semicircle(dir: &Path, stem: Option<String>, n: u32, k: u32, bins: usize, digits: u32) -> Result<ExitCode> {
    if n == 0 || bins == 0 {
        bail!("n and bins must be positive");
    }
    let ks = [n, n + k];
    let w = wronskian_of_indices(&ks);
    let rs = solve(&w, label_of_indices(&ks)?, digits)?;
    let ks_value = semicircle_ks(&rs, n)?;
    let scale = (2.0 * n as f64).sqrt();
    let mut us: Vec<f64> = rs.upper_half_f64().iter().map(|z| z.0 / scale).collect();
    us.sort_by(f64::total_cmp);
    println!("{} upper half-plane zeros, KS distance {ks_value:.6}", us.len());

    let width = 2.0 / bins as f64;
    let mut csv = String::from("lo,hi,count,empirical_density,semicircle_density\n");
    for b in 0..bins {
        let lo = -1.0 + b as f64 * width;
        let hi = lo + width;
        let count = us.iter().filter(|&&u| u >= lo && (u < hi || (b + 1 == bins && u <= hi))).count();
        let emp = count as f64 / (us.len() as f64 * width);
        let limit = (wigner_cdf(hi.min(1.0))? - wigner_cdf(lo.max(-1.0))?) / width;
        csv.push_str(&format!("{lo},{hi},{count},{emp},{limit}\n"));
    }
    let doc = json!({ "n": n, "k": k, "count": us.len(), "ks": ks_value });

    let mut panel = Panel::new(format!("semicircle law, W(H_{n},H_{})", n + k), Layout::Fit);
    let step: Vec<(f64, f64)> = us
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| [(u, i as f64 / us.len() as f64), (u, (i + 1) as f64 / us.len() as f64)])
        .collect();
    let limit: Vec<(f64, f64)> = (0..=200)
        .map(|i| {
            let u = -1.0 + i as f64 / 100.0;
            (u, wigner_cdf(u).unwrap_or(0.0))
        })
        .collect();
    panel.push(Series::line(limit, "#d33"));
    panel.push(Series::line(step, "black"));

    let out = outputs(dir, stem, format!("semicircle-n{n}-k{k}"))?;
    out.write(".csv", &csv)?;
    out.write(".json", &json_text(&doc)?)?;
    out.write(".svg", &svg::render(&[panel]))?;
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_fit_recovers_a_dilation() {
        let d = [(1.0, 0.0), (0.0, 2.0), (3.0, 4.0)];
        let z: Vec<(f64, f64)> = d.iter().map(|&(x, y)| (0.5 * y, 0.5 * x)).collect();
        assert!((fitted_scale(&d, &z).unwrap() - 0.5).abs() < 1e-12);
        assert!(fitted_scale(&[], &z).is_none());
    }
}

use serde::{Deserialize, Serialize};

use super::curves::{
    curve3, curve4_doubled_mid, curve4_doubled_out, curve4_mid, curve4_out, curve_unscaled_y,
};
use crate::error::{Error, Result};
use crate::rootfind::{RootKind, RootSet};

/// Which multi-term Wronskian a curve formula describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `W(H_n, H_{n+k})`
    TwoTerm,
    /// `W(H_n, H_{n+k}, H_{n+2k})`
    ThreeTerm,
    /// `W(H_n, H_{n+k}, H_{n+2k}, H_{n+3k})`
    FourTermEqual,
    /// `W(H_n, H_{n+1}, H_{n+l+1}, H_{n+l+2})`; `k` holds `l`
    FourTermDoubled,
}

/// A curve family with its parameters. For the doubled family `k` is the
/// gap `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub family: Family,
    pub n: u32,
    pub k: u32,
}

/// One predicted branch `|y| = f(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Single,
    Mid,
    Out,
}

impl CurveSpec {
    pub fn new(family: Family, n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidParameter("n and k must be positive".into()));
        }
        if family == Family::FourTermDoubled && k >= n {
            return Err(Error::InvalidParameter(format!("l = {k} must be below n = {n}")));
        }
        Ok(Self { family, n, k })
    }

    /// Hermite degrees whose Wronskian this family describes, in column
    /// order.
    pub fn indices(&self) -> Vec<u32> {
        let (n, k) = (self.n, self.k);
        match self.family {
            Family::TwoTerm => vec![n, n + k],
            Family::ThreeTerm => vec![n, n + k, n + 2 * k],
            Family::FourTermEqual => vec![n, n + k, n + 2 * k, n + 3 * k],
            Family::FourTermDoubled => vec![n, n + 1, n + k + 1, n + k + 2],
        }
    }

    pub fn branches(&self) -> &'static [Branch] {
        match self.family {
            Family::TwoTerm | Family::ThreeTerm => &[Branch::Single],
            Family::FourTermEqual | Family::FourTermDoubled => &[Branch::Mid, Branch::Out],
        }
    }

    /// Raw formula value of one branch at `x`; may be negative.
    pub fn eval(&self, branch: Branch, x: f64) -> Result<f64> {
        let (n, k) = (self.n, self.k);
        match (self.family, branch) {
            (Family::TwoTerm, Branch::Single) => curve_unscaled_y(x, n, k),
            (Family::ThreeTerm, Branch::Single) => curve3(x, n, k),
            (Family::FourTermEqual, Branch::Mid) => curve4_mid(x, n, k),
            (Family::FourTermEqual, Branch::Out) => curve4_out(x, n, k),
            (Family::FourTermDoubled, Branch::Mid) => curve4_doubled_mid(x, n, k),
            (Family::FourTermDoubled, Branch::Out) => curve4_doubled_out(x, n, k),
            _ => Err(Error::InvalidParameter(format!("{branch:?} is not a branch of {:?}", self.family))),
        }
    }

    /// Curve point of a branch at `x`, or `None` where the formula is
    /// singular, undefined or not positive.
    pub fn point(&self, branch: Branch, x: f64) -> Option<f64> {
        self.eval(branch, x).ok().filter(|y| y.is_finite() && *y > 0.0)
    }

    pub fn half_width(&self) -> f64 {
        (2.0 * self.n as f64).sqrt()
    }
}

/// A sampled curve point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub branch: Branch,
    pub x: f64,
    pub y: f64,
}

/// Samples every branch at `samples` equally spaced abscissae in
/// `[-a sqrt(2n), a sqrt(2n)]`, dropping points with no curve value.
pub fn sample_curve(spec: &CurveSpec, samples: usize, a: f64) -> Result<Vec<CurvePoint>> {
    if samples < 2 || !(a > 0.0 && a < 1.0) {
        return Err(Error::InvalidParameter("need at least 2 samples and 0 < a < 1".into()));
    }
    let r = a * spec.half_width();
    let mut out = Vec::new();
    for &branch in spec.branches() {
        for i in 0..samples {
            let x = -r + 2.0 * r * i as f64 / (samples - 1) as f64;
            if let Some(y) = spec.point(branch, x) {
                out.push(CurvePoint { branch, x, y });
            }
        }
    }
    Ok(out)
}

pub fn curve_csv(points: &[CurvePoint]) -> String {
    let mut s = String::from("branch,x,y\n");
    for p in points {
        let name = match p.branch {
            Branch::Single => "single",
            Branch::Mid => "mid",
            Branch::Out => "out",
        };
        s.push_str(&format!("{name},{},{}\n", p.x, p.y));
    }
    s
}

/// Comparison window `|x| <= a sqrt(2n)`, `y >= b`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub a: f64,
    pub b: f64,
}

impl Default for Window {
    fn default() -> Self {
        Self { a: 0.85, b: 0.1 }
    }
}

/// Deviation of one root from its nearest branch.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Deviation {
    pub x: f64,
    pub y: f64,
    /// `None` when no branch has a curve point at `x`.
    pub branch: Option<Branch>,
    pub curve_y: Option<f64>,
    pub rel_dev: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchStats {
    pub branch: Branch,
    pub count: usize,
    pub median_rel_dev: Option<f64>,
}

/// Statistics of the vertical deviations `|y - f(x)| / f(x)` of the upper
/// half-plane roots in a window from the nearest predicted branch.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitReport {
    pub spec: CurveSpec,
    pub window: Window,
    pub in_window: usize,
    /// roots at abscissae where no branch has a curve point
    pub unmatched: usize,
    /// over matched roots
    pub median_rel_dev: f64,
    pub max_rel_dev: f64,
    pub branches: Vec<BranchStats>,
    pub deviations: Vec<Deviation>,
}

impl FitReport {
    /// Fraction of in-window roots within `tol` relative deviation;
    /// unmatched roots count as outside.
    pub fn fraction_within(&self, tol: f64) -> f64 {
        let ok = self.deviations.iter().filter(|d| d.rel_dev.is_some_and(|r| r <= tol)).count();
        ok as f64 / self.in_window as f64
    }
}

fn median(mut v: Vec<f64>) -> Option<f64> {
    if v.is_empty() {
        return None;
    }
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    Some(if v.len() % 2 == 1 { v[m] } else { 0.5 * (v[m - 1] + v[m]) })
}

/// Fit report from plain `(x, y)` points; only points with `y > 0` are used.
pub fn fit_points(points: &[(f64, f64)], spec: &CurveSpec, window: Window) -> Result<FitReport> {
    if !(window.a > 0.0 && window.a < 1.0 && window.b > 0.0) {
        return Err(Error::InvalidParameter("window needs 0 < a < 1 and b > 0".into()));
    }
    let xmax = window.a * spec.half_width();
    let mut deviations = Vec::new();
    for &(x, y) in points {
        if !(y > 0.0 && y >= window.b && x.abs() <= xmax) {
            continue;
        }
        let nearest = spec
            .branches()
            .iter()
            .filter_map(|&b| spec.point(b, x).map(|c| (b, c)))
            .min_by(|p, q| (y - p.1).abs().total_cmp(&(y - q.1).abs()));
        deviations.push(match nearest {
            Some((b, c)) => Deviation {
                x,
                y,
                branch: Some(b),
                curve_y: Some(c),
                rel_dev: Some((y - c).abs() / c),
            },
            None => Deviation { x, y, branch: None, curve_y: None, rel_dev: None },
        });
    }
    if deviations.is_empty() {
        return Err(Error::Empty("no roots inside the comparison window".into()));
    }
    let matched: Vec<f64> = deviations.iter().filter_map(|d| d.rel_dev).collect();
    let branches = spec
        .branches()
        .iter()
        .map(|&b| {
            let devs: Vec<f64> =
                deviations.iter().filter(|d| d.branch == Some(b)).filter_map(|d| d.rel_dev).collect();
            BranchStats { branch: b, count: devs.len(), median_rel_dev: median(devs) }
        })
        .collect();
    Ok(FitReport {
        spec: *spec,
        window,
        in_window: deviations.len(),
        unmatched: deviations.len() - matched.len(),
        median_rel_dev: median(matched.clone()).unwrap_or(f64::INFINITY),
        max_rel_dev: matched.iter().copied().fold(0.0, f64::max),
        branches,
        deviations,
    })
}

/// Fit report for the non-real upper half-plane roots of a root set.
pub fn curve_fit_report(rs: &RootSet, spec: &CurveSpec, window: Window) -> Result<FitReport> {
    let pts: Vec<(f64, f64)> = rs
        .roots
        .iter()
        .filter(|r| rs.kind(r) != RootKind::Real)
        .map(|r| r.to_f64())
        .collect();
    fit_points(&pts, spec, window)
}

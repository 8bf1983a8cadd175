//! Exact checks of the simplicity conjecture (all zeros away from the
//! origin are simple) and of the doubled-partition conjecture (no real
//! zeros, pure imaginary zeros counted by the odd parts), plus the
//! Brézin-Hikami integral cross-check.
//!
//! Every verdict comes from integer arithmetic: gcd certificates and Sturm
//! counts, never from numerical root classification.

mod brezin_hikami;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{distinct_partitions, partitions_of, Partition};
use crate::polyalg::wronskian_of_partition;
use crate::rootfind::{
    count_imaginary_roots_exact, count_real_roots_exact, is_squarefree_away_from_origin,
    ImaginaryCount,
};

pub use brezin_hikami::{brezin_hikami_poly, BrezinHikami};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Simplicity,
    Doubled,
}

/// Outcome of the doubled-partition conjecture under its two readings of
/// "as many pure imaginary roots".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoubledVerdict {
    pub no_real_roots: bool,
    /// upper half-plane imaginary roots equal the number of odd parts
    pub pair_reading: bool,
    /// all imaginary roots equal the number of odd parts
    pub total_reading: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub check: Check,
    pub partition: Partition,
    /// the distinct-part partition a doubled check was built from
    pub mu: Option<Partition>,
    pub degree: usize,
    pub origin_multiplicity_observed: usize,
    pub origin_multiplicity_formula: usize,
    pub squarefree_away_from_origin: bool,
    pub gcd_degree: usize,
    pub real_roots: usize,
    pub imaginary_roots: ImaginaryCount,
    pub odd_parts: Option<usize>,
    pub doubled: Option<DoubledVerdict>,
}

impl ConjectureReport {
    pub fn origin_formula_holds(&self) -> bool {
        self.origin_multiplicity_observed == self.origin_multiplicity_formula
    }

    /// Human-readable list of everything that contradicts the checked
    /// statement. The doubled check uses the pair reading; a failing total
    /// reading alone is not listed.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if !self.origin_formula_holds() {
            v.push(format!(
                "origin multiplicity {} differs from formula value {}",
                self.origin_multiplicity_observed, self.origin_multiplicity_formula
            ));
        }
        match self.check {
            Check::Simplicity => {
                if !self.squarefree_away_from_origin {
                    v.push(format!("repeated zero away from the origin (gcd degree {})", self.gcd_degree));
                }
            }
            Check::Doubled => {
                let d = self.doubled.expect("doubled checks carry a verdict");
                if !d.no_real_roots {
                    v.push(format!("{} real roots", self.real_roots));
                }
                if !d.pair_reading {
                    v.push(format!(
                        "{} upper half-plane imaginary roots but {} odd parts",
                        self.imaginary_roots.upper,
                        self.odd_parts.unwrap_or(0)
                    ));
                }
            }
        }
        v
    }

    pub fn is_violation(&self) -> bool {
        !self.violations().is_empty()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

fn base_report(check: Check, lam: &Partition) -> Result<ConjectureReport> {
    let w = wronskian_of_partition(lam)?;
    let degree = w.degree().ok_or(Error::ZeroPolynomial)?;
    let observed = w.valuation().ok_or(Error::ZeroPolynomial)?;
    let formula = lam.origin_multiplicity()? as usize;
    let (squarefree, gcd_degree) = is_squarefree_away_from_origin(&w)?;
    Ok(ConjectureReport {
        check,
        partition: lam.clone(),
        mu: None,
        degree,
        origin_multiplicity_observed: observed,
        origin_multiplicity_formula: formula,
        squarefree_away_from_origin: squarefree,
        gcd_degree,
        real_roots: count_real_roots_exact(&w)?,
        imaginary_roots: count_imaginary_roots_exact(&w)?,
        odd_parts: None,
        doubled: None,
    })
}

/// Exact simplicity certificate for `W_λ`.
pub fn check_simplicity(lam: &Partition) -> Result<ConjectureReport> {
    base_report(Check::Simplicity, lam)
}

/// Doubled-partition check for `ν = (μ_1, μ_1, μ_2, μ_2, ...)`.
pub fn check_doubled_conjecture(mu: &Partition) -> Result<ConjectureReport> {
    let parts = mu
        .integer_parts()
        .ok_or_else(|| Error::HalfIntegerPartition(mu.to_string()))?;
    if !mu.has_distinct_parts() {
        return Err(Error::RepeatedParts(mu.to_string()));
    }
    let nu = mu.repeated_twice();
    let mut report = base_report(Check::Doubled, &nu)?;
    let odd = parts.iter().filter(|p| *p % 2 == 1).count();
    report.mu = Some(mu.clone());
    report.odd_parts = Some(odd);
    report.doubled = Some(DoubledVerdict {
        no_real_roots: report.real_roots == 0,
        pair_reading: report.imaginary_roots.upper == odd,
        total_reading: report.imaginary_roots.total == odd,
    });
    Ok(report)
}

/// Enumerable families of partitions to scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// simplicity check for every nonempty integer partition with
    /// `|λ| <= max_weight`
    AllUpToWeight { max_weight: u32 },
    /// doubled check for every distinct-part `μ` with `μ_1 <= max_part` and
    /// at most `max_len` parts
    DistinctMu { max_part: u32, max_len: usize },
    /// the given partitions under one check
    Explicit { check: Check, partitions: Vec<Partition> },
}

impl FamilySpec {
    fn items(&self) -> (Check, Vec<Partition>) {
        match self {
            FamilySpec::AllUpToWeight { max_weight } => {
                (Check::Simplicity, (1..=*max_weight).flat_map(partitions_of).collect())
            }
            FamilySpec::DistinctMu { max_part, max_len } => {
                (Check::Doubled, distinct_partitions(*max_part, *max_len))
            }
            FamilySpec::Explicit { check, partitions } => (*check, partitions.clone()),
        }
    }
}

/// Runs the family's check on every member in parallel; reports come back
/// in enumeration order.
pub fn scan(family: &FamilySpec) -> Result<Vec<ConjectureReport>> {
    let (check, items) = family.items();
    items
        .par_iter()
        .map(|p| match check {
            Check::Simplicity => check_simplicity(p),
            Check::Doubled => check_doubled_conjecture(p),
        })
        .collect()
}

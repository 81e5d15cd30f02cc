//! Commutator columns `[B_f, B_g] zᵏ = B_f B_g zᵏ − B_g B_f zᵏ` and the
//! commutativity verdicts built on them.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::operator::slant_toeplitz_apply;
use crate::poly::AnalyticPoly;
use crate::scalar::{Rational, Scalar};
use crate::symbol::HarmonicSymbol;

/// `(B_f B_g − B_g B_f) zᵏ`, f first.
pub fn commutator_column<S: Scalar>(
    f: &HarmonicSymbol<S>,
    g: &HarmonicSymbol<S>,
    k: usize,
) -> AnalyticPoly<S> {
    let zk = AnalyticPoly::z_pow(k);
    let fg = slant_toeplitz_apply(f, &slant_toeplitz_apply(g, &zk));
    let gf = slant_toeplitz_apply(g, &slant_toeplitz_apply(f, &zk));
    fg - gf
}

/// A nonzero commutator entry: coefficient of `z^degree` in column `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S> {
    pub k: usize,
    pub degree: usize,
    pub value: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorReport<S> {
    pub f: HarmonicSymbol<S>,
    pub g: HarmonicSymbol<S>,
    pub k_max: usize,
    /// Smallest nonzero entry in lexicographic `(k, degree)` order.
    pub first_witness: Option<Witness<S>>,
    pub max_abs_entry: S,
}

impl<S: Scalar> CommutatorReport<S> {
    pub fn commutes_within_bound(&self) -> bool {
        self.first_witness.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "f": self.f.to_string(),
            "g": self.g.to_string(),
            "kMax": self.k_max,
            "witness": self.first_witness.as_ref().map(|w| json!({
                "k": w.k,
                "s": w.degree,
                "value": w.value.to_string(),
            })),
            "maxAbsEntry": self.max_abs_entry.to_string(),
        })
    }
}

fn column_summary<S: Scalar>(col: &AnalyticPoly<S>) -> (Option<(usize, S)>, S) {
    let first = col.terms().next().map(|(s, v)| (s, v.clone()));
    (first, col.max_abs_coeff())
}

fn assemble<S: Scalar>(
    f: &HarmonicSymbol<S>,
    g: &HarmonicSymbol<S>,
    k_max: usize,
    summaries: Vec<(Option<(usize, S)>, S)>,
) -> CommutatorReport<S> {
    let mut first_witness = None;
    let mut max_abs_entry = S::zero();
    for (k, (first, max)) in summaries.into_iter().enumerate() {
        if first_witness.is_none() {
            first_witness = first.map(|(degree, value)| Witness { k, degree, value });
        }
        if max > max_abs_entry {
            max_abs_entry = max;
        }
    }
    CommutatorReport { f: f.clone(), g: g.clone(), k_max, first_witness, max_abs_entry }
}

/// Scans the columns `k = 0..=k_max` on the current rayon pool. The result is
/// identical to [`scan_commutator_sequential`].
pub fn scan_commutator<S: Scalar>(
    f: &HarmonicSymbol<S>,
    g: &HarmonicSymbol<S>,
    k_max: usize,
) -> CommutatorReport<S> {
    let summaries = (0..=k_max)
        .into_par_iter()
        .map(|k| column_summary(&commutator_column(f, g, k)))
        .collect();
    assemble(f, g, k_max, summaries)
}

pub fn scan_commutator_sequential<S: Scalar>(
    f: &HarmonicSymbol<S>,
    g: &HarmonicSymbol<S>,
    k_max: usize,
) -> CommutatorReport<S> {
    let summaries = (0..=k_max)
        .map(|k| column_summary(&commutator_column(f, g, k)))
        .collect();
    assemble(f, g, k_max, summaries)
}

/// `2·(deg φ + deg ψ + 2N + 4)`, with `N` the larger co-analytic degree.
pub fn default_k_max<S: Scalar>(f: &HarmonicSymbol<S>, g: &HarmonicSymbol<S>) -> usize {
    let deg = |s: &HarmonicSymbol<S>| s.analytic_part().degree().unwrap_or(0);
    let n = f.coanalytic_degree().unwrap_or(0).max(g.coanalytic_degree().unwrap_or(0));
    2 * (deg(f) + deg(g) + 2 * n + 4)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Commute,
    NonCommuteWitness(Witness<Rational>),
    /// No nonzero entry up to `k_max`, yet the symbols do not satisfy the
    /// commuting condition.
    InconclusiveWithinBound { k_max: usize },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Commute => "Commute",
            Verdict::NonCommuteWitness(_) => "NonCommuteWitness",
            Verdict::InconclusiveWithinBound { .. } => "InconclusiveWithinBound",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerdictReport {
    pub verdict: Verdict,
    /// `c` with `f = c·g`, when one exists.
    pub factor: Option<Rational>,
    pub scan: CommutatorReport<Rational>,
}

impl VerdictReport {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict.label(),
            "factor": self.factor.as_ref().map(ToString::to_string),
            "report": self.scan.to_json(),
        })
    }
}

/// Decides `B_f B_g = B_g B_f` for `f = p̄ + φ`, `g = p̄ + ψ`.
///
/// `pbar` must be purely co-analytic with degree at least 1. A clean scan with
/// `φ ≠ ψ` is reported as inconclusive, never as commuting.
pub fn theorem_verdict(
    pbar: &HarmonicSymbol<Rational>,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    k_max: Option<usize>,
) -> Result<VerdictReport> {
    if !pbar.analytic_part().is_zero() {
        return Err(Error::PbarHasAnalyticPart(pbar.analytic_part().to_string()));
    }
    if pbar.coanalytic_degree().is_none() {
        return Err(Error::PbarTooSmall);
    }
    let f = pbar.add(&HarmonicSymbol::analytic(phi.clone()));
    let g = pbar.add(&HarmonicSymbol::analytic(psi.clone()));
    let k_max = k_max.unwrap_or_else(|| default_k_max(&f, &g));
    let scan = scan_commutator(&f, &g, k_max);
    let verdict = match &scan.first_witness {
        Some(w) => Verdict::NonCommuteWitness(w.clone()),
        None if phi == psi => Verdict::Commute,
        None => Verdict::InconclusiveWithinBound { k_max },
    };
    let factor = f.proportionality_to(&g);
    Ok(VerdictReport { verdict, factor, scan })
}

/// Decides commutativity for `f = a z̄ᴺ + φ`, `g = b z̄ᴺ + ψ`: a clean scan
/// counts as commuting only when `f` and `g` are proportional.
pub fn lemma_verdict(
    a: &Rational,
    b: &Rational,
    n: usize,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    k_max: Option<usize>,
) -> Result<VerdictReport> {
    if n == 0 {
        return Err(Error::PowerTooSmall);
    }
    let f = HarmonicSymbol::lemma_shape(a.clone(), n, phi);
    let g = HarmonicSymbol::lemma_shape(b.clone(), n, psi);
    let k_max = k_max.unwrap_or_else(|| default_k_max(&f, &g));
    let scan = scan_commutator(&f, &g, k_max);
    let factor = f.proportionality_to(&g);
    let proportional = factor.is_some() || g.proportionality_to(&f).is_some();
    let verdict = match &scan.first_witness {
        Some(w) => Verdict::NonCommuteWitness(w.clone()),
        None if proportional => Verdict::Commute,
        None => Verdict::InconclusiveWithinBound { k_max },
    };
    Ok(VerdictReport { verdict, factor, scan })
}

//! Audit of the identity evaluators against the operator engine.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::poly::AnalyticPoly;
use crate::scalar::Rational;

use super::{
    eval_harmonic, eval_linear, eval_power, harmonic_engine_sides, lemma_engine_sides, CoeffSide,
    Erratum, Parity, Reading,
};

/// Which family of identities to audit.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckTarget {
    /// `f = a z̄ + φ`, `g = z̄ + ψ`.
    Linear { a: Rational },
    /// `f = a z̄ᴺ + φ`, `g = z̄ᴺ + ψ`.
    Power { a: Rational, n: usize },
    /// `f = p̄ + φ`, `g = p̄ + ψ`, with `c = (c_0, …, c_N)`.
    Harmonic { c: Vec<Rational> },
}

impl CheckTarget {
    pub fn name(&self) -> String {
        match self {
            CheckTarget::Linear { .. } => "linear".into(),
            CheckTarget::Power { n, .. } => format!("power(N={n})"),
            CheckTarget::Harmonic { c } => format!("harmonic(N={})", c.len().saturating_sub(1)),
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn eval(
        &self,
        phi: &AnalyticPoly<Rational>,
        psi: &AnalyticPoly<Rational>,
        s: usize,
        k: usize,
        parity: Parity,
        reading: Reading,
    ) -> (CoeffSide, CoeffSide) {
        match self {
            CheckTarget::Linear { a } => eval_linear(a, phi, psi, s, k, parity),
            CheckTarget::Power { a, n } => eval_power(a, *n, phi, psi, s, k, parity, reading),
            CheckTarget::Harmonic { c } => {
                eval_harmonic(c, phi, psi, s, k, parity, reading).expect("N >= 1 checked on entry")
            }
        }
    }

    pub fn engine(
        &self,
        phi: &AnalyticPoly<Rational>,
        psi: &AnalyticPoly<Rational>,
        input_degree: usize,
    ) -> (AnalyticPoly<Rational>, AnalyticPoly<Rational>) {
        match self {
            CheckTarget::Linear { a } => lemma_engine_sides(a, 1, phi, psi, input_degree),
            CheckTarget::Power { a, n } => lemma_engine_sides(a, *n, phi, psi, input_degree),
            CheckTarget::Harmonic { c } => harmonic_engine_sides(c, phi, psi, input_degree),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// A side whose printed total differs from the engine coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub identity: String,
    pub s: usize,
    pub k: usize,
    pub parity: Parity,
    pub side: Side,
    pub printed: Rational,
    pub corrected: Rational,
    pub engine: Rational,
    pub errata: Vec<Erratum>,
    /// The corrected reading matches the engine and the printed one carries
    /// a known erratum.
    pub attributable: bool,
}

impl Discrepancy {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "s": self.s,
            "k": self.k,
            "parity": self.parity.name(),
            "side": self.side.name(),
            "printedValue": self.printed.to_string(),
            "correctedValue": self.corrected.to_string(),
            "engineValue": self.engine.to_string(),
            "errata": self.errata.iter().map(|e| e.name()).collect::<Vec<_>>(),
            "attributable": self.attributable,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheckReport {
    pub identity: String,
    pub s_max: usize,
    pub k_max: usize,
    /// Number of side comparisons made.
    pub checked: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// Sides where even the corrected reading misses the engine.
    pub corrected_mismatches: usize,
}

impl CrossCheckReport {
    pub fn unattributed(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies.iter().filter(|d| !d.attributable)
    }

    /// No unexplained printed mismatch and no corrected mismatch at all.
    pub fn clean(&self) -> bool {
        self.corrected_mismatches == 0 && self.unattributed().next().is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "sMax": self.s_max,
            "kMax": self.k_max,
            "checked": self.checked,
            "correctedMismatches": self.corrected_mismatches,
            "discrepancies": self.discrepancies.iter().map(Discrepancy::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Compares both readings of every side against the engine for all
/// `s ≤ s_max`, `k ≤ k_max` and both parities. Work fans out over `(k,
/// parity)`; the discrepancy list is ordered by `(k, parity, s, side)`.
pub fn cross_check(
    target: &CheckTarget,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    s_max: usize,
    k_max: usize,
) -> CrossCheckReport {
    if let CheckTarget::Harmonic { c } = target {
        assert!(c.len() >= 2, "harmonic target needs c_0..c_N with N >= 1");
    }
    let cases: Vec<(usize, Parity)> =
        (0..=k_max).flat_map(|k| Parity::BOTH.map(|p| (k, p))).collect();
    let identity = target.name();
    let per_case: Vec<(Vec<Discrepancy>, usize)> = cases
        .par_iter()
        .map(|&(k, parity)| {
            let (engine_left, engine_right) = target.engine(phi, psi, parity.input_degree(k));
            let mut found = Vec::new();
            let mut corrected_misses = 0;
            for s in 0..=s_max {
                let (pl, pr) = target.eval(phi, psi, s, k, parity, Reading::Printed);
                let (cl, cr) = target.eval(phi, psi, s, k, parity, Reading::Corrected);
                let sides = [
                    (Side::Left, pl, cl, engine_left.coeff(s)),
                    (Side::Right, pr, cr, engine_right.coeff(s)),
                ];
                for (side, printed, corrected, engine) in sides {
                    if corrected.total != engine {
                        corrected_misses += 1;
                    }
                    if printed.total != engine {
                        let attributable = !printed.errata.is_empty() && corrected.total == engine;
                        found.push(Discrepancy {
                            identity: identity.clone(),
                            s,
                            k,
                            parity,
                            side,
                            printed: printed.total,
                            corrected: corrected.total,
                            engine,
                            errata: printed.errata.into_iter().collect(),
                            attributable,
                        });
                    }
                }
            }
            (found, corrected_misses)
        })
        .collect();
    let corrected_mismatches = per_case.iter().map(|(_, m)| m).sum();
    let discrepancies = per_case.into_iter().flat_map(|(d, _)| d).collect();
    CrossCheckReport {
        identity,
        s_max,
        k_max,
        checked: cases.len() * (s_max + 1) * 2,
        discrepancies,
        corrected_mismatches,
    }
}

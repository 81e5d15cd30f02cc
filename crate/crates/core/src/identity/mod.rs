//! Evaluators for the coefficient identities that the commutation equations
//! reduce to, read both as printed and as re-derived, plus the linear-algebra
//! steps built on them.
//!
//! Every evaluator returns a `(left, right)` pair of [`CoeffSide`]s for a
//! given `(s, k)` and input parity. Under [`Reading::Printed`] a side follows
//! the printed display term by term and records an [`Erratum`] wherever that
//! display departs from the projection rule; under [`Reading::Corrected`] it
//! follows the re-derived formula. The operator engine decides which one is
//! right (see [`crosscheck`]).

pub mod case_index;
pub mod crosscheck;
pub mod harmonic;
pub mod lemma;
pub mod rank;
pub mod systems;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::scalar::Rational;

pub use case_index::CaseIndex;
pub use crosscheck::{cross_check, CheckTarget, CrossCheckReport, Discrepancy, Side};
pub use harmonic::{eval_harmonic, harmonic_engine_sides};
pub use lemma::{eval_linear, eval_power, lemma_engine_sides};
pub use rank::{hilbert_rank_argument, RankReport};
pub use systems::{check_system, SystemKind, SystemReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    Printed,
    Corrected,
}

/// Input monomial `z^{2k}` or `z^{2k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    EvenInput,
    OddInput,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::EvenInput, Parity::OddInput];

    pub fn input_degree(self, k: usize) -> usize {
        match self {
            Parity::EvenInput => 2 * k,
            Parity::OddInput => 2 * k + 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::EvenInput => "even-input",
            Parity::OddInput => "odd-input",
        }
    }
}

/// Known departures of the printed displays from the projection rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Erratum {
    /// `(2s+N)/(2s+N+1)` printed where `P(z̄ᴺ z^{2s+N})` gives `(2s+1)/(2s+N+1)`.
    ProjectionFactor,
    /// A `(2k+1−N)/(2k+1)`-type term kept although `P` annihilates it.
    VanishingProjection,
    /// The scalar `a` dropped from an `a·B_ψ B_{z̄ᴺ}` contribution.
    MissingScalar,
    /// Boundary equation pairing `c_N d_0` with `c_M d_0` where the right
    /// side has no term.
    BoundaryPairing,
    /// Boundary row printed without its projection factor.
    BoundaryFactor,
    /// Boundary row coinciding with the `2s−k = 0` row and hiding it.
    BoundaryShadow,
    /// Row `2s−k = 1` printed with the products of the other side.
    CopiedProducts,
    /// Leading `c_1` term printed without `(2k+1)/(2k+2)`.
    LeadingFactor,
}

impl Erratum {
    pub fn name(self) -> &'static str {
        match self {
            Erratum::ProjectionFactor => "projection-factor",
            Erratum::VanishingProjection => "vanishing-projection",
            Erratum::MissingScalar => "missing-scalar",
            Erratum::BoundaryPairing => "boundary-pairing",
            Erratum::BoundaryFactor => "boundary-factor",
            Erratum::BoundaryShadow => "boundary-shadow",
            Erratum::CopiedProducts => "copied-products",
            Erratum::LeadingFactor => "leading-factor",
        }
    }
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub label: String,
    pub value: Rational,
}

/// One side of an identity: its nonzero contributions and their sum.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffSide {
    pub terms: Vec<Term>,
    pub total: Rational,
    /// Errata that changed this side's value; always empty when corrected.
    pub errata: BTreeSet<Erratum>,
}

impl CoeffSide {
    pub fn to_json(&self) -> Value {
        json!({
            "terms": self.terms.iter().map(|t| json!({
                "label": t.label,
                "value": t.value.to_string(),
            })).collect::<Vec<_>>(),
            "total": self.total.to_string(),
            "errata": self.errata.iter().map(|e| e.name()).collect::<Vec<_>>(),
        })
    }
}

/// Builds the printed and corrected readings of one side together.
#[derive(Default)]
pub(crate) struct DualSide {
    printed: Vec<Term>,
    corrected: Vec<Term>,
    errata: BTreeSet<Erratum>,
}

fn push(list: &mut Vec<Term>, label: &str, value: Rational) {
    if !value.is_zero() {
        list.push(Term { label: label.to_string(), value });
    }
}

fn sum(terms: &[(String, Rational)]) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, (_, v)| acc + v)
}

impl DualSide {
    pub(crate) fn both(&mut self, label: &str, value: Rational) {
        push(&mut self.printed, label, value.clone());
        push(&mut self.corrected, label, value);
    }

    pub(crate) fn all(&mut self, terms: Vec<(String, Rational)>) {
        for (label, value) in terms {
            self.both(&label, value);
        }
    }

    /// A term whose printed value departs from the corrected one through the
    /// listed errata (recorded only when the values differ).
    pub(crate) fn variant(
        &mut self,
        label: &str,
        printed: Rational,
        corrected: Rational,
        errata: &[Erratum],
    ) {
        if printed != corrected {
            self.errata.extend(errata);
        }
        push(&mut self.printed, label, printed);
        push(&mut self.corrected, label, corrected);
    }

    /// A whole printed row standing in for the corrected terms.
    pub(crate) fn substitute(
        &mut self,
        printed: Vec<(String, Rational)>,
        corrected: Vec<(String, Rational)>,
        erratum: Erratum,
    ) {
        if sum(&printed) != sum(&corrected) {
            self.errata.insert(erratum);
        }
        for (label, value) in printed {
            push(&mut self.printed, &label, value);
        }
        for (label, value) in corrected {
            push(&mut self.corrected, &label, value);
        }
    }

    pub(crate) fn finish(self, reading: Reading) -> CoeffSide {
        let (terms, errata) = match reading {
            Reading::Printed => (self.printed, self.errata),
            Reading::Corrected => (self.corrected, BTreeSet::new()),
        };
        let total = terms.iter().fold(Rational::zero(), |acc, t| acc + &t.value);
        CoeffSide { terms, total, errata }
    }
}

/// `num/den` for small signed integers; `den` must be nonzero.
pub(crate) fn ratio(num: i64, den: i64) -> Rational {
    crate::scalar::rat(num, den)
}

/// Coefficient access for `φ = Σ aₙzⁿ`, `ψ = Σ bₘzᵐ` and `h = ψ − φ`, with
/// out-of-range subscripts reading as zero.
pub(crate) struct Coeffs<'a> {
    pub phi: &'a crate::poly::AnalyticPoly<Rational>,
    pub psi: &'a crate::poly::AnalyticPoly<Rational>,
}

impl Coeffs<'_> {
    pub(crate) fn a(&self, i: i64) -> Rational {
        self.phi.coeff_at(i)
    }

    pub(crate) fn b(&self, i: i64) -> Rational {
        self.psi.coeff_at(i)
    }

    pub(crate) fn d(&self, i: i64) -> Rational {
        self.b(i) - self.a(i)
    }

    /// `Σ_{j=0}^{r} a_{r−j} b_{2j}`.
    pub(crate) fn even_left(&self, r: i64) -> Vec<(String, Rational)> {
        (0..=r).map(|j| (format!("a{}*b{}", r - j, 2 * j), self.a(r - j) * self.b(2 * j))).collect()
    }

    /// `Σ_{j=0}^{r} a_{2j} b_{r−j}`.
    pub(crate) fn even_right(&self, r: i64) -> Vec<(String, Rational)> {
        (0..=r).map(|j| (format!("a{}*b{}", 2 * j, r - j), self.a(2 * j) * self.b(r - j))).collect()
    }

    /// `Σ_{j=0}^{r} a_{r−j} b_{2j+1}`.
    pub(crate) fn odd_left(&self, r: i64) -> Vec<(String, Rational)> {
        (0..=r)
            .map(|j| (format!("a{}*b{}", r - j, 2 * j + 1), self.a(r - j) * self.b(2 * j + 1)))
            .collect()
    }

    /// `Σ_{j=0}^{r} a_{2j+1} b_{r−j}`.
    pub(crate) fn odd_right(&self, r: i64) -> Vec<(String, Rational)> {
        (0..=r)
            .map(|j| (format!("a{}*b{}", 2 * j + 1, r - j), self.a(2 * j + 1) * self.b(r - j)))
            .collect()
    }
}

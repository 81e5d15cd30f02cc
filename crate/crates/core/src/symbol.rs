//! Harmonic polynomial symbols `φ + p̄`.

use std::fmt;

use crate::poly::{write_terms, AnalyticPoly};
use crate::scalar::Scalar;

/// Analytic part `Σ aₙ zⁿ` plus co-analytic part `Σ_{j≥1} c_j z̄ʲ`.
///
/// The co-analytic part never carries a constant: `z̄⁰ = 1` is folded into the
/// analytic part on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicSymbol<S> {
    analytic: AnalyticPoly<S>,
    coanalytic: AnalyticPoly<S>,
}

impl<S: Scalar> Default for HarmonicSymbol<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> HarmonicSymbol<S> {
    /// Canonicalizing constructor; `coanalytic` is read as a polynomial in `z̄`.
    pub fn new(analytic: AnalyticPoly<S>, coanalytic: AnalyticPoly<S>) -> Self {
        let mut analytic = analytic;
        let mut bar = AnalyticPoly::zero();
        for (j, c) in coanalytic.into_terms() {
            if j == 0 {
                analytic.add_term(0, c);
            } else {
                bar.add_term(j, c);
            }
        }
        Self {
            analytic,
            coanalytic: bar,
        }
    }

    pub fn zero() -> Self {
        Self::new(AnalyticPoly::zero(), AnalyticPoly::zero())
    }

    pub fn constant(c: S) -> Self {
        Self::analytic(AnalyticPoly::constant(c))
    }

    pub fn analytic(p: AnalyticPoly<S>) -> Self {
        Self::new(p, AnalyticPoly::zero())
    }

    /// Purely co-analytic symbol `Σ c_j z̄ʲ`.
    pub fn coanalytic(p: AnalyticPoly<S>) -> Self {
        Self::new(AnalyticPoly::zero(), p)
    }

    /// `z`.
    pub fn z() -> Self {
        Self::analytic(AnalyticPoly::z_pow(1))
    }

    /// `z̄ʲ`.
    pub fn zbar_pow(j: usize) -> Self {
        Self::coanalytic(AnalyticPoly::z_pow(j))
    }

    /// `a·z̄ᴺ + φ`, the symbol shape of the two-term lemmas.
    pub fn lemma_shape(a: S, n: usize, phi: &AnalyticPoly<S>) -> Self {
        Self::new(phi.clone(), AnalyticPoly::monomial(n, a))
    }

    pub fn analytic_part(&self) -> &AnalyticPoly<S> {
        &self.analytic
    }

    pub fn coanalytic_part(&self) -> &AnalyticPoly<S> {
        &self.coanalytic
    }

    /// Degree `N` of the co-analytic part, `None` when it vanishes.
    pub fn coanalytic_degree(&self) -> Option<usize> {
        self.coanalytic.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.analytic.is_zero() && self.coanalytic.is_zero()
    }

    pub fn is_analytic(&self) -> bool {
        self.coanalytic.is_zero()
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self {
            analytic: self.analytic.scale(factor),
            coanalytic: self.coanalytic.scale(factor),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            analytic: &self.analytic + &other.analytic,
            coanalytic: &self.coanalytic + &other.coanalytic,
        }
    }

    /// `Some(c)` with `self = c·other`, when such a `c` exists. The zero symbol
    /// is `0·other`; nothing nonzero is a multiple of the zero symbol.
    pub fn proportionality_to(&self, other: &Self) -> Option<S> {
        if self.is_zero() {
            return Some(S::zero());
        }
        let (mine, lead) = match other.coanalytic.terms().next() {
            Some((d, lead)) => (self.coanalytic.coeff(d), lead.clone()),
            None => {
                let (d, lead) = other.analytic.terms().next()?;
                (self.analytic.coeff(d), lead.clone())
            }
        };
        let c = mine / lead;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T + Copy>(&self, f: F) -> HarmonicSymbol<T> {
        HarmonicSymbol::new(self.analytic.map_coeffs(f), self.coanalytic.map_coeffs(f))
    }
}

impl<S: Scalar> From<AnalyticPoly<S>> for HarmonicSymbol<S> {
    fn from(p: AnalyticPoly<S>) -> Self {
        Self::analytic(p)
    }
}

impl<S: Scalar> fmt::Display for HarmonicSymbol<S> {
    /// Co-analytic terms first (descending), then analytic terms (descending).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        write_terms(f, "zbar", self.coanalytic.terms().rev(), &mut first)?;
        write_terms(f, "z", self.analytic.terms().rev(), &mut first)
    }
}

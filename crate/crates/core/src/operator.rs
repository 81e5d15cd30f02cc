//! Exact action of the Bergman projection, Toeplitz operators, the slant
//! operator `W` and its adjoint on analytic polynomials.
//!
//! Conventions: `P(z̄ʲ zᵏ) = ((k+1−j)/(k+1)) z^{k−j}` for `k ≥ j` and zero
//! otherwise; `W z^{2n} = zⁿ`, `W z^{2n+1} = 0`; `W* zⁿ = ((2n+1)/(n+1)) z^{2n}`.

use std::fmt;

use crate::poly::AnalyticPoly;
use crate::scalar::Scalar;
use crate::symbol::HarmonicSymbol;

/// `P(z̄ʲ zᵏ)`. Every co-analytic Toeplitz action routes through here.
pub fn project_monomial<S: Scalar>(j: usize, k: usize) -> AnalyticPoly<S> {
    if k < j {
        return AnalyticPoly::zero();
    }
    let factor = S::from_ratio((k + 1 - j) as i64, (k + 1) as i64);
    AnalyticPoly::monomial(k - j, factor)
}

/// `T_sym p = P(sym · p)`.
pub fn toeplitz_apply<S: Scalar>(sym: &HarmonicSymbol<S>, p: &AnalyticPoly<S>) -> AnalyticPoly<S> {
    let mut out = sym.analytic_part() * p;
    for (j, c) in sym.coanalytic_part().terms() {
        for (k, pk) in p.terms() {
            if k < j {
                continue;
            }
            for (d, factor) in project_monomial::<S>(j, k).into_terms() {
                out.add_term(d, c.clone() * pk.clone() * factor);
            }
        }
    }
    out
}

/// `W p`: keeps even-degree terms with halved degree.
pub fn slant_apply<S: Scalar>(p: &AnalyticPoly<S>) -> AnalyticPoly<S> {
    AnalyticPoly::from_terms(
        p.terms()
            .filter(|(d, _)| d % 2 == 0)
            .map(|(d, c)| (d / 2, c.clone())),
    )
}

/// `W* p`, the Bergman adjoint of `W`.
pub fn slant_adjoint_apply<S: Scalar>(p: &AnalyticPoly<S>) -> AnalyticPoly<S> {
    AnalyticPoly::from_terms(p.terms().map(|(n, c)| {
        let factor = S::from_ratio(2 * n as i64 + 1, n as i64 + 1);
        (2 * n, c.clone() * factor)
    }))
}

/// `B_sym p = W T_sym p`.
pub fn slant_toeplitz_apply<S: Scalar>(
    sym: &HarmonicSymbol<S>,
    p: &AnalyticPoly<S>,
) -> AnalyticPoly<S> {
    slant_apply(&toeplitz_apply(sym, p))
}

/// One factor of an operator word.
#[derive(Clone, Debug, PartialEq)]
pub enum Primitive<S> {
    Toeplitz(HarmonicSymbol<S>),
    Slant,
    SlantAdjoint,
}

impl<S: Scalar> Primitive<S> {
    pub fn apply(&self, p: &AnalyticPoly<S>) -> AnalyticPoly<S> {
        match self {
            Primitive::Toeplitz(sym) => toeplitz_apply(sym, p),
            Primitive::Slant => slant_apply(p),
            Primitive::SlantAdjoint => slant_adjoint_apply(p),
        }
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T + Copy>(&self, f: F) -> Primitive<T> {
        match self {
            Primitive::Toeplitz(sym) => Primitive::Toeplitz(sym.map_coeffs(f)),
            Primitive::Slant => Primitive::Slant,
            Primitive::SlantAdjoint => Primitive::SlantAdjoint,
        }
    }
}

/// A composition `O₁ O₂ ⋯ Oₘ`, written left to right and applied right to left.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorExpr<S> {
    word: Vec<Primitive<S>>,
}

impl<S: Scalar> Default for OperatorExpr<S> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<S: Scalar> OperatorExpr<S> {
    pub fn identity() -> Self {
        Self { word: Vec::new() }
    }

    pub fn new(word: Vec<Primitive<S>>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[Primitive<S>] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Appends on the right, i.e. the new factor acts first.
    pub fn then_toeplitz(mut self, sym: HarmonicSymbol<S>) -> Self {
        self.word.push(Primitive::Toeplitz(sym));
        self
    }

    pub fn then_slant(mut self) -> Self {
        self.word.push(Primitive::Slant);
        self
    }

    pub fn then_slant_adjoint(mut self) -> Self {
        self.word.push(Primitive::SlantAdjoint);
        self
    }

    /// Appends `B_sym = W T_sym`.
    pub fn then_slant_toeplitz(self, sym: HarmonicSymbol<S>) -> Self {
        self.then_slant().then_toeplitz(sym)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Self { word }
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T + Copy>(&self, f: F) -> OperatorExpr<T> {
        OperatorExpr {
            word: self.word.iter().map(|p| p.map_coeffs(f)).collect(),
        }
    }
}

/// Applies the word right to left.
pub fn apply_expr<S: Scalar>(expr: &OperatorExpr<S>, p: &AnalyticPoly<S>) -> AnalyticPoly<S> {
    expr.word
        .iter()
        .rev()
        .fold(p.clone(), |acc, op| op.apply(&acc))
}

impl<S: Scalar> fmt::Display for Primitive<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primitive::Toeplitz(sym) => write!(f, "T({sym})"),
            Primitive::Slant => write!(f, "W"),
            Primitive::SlantAdjoint => write!(f, "W*"),
        }
    }
}

impl<S: Scalar> fmt::Display for OperatorExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "I");
        }
        for (i, p) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

//! Sparse analytic polynomials `Σ aₙ zⁿ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;

use crate::scalar::{Rational, Scalar};

/// Finitely supported map from degree to coefficient. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticPoly<S> {
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> Default for AnalyticPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> AnalyticPoly<S> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(0, c)
    }

    /// `c · z^degree`.
    pub fn monomial(degree: usize, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c);
        p
    }

    /// `z^degree`.
    pub fn z_pow(degree: usize) -> Self {
        Self::monomial(degree, S::one())
    }

    /// Builds from `(degree, coefficient)` pairs; repeated degrees accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, S)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Dense coefficient list, index = degree.
    pub fn from_dense<I: IntoIterator<Item = S>>(coeffs: I) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate())
    }

    /// Adds `c · z^degree` in place, pruning a resulting zero.
    pub fn add_term(&mut self, degree: usize, c: S) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&degree) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.coeffs.remove(&degree);
                }
            }
            None => {
                self.coeffs.insert(degree, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest degree carrying a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of `z^n`, zero when absent.
    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(&n).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient at a signed index; negative indices read as zero.
    pub fn coeff_at(&self, n: i64) -> S {
        if n < 0 {
            S::zero()
        } else {
            self.coeff(n as usize)
        }
    }

    pub fn get(&self, n: usize) -> Option<&S> {
        self.coeffs.get(&n)
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &S)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (usize, S)> {
        self.coeffs.into_iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms().map(|(d, c)| (d, c.clone() * factor.clone())))
    }

    /// Multiplies by `z^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        Self {
            coeffs: self.terms().map(|(d, c)| (d + shift, c.clone())).collect(),
        }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self {
            coeffs: self.coeffs.range(..=max_degree).map(|(d, c)| (*d, c.clone())).collect(),
        }
    }

    /// `p(z²)`: every exponent doubles.
    pub fn substitute_z_squared(&self) -> Self {
        Self {
            coeffs: self.terms().map(|(d, c)| (2 * d, c.clone())).collect(),
        }
    }

    /// `ψ − φ`, called with `self = ψ`.
    pub fn diff_symbol(&self, phi: &Self) -> Self {
        self - phi
    }

    /// Squared Bergman norm `Σ |aₙ|² / (n + 1)`.
    pub fn bergman_norm_squared(&self) -> S {
        self.terms().fold(S::zero(), |acc, (n, c)| {
            acc + c.clone() * c.clone() / S::from_int(n as i64 + 1)
        })
    }

    /// Bergman inner product with `⟨zᵐ, zⁿ⟩ = δₘₙ / (n + 1)` (real coefficients).
    pub fn bergman_inner(&self, other: &Self) -> S {
        self.terms().fold(S::zero(), |acc, (n, c)| match other.get(n) {
            Some(o) => acc + c.clone() * o.clone() / S::from_int(n as i64 + 1),
            None => acc,
        })
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> S {
        self.terms()
            .map(|(_, c)| c.abs())
            .fold(S::zero(), |m, c| if c > m { c } else { m })
    }

    /// Applies `f` to every coefficient, pruning zeros in the target scalar.
    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> AnalyticPoly<T> {
        AnalyticPoly::from_terms(self.terms().map(|(d, c)| (d, f(c))))
    }
}

/// Coefficient-wise sum with pruning.
pub fn add_poly<S: Scalar>(p: &AnalyticPoly<S>, q: &AnalyticPoly<S>) -> AnalyticPoly<S> {
    p + q
}

/// Exact `f64` image of a rational polynomial.
pub fn to_f64_poly(p: &AnalyticPoly<Rational>) -> AnalyticPoly<f64> {
    p.map_coeffs(|c| c.to_f64().unwrap_or(f64::NAN))
}


impl<'a, S: Scalar> Add<&'a AnalyticPoly<S>> for &'a AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn add(self, rhs: &'a AnalyticPoly<S>) -> AnalyticPoly<S> {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl<S: Scalar> Add for AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn add(mut self, rhs: AnalyticPoly<S>) -> AnalyticPoly<S> {
        for (d, c) in rhs.into_terms() {
            self.add_term(d, c);
        }
        self
    }
}

impl<'a, S: Scalar> Sub<&'a AnalyticPoly<S>> for &'a AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn sub(self, rhs: &'a AnalyticPoly<S>) -> AnalyticPoly<S> {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn sub(self, rhs: AnalyticPoly<S>) -> AnalyticPoly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn neg(self) -> AnalyticPoly<S> {
        AnalyticPoly {
            coeffs: self.terms().map(|(d, c)| (d, -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn neg(self) -> AnalyticPoly<S> {
        -&self
    }
}

impl<'a, S: Scalar> Mul<&'a AnalyticPoly<S>> for &'a AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn mul(self, rhs: &'a AnalyticPoly<S>) -> AnalyticPoly<S> {
        let mut out = AnalyticPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out.add_term(i + j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for AnalyticPoly<S> {
    type Output = AnalyticPoly<S>;

    fn mul(self, rhs: AnalyticPoly<S>) -> AnalyticPoly<S> {
        &self * &rhs
    }
}

/// Writes `c·var^n` terms in the `3/4*z^2 - zbar + 1` style. `first` tracks
/// whether a leading sign is still pending across calls.
pub(crate) fn write_terms<'a, S: Scalar + 'a>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: impl Iterator<Item = (usize, &'a S)>,
    first: &mut bool,
) -> fmt::Result {
    for (n, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        match (*first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        *first = false;
        let unit = mag.is_one();
        match n {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{var}")?;
                if n > 1 {
                    write!(f, "^{n}")?;
                }
            }
        }
    }
    Ok(())
}

impl<S: Scalar> fmt::Display for AnalyticPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        write_terms(f, "z", self.terms().rev(), &mut first)
    }
}

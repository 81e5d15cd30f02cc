//! Exact Toeplitz and slant Toeplitz operators on the Bergman space of the
//! unit disk, acting on polynomials.
//!
//! Everything is generic over [`Scalar`]; the exact instantiation over
//! [`Rational`] is the ground truth and the `f64`/`f32` instantiations exist
//! for numerical exports and quick comparisons.

pub mod error;
pub mod identity;
pub mod commutator;
pub mod linalg;
pub mod matrix;
pub mod operator;
pub mod poly;
pub mod random;
pub mod remark;
pub mod scalar;
pub mod symbol;

pub use error::{Error, Result};
pub use operator::{
    apply_expr, project_monomial, slant_adjoint_apply, slant_apply, slant_toeplitz_apply,
    toeplitz_apply, OperatorExpr, Primitive,
};
pub use poly::{add_poly, AnalyticPoly};
pub use scalar::{parse_rational, rat, rational_to_string, Rational, Scalar};
pub use symbol::HarmonicSymbol;

pub type Poly = AnalyticPoly<Rational>;
pub type Symbol = HarmonicSymbol<Rational>;
pub type Expr = OperatorExpr<Rational>;

pub type PolyF64 = AnalyticPoly<f64>;
pub type SymbolF64 = HarmonicSymbol<f64>;
pub type ExprF64 = OperatorExpr<f64>;

pub type PolyF32 = AnalyticPoly<f32>;
pub type SymbolF32 = HarmonicSymbol<f32>;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

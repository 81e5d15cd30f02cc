//! Truncated matrices of operator words in the monomial basis.

use rayon::prelude::*;
use serde_json::Value;

use crate::operator::{apply_expr, OperatorExpr};
use crate::poly::AnalyticPoly;
use crate::scalar::Scalar;

/// Dense `(R+1) × (C+1)` matrix; `entry(i, j)` is the coefficient of `zⁱ` in
/// the image of `zʲ`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<S>>,
}

/// Column `j` is `expr` applied to `zʲ`, truncated to degree `rows`.
pub fn build_matrix<S: Scalar>(expr: &OperatorExpr<S>, rows: usize, cols: usize) -> OperatorMatrix<S> {
    let columns: Vec<AnalyticPoly<S>> = (0..=cols)
        .into_par_iter()
        .map(|j| apply_expr(expr, &AnalyticPoly::z_pow(j)))
        .collect();
    let entries = (0..=rows)
        .map(|i| columns.iter().map(|c| c.coeff(i)).collect())
        .collect();
    OperatorMatrix { rows, cols, entries }
}

impl<S: Scalar> OperatorMatrix<S> {
    /// Output degree bound `R`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Input degree bound `C`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<S>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> AnalyticPoly<S> {
        AnalyticPoly::from_terms((0..=self.rows).map(|i| (i, self.entries[i][j].clone())))
    }

    /// Entries in the orthonormal basis `{√(n+1) zⁿ}`: `entry(i, j)·√((i+1)/(j+1))`.
    /// Approximate by construction.
    pub fn orthonormal(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| {
                        let scale = ((i + 1) as f64 / (j + 1) as f64).sqrt();
                        x.to_f64().unwrap_or(f64::NAN) * scale
                    })
                    .collect()
            })
            .collect()
    }

    /// Entries as display strings; canonical `p/q` for rationals.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Array of rows of strings.
    pub fn to_json(&self) -> Value {
        Value::from(self.to_strings())
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.to_strings())
    }
}

/// Float rows as a JSON array of arrays of numbers.
pub fn float_rows_to_json(rows: &[Vec<f64>]) -> Value {
    Value::from(rows.to_vec())
}

pub fn rows_to_csv(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use crate::symbol::HarmonicSymbol;
    use num_traits::{One, Zero};

    type Expr = OperatorExpr<Rational>;

    #[test]
    fn slant_matrix() {
        let m = build_matrix(&Expr::identity().then_slant(), 2, 5);
        for i in 0..=2 {
            for j in 0..=5 {
                let want = if j == 2 * i { Rational::one() } else { Rational::zero() };
                assert_eq!(m.entry(i, j), &want, "({i},{j})");
            }
        }
    }

    #[test]
    fn conjugate_toeplitz_superdiagonal() {
        let m = build_matrix(&Expr::identity().then_toeplitz(HarmonicSymbol::zbar_pow(1)), 3, 4);
        for i in 0..=3 {
            for j in 0..=4 {
                let want = if j >= 1 && i == j - 1 { rat(j as i64, j as i64 + 1) } else { Rational::zero() };
                assert_eq!(m.entry(i, j), &want);
            }
        }
    }

    #[test]
    fn identity_word() {
        let m = build_matrix(&Expr::identity(), 4, 4);
        for i in 0..=4 {
            for j in 0..=4 {
                assert_eq!(m.entry(i, j).is_one(), i == j);
            }
        }
    }

    #[test]
    fn exports() {
        let m = build_matrix(&Expr::identity().then_toeplitz(HarmonicSymbol::zbar_pow(1)), 1, 2);
        assert_eq!(m.to_json().to_string(), r#"[["0","1/2","0"],["0","0","2/3"]]"#);
        assert_eq!(m.to_csv(), "0,1/2,0\n0,0,2/3\n");
        let o = m.orthonormal();
        assert!((o[0][1] - 0.5 * (0.5f64).sqrt()).abs() < 1e-15);
    }
}

//! The rank argument for the homogeneous system in `c_j d_{2j}`.
//!
//! Rows are indexed by `t = N, …, 2N+3` and columns by `j = 1, …, N`. The
//! coefficient of `c_j d_{2j}` in row `t` is
//! `8j(2j+1) / ((2t+j+1)(2t+j+3)(2t+j+5))`. Dropping the column factors leaves
//! the matrix `R` with `R[t][j] = 1/((2t+j+1)(2t+j+3)(2t+j+5))`, which factors
//! as `A·B` with a Cauchy-type `A[t][m] = 1/(2t+m)`, `m = 2, …, N+5`, and a
//! banded `B` carrying `1/8, −1/4, 1/8` at `m = j+1, j+3, j+5`.

use serde_json::{json, Value};

use crate::linalg::{mat_mul, rank, scale_columns, RationalMatrix};
use crate::scalar::Rational;

use super::ratio;

fn rows(n: usize) -> impl Iterator<Item = i64> {
    n as i64..=2 * n as i64 + 3
}

pub fn cauchy_factor(n: usize) -> RationalMatrix {
    rows(n).map(|t| (2..=n as i64 + 5).map(|m| ratio(1, 2 * t + m)).collect()).collect()
}

pub fn band_factor(n: usize) -> RationalMatrix {
    (2..=n as i64 + 5)
        .map(|m| {
            (1..=n as i64)
                .map(|j| match m - j {
                    1 | 5 => ratio(1, 8),
                    3 => ratio(-1, 4),
                    _ => ratio(0, 1),
                })
                .collect()
        })
        .collect()
}

/// `R[t][j] = 1/((2t+j+1)(2t+j+3)(2t+j+5))`.
pub fn reduced_matrix(n: usize) -> RationalMatrix {
    rows(n)
        .map(|t| (1..=n as i64).map(|j| ratio(1, (2 * t + j + 1) * (2 * t + j + 3) * (2 * t + j + 5))).collect())
        .collect()
}

/// The closed-form coefficient of `c_j d_{2j}` in the row for `t`.
pub fn closed_form_coefficient(t: i64, j: i64) -> Rational {
    ratio(8 * j * (2 * j + 1), (2 * t + j + 1) * (2 * t + j + 3) * (2 * t + j + 5))
}

/// `(2u+1)/(2u+j+1)`: the factor of `c_j d_{2j}` in the `2s−k = 0` row at `s = u`.
fn row_factor(u: i64, j: i64) -> Rational {
    ratio(2 * u + 1, 2 * u + j + 1)
}

/// The same coefficient obtained by eliminating the other side between three
/// consecutive equations, as the proof does:
/// `(4t+9)(F(t+2) − F(t+1)) − (4t+1)(F(t+1) − F(t))`.
pub fn coefficient_by_subtraction(t: i64, j: i64) -> Rational {
    let f = |u| row_factor(u, j);
    ratio(4 * t + 9, 1) * (f(t + 2) - f(t + 1)) - ratio(4 * t + 1, 1) * (f(t + 1) - f(t))
}

/// The odd-input counterpart, eliminated with multipliers `4t+10` and `4t+2`.
pub fn odd_coefficient_by_subtraction(t: i64, j: i64) -> Rational {
    let f = |u| row_factor(u, j);
    ratio(4 * t + 10, 1) * (f(t + 2) - f(t + 1)) - ratio(4 * t + 2, 1) * (f(t + 1) - f(t))
}

pub fn coefficient_matrix(n: usize) -> RationalMatrix {
    rows(n).map(|t| (1..=n as i64).map(|j| closed_form_coefficient(t, j)).collect()).collect()
}

pub fn odd_coefficient_matrix(n: usize) -> RationalMatrix {
    rows(n).map(|t| (1..=n as i64).map(|j| odd_coefficient_by_subtraction(t, j)).collect()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankReport {
    pub n: usize,
    pub rank_a: usize,
    pub rank_b: usize,
    /// Rank of the reduced matrix `R = A·B`.
    pub rank_ab: usize,
    pub rank_coefficients: usize,
    pub factorization_holds: bool,
    /// Closed form equals the three-equation elimination on every row.
    pub closed_form_holds: bool,
    pub rank_odd: usize,
    /// The odd-input matrix is the reduced matrix up to nonzero column scaling.
    pub odd_matches_up_to_columns: bool,
}

impl RankReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "rankA": self.rank_a,
            "rankB": self.rank_b,
            "rankAB": self.rank_ab,
            "rankCoefficients": self.rank_coefficients,
            "factorizationHolds": self.factorization_holds,
            "closedFormHolds": self.closed_form_holds,
            "rankOdd": self.rank_odd,
            "oddMatchesUpToColumns": self.odd_matches_up_to_columns,
        })
    }
}

pub fn hilbert_rank_argument(n: usize) -> RankReport {
    assert!(n >= 1, "N must be at least 1");
    let a = cauchy_factor(n);
    let b = band_factor(n);
    let reduced = reduced_matrix(n);
    let coeffs = coefficient_matrix(n);
    let odd = odd_coefficient_matrix(n);
    let closed_form_holds = rows(n).all(|t| {
        (1..=n as i64).all(|j| closed_form_coefficient(t, j) == coefficient_by_subtraction(t, j))
    });
    let odd_scale: Vec<Rational> = (1..=n as i64).map(|j| ratio(16 * j * j, 1)).collect();
    RankReport {
        n,
        rank_a: rank(&a),
        rank_b: rank(&b),
        rank_ab: rank(&reduced),
        rank_coefficients: rank(&coeffs),
        factorization_holds: mat_mul(&a, &b) == reduced,
        closed_form_holds,
        rank_odd: rank(&odd),
        odd_matches_up_to_columns: scale_columns(&reduced, &odd_scale) == odd,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_for_small_n() {
        for n in 1..=8 {
            let r = hilbert_rank_argument(n);
            assert_eq!(r.rank_a, n + 4);
            assert_eq!(r.rank_b, n);
            assert_eq!(r.rank_ab, n);
            assert_eq!(r.rank_coefficients, n);
            assert_eq!(r.rank_odd, n);
            assert!(r.factorization_holds && r.closed_form_holds && r.odd_matches_up_to_columns);
        }
    }

    #[test]
    fn first_row_matches_printed_corner() {
        let n = 3;
        let m = reduced_matrix(n);
        let nn = n as i64;
        assert_eq!(m[0][0], ratio(1, (2 * nn + 2) * (2 * nn + 4) * (2 * nn + 6)));
        assert_eq!(m[n + 3][n - 1], ratio(1, (5 * nn + 7) * (5 * nn + 9) * (5 * nn + 11)));
    }
}

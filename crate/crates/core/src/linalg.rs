//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Rational;

pub type RationalMatrix = Vec<Vec<Rational>>;

/// Clears denominators row by row; scaling a row by a nonzero constant
/// preserves rank and only rescales the determinant.
fn integer_rows(m: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Rational) {
    let mut scale = Rational::one();
    let rows = m
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= Rational::from_integer(lcm.clone());
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Fraction-free (Bareiss) elimination in place. Returns the rank and the
/// sign of the row permutation applied.
fn bareiss(a: &mut [Vec<BigInt>]) -> (usize, i32) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                // exact by Sylvester's identity
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    (rank, sign)
}

/// Exact rank via fraction-free elimination.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let (mut ints, _) = integer_rows(m);
    bareiss(&mut ints).0
}

/// Exact determinant of a square matrix via fraction-free elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Rational::one();
    }
    let (mut ints, scale) = integer_rows(m);
    let (rank, sign) = bareiss(&mut ints);
    if rank < n {
        return Rational::zero();
    }
    let det = Rational::from_integer(ints[n - 1][n - 1].clone() * sign);
    det / scale
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> RationalMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|c| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[c])
                })
                .collect()
        })
        .collect()
}

/// Multiplies column `j` by `factors[j]`.
pub fn scale_columns(m: &[Vec<Rational>], factors: &[Rational]) -> RationalMatrix {
    m.iter()
        .map(|row| row.iter().zip(factors).map(|(x, f)| x * f).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    /// Plain Gauss-Jordan over the rationals; independent of the Bareiss path.
    fn rank_oracle(m: &[Vec<Rational>]) -> usize {
        let mut a = m.to_vec();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let piv = a[r][c].clone();
            for i in 0..rows {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &piv;
                    for j in 0..cols {
                        let v = &f * &a[r][j];
                        a[i][j] -= v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        (0..m.len()).fold(Rational::zero(), |acc, c| {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][c] * cofactor_det(&minor);
            if c % 2 == 0 { acc + term } else { acc - term }
        })
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
        prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3), cols), rows)
            .prop_map(|m| m.into_iter().map(|r| r.into_iter().map(|(n, d)| rat(n, d)).collect()).collect())
    }

    #[test]
    fn two_by_two_determinant() {
        let m = vec![vec![rat(2, 24), rat(1, 8)], vec![rat(2, 48), rat(1, 24)]];
        assert_eq!(determinant(&m), rat(2, 24) * rat(1, 24) - rat(1, 8) * rat(2, 48));
    }

    #[test]
    fn hilbert_matrix_is_nonsingular() {
        for n in 1..=8 {
            let h: RationalMatrix = (0..n)
                .map(|i| (0..n).map(|j| rat(1, (i + j + 1) as i64)).collect())
                .collect();
            assert_eq!(rank(&h), n);
            assert!(!determinant(&h).is_zero());
        }
    }

    #[test]
    fn rank_deficient_examples() {
        let m = vec![
            vec![rat(1, 2), rat(1, 3), rat(1, 1)],
            vec![rat(1, 1), rat(2, 3), rat(2, 1)],
            vec![rat(0, 1), rat(0, 1), rat(0, 1)],
        ];
        assert_eq!(rank(&m), 1);
        assert!(determinant(&m).is_zero());
        assert_eq!(rank(&[]), 0);
    }

    proptest! {
        #[test]
        fn rank_agrees_with_gauss_jordan(m in arb_matrix(5, 4)) {
            prop_assert_eq!(rank(&m), rank_oracle(&m));
        }

        #[test]
        fn low_rank_products(a in arb_matrix(6, 2), b in arb_matrix(2, 5)) {
            let p = mat_mul(&a, &b);
            prop_assert!(rank(&p) <= 2);
            prop_assert_eq!(rank(&p), rank_oracle(&p));
        }

        #[test]
        fn determinant_agrees_with_cofactors(m in arb_matrix(4, 4)) {
            prop_assert_eq!(determinant(&m), cofactor_det(&m));
        }
    }
}

//! Seeded generators for the randomized suites.
//!
//! Coefficients come from `{−3, …, 3} \ {0}`; every draw is reproducible from
//! the `u64` seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::AnalyticPoly;
use crate::scalar::{rat, Rational};
use crate::symbol::HarmonicSymbol;

pub type SuiteRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

const COEFFS: [i64; 6] = [-3, -2, -1, 1, 2, 3];

/// A coefficient from `{−3..3} \ {0}`.
pub fn nonzero_coeff<R: Rng>(rng: &mut R) -> Rational {
    rat(*COEFFS.choose(rng).expect("nonempty"), 1)
}

/// A nonzero rational `p/q` with `p ∈ {−3..3} \ {0}`, `q ∈ {1, 2, 3}`.
pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(*COEFFS.choose(rng).expect("nonempty"), rng.gen_range(1..=3))
}

/// Dense polynomial of uniformly drawn degree `0..=max_degree`, all
/// coefficients nonzero.
pub fn random_poly<R: Rng>(rng: &mut R, max_degree: usize) -> AnalyticPoly<Rational> {
    let degree = rng.gen_range(0..=max_degree);
    AnalyticPoly::from_dense((0..=degree).map(|_| nonzero_coeff(rng)))
}

/// Like [`random_poly`], but each coefficient below the top one is zero with
/// probability one half. Exercises sparse supports.
pub fn random_sparse_poly<R: Rng>(rng: &mut R, max_degree: usize) -> AnalyticPoly<Rational> {
    let degree = rng.gen_range(0..=max_degree);
    AnalyticPoly::from_terms((0..=degree).filter_map(|d| {
        (d == degree || rng.gen_bool(0.5)).then(|| (d, nonzero_coeff(rng)))
    }))
}

/// Co-analytic polynomial `Σ_{j=1}^{N} c_j z̄ʲ` with exact degree `n`, stored
/// as a polynomial in the conjugate variable.
pub fn random_coanalytic<R: Rng>(rng: &mut R, n: usize) -> AnalyticPoly<Rational> {
    AnalyticPoly::from_terms((1..=n).filter_map(|j| {
        (j == n || rng.gen_bool(0.5)).then(|| (j, nonzero_coeff(rng)))
    }))
}

/// A harmonic symbol with analytic degree at most `max_analytic` and
/// co-analytic degree at most `max_coanalytic`.
pub fn random_symbol<R: Rng>(
    rng: &mut R,
    max_analytic: usize,
    max_coanalytic: usize,
) -> HarmonicSymbol<Rational> {
    let analytic = random_sparse_poly(rng, max_analytic);
    let n = rng.gen_range(0..=max_coanalytic);
    let bar = if n == 0 {
        AnalyticPoly::zero()
    } else {
        random_coanalytic(rng, n)
    };
    HarmonicSymbol::new(analytic, bar)
}

/// Two distinct polynomials of degree at most `max_degree`.
pub fn distinct_pair<R: Rng>(
    rng: &mut R,
    max_degree: usize,
) -> (AnalyticPoly<Rational>, AnalyticPoly<Rational>) {
    let phi = random_sparse_poly(rng, max_degree);
    loop {
        let psi = random_sparse_poly(rng, max_degree);
        if psi != phi {
            return (phi, psi);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let a: Vec<_> = (0..5).map({
            let mut r = rng_from_seed(7);
            move |_| random_poly(&mut r, 10)
        }).collect();
        let b: Vec<_> = (0..5).map({
            let mut r = rng_from_seed(7);
            move |_| random_poly(&mut r, 10)
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn coefficient_range() {
        let mut r = rng_from_seed(1);
        for _ in 0..200 {
            let p = random_poly(&mut r, 6);
            assert_eq!(p.len(), p.degree().unwrap() + 1);
            for (_, c) in p.terms() {
                assert!(COEFFS.iter().any(|&v| rat(v, 1) == *c));
            }
            let bar = random_coanalytic(&mut r, 3);
            assert_eq!(bar.degree(), Some(3));
            assert!(bar.get(0).is_none());
        }
    }
}

//! Identities for `f = a z̄ᴺ + φ`, `g = z̄ᴺ + ψ`.
//!
//! The left side is the coefficient of `zˢ` in
//! `B_φB_ψ zᴷ + a B_{z̄ᴺ}B_ψ zᴷ + B_φB_{z̄ᴺ} zᴷ`, the right side the one in
//! `B_ψB_φ zᴷ + a B_ψB_{z̄ᴺ} zᴷ + B_{z̄ᴺ}B_φ zᴷ`, with `K = 2k` or `2k+1`.
//! They agree for every `(s, k)` exactly when the two operators commute.

use crate::operator::slant_toeplitz_apply;
use crate::poly::AnalyticPoly;
use crate::scalar::Rational;
use crate::symbol::HarmonicSymbol;

use super::{ratio, CoeffSide, Coeffs, DualSide, Erratum, Parity, Reading};

/// Engine columns for the two combinations on input `z^K`.
pub fn lemma_engine_sides(
    a: &Rational,
    n: usize,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    input_degree: usize,
) -> (AnalyticPoly<Rational>, AnalyticPoly<Rational>) {
    let b = |sym: &HarmonicSymbol<Rational>, p: &AnalyticPoly<Rational>| slant_toeplitz_apply(sym, p);
    let phi_s = HarmonicSymbol::analytic(phi.clone());
    let psi_s = HarmonicSymbol::analytic(psi.clone());
    let bar = HarmonicSymbol::zbar_pow(n);
    let zk = AnalyticPoly::z_pow(input_degree);
    let left = b(&phi_s, &b(&psi_s, &zk))
        + b(&bar, &b(&psi_s, &zk)).scale(a)
        + b(&phi_s, &b(&bar, &zk));
    let right = b(&psi_s, &b(&phi_s, &zk))
        + b(&psi_s, &b(&bar, &zk)).scale(a)
        + b(&bar, &b(&phi_s, &zk));
    (left, right)
}

/// The `N = 1` identities, which are printed correctly.
pub fn eval_linear(
    a: &Rational,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    s: usize,
    k: usize,
    parity: Parity,
) -> (CoeffSide, CoeffSide) {
    let c = Coeffs { phi, psi };
    let (s, k) = (s as i64, k as i64);
    let r = 2 * s - k;
    let outer = ratio(2 * s + 1, 2 * s + 2);
    let mut left = DualSide::default();
    let mut right = DualSide::default();
    match parity {
        Parity::EvenInput => {
            let i = 4 * s - 2 * k + 2;
            left.all(c.even_left(r));
            left.both(&format!("{outer}*a*b{i}"), &outer * a * c.b(i));
            right.all(c.even_right(r));
            right.both(&format!("{outer}*a{i}"), &outer * c.a(i));
        }
        Parity::OddInput => {
            let i = 4 * s - 2 * k + 1;
            let inner = ratio(2 * k + 1, 2 * k + 2);
            left.all(c.odd_left(r - 1));
            left.both(&format!("{outer}*a*b{i}"), &outer * a * c.b(i));
            left.both(&format!("{inner}*a{r}"), &inner * c.a(r));
            right.all(c.odd_right(r - 1));
            right.both(&format!("{inner}*a*b{r}"), &inner * a * c.b(r));
            right.both(&format!("{outer}*a{i}"), &outer * c.a(i));
        }
    }
    (left.finish(Reading::Corrected), right.finish(Reading::Corrected))
}

/// The general-`N` identities. Odd `N` and even `N` have different printed
/// shapes; both are handled here.
#[allow(clippy::too_many_arguments)]
pub fn eval_power(
    a: &Rational,
    n: usize,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    s: usize,
    k: usize,
    parity: Parity,
    reading: Reading,
) -> (CoeffSide, CoeffSide) {
    assert!(n >= 1, "co-analytic power must be at least 1");
    let c = Coeffs { phi, psi };
    let (s, k, nn) = (s as i64, k as i64, n as i64);
    let r = 2 * s - k;
    let printed_outer = ratio(2 * s + nn, 2 * s + nn + 1);
    let outer = ratio(2 * s + 1, 2 * s + nn + 1);
    let mut left = DualSide::default();
    let mut right = DualSide::default();
    let shift = [Erratum::ProjectionFactor];

    match parity {
        Parity::EvenInput => {
            let i = 4 * s - 2 * k + 2 * nn;
            left.all(c.even_left(r));
            left.variant(&format!("a*b{i}"), &printed_outer * a * c.b(i), &outer * a * c.b(i), &shift);
            right.all(c.even_right(r));
            right.variant(&format!("a{i}"), &printed_outer * c.a(i), &outer * c.a(i), &shift);
            if n.is_multiple_of(2) {
                // P(z̄ᴺ z^{2k}) = (2k+1−N)/(2k+1) z^{2k−N}, zero when 2k < N.
                let j = r + nn / 2;
                let printed = ratio(2 * k + 1 - nn, 2 * k + 1);
                let proj = if 2 * k >= nn { printed.clone() } else { ratio(0, 1) };
                left.variant(
                    &format!("{printed}*a{j}"),
                    &printed * c.a(j),
                    &proj * c.a(j),
                    &[Erratum::VanishingProjection],
                );
                let unscaled = &printed * c.b(j);
                let scaled = a * &unscaled;
                let corrected = &proj * a * c.b(j);
                let mut errata = Vec::new();
                if unscaled != scaled {
                    errata.push(Erratum::MissingScalar);
                }
                if scaled != corrected {
                    errata.push(Erratum::VanishingProjection);
                }
                right.variant(&format!("{printed}*a*b{j}"), unscaled, corrected, &errata);
            }
        }
        Parity::OddInput => {
            let i = 4 * s - 2 * k + 2 * nn - 1;
            left.all(c.odd_left(r - 1));
            left.variant(&format!("a*b{i}"), &printed_outer * a * c.b(i), &outer * a * c.b(i), &shift);
            right.all(c.odd_right(r - 1));
            right.variant(&format!("a{i}"), &printed_outer * c.a(i), &outer * c.a(i), &shift);
            if n % 2 == 1 {
                // P(z̄ᴺ z^{2k+1}) = (2k+2−N)/(2k+2) z^{2k+1−N}, zero when 2k+1 < N.
                let j = r + (nn - 1) / 2;
                let printed = ratio(2 * k + 2 - nn, 2 * k + 2);
                let proj = if 2 * k + 1 >= nn { printed.clone() } else { ratio(0, 1) };
                let vanish = [Erratum::VanishingProjection];
                left.variant(&format!("{printed}*a{j}"), &printed * c.a(j), &proj * c.a(j), &vanish);
                right.variant(
                    &format!("{printed}*a*b{j}"),
                    &printed * a * c.b(j),
                    &proj * a * c.b(j),
                    &vanish,
                );
            }
        }
    }
    (left.finish(reading), right.finish(reading))
}

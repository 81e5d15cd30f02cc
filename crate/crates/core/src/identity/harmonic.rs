//! Identities for `f = p̄ + φ`, `g = p̄ + ψ` with `p̄ = Σ_{j=0}^{N} c_j z̄ʲ`.
//!
//! With `h = ψ − φ`, the left side is the coefficient of `zˢ` in
//! `B_φB_ψ zᴷ + B_{p̄}B_h zᴷ` and the right side the one in
//! `B_ψB_φ zᴷ + B_hB_{p̄} zᴷ`. The printed displays are piecewise in `2s−k`;
//! branch selection takes the first matching row in display order.

use crate::error::{Error, Result};
use crate::operator::slant_toeplitz_apply;
use crate::poly::AnalyticPoly;
use crate::scalar::Rational;
use crate::symbol::HarmonicSymbol;

use super::{ratio, CaseIndex, CoeffSide, Coeffs, DualSide, Erratum, Parity, Reading};

/// `p̄` as a symbol; `c₀` lands in the analytic part.
pub fn pbar_symbol(c: &[Rational]) -> HarmonicSymbol<Rational> {
    HarmonicSymbol::new(
        AnalyticPoly::constant(c.first().cloned().unwrap_or_else(|| ratio(0, 1))),
        AnalyticPoly::from_terms(c.iter().cloned().enumerate().skip(1)),
    )
}

pub fn harmonic_engine_sides(
    c: &[Rational],
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    input_degree: usize,
) -> (AnalyticPoly<Rational>, AnalyticPoly<Rational>) {
    let b = |sym: &HarmonicSymbol<Rational>, p: &AnalyticPoly<Rational>| slant_toeplitz_apply(sym, p);
    let pbar = pbar_symbol(c);
    let phi_s = HarmonicSymbol::analytic(phi.clone());
    let psi_s = HarmonicSymbol::analytic(psi.clone());
    let h = HarmonicSymbol::analytic(psi.diff_symbol(phi));
    let zk = AnalyticPoly::z_pow(input_degree);
    let left = b(&phi_s, &b(&psi_s, &zk)) + b(&pbar, &b(&h, &zk));
    let right = b(&psi_s, &b(&phi_s, &zk)) + b(&h, &b(&pbar, &zk));
    (left, right)
}

type Terms = Vec<(String, Rational)>;

fn cd(c: &[Rational], co: &Coeffs<'_>, factor: Rational, j: usize, i: i64) -> (String, Rational) {
    (format!("{factor}*c{j}*d{i}"), factor * &c[j] * co.d(i))
}

/// `c` holds `c_0, …, c_N` with `N ≥ 1`.
pub fn eval_harmonic(
    c: &[Rational],
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
    s: usize,
    k: usize,
    parity: Parity,
    reading: Reading,
) -> Result<(CoeffSide, CoeffSide)> {
    if c.len() < 2 {
        return Err(Error::TooFewCoefficients(c.len()));
    }
    let n = c.len() - 1;
    let case = CaseIndex::new(n, k);
    let co = Coeffs { phi, psi };
    let (si, ki, ni) = (s as i64, k as i64, n as i64);
    let r = 2 * si - ki;
    let outer = |j: usize| ratio(2 * si + 1, 2 * si + j as i64 + 1);
    let mut left = DualSide::default();
    let mut right = DualSide::default();

    match parity {
        Parity::EvenInput => {
            let mut a_side: Terms = co.even_left(r);
            a_side.extend((0..=n).map(|j| cd(c, &co, outer(j), j, 2 * r + 2 * j as i64)));
            if r == -ni {
                left.substitute(vec![cd(c, &co, ratio(1, 1), n, 0)], a_side, Erratum::BoundaryFactor);
            } else {
                left.all(a_side);
            }

            let m = case.m2k;
            let half = (m / 2) as i64;
            let d_part: Terms = (0..=m / 2)
                .map(|l| {
                    let li = l as i64;
                    cd(c, &co, ratio(2 * ki + 1 - 2 * li, 2 * ki + 1), 2 * l, r + li)
                })
                .collect();
            let general = || co.even_right(r).into_iter().chain(d_part.clone()).collect::<Terms>();
            let boundary = || vec![cd(c, &co, ratio(1, 1), m, 0)];
            if r == -ni {
                right.substitute(boundary(), general(), Erratum::BoundaryPairing);
            } else if r == -half {
                let e = if m == 0 { Erratum::BoundaryShadow } else { Erratum::BoundaryFactor };
                right.substitute(boundary(), general(), e);
            } else if r == 1 {
                let copied = vec![
                    ("a1*b0".to_string(), co.a(1) * co.b(0)),
                    ("a0*b2".to_string(), co.a(0) * co.b(2)),
                ];
                right.substitute(copied, co.even_right(1), Erratum::CopiedProducts);
                right.all(d_part);
            } else {
                right.all(general());
            }
        }
        Parity::OddInput => {
            let r1 = r - 1;
            let mut c_side: Terms = co.odd_left(r1);
            c_side.extend((0..=n).map(|j| cd(c, &co, outer(j), j, 2 * r1 + 1 + 2 * j as i64)));
            if r1 == -ni {
                left.substitute(vec![cd(c, &co, ratio(1, 1), n, 1)], c_side, Erratum::BoundaryFactor);
            } else {
                left.all(c_side);
            }

            let l_max = case.l2k1;
            let top = l_max.div_ceil(2) as i64;
            let factor = |l: i64| ratio(2 * ki + 1 - 2 * l, 2 * ki + 2);
            let d_terms = |from: usize| -> Terms {
                (from..=(l_max - 1) / 2)
                    .map(|l| cd(c, &co, factor(l as i64), 2 * l + 1, r + l as i64))
                    .collect()
            };
            if r1 < -top {
                right.all(co.odd_right(r1).into_iter().chain(d_terms(0)).collect());
            } else if r1 == -top {
                let general = co.odd_right(r1).into_iter().chain(d_terms(0)).collect();
                right.substitute(vec![cd(c, &co, ratio(1, 1), l_max, 0)], general, Erratum::BoundaryFactor);
            } else {
                if r1 == 1 {
                    let copied = vec![
                        ("a1*b0".to_string(), co.a(1) * co.b(0)),
                        ("a3*b0".to_string(), co.a(3) * co.b(0)),
                    ];
                    right.substitute(copied, co.odd_right(1), Erratum::CopiedProducts);
                } else {
                    right.all(co.odd_right(r1));
                }
                let lead = &c[1] * co.d(r);
                right.variant(
                    &format!("c1*d{r}"),
                    lead.clone(),
                    factor(0) * lead,
                    &[Erratum::LeadingFactor],
                );
                right.all(d_terms(1));
            }
        }
    }
    Ok((left.finish(reading), right.finish(reading)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn poly(coeffs: &[i64]) -> AnalyticPoly<Rational> {
        AnalyticPoly::from_dense(coeffs.iter().map(|&c| rat(c, 1)))
    }

    fn cs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn equal_analytic_parts_balance_in_every_branch() {
        let phi = poly(&[1, -1, 2, 3, 0, 1]);
        for c in [cs(&[0, 1]), cs(&[2, -1, 3]), cs(&[1, 1, -2, 1])] {
            for s in 0..10 {
                for k in 0..12 {
                    for parity in Parity::BOTH {
                        let (l, r) = eval_harmonic(&c, &phi, &phi, s, k, parity, Reading::Corrected).unwrap();
                        assert_eq!(l.total, r.total, "c={c:?} s={s} k={k} {parity:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn corrected_reading_matches_engine() {
        let phi = poly(&[1, 2, -1, 0, 3]);
        let psi = poly(&[-2, 1, 1, 3, 0, 2]);
        for c in [cs(&[0, 1]), cs(&[1, -2, 3]), cs(&[2, 1, 0, -1])] {
            for k in 0..12 {
                for parity in Parity::BOTH {
                    let (el, er) = harmonic_engine_sides(&c, &phi, &psi, parity.input_degree(k));
                    for s in 0..12 {
                        let (l, r) = eval_harmonic(&c, &phi, &psi, s, k, parity, Reading::Corrected).unwrap();
                        assert_eq!(l.total, el.coeff(s), "left c={c:?} s={s} k={k} {parity:?}");
                        assert_eq!(r.total, er.coeff(s), "right c={c:?} s={s} k={k} {parity:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_support_is_zero() {
        let phi = poly(&[1, 2]);
        let psi = poly(&[3]);
        let c = cs(&[1, 2, 3]);
        let (l, r) = eval_harmonic(&c, &phi, &psi, 0, 9, Parity::EvenInput, Reading::Printed).unwrap();
        assert_eq!((l.total, r.total), (rat(0, 1), rat(0, 1)));
    }

    #[test]
    fn row_two_s_minus_k_zero_on_small_power() {
        let phi = poly(&[1, 2, -1]);
        let psi = poly(&[2, -1, 1, 1, 3]);
        let c = cs(&[1, -1, 2]);
        for s in 1..4 {
            let k = 2 * s;
            let (el, er) = harmonic_engine_sides(&c, &phi, &psi, 2 * k);
            let (l, r) = eval_harmonic(&c, &phi, &psi, s, k, Parity::EvenInput, Reading::Printed).unwrap();
            assert_eq!(l.total, el.coeff(s));
            assert_eq!(r.total, er.coeff(s));
        }
    }

    #[test]
    fn rejects_constant_pbar() {
        let z = poly(&[0, 1]);
        assert_eq!(
            eval_harmonic(&cs(&[1]), &z, &z, 0, 0, Parity::EvenInput, Reading::Printed),
            Err(Error::TooFewCoefficients(1))
        );
    }
}

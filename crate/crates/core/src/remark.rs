//! The two counterexamples with a non-matching co-analytic power:
//! `f = φ + z̄ᵐ`, `g = ψ + z̄` for `m = 2, 3`, with `φ = ψ = z` by default.
//!
//! For `m = 2` the input is `z^{2k}`, for `m = 3` it is `z^{2k+1}`. Each row
//! compares the constant terms of `B_f B_g` and `B_g B_f` on that input, once
//! from the engine and once from the hand-computed item formulas.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::operator::slant_toeplitz_apply;
use crate::poly::AnalyticPoly;
use crate::scalar::{rat, Rational};
use crate::symbol::HarmonicSymbol;

pub const REMARK_K_MAX: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemarkVariant {
    /// `z̄²` against `z̄`, even inputs.
    Zbar2,
    /// `z̄³` against `z̄`, odd inputs.
    Zbar3,
}

impl RemarkVariant {
    pub fn name(self) -> &'static str {
        match self {
            RemarkVariant::Zbar2 => "zbar2",
            RemarkVariant::Zbar3 => "zbar3",
        }
    }

    pub fn power(self) -> usize {
        match self {
            RemarkVariant::Zbar2 => 2,
            RemarkVariant::Zbar3 => 3,
        }
    }

    /// Exponent of the input monomial at index `k`.
    pub fn input_degree(self, k: usize) -> usize {
        match self {
            RemarkVariant::Zbar2 => 2 * k,
            RemarkVariant::Zbar3 => 2 * k + 1,
        }
    }

    /// The constants claimed in print: index (when stated), left, right.
    pub fn printed_claim(self) -> (Option<usize>, Rational, Rational) {
        match self {
            RemarkVariant::Zbar2 => (Some(2), rat(0, 1), rat(3, 10)),
            RemarkVariant::Zbar3 => (None, rat(5, 1), rat(9, 1)),
        }
    }
}

impl std::str::FromStr for RemarkVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zbar2" => Ok(RemarkVariant::Zbar2),
            "zbar3" => Ok(RemarkVariant::Zbar3),
            other => Err(format!("unknown variant `{other}` (expected zbar2 or zbar3)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RemarkRow {
    pub k: usize,
    pub input_degree: usize,
    pub lhs_const: Rational,
    pub rhs_const: Rational,
    /// Constants assembled from the item formulas; only for `φ = ψ = z` and
    /// `k ≥ 1`, where every projection in the items is defined.
    pub item_consts: Option<(Rational, Rational)>,
}

impl RemarkRow {
    pub fn differs(&self) -> bool {
        self.lhs_const != self.rhs_const
    }

    fn to_json(&self) -> Value {
        json!({
            "k": self.input_degree,
            "index": self.k,
            "lhsConst": self.lhs_const.to_string(),
            "rhsConst": self.rhs_const.to_string(),
            "itemLhsConst": self.item_consts.as_ref().map(|(l, _)| l.to_string()),
            "itemRhsConst": self.item_consts.as_ref().map(|(_, r)| r.to_string()),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RemarkReport {
    pub variant: RemarkVariant,
    pub phi: AnalyticPoly<Rational>,
    pub psi: AnalyticPoly<Rational>,
    pub rows: Vec<RemarkRow>,
    /// Whether some scanned row reproduces the printed constants (at the
    /// printed index, when one is given).
    pub claim_reproduced: bool,
}

impl RemarkReport {
    /// The row the report is about: the printed index for `zbar2`, the first
    /// disagreement for `zbar3`.
    pub fn focus(&self) -> Option<&RemarkRow> {
        match self.variant.printed_claim().0 {
            Some(k) => self.rows.iter().find(|r| r.k == k),
            None => self.first_difference(),
        }
    }

    pub fn first_difference(&self) -> Option<&RemarkRow> {
        self.rows.iter().find(|r| r.differs())
    }

    /// First index where the item formulas disagree with the engine.
    pub fn first_item_mismatch(&self) -> Option<&RemarkRow> {
        self.rows.iter().find(|r| {
            r.item_consts
                .as_ref()
                .is_some_and(|(l, rr)| *l != r.lhs_const || *rr != r.rhs_const)
        })
    }

    pub fn to_json(&self) -> Value {
        let (claim_k, claim_l, claim_r) = self.variant.printed_claim();
        let focus = self.focus();
        json!({
            "variant": self.variant.name(),
            "phi": self.phi.to_string(),
            "psi": self.psi.to_string(),
            "k": focus.map(|r| r.input_degree),
            "index": focus.map(|r| r.k),
            "lhsConst": focus.map(|r| r.lhs_const.to_string()),
            "rhsConst": focus.map(|r| r.rhs_const.to_string()),
            "printedClaim": {
                "index": claim_k,
                "lhsConst": claim_l.to_string(),
                "rhsConst": claim_r.to_string(),
                "reproduced": self.claim_reproduced,
            },
            "flagged": !self.claim_reproduced,
            "firstItemMismatch": self.first_item_mismatch().map(|r| r.input_degree),
            "rows": self.rows.iter().map(RemarkRow::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `num/den` when the item exponent is zero and the formula is defined there.
fn item_const(num: i64, den: i64, exponent: i64) -> Rational {
    if exponent == 0 && den != 0 {
        rat(num, den)
    } else {
        Rational::zero()
    }
}

/// Constant terms of both sides assembled from the item formulas, as printed.
/// A constant survives the outer `W` or `WW` unchanged, so each side is the
/// sum of the item constants.
fn item_constants(variant: RemarkVariant, k: usize) -> (Rational, Rational) {
    let k = k as i64;
    match variant {
        RemarkVariant::Zbar2 => {
            let lhs = item_const(2 * k, 2 * k + 1, 2 * k + 1);
            let rhs = item_const(2 * k - 1, 2 * k + 1, 2 * k)
                + item_const((k - 1) * (2 * k - 1), k * (2 * k + 1), k - 2);
            (lhs, rhs)
        }
        RemarkVariant::Zbar3 => {
            let lhs = item_const(2 * k + 1, 2 * k + 2, 2 * k + 2)
                + item_const(k - 1, k + 2, k - 2)
                + item_const((k - 2) * (2 * k + 1), (k + 1) * (2 * k + 2), k - 3);
            let rhs = item_const(2 * k - 1, 2 * k + 2, 2 * k)
                + item_const(k + 1, k + 2, k)
                + item_const((k - 1) * (2 * k - 1), k * (2 * k + 2), k - 2);
            (lhs, rhs)
        }
    }
}

/// Evaluates both products on the variant's inputs for `k = 0..=10`.
pub fn remark_counterexample(
    variant: RemarkVariant,
    phi: &AnalyticPoly<Rational>,
    psi: &AnalyticPoly<Rational>,
) -> RemarkReport {
    let f = HarmonicSymbol::new(phi.clone(), AnalyticPoly::z_pow(variant.power()));
    let g = HarmonicSymbol::new(psi.clone(), AnalyticPoly::z_pow(1));
    let z = AnalyticPoly::z_pow(1);
    let printed_instance = *phi == z && *psi == z;
    let rows: Vec<RemarkRow> = (0..=REMARK_K_MAX)
        .map(|k| {
            let input = AnalyticPoly::z_pow(variant.input_degree(k));
            let lhs = slant_toeplitz_apply(&f, &slant_toeplitz_apply(&g, &input));
            let rhs = slant_toeplitz_apply(&g, &slant_toeplitz_apply(&f, &input));
            RemarkRow {
                k,
                input_degree: variant.input_degree(k),
                lhs_const: lhs.coeff(0),
                rhs_const: rhs.coeff(0),
                item_consts: (printed_instance && k >= 1).then(|| item_constants(variant, k)),
            }
        })
        .collect();
    let (claim_k, claim_l, claim_r) = variant.printed_claim();
    let claim_reproduced = rows.iter().any(|r| {
        claim_k.is_none_or(|k| r.k == k) && r.lhs_const == claim_l && r.rhs_const == claim_r
    });
    RemarkReport { variant, phi: phi.clone(), psi: psi.clone(), rows, claim_reproduced }
}

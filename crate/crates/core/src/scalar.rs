//! Scalar abstraction shared by the polynomial and operator layers.
//!
//! Every exact computation runs over [`Rational`]; the `f64`/`f32` instances
//! exist for approximate cross-checks and the orthonormal-basis export.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// Exact arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Field-like scalar the engine is generic over.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + ToPrimitive + Send + Sync
{
    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Whether arithmetic is exact, i.e. equality tests are meaningful.
    const EXACT: bool;
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    const EXACT: bool = true;
}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f64 / den as f64
    }

    const EXACT: bool = false;
}

impl Scalar for f32 {
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        num as f32 / den as f32
    }

    const EXACT: bool = false;
}

/// Shorthand for an exact `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

/// Parses the canonical text form (also accepts non-reduced input).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..500).prop_map(|(n, d)| rat(n, d))
    }

    fn reduced(r: &Rational) -> bool {
        r.denom() > &BigInt::zero() && r.numer().gcd(r.denom()) == BigInt::one()
    }

    #[test]
    fn fraction_addition_matches_cross_multiplication() {
        // 1/2 + 1/3 = (1*3 + 1*2) / (2*3)
        let sum = rat(1, 2) + rat(1, 3);
        assert_eq!(sum, rat(1 * 3 + 1 * 2, 2 * 3));
        assert_eq!(sum, rat(5, 6));
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(rational_to_string(&rat(6, -4)), "-3/2");
        assert_eq!(rational_to_string(&rat(4, 2)), "2");
        assert_eq!(rational_to_string(&Rational::zero()), "0");
        assert_eq!(parse_rational(" -6/4 "), Some(rat(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    proptest! {
        #[test]
        fn field_laws_hold_exactly(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            for r in [&a + &b, &a * &c, &a - &c] {
                prop_assert!(reduced(&r));
            }
        }

        #[test]
        fn text_round_trip(a in arb_rat()) {
            prop_assert_eq!(parse_rational(&rational_to_string(&a)), Some(a));
        }
    }
}

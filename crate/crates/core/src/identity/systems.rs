//! The 2×2 homogeneous systems obtained by subtracting consecutive instances
//! of the lemma identities. Each forces one pair of coefficient differences
//! to vanish when its matrix is invertible.

use serde_json::{json, Value};

use crate::linalg::determinant;
use crate::scalar::Rational;

use super::ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// `N = 1`, odd input: pins `a_{4t+3}` and `a_{2t+1}`.
    Linear,
    /// Odd `N`, odd input, first triple: pins `a_{4t+1}`.
    OddPowerFirst,
    /// Odd `N`, odd input, second triple: pins `a_{4t+3}`.
    OddPowerSecond,
    /// Even `N`, even input, first triple: pins `a_{4t}`.
    EvenPowerFirst,
    /// Even `N`, even input, second triple: pins `a_{4t+2}`.
    EvenPowerSecond,
}

impl SystemKind {
    pub const ALL: [SystemKind; 5] = [
        SystemKind::Linear,
        SystemKind::OddPowerFirst,
        SystemKind::OddPowerSecond,
        SystemKind::EvenPowerFirst,
        SystemKind::EvenPowerSecond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Linear => "linear",
            SystemKind::OddPowerFirst => "odd-power-first",
            SystemKind::OddPowerSecond => "odd-power-second",
            SystemKind::EvenPowerFirst => "even-power-first",
            SystemKind::EvenPowerSecond => "even-power-second",
        }
    }

    /// The coefficient matrix as printed.
    pub fn printed_matrix(self, t: i64, n: i64) -> [[Rational; 2]; 2] {
        let p = |a: i64, b: i64| ratio(2, a * b);
        let q = |a: i64, b: i64| ratio(4 * n, a * b);
        match self {
            SystemKind::Linear => [
                [p(2 * t + 4, 2 * t + 6), ratio(1, 8)],
                [p(2 * t + 6, 2 * t + 8), ratio(1, 24)],
            ],
            SystemKind::OddPowerFirst => [
                [p(2 * t + n + 1, 2 * t + n + 3), q(2 * n, 2 * n + 4)],
                [p(2 * t + n + 3, 2 * t + n + 5), q(2 * n + 4, 2 * n + 8)],
            ],
            SystemKind::OddPowerSecond => [
                [p(2 * t + n + 1, 2 * t + n + 3), q(2 * n + 2, 2 * n + 6)],
                [p(2 * t + n + 3, 2 * t + n + 5), q(2 * n + 6, 2 * n + 10)],
            ],
            SystemKind::EvenPowerFirst => [
                [p(2 * t + n + 1, 2 * t + n + 3), q(2 * n + 1, 2 * n + 5)],
                [p(2 * t + n + 3, 2 * t + n + 5), q(2 * n + 5, 2 * n + 9)],
            ],
            SystemKind::EvenPowerSecond => [
                [p(2 * t + n + 3, 2 * t + n + 5), q(2 * n + 3, 2 * n + 7)],
                [p(2 * t + n + 5, 2 * t + n + 7), q(2 * n + 7, 2 * n + 11)],
            ],
        }
    }

    /// The two factors multiplying the unknowns in each of the three source
    /// equations `i = 0, 1, 2`.
    fn source_factors(self, t: i64, n: i64, i: i64) -> (Rational, Rational) {
        let (outer_shift, inner_num, inner_den) = match self {
            SystemKind::Linear => return (ratio(2 * t + 3 + 2 * i, 2 * t + 4 + 2 * i), ratio(3 + 4 * i, 4 + 4 * i)),
            SystemKind::OddPowerFirst => (0, n + 4 * i, 2 * n + 4 * i),
            SystemKind::OddPowerSecond => (2, n + 2 + 4 * i, 2 * n + 2 + 4 * i),
            SystemKind::EvenPowerFirst => (0, n + 1 + 4 * i, 2 * n + 1 + 4 * i),
            SystemKind::EvenPowerSecond => (2, n + 3 + 4 * i, 2 * n + 3 + 4 * i),
        };
        let u = 2 * t + n + outer_shift + 2 * i;
        (ratio(u, u + 1), ratio(inner_num, inner_den))
    }

    /// The matrix obtained by actually subtracting consecutive source
    /// equations: row `i` is equation `i+1` minus equation `i`.
    pub fn rederived_matrix(self, t: i64, n: i64) -> [[Rational; 2]; 2] {
        let row = |i: i64| {
            let (f0, g0) = self.source_factors(t, n, i);
            let (f1, g1) = self.source_factors(t, n, i + 1);
            [f1 - f0, g1 - g0]
        };
        [row(0), row(1)]
    }

    /// The pair of coefficient differences the system solves for.
    pub fn unknowns(self, t: i64, n: i64) -> [String; 2] {
        let (high, low) = match self {
            SystemKind::Linear => (4 * t + 3, ratio(2 * t + 1, 1)),
            SystemKind::OddPowerFirst => (4 * t + 1, ratio(2 * t - n + 1, 1) + ratio(n - 1, 2)),
            SystemKind::OddPowerSecond => (4 * t + 3, ratio(2 * t + 2 - n, 1) + ratio(n - 1, 2)),
            SystemKind::EvenPowerFirst => (4 * t, ratio(2 * t - n + 1, 1) + ratio(n, 2)),
            SystemKind::EvenPowerSecond => (4 * t + 2, ratio(2 * t - n + 1, 1) + ratio(n, 2)),
        };
        [format!("a*b{high} - a{high}"), format!("a{low} - a*b{low}")]
    }
}

impl std::str::FromStr for SystemKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SystemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown system `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SystemReport {
    pub kind: SystemKind,
    pub t: i64,
    pub n: i64,
    pub unknowns: [String; 2],
    pub matrix: [[Rational; 2]; 2],
    pub determinant: Rational,
    pub rederived: [[Rational; 2]; 2],
    pub rederived_determinant: Rational,
}

impl SystemReport {
    pub fn invertible(&self) -> bool {
        self.determinant != ratio(0, 1)
    }

    pub fn matches_rederivation(&self) -> bool {
        self.matrix == self.rederived
    }

    pub fn to_json(&self) -> Value {
        let m = |x: &[[Rational; 2]; 2]| {
            x.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()
        };
        json!({
            "system": self.kind.name(),
            "t": self.t,
            "n": self.n,
            "unknowns": self.unknowns,
            "matrix": m(&self.matrix),
            "determinant": self.determinant.to_string(),
            "invertible": self.invertible(),
            "rederivedMatrix": m(&self.rederived),
            "rederivedDeterminant": self.rederived_determinant.to_string(),
            "matchesRederivation": self.matches_rederivation(),
        })
    }
}

pub fn check_system(kind: SystemKind, t: i64, n: i64) -> SystemReport {
    assert!(t >= 0 && n >= 1, "need t >= 0 and N >= 1");
    let matrix = kind.printed_matrix(t, n);
    let rederived = kind.rederived_matrix(t, n);
    let det = |m: &[[Rational; 2]; 2]| determinant(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    SystemReport {
        kind,
        t,
        n,
        unknowns: kind.unknowns(t, n),
        determinant: det(&matrix),
        rederived_determinant: det(&rederived),
        matrix,
        rederived,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn linear_system_at_zero() {
        let r = check_system(SystemKind::Linear, 0, 1);
        let direct = rat(2, 24) * rat(1, 24) - rat(1, 8) * rat(2, 48);
        assert_eq!(r.determinant, direct);
        assert!(r.invertible());
        assert!(r.matches_rederivation());
    }

    #[test]
    fn rederivation_agrees_except_one_system() {
        for t in 0..20 {
            for n in 1..=6 {
                for kind in SystemKind::ALL {
                    let r = check_system(kind, t, n);
                    assert_eq!(
                        r.matches_rederivation(),
                        kind != SystemKind::OddPowerSecond,
                        "{kind:?} t={t} n={n}"
                    );
                    assert!(r.rederived_determinant != rat(0, 1));
                }
            }
        }
    }

    #[test]
    fn printed_second_odd_system_is_singular_at_zero() {
        for n in 1..=6 {
            let r = check_system(SystemKind::OddPowerSecond, 0, n);
            assert_eq!(r.determinant, rat(0, 1), "N={n}");
        }
        assert!(check_system(SystemKind::OddPowerSecond, 1, 3).invertible());
    }
}

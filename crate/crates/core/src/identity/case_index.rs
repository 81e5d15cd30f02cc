//! The case functions that bound the co-analytic sums.

/// For co-analytic degree `N` and index `k`:
/// `K₂ₖ = min(2k, N)`, `M₂ₖ` the largest even number `≤ K₂ₖ`, and `L₂ₖ₊₁`
/// the largest odd number `≤ min(2k+1, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseIndex {
    pub n: usize,
    pub k: usize,
    pub k2k: usize,
    pub k2k1: usize,
    pub m2k: usize,
    pub l2k1: usize,
}

impl CaseIndex {
    /// Evaluates the printed piecewise definitions.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n >= 1, "N must be at least 1");
        let m2k = if 2 * k <= n {
            2 * k
        } else if n % 2 == 1 {
            n - 1
        } else {
            n
        };
        let l2k1 = if 2 * k < n {
            2 * k + 1
        } else if n.is_multiple_of(2) {
            n - 1
        } else {
            n
        };
        CaseIndex { n, k, k2k: (2 * k).min(n), k2k1: (2 * k + 1).min(n), m2k, l2k1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_against_parity_rounding() {
        for n in 1..=10 {
            for k in 0..=50 {
                let c = CaseIndex::new(n, k);
                assert_eq!(c.k2k, (2 * k).min(n));
                let even = (0..=c.k2k).rev().find(|x| x % 2 == 0).unwrap();
                let odd = (0..=c.k2k1).rev().find(|x| x % 2 == 1).unwrap();
                assert_eq!(c.m2k, even, "N={n} k={k}");
                assert_eq!(c.l2k1, odd, "N={n} k={k}");
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(CaseIndex::new(3, 0).m2k, 0);
        assert_eq!(CaseIndex::new(3, 1).m2k, 2);
        assert_eq!(CaseIndex::new(3, 2).m2k, 2);
        assert_eq!(CaseIndex::new(4, 5).m2k, 4);
        assert_eq!(CaseIndex::new(4, 5).l2k1, 3);
        assert_eq!(CaseIndex::new(1, 0).l2k1, 1);
    }
}

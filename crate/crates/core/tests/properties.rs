//! Property tests for the operator and commutator invariants, driven by the
//! seeded generators.

use proptest::prelude::*;

use slant_lab::commutator::{commutator_column, scan_commutator, scan_commutator_sequential, theorem_verdict};
use slant_lab::random::{distinct_pair, nonzero_rational, random_coanalytic, random_poly, random_symbol, rng_from_seed};
use slant_lab::{slant_adjoint_apply, slant_apply, slant_toeplitz_apply, toeplitz_apply, Poly, Symbol};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn slant_adjoint_is_the_bergman_adjoint(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = random_poly(&mut rng, 40);
        let q = random_poly(&mut rng, 40);
        prop_assert_eq!(slant_apply(&p).bergman_inner(&q), p.bergman_inner(&slant_adjoint_apply(&q)));
    }

    #[test]
    fn operators_are_linear(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let sym = random_symbol(&mut rng, 4, 4);
        let p = random_poly(&mut rng, 20);
        let q = random_poly(&mut rng, 20);
        let alpha = nonzero_rational(&mut rng);
        let combined = &p.scale(&alpha) + &q;
        let ops: [&dyn Fn(&Poly) -> Poly; 4] = [
            &|x| toeplitz_apply(&sym, x),
            &|x| slant_apply(x),
            &|x| slant_adjoint_apply(x),
            &|x| slant_toeplitz_apply(&sym, x),
        ];
        for op in ops {
            prop_assert_eq!(op(&combined), &op(&p).scale(&alpha) + &op(&q));
        }
    }

    #[test]
    fn commutator_is_antisymmetric(seed in any::<u64>(), k in 0usize..16) {
        let mut rng = rng_from_seed(seed);
        let f = random_symbol(&mut rng, 4, 3);
        let g = random_symbol(&mut rng, 4, 3);
        prop_assert_eq!(commutator_column(&f, &g, k), -commutator_column(&g, &f, k));
    }

    #[test]
    fn parallel_scan_matches_sequential(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let f = random_symbol(&mut rng, 4, 3);
        let g = random_symbol(&mut rng, 4, 3);
        prop_assert_eq!(scan_commutator(&f, &g, 20), scan_commutator_sequential(&f, &g, 20));
    }

    #[test]
    fn verdict_survives_common_scaling(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let n = 1 + (seed % 3) as usize;
        let bar = random_coanalytic(&mut rng, n);
        let (phi, psi) = distinct_pair(&mut rng, 3);
        let c = nonzero_rational(&mut rng);
        let pbar = Symbol::new(Poly::zero(), bar);
        let plain = theorem_verdict(&pbar, &phi, &psi, None).unwrap();
        let scaled = theorem_verdict(&pbar.scale(&c), &phi.scale(&c), &psi.scale(&c), Some(plain.scan.k_max)).unwrap();
        prop_assert_eq!(plain.verdict.label(), scaled.verdict.label());
        let (a, b) = (plain.scan.first_witness.unwrap(), scaled.scan.first_witness.unwrap());
        prop_assert_eq!((a.k, a.degree), (b.k, b.degree));
        prop_assert_eq!(&a.value * &c * &c, b.value);
    }
}

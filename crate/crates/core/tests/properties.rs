mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn d_tau_leibniz_and_additivity(f in ratfn(), g in ratfn()) {
        leibniz(&f, &g)?;
    }

    #[test]
    fn pullback_is_functorial(
        phi in [small_poly(), small_poly()],
        psi in [small_poly(), small_poly()],
        eta in (poly(), poly(), poly()),
    ) {
        pullback_functorial(&phi, &psi, &eta)?;
    }

    #[test]
    fn normal_form_is_multiplicative(curve in 0..3usize, a in laurent(), b in laurent()) {
        normal_form_multiplicative(curve, &a, &b)?;
    }

    #[test]
    fn project_and_cobound_agree(curve in 0..3usize, z in laurent()) {
        project_cobound(curve, &z)?;
    }

    #[test]
    fn basis_sizes(d in 3..=8i32) {
        basis_counts(d)?;
    }

    #[test]
    fn euclid_identity_holds(a in univariate(), b in univariate()) {
        euclid_identity(&a, &b)?;
    }

    #[test]
    fn splitting_roundtrips(curve in 0..3usize, h in poly()) {
        splitting_roundtrip(curve, &h)?;
    }
}

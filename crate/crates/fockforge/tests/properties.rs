//! Randomized invariants complementing the exhaustive sweeps.

use proptest::prelude::*;

use fockforge::fermion::{dimension_vector_of, maya_of_dimension_vector, MayaState};
use fockforge::partition::{from_core_quotient, k_core, k_quotient, Partition};
use fockforge::symfunc::{Basis, SymElement};

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_part, 0..=max_len)
        .prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn abacus_round_trip(lam in arb_partition(9, 7), k in 2u32..=5) {
        let core = k_core(&lam, k);
        let quot = k_quotient(&lam, k);
        prop_assert_eq!(core.size() + k * quot.total_size(), lam.size());
        prop_assert_eq!(from_core_quotient(&core, &quot, k), Ok(lam));
    }

    #[test]
    fn conjugation_is_an_involution(lam in arb_partition(9, 7)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn maya_dimension_vector_round_trip(
        lam in arb_partition(6, 5),
        m in -4i64..=4,
    ) {
        let s = MayaState::from_partition(lam, m);
        let d = dimension_vector_of(&s);
        prop_assert_eq!(maya_of_dimension_vector(&d), Ok(s));
    }

    #[test]
    fn basis_conversion_round_trips(
        lam in arb_partition(4, 3),
        from in 0usize..5,
        to in 0usize..5,
    ) {
        let bases = [
            Basis::Power,
            Basis::Schur,
            Basis::Monomial,
            Basis::Elementary,
            Basis::Homogeneous,
        ];
        let x = SymElement::basis_element(12, bases[from], lam).unwrap();
        prop_assert_eq!(x.convert(bases[to]).convert(bases[from]), x);
    }

    #[test]
    fn hall_inner_is_symmetric(
        lam in arb_partition(4, 2),
        mu in arb_partition(4, 2),
    ) {
        let x = SymElement::basis_element(8, Basis::Schur, lam).unwrap();
        let y = SymElement::basis_element(8, Basis::Homogeneous, mu).unwrap();
        prop_assert_eq!(x.hall_inner(&y), y.hall_inner(&x));
    }

    #[test]
    fn multiplication_commutes(
        lam in arb_partition(3, 3),
        mu in arb_partition(3, 3),
    ) {
        let x = SymElement::basis_element(10, Basis::Schur, lam).unwrap();
        let y = SymElement::basis_element(10, Basis::Schur, mu).unwrap();
        prop_assert_eq!(x.multiply(&y), y.multiply(&x));
    }

    #[test]
    fn heisenberg_adjointness(
        lam in arb_partition(3, 3),
        mu in arb_partition(3, 3),
        n in 1i64..=3,
    ) {
        let x = SymElement::basis_element(12, Basis::Power, lam).unwrap();
        let y = SymElement::basis_element(12, Basis::Power, mu).unwrap();
        let lhs = x.heisenberg_p(n).unwrap().hall_inner(&y);
        let rhs = x.hall_inner(&y.heisenberg_p(-n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

mod common;

use common::props;
use common::*;
use proptest::prelude::*;

fn cheap() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        ..ProptestConfig::default()
    }
}

fn heavy() -> ProptestConfig {
    ProptestConfig {
        cases: 128,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cheap())]

    #[test]
    fn orders_are_multiplicative(order in orders(), a in monomial(NVARS, 5), b in monomial(NVARS, 5), c in monomial(NVARS, 5)) {
        props::orders_are_multiplicative(order, a, b, c)?;
    }

    #[test]
    fn ring_axioms(a in poly(ring(), 5, 3), b in poly(ring(), 5, 3), c in poly(ring(), 5, 3)) {
        props::ring_axioms(a, b, c)?;
    }

    #[test]
    fn reduction_is_idempotent(f in poly(ring(), 6, 4), divisors in proptest::collection::vec(poly(ring(), 3, 2), 1..4)) {
        props::reduction_is_idempotent(f, divisors)?;
    }
}

proptest! {
    #![proptest_config(heavy())]

    #[test]
    fn groebner_bases_certify(i in homogeneous_ideal(ring())) {
        props::groebner_bases_certify(i)?;
    }

    #[test]
    fn ideals_are_closed(i in homogeneous_ideal(ring()), h in poly(ring(), 3, 2), k in poly(ring(), 3, 2)) {
        props::ideals_are_closed(i, h, k)?;
    }

    #[test]
    fn intersection_laws(i in homogeneous_ideal(small_ring()), j in homogeneous_ideal(small_ring()), k in homogeneous_ideal(small_ring())) {
        props::intersection_laws(i, j, k)?;
    }

    #[test]
    fn saturation_index_is_consistent(i in monomialish_ideal(), l in linear_form(small_ring())) {
        props::saturation_index_is_consistent(i, l)?;
    }

    #[test]
    fn euler_characteristic_matches_hilbert_numerator(i in homogeneous_ideal(ring())) {
        props::euler_characteristic_matches_hilbert_numerator(i)?;
    }
}

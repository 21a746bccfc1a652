mod support;

use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: TRIALS, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn polynomial_ring(t in (poly(), poly(), poly())) { ring_axioms(t)?; }

    #[test]
    fn gaussian_field(t in (gq(), gq())) { field_axioms(t)?; }

    #[test]
    fn clifford_product_associates(t in (elem(), elem(), elem())) { clifford_associativity(t)?; }

    #[test]
    fn trace_is_cyclic(t in (restricted_elem(), restricted_elem())) { trace_cyclicity(t)?; }

    #[test]
    fn vectors_square_to_minus_norm(u in [gq(), gq(), gq(), gq()]) { vector_square(u)?; }

    #[test]
    fn projection_is_idempotent(f in restricted_elem()) { projection_idempotent(f)?; }

    #[test]
    fn projection_complement_reconstructs(f in restricted_elem()) { projection_complement(f)?; }

    #[test]
    fn derivatives_commute(t in (field_elem(), 1u8..=3, 1u8..=3)) { derivative_commutation(t)?; }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn line_integral_agrees_with_quadrature(f in decaying()) { line_integral_matches_quadrature(f)?; }
}


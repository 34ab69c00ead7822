use proptest::prelude::*;
use rotmatch_core::cartan::{parse_group, CartanClass, CartanGroup};
use rotmatch_core::diophantine::{solve_rn_bruteforce, solve_rn_range};
use rotmatch_core::homotopy::{stable_pi, StableFamily};
use rotmatch_core::poincare::{poincare_polynomial, IntPolynomial};
use rotmatch_core::screener::{screen, Verdict};

fn class() -> impl Strategy<Value = CartanClass> {
    prop_oneof![Just(CartanClass::A), Just(CartanClass::B), Just(CartanClass::C), Just(CartanClass::D)]
}

fn group(max_rank: u64) -> impl Strategy<Value = CartanGroup> {
    (class(), 0..max_rank).prop_map(|(c, r)| CartanGroup::new(c, u64::from(c.min_rank()) + r).unwrap())
}

#[test]
fn bott_tables_at_low_degrees() {
    use rotmatch_core::homotopy::FgAbelianGroup as G;
    let z = G::integers;
    let z2 = || G::cyclic(2);
    let o = G::trivial;
    let u: Vec<G> = (0..2).map(|k| stable_pi(StableFamily::U, k)).collect();
    assert_eq!(u, [o(), z()]);
    let sp: Vec<G> = (0..8).map(|k| stable_pi(StableFamily::Sp, k)).collect();
    assert_eq!(sp, [o(), o(), o(), z(), z2(), z2(), o(), z()]);
    let orth: Vec<G> = (0..8).map(|k| stable_pi(StableFamily::O, k)).collect();
    assert_eq!(orth, [z2(), z2(), o(), z(), o(), o(), o(), z()]);
}

#[test]
fn bott_periodicity_and_cross_relations() {
    for k in 0..=64 {
        assert_eq!(stable_pi(StableFamily::U, k), stable_pi(StableFamily::U, k + 2));
        assert_eq!(stable_pi(StableFamily::O, k), stable_pi(StableFamily::O, k + 8));
        assert_eq!(stable_pi(StableFamily::Sp, k), stable_pi(StableFamily::Sp, k + 8));
        assert_eq!(stable_pi(StableFamily::O, k), stable_pi(StableFamily::Sp, k + 4));
        assert_eq!(stable_pi(StableFamily::Sp, k), stable_pi(StableFamily::O, k + 4));
    }
}

proptest! {
    #[test]
    fn parse_inverts_rendering(g in group(500)) {
        prop_assert_eq!(parse_group(&g.name()).unwrap(), g);
        prop_assert_eq!(parse_group(&g.cartan_label()).unwrap(), g);
    }

    #[test]
    fn screening_is_symmetric(a in group(24), b in group(24)) {
        let ab = screen(&a, &b);
        let ba = screen(&b, &a);
        prop_assert_eq!(ab.verdict, ba.verdict);
        prop_assert_eq!(ab.poly.is_equal(), ba.poly.is_equal());
        match (ab.homotopy.witness(), ba.homotopy.witness()) {
            (Some(x), Some(y)) => {
                prop_assert_eq!(x.k, y.k);
                prop_assert_eq!(&x.value_a, &y.value_b);
                prop_assert_eq!(&x.value_b, &y.value_a);
            }
            (None, None) => {}
            _ => prop_assert!(false, "witness present on one side only"),
        }
    }

    #[test]
    fn screening_is_reflexive(g in group(40)) {
        prop_assert_eq!(screen(&g, &g).verdict, Verdict::CandidateHomeomorphism);
    }

    #[test]
    fn verdict_matches_stage_results(a in group(24), b in group(24)) {
        let r = screen(&a, &b);
        let expected = if r.dim_a != r.dim_b {
            Verdict::DimensionMismatch
        } else if !r.poly_equal() || r.homotopy.witness().is_some() {
            Verdict::TopologicallyDistinct
        } else {
            Verdict::CandidateHomeomorphism
        };
        prop_assert_eq!(r.verdict, expected);
        if let Some(w) = r.homotopy.witness() {
            prop_assert!(rotmatch_core::homotopy::pi(&a, w.k).is_ok());
            prop_assert!(rotmatch_core::homotopy::pi(&b, w.k).is_ok());
        }
    }

    #[test]
    fn rn_sweep_is_partition_independent(cut in 1u32..300, max_b in 300u32..400) {
        let mut parts = solve_rn_range(1..=cut);
        parts.extend(solve_rn_range(cut + 1..=max_b));
        prop_assert_eq!(parts, solve_rn_bruteforce(max_b));
    }

    #[test]
    fn binomial_products_commute(mut shifts in proptest::collection::vec(1usize..20, 0..8)) {
        let mut a = IntPolynomial::one();
        for &s in &shifts { a.mul_binomial(s); }
        shifts.reverse();
        let mut b = IntPolynomial::one();
        for &s in &shifts { b.mul_binomial(s); }
        prop_assert_eq!(&a, &b);
        prop_assert!(a.is_palindromic());
    }

    #[test]
    fn betti_vanishes_above_dimension(g in group(30), extra in 1usize..50) {
        let p = poincare_polynomial(&g);
        prop_assert!(num_traits::Zero::is_zero(&p.coefficient(g.dimension() as usize + extra)));
    }
}

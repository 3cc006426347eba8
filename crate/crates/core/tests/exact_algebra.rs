#[allow(dead_code)]
mod common;

use azumaya_core::exact_algebra::{
    coprime_basis, multiplicity_at, places_of, poly_gcd, squarefree_decompose,
};
use azumaya_core::function_field::{valuation, RationalFunction};
use azumaya_core::{Place, Polynomial};
use common::{expand_roots, order_at, poly_from_i128, q};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config() -> Config {
    Config {
        cases: 160,
        rng_seed: RngSeed::Fixed(0x5eed_0001),
        failure_persistence: None,
        ..Config::default()
    }
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| Polynomial::from_ints(&c))
}

fn arb_nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    arb_poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// A root list with repeats, so squarefree parts are nontrivial.
fn arb_roots() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 0..=6)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn gcd_divides_both_and_is_monic(a in arb_nonzero_poly(6), b in arb_nonzero_poly(6), c in arb_nonzero_poly(3)) {
        let (a, b) = (&a * &c, &b * &c);
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(c.monic().divides(&g));
    }

    #[test]
    fn squarefree_decomposition_reconstructs(c in -5i64..=5, roots in arb_roots(), extra in arb_nonzero_poly(3)) {
        prop_assume!(c != 0);
        let a = &poly_from_i128(&expand_roots(c, &roots)) * &extra;
        let d = squarefree_decompose(&a).unwrap();
        prop_assert_eq!(d.expand(), a.clone());
        for (i, (pi, _)) in d.parts.iter().enumerate() {
            prop_assert!(pi.is_monic());
            prop_assert!(poly_gcd(pi, &pi.derivative()).unwrap().is_one());
            for (pj, _) in &d.parts[i + 1..] {
                prop_assert!(poly_gcd(pi, pj).unwrap().is_one());
            }
        }
    }

    #[test]
    fn multiplicity_matches_root_count(c in -5i64..=5, roots in arb_roots(), r in -4i64..=4) {
        prop_assume!(c != 0);
        let a = poly_from_i128(&expand_roots(c, &roots));
        let expected = roots.iter().filter(|&&x| x == r).count() as u32;
        prop_assert_eq!(multiplicity_at(&a, &Place::at(q(r))).unwrap(), expected);
        prop_assert_eq!(order_at(&a, &q(r)), expected);
    }

    #[test]
    fn coprime_basis_reconstructs(inputs in prop::collection::vec(arb_nonzero_poly(5), 1..4), shared in arb_nonzero_poly(3)) {
        let inputs: Vec<Polynomial> = inputs.iter().map(|a| a * &shared).collect();
        let cb = coprime_basis(&inputs).unwrap();
        for (i, a) in inputs.iter().enumerate() {
            prop_assert_eq!(&cb.reconstruct(i), a);
        }
        for (i, x) in cb.basis.iter().enumerate() {
            prop_assert!(x.is_monic() && !x.is_constant());
            for y in &cb.basis[i + 1..] {
                prop_assert!(poly_gcd(x, y).unwrap().is_one());
            }
        }
        let split = cb.split_rational_roots(&inputs);
        for (i, a) in inputs.iter().enumerate() {
            prop_assert_eq!(&split.reconstruct(i), a);
        }
    }

    #[test]
    fn degree_formula(num in arb_nonzero_poly(6), den in arb_nonzero_poly(6)) {
        let f = RationalFunction::new(num, den).unwrap();
        let mut total: i64 = valuation(&f, &Place::Infinity).unwrap();
        for v in places_of(&[f.numer().clone(), f.denom().clone()]).unwrap() {
            total += v.degree() as i64 * valuation(&f, &v).unwrap();
        }
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn valuation_is_additive(a in arb_nonzero_poly(5), b in arb_nonzero_poly(5), c in arb_nonzero_poly(4), r in -3i64..=3) {
        let f = RationalFunction::new(a, c.clone()).unwrap();
        let g = RationalFunction::new(b, c).unwrap();
        for v in [Place::at(q(r)), Place::Infinity, Place::Finite(Polynomial::from_ints(&[1, 0, 1]))] {
            prop_assert_eq!(
                valuation(&(&f * &g), &v).unwrap(),
                valuation(&f, &v).unwrap() + valuation(&g, &v).unwrap()
            );
        }
    }
}

#[test]
fn multiplicities_on_a_fixed_root_list() {
    // 2 (t - 1)^3 (t + 2) t^2
    let a = poly_from_i128(&expand_roots(2, &[1, 1, 1, -2, 0, 0]));
    for (r, m) in [(1, 3), (-2, 1), (0, 2), (5, 0)] {
        assert_eq!(multiplicity_at(&a, &Place::at(q(r))).unwrap(), m);
    }
    assert_eq!(multiplicity_at(&a, &Place::Infinity).unwrap(), 0);
}

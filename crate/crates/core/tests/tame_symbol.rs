#[allow(dead_code)]
mod common;

use azumaya_core::tame_symbol::{reciprocity_product, residue_norm, tame, ResidueElement, ResidueValue};
use azumaya_core::{Place, Polynomial, Rational, RationalFunction};
use common::{q, random_factored};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: usize = 150;

/// Norm of `value` in Q[t]/(pi) as the determinant of multiplication by
/// `value`, by Gaussian elimination over Q.
fn det_norm(pi: &Polynomial, value: &Polynomial) -> Rational {
    let d = pi.degree().unwrap();
    let reduce = |c: &mut Vec<Rational>| {
        // monic pi: t^d = -(pi - t^d)
        while c.len() > d {
            let top = c.pop().unwrap();
            let shift = c.len() - d;
            for (i, pc) in pi.coeffs()[..d].iter().enumerate() {
                c[shift + i] -= &top * pc;
            }
        }
        c.resize(d, q(0));
    };
    let mut m: Vec<Vec<Rational>> = Vec::new();
    for i in 0..d {
        let mut col = vec![q(0); i];
        col.extend(value.coeffs().iter().cloned());
        reduce(&mut col);
        m.push(col);
    }
    let mut det = q(1);
    for k in 0..d {
        let Some(piv) = (k..d).find(|&r| m[r][k] != q(0)) else {
            return q(0);
        };
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        let p = m[k][k].clone();
        det *= &p;
        for r in k + 1..d {
            let f = &m[r][k] / &p;
            let (upper, lower) = m.split_at_mut(r);
            for (x, y) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

fn residue_poly(r: &ResidueElement) -> Polynomial {
    match &r.value {
        ResidueValue::Poly(p) => p.clone(),
        ResidueValue::Rational(x) => Polynomial::constant(x.clone()),
    }
}

fn sample_places(rng: &mut ChaCha8Rng, a: &common::Factored, b: &common::Factored) -> Vec<Place> {
    let mut places = a.places();
    places.extend(b.places());
    places.push(Place::at(q(rng.gen_range(-7..=7))));
    places.push(Place::Finite(Polynomial::from_ints(&[rng.gen_range(1..=5), 0, 1])));
    places.push(Place::Infinity);
    places.dedup();
    places
}

#[test]
fn bimultiplicative_in_both_slots() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..CASES {
        let (a1, a2, b) = (
            random_factored(&mut rng, true),
            random_factored(&mut rng, true),
            random_factored(&mut rng, true),
        );
        let (fa1, fa2, fb) = (a1.value(), a2.value(), b.value());
        let prod = &fa1 * &fa2;
        let mut places = sample_places(&mut rng, &a1, &b);
        places.extend(a2.places());
        for v in places {
            let lhs = tame(&prod, &fb, &v).unwrap();
            let rhs = tame(&fa1, &fb, &v).unwrap().mul(&tame(&fa2, &fb, &v).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{{a1 a2, b}} at {v}");
            let lhs = tame(&fb, &prod, &v).unwrap();
            let rhs = tame(&fb, &fa1, &v).unwrap().mul(&tame(&fb, &fa2, &v).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "{{b, a1 a2}} at {v}");
        }
    }
}

#[test]
fn antisymmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..CASES {
        let (a, b) = (random_factored(&mut rng, true), random_factored(&mut rng, true));
        for v in sample_places(&mut rng, &a, &b) {
            let ab = tame(&a.value(), &b.value(), &v).unwrap();
            let ba = tame(&b.value(), &a.value(), &v).unwrap();
            assert!(ab.mul(&ba).unwrap().is_one(), "at {v}");
        }
    }
}

#[test]
fn steinberg_relation() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    while checked < CASES {
        let a = random_factored(&mut rng, true);
        let fa = a.value();
        let one_minus = &RationalFunction::one() - &fa;
        if one_minus.is_zero() {
            continue;
        }
        let mut places = azumaya_core::exact_algebra::places_of(&[
            fa.numer().clone(),
            fa.denom().clone(),
            one_minus.numer().clone(),
            one_minus.denom().clone(),
        ])
        .unwrap();
        places.push(Place::Infinity);
        for v in places {
            assert!(tame(&fa, &one_minus, &v).unwrap().is_one(), "{{a, 1 - a}} at {v}");
        }
        checked += 1;
    }
}

#[test]
fn units_have_trivial_symbol() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..CASES {
        let (a, b) = (random_factored(&mut rng, true), random_factored(&mut rng, true));
        let (fa, fb) = (a.value(), b.value());
        for v in sample_places(&mut rng, &a, &b) {
            if fa.valuation(&v).unwrap() == 0 && fb.valuation(&v).unwrap() == 0 {
                assert!(tame(&fa, &fb, &v).unwrap().is_one(), "at {v}");
            }
        }
    }
}

#[test]
fn weil_reciprocity() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..CASES {
        let (a, b) = (random_factored(&mut rng, true), random_factored(&mut rng, true));
        assert_eq!(reciprocity_product(&a.value(), &b.value()).unwrap(), q(1), "{a:?} {b:?}");
    }
}

#[test]
fn residue_norm_matches_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..CASES {
        let (a, b) = (random_factored(&mut rng, true), random_factored(&mut rng, true));
        for v in sample_places(&mut rng, &a, &b) {
            let Place::Finite(pi) = &v else { continue };
            let r = tame(&a.value(), &b.value(), &v).unwrap();
            assert_eq!(residue_norm(&r).unwrap(), det_norm(pi, &residue_poly(&r)), "at {v}");
        }
    }
}

#[test]
fn determinant_oracle_sanity() {
    // N(t) in Q(i) is 1, N(1 + t) is 2, N(3) is 9
    let pi = Polynomial::from_ints(&[1, 0, 1]);
    assert_eq!(det_norm(&pi, &Polynomial::from_ints(&[0, 1])), q(1));
    assert_eq!(det_norm(&pi, &Polynomial::from_ints(&[1, 1])), q(2));
    assert_eq!(det_norm(&pi, &Polynomial::from_ints(&[3])), q(9));
}

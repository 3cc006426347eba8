//! Test-side oracles and generators. Everything here recomputes from raw
//! integer data (root lists, coefficient vectors) rather than through the
//! library's own polynomial algorithms.

use azumaya_core::{Place, Polynomial, Rational, RationalFunction, WeierstrassData};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Coefficients, constant term first, of `c * prod (t - r)`, expanded in i128.
pub fn expand_roots(c: i64, roots: &[i64]) -> Vec<i128> {
    let mut coeffs = vec![c as i128];
    for &r in roots {
        let mut next = vec![0i128; coeffs.len() + 1];
        for (i, &a) in coeffs.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r as i128;
        }
        coeffs = next;
    }
    coeffs
}

pub fn poly_from_i128(c: &[i128]) -> Polynomial {
    Polynomial::from_coeffs(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
}

pub fn eval_coeffs(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(q(0), |acc, a| acc * x + a)
}

fn deriv_coeffs(c: &[Rational]) -> Vec<Rational> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * q(i as i64))
        .collect()
}

/// Order of vanishing at `t = r`, by repeated differentiation.
pub fn order_at(p: &Polynomial, r: &Rational) -> u32 {
    let mut c = p.coeffs().to_vec();
    assert!(!c.is_empty(), "order of the zero polynomial");
    let mut k = 0;
    while eval_coeffs(&c, r) == q(0) {
        c = deriv_coeffs(&c);
        k += 1;
    }
    k
}

/// `y^2 = x (x - p) (x - q)` with `p = cp * prod (t - roots_p)` and likewise
/// for `q`; normalized so that the roots are disjoint and `m` is even, which
/// makes every fiber stable.
#[derive(Clone, Debug)]
pub struct SplitSurface {
    pub cp: i64,
    pub roots_p: Vec<i64>,
    pub cq: i64,
    pub roots_q: Vec<i64>,
}

impl SplitSurface {
    pub fn normalized(cp: i64, roots_p: Vec<i64>, cq: i64, mut roots_q: Vec<i64>) -> Self {
        assert!(cp != 0 && cq != 0);
        roots_q.retain(|r| !roots_p.contains(r));
        let mut s = SplitSurface {
            cp,
            roots_p,
            cq,
            roots_q,
        };
        if s.roots_p.is_empty() && s.roots_q.is_empty() {
            s.roots_p.push(0);
        }
        if s.m() % 2 == 1 {
            let fresh = (20..).find(|r| !s.roots_p.contains(r) && !s.roots_q.contains(r)).unwrap();
            if s.roots_p.len() >= s.roots_q.len() {
                s.roots_p.push(fresh);
            } else {
                s.roots_q.push(fresh);
            }
        }
        s
    }

    pub fn m(&self) -> usize {
        self.roots_p.len().max(self.roots_q.len())
    }

    pub fn p(&self) -> Polynomial {
        poly_from_i128(&expand_roots(self.cp, &self.roots_p))
    }

    pub fn q(&self) -> Polynomial {
        poly_from_i128(&expand_roots(self.cq, &self.roots_q))
    }

    pub fn data(&self) -> WeierstrassData {
        WeierstrassData::new(self.p(), self.q()).expect("distinct nonzero p, q")
    }

    /// `p - q`, coefficientwise from the two expansions.
    pub fn diff(&self) -> Polynomial {
        let a = expand_roots(self.cp, &self.roots_p);
        let b = expand_roots(self.cq, &self.roots_q);
        let n = a.len().max(b.len());
        let c: Vec<i128> = (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
            .collect();
        poly_from_i128(&c)
    }
}

fn nonzero_small<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    let c = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

pub fn random_split_surface<R: Rng>(rng: &mut R) -> SplitSurface {
    let pool: Vec<i64> = (-5..=5).collect();
    let pick = |rng: &mut R| -> Vec<i64> {
        let n = rng.gen_range(0..=4);
        (0..n).map(|_| *pool.choose(rng).unwrap()).collect()
    };
    let rp = pick(rng);
    let rq = pick(rng);
    SplitSurface::normalized(nonzero_small(rng, 4), rp, nonzero_small(rng, 4), rq)
}

/// `c * prod (t - r)^e * prod (t^2 + k)^e` with distinct `r`, distinct `k > 0`.
#[derive(Clone, Debug)]
pub struct Factored {
    pub c: i64,
    pub linear: Vec<(i64, i32)>,
    pub quadratic: Vec<(i64, i32)>,
}

impl Factored {
    pub fn value(&self) -> RationalFunction {
        let mut f = RationalFunction::constant(q(self.c));
        for &(r, e) in &self.linear {
            let base = RationalFunction::from(Polynomial::from_ints(&[-r, 1]));
            f = &f * &base.powi(e as i64).unwrap();
        }
        for &(k, e) in &self.quadratic {
            let base = RationalFunction::from(Polynomial::from_ints(&[k, 0, 1]));
            f = &f * &base.powi(e as i64).unwrap();
        }
        f
    }

    /// The irreducible places where `value()` has a zero or a pole.
    pub fn places(&self) -> Vec<Place> {
        let mut out: Vec<Place> = self
            .linear
            .iter()
            .filter(|(_, e)| *e != 0)
            .map(|&(r, _)| Place::at(q(r)))
            .collect();
        out.extend(
            self.quadratic
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|&(k, _)| Place::Finite(Polynomial::from_ints(&[k, 0, 1]))),
        );
        out
    }
}

pub fn random_factored<R: Rng>(rng: &mut R, with_quadratics: bool) -> Factored {
    let mut roots: Vec<i64> = (-5..=5).collect();
    roots.shuffle(rng);
    let linear = roots
        .into_iter()
        .take(rng.gen_range(0..=3))
        .map(|r| (r, rng.gen_range(-3..=3)))
        .collect();
    let quadratic = if with_quadratics {
        let mut ks: Vec<i64> = (1..=4).collect();
        ks.shuffle(rng);
        ks.into_iter()
            .take(rng.gen_range(0..=1))
            .map(|k| (k, rng.gen_range(-2..=2)))
            .collect()
    } else {
        Vec::new()
    };
    Factored {
        c: nonzero_small(rng, 6),
        linear,
        quadratic,
    }
}

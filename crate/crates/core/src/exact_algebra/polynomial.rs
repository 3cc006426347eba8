use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{positive_divisors, rat, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t` over the rationals.
///
/// `coeffs[i]` is the coefficient of `t^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `t - r`.
    pub fn linear_root(r: Rational) -> Self {
        Polynomial::from_coeffs(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Polynomial::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.div_rem(divisor).1
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// `t^m * self(1/t)`. Requires `deg(self) <= m`.
    pub fn reverse(&self, m: usize) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            if d > m {
                return Err(Error::Precondition(format!(
                    "cannot reverse a polynomial of degree {d} at degree {m}"
                )));
            }
        }
        let mut coeffs = vec![Rational::zero(); m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[m - i] = c.clone();
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Positive-integer multiple with coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive_integer_part(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    /// Distinct rational roots, found by the rational root test. Returns the
    /// roots that could be certified; candidates are not enumerated when the
    /// extreme coefficients have too many divisors.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        if self.is_constant() {
            return roots;
        }
        let mut p = self.clone();
        if p.constant_term().is_zero() {
            roots.push(Rational::zero());
            while p.constant_term().is_zero() {
                p = p.exact_div(&Polynomial::t()).unwrap();
            }
        }
        if p.is_constant() {
            return roots;
        }
        let ints = p.primitive_integer_part();
        let (Some(nums), Some(dens)) = (
            positive_divisors(&ints[0]),
            positive_divisors(ints.last().unwrap()),
        ) else {
            return roots;
        };
        let k = ints.len() - 1;
        let lead = ints[k].abs();
        // Cauchy: |root| <= 1 + max |a_i| / |a_k|
        let bound = ints[..k].iter().map(|a| a.abs()).max().unwrap() / &lead + 2;
        let at_one: BigInt = ints.iter().sum();
        let at_minus_one: BigInt = ints
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 0 { a.clone() } else { -a })
            .sum();
        // x = s/d is a root iff sum a_i s^i d^(k-i) = 0; then (d - s) | P(1)
        // and (d + s) | P(-1).
        let divides = |a: &BigInt, b: &BigInt| if a.is_zero() { b.is_zero() } else { (b % a).is_zero() };
        let mut found: Vec<Rational> = Vec::new();
        for d in &dens {
            let dpow: Vec<BigInt> = (0..=k).map(|i| num_traits::pow(d.clone(), i)).collect();
            for n in &nums {
                if n > &(&bound * d) {
                    break;
                }
                if !n.gcd(d).is_one() {
                    continue;
                }
                for s in [n.clone(), -n] {
                    if !divides(&(d - &s), &at_one) || !divides(&(d + &s), &at_minus_one) {
                        continue;
                    }
                    let mut acc = ints[k].clone();
                    for i in (0..k).rev() {
                        acc = acc * &s + &ints[i] * &dpow[k - i];
                    }
                    if acc.is_zero() {
                        found.push(Rational::new(s, d.clone()));
                    }
                }
            }
        }
        roots.extend(found);
        roots.sort();
        roots
    }

    /// Total order used for canonical listings: by degree, then coefficients
    /// from the constant term up.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the input grammar, e.g. `3*t^4-6*t^3+1/2*t-9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Monic gcd. Errors when both inputs are zero.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::degenerate("gcd of two zero polynomials"));
    }
    Ok(gcd_unchecked(a, b))
}

pub(crate) fn gcd_unchecked(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    // primitive pseudo-remainder sequence over Z keeps coefficients small
    let mut x = a.primitive_integer_part();
    let mut y = b.primitive_integer_part();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(pseudo_rem(&x, &y));
        x = std::mem::replace(&mut y, r);
    }
    Polynomial::from_coeffs(x.into_iter().map(Rational::from_integer).collect()).monic()
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of `lc(y)^k x` by `y` for the least `k` that keeps it integral.
fn pseudo_rem(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let dy = y.len() - 1;
    let lc = &y[dy];
    let mut r = x.to_vec();
    trim(&mut r);
    while r.len() > dy {
        let k = r.len() - 1;
        let c = r[k].clone();
        for coef in r.iter_mut() {
            *coef *= lc;
        }
        for (j, yc) in y.iter().enumerate() {
            r[k - dy + j] -= &c * yc;
        }
        trim(&mut r);
    }
    r
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

/// Extended gcd: returns `(g, s, u)` with `s*a + u*b = g` and `g` monic.
pub fn extended_gcd(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::degenerate("gcd of two zero polynomials"));
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
    let (mut u0, mut u1) = (Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s2 = &s0 - &(&q * &s1);
        let u2 = &u0 - &(&q * &u1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        u0 = std::mem::replace(&mut u1, u2);
    }
    let lc_inv = r0.leading_coeff().unwrap().recip();
    Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), u0.scale(&lc_inv)))
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &Polynomial, m: &Polynomial) -> Option<Polynomial> {
    let (g, s, _) = extended_gcd(&a.rem(m), m).ok()?;
    g.is_one().then(|| s.rem(m))
}

/// Resultant `lc(a)^deg(b) * prod_{a(r)=0} b(r)`.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Rational {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Rational::zero();
    };
    if db == 0 {
        return pow_rational(&b.coeffs[0], da);
    }
    if da == 0 {
        return pow_rational(&a.coeffs[0], db);
    }
    // Res(a, b) = lc(a)^(db - dr) * Res(a, r) with r = b mod a, and
    // Res(a, r) = (-1)^(da*dr) Res(r, a).
    let r = b.rem(a);
    let Some(dr) = r.degree() else {
        return Rational::zero();
    };
    let lc = a.leading_coeff().unwrap();
    let sign = if (da * dr) % 2 == 1 { -Rational::one() } else { Rational::one() };
    pow_rational(lc, db - dr) * sign * resultant(&r, a)
}

pub(crate) fn pow_rational(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

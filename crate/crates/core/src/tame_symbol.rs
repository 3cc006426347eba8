//! Tame symbol of a pair of rational functions at a place of P^1.
//!
//! For `a, b` in Q(t)* and a place `v`, the function
//! `c = (-1)^(v(a) v(b)) a^v(b) b^(-v(a))` is a unit at `v`; its residue in
//! the residue field Q[t]/(pi) (or Q at infinity) is the symbol. A quaternion
//! class `(a, b)` is unramified along `v` exactly when that residue is a
//! square.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::rational::is_rational_square;
use crate::exact_algebra::{coprime, mod_inverse, places_of, resultant, Polynomial, Rational};
use crate::function_field::{BaseFieldMode, Place, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidueValue {
    /// Reduced representative modulo a finite place polynomial.
    Poly(Polynomial),
    /// Residue at infinity.
    Rational(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueElement {
    pub place: Place,
    pub value: ResidueValue,
}

impl ResidueElement {
    fn finite(place: Place, value: Polynomial) -> Self {
        ResidueElement {
            place,
            value: ResidueValue::Poly(value),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            ResidueValue::Poly(p) => p.is_one(),
            ResidueValue::Rational(r) => r.is_one(),
        }
    }

    /// The value as a rational number, for degree-one places and infinity.
    pub fn as_rational(&self) -> Option<Rational> {
        match &self.value {
            ResidueValue::Rational(r) => Some(r.clone()),
            ResidueValue::Poly(p) if p.is_constant() => Some(p.constant_term()),
            ResidueValue::Poly(_) => None,
        }
    }

    /// Product in the residue ring of a common place.
    pub fn mul(&self, other: &ResidueElement) -> Result<ResidueElement> {
        if self.place != other.place {
            return Err(Error::Precondition(format!(
                "residues at different places {} and {}",
                self.place, other.place
            )));
        }
        let value = match (&self.value, &other.value, &self.place) {
            (ResidueValue::Poly(a), ResidueValue::Poly(b), Place::Finite(pi)) => {
                ResidueValue::Poly((a * b).rem(pi))
            }
            (ResidueValue::Rational(a), ResidueValue::Rational(b), Place::Infinity) => {
                ResidueValue::Rational(a * b)
            }
            _ => return Err(Error::invariant("residue value does not match its place")),
        };
        Ok(ResidueElement {
            place: self.place.clone(),
            value,
        })
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ResidueValue::Poly(p) => write!(f, "{p} mod ({})", self.place),
            ResidueValue::Rational(r) => write!(f, "{r} at infinity"),
        }
    }
}

/// Residue of the tame symbol `{a, b}` at `v`.
///
/// Computed from the residues of the unit parts `a / pi^v(a)`, `b / pi^v(b)`
/// (leading-coefficient ratios at infinity), which equals the residue of `c`
/// without forming the high powers.
pub fn tame(a: &RationalFunction, b: &RationalFunction, v: &Place) -> Result<ResidueElement> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::degenerate("tame symbol of a zero function"));
    }
    let va = a.valuation(v)?;
    let vb = b.valuation(v)?;
    let negate = (va * vb) % 2 != 0;
    match v {
        Place::Finite(pi) => {
            let ua = unit_residue(a, pi)?;
            let ub = unit_residue(b, pi)?;
            let mut r = (&pow_mod(&ua, vb, pi)? * &pow_mod(&ub, -va, pi)?).rem(pi);
            if negate {
                r = -r;
            }
            Ok(ResidueElement::finite(v.clone(), r))
        }
        Place::Infinity => {
            let mut r = pow_rational(&a.leading_ratio(), vb) * pow_rational(&b.leading_ratio(), -va);
            if negate {
                r = -r;
            }
            Ok(ResidueElement {
                place: Place::Infinity,
                value: ResidueValue::Rational(r),
            })
        }
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn pow_mod(x: &Polynomial, e: i64, pi: &Polynomial) -> Result<Polynomial> {
    let mut base = if e < 0 {
        mod_inverse(x, pi).ok_or_else(|| Error::invariant("residue is not invertible"))?
    } else {
        x.rem(pi)
    };
    let mut e = e.unsigned_abs();
    let mut acc = Polynomial::one().rem(pi);
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &base).rem(pi);
        }
        base = (&base * &base).rem(pi);
        e >>= 1;
    }
    Ok(acc)
}

/// Residue of `f / pi^v(f)` modulo `pi`. A bundled place must be uniform for
/// `f`: after removing the full power of `pi`, numerator and denominator are
/// coprime to it.
fn unit_residue(f: &RationalFunction, pi: &Polynomial) -> Result<Polynomial> {
    let mut parts = Vec::with_capacity(2);
    for part in [f.numer(), f.denom()] {
        let mut rest = part.clone();
        while let Some(q) = rest.exact_div(pi) {
            rest = q;
        }
        if !coprime(&rest, pi) {
            return Err(Error::invariant(format!(
                "{f} vanishes at only some points of the bundled place {pi}"
            )));
        }
        parts.push(rest.rem(pi));
    }
    let inv = mod_inverse(&parts[1], pi)
        .ok_or_else(|| Error::invariant("denominator not invertible modulo the place"))?;
    Ok((&parts[0] * &inv).rem(pi))
}

/// Residue of a function that is a unit at `v`.
pub fn residue(c: &RationalFunction, v: &Place) -> Result<ResidueElement> {
    match v {
        Place::Finite(pi) => {
            if !coprime(c.numer(), pi) || !coprime(c.denom(), pi) {
                return Err(Error::invariant(format!(
                    "{c} is not a unit at the place {pi}"
                )));
            }
            let inv = mod_inverse(c.denom(), pi)
                .ok_or_else(|| Error::invariant("denominator not invertible modulo the place"))?;
            Ok(ResidueElement::finite(v.clone(), (c.numer() * &inv).rem(pi)))
        }
        Place::Infinity => {
            let (dn, dd) = (c.numer().degree(), c.denom().degree());
            if dn != dd || dn.is_none() {
                return Err(Error::invariant(format!("{c} is not a unit at infinity")));
            }
            // s = 1/t: s^d num(1/s) / s^d den(1/s) at s = 0
            let d = dn.unwrap();
            let num0 = c.numer().reverse(d)?.constant_term();
            let den0 = c.denom().reverse(d)?.constant_term();
            Ok(ResidueElement {
                place: Place::Infinity,
                value: ResidueValue::Rational(num0 / den0),
            })
        }
    }
}

/// Norm from Q[t]/(pi) down to Q.
pub fn residue_norm(r: &ResidueElement) -> Result<Rational> {
    let (Place::Finite(pi), ResidueValue::Poly(value)) = (&r.place, &r.value) else {
        return Err(Error::Precondition("residue norm is defined at finite places only".into()));
    };
    let lc = pi.leading_coeff().unwrap();
    let dv = value.degree().unwrap_or(0);
    Ok(resultant(pi, value) / num_traits::pow(lc.clone(), dv))
}

/// Product of the norms of all tame symbols of `(a, b)`. Weil reciprocity
/// says this is always 1.
pub fn reciprocity_product(a: &RationalFunction, b: &RationalFunction) -> Result<Rational> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::degenerate("reciprocity product of a zero function"));
    }
    let mut product = Rational::one();
    for place in places_of(&[
        a.numer().clone(),
        a.denom().clone(),
        b.numer().clone(),
        b.denom().clone(),
    ])? {
        product *= residue_norm(&tame(a, b, &place)?)?;
    }
    let at_infinity = tame(a, b, &Place::Infinity)?;
    product *= at_infinity.as_rational().unwrap();
    Ok(product)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SquareDecision {
    Square,
    NonSquare,
    /// A residue in a field of degree at least two over Q.
    Undecided,
}

/// Whether a residue is a square in its residue field, where decidable.
pub fn residue_is_square(r: &ResidueElement, mode: BaseFieldMode) -> SquareDecision {
    if r.as_rational().is_some_and(|x| x.is_zero()) {
        return SquareDecision::NonSquare;
    }
    match mode {
        BaseFieldMode::Complex => SquareDecision::Square,
        BaseFieldMode::Rational => match (r.place.degree(), r.as_rational()) {
            (1, Some(x)) if is_rational_square(&x) => SquareDecision::Square,
            (1, Some(_)) => SquareDecision::NonSquare,
            _ => SquareDecision::Undecided,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }
    fn f(c: &[i64]) -> RationalFunction {
        RationalFunction::from(p(c))
    }

    #[test]
    fn t_with_itself() {
        let r = tame(&f(&[0, 1]), &f(&[0, 1]), &Place::origin()).unwrap();
        assert_eq!(r.as_rational(), Some(rat(-1)));
    }

    #[test]
    fn steinberg_instance() {
        let r = tame(&f(&[0, 1]), &f(&[1, -1]), &Place::origin()).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn square_against_t() {
        let r = tame(&f(&[0, 0, 1]), &f(&[0, 1]), &Place::origin()).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn infinity_residue() {
        // at infinity v(t) = -1: c = -t^-1 t = -1
        let r = tame(&f(&[0, 1]), &f(&[0, 1]), &Place::Infinity).unwrap();
        assert_eq!(r.value, ResidueValue::Rational(rat(-1)));
    }

    #[test]
    fn norms() {
        let r = ResidueElement::finite(Place::origin(), p(&[5]));
        assert_eq!(residue_norm(&r).unwrap(), rat(5));
        let r = ResidueElement::finite(Place::Finite(p(&[1, 0, 1])), p(&[0, 1]));
        assert_eq!(residue_norm(&r).unwrap(), rat(1));
        let r = ResidueElement::finite(Place::at(rat(2)), p(&[7]));
        assert_eq!(residue_norm(&r).unwrap(), rat(7));
        let inf = tame(&f(&[0, 1]), &f(&[2]), &Place::Infinity).unwrap();
        assert!(residue_norm(&inf).is_err());
    }

    #[test]
    fn reciprocity_examples() {
        assert_eq!(reciprocity_product(&f(&[0, 1]), &f(&[1, -1])).unwrap(), rat(1));
        assert_eq!(reciprocity_product(&f(&[0, 1]), &f(&[0, 1])).unwrap(), rat(1));
        // a degree-two place contributes through its norm
        let a = f(&[2, 0, 1]);
        let b = RationalFunction::new(p(&[3, 1]), p(&[0, 1])).unwrap();
        assert_eq!(reciprocity_product(&a, &b).unwrap(), rat(1));
    }

    #[test]
    fn non_unit_is_reported() {
        // bundled place t(t-1) on which t vanishes only partly
        let pi = Place::Finite(p(&[0, -1, 1]));
        assert!(matches!(
            tame(&f(&[0, 1]), &f(&[3]), &pi),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn square_decisions() {
        let r = tame(&f(&[0, 1]), &f(&[0, 1]), &Place::origin()).unwrap();
        assert_eq!(residue_is_square(&r, BaseFieldMode::Complex), SquareDecision::Square);
        assert_eq!(residue_is_square(&r, BaseFieldMode::Rational), SquareDecision::NonSquare);
        let r = ResidueElement::finite(Place::Finite(p(&[1, 0, 1])), p(&[0, 1]));
        assert_eq!(residue_is_square(&r, BaseFieldMode::Rational), SquareDecision::Undecided);
    }
}

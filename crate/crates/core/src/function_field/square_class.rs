use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{BaseFieldMode, Place, RationalFunction};
use crate::error::{Error, Result};
use crate::exact_algebra::rational::{square_class_of_rational, squarefree_product};
use crate::exact_algebra::{gcd_unchecked, places_of, squarefree_decompose, Polynomial, Rational};

/// An element of K*/(K*)^2 for K = Q(t) (or C(t) in complex mode), stored as
/// its canonical representative `constant_class * odd_part`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClass {
    constant_class: BigInt,
    odd_part: Polynomial,
    mode: BaseFieldMode,
}

impl SquareClass {
    pub fn trivial(mode: BaseFieldMode) -> Self {
        SquareClass {
            constant_class: BigInt::one(),
            odd_part: Polynomial::one(),
            mode,
        }
    }

    /// Squarefree integer; always 1 in complex mode.
    pub fn constant_class(&self) -> &BigInt {
        &self.constant_class
    }

    /// Monic squarefree polynomial.
    pub fn odd_part(&self) -> &Polynomial {
        &self.odd_part
    }

    pub fn mode(&self) -> BaseFieldMode {
        self.mode
    }

    pub fn is_trivial(&self) -> bool {
        self.constant_class.is_one() && self.odd_part.is_one()
    }

    pub fn representative(&self) -> RationalFunction {
        RationalFunction::from(
            self.odd_part
                .scale(&Rational::from_integer(self.constant_class.clone())),
        )
    }

    /// Group law in K*/(K*)^2.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        assert_eq!(self.mode, other.mode, "square classes from different base-field modes");
        let g = gcd_unchecked(&self.odd_part, &other.odd_part);
        let odd = (&self.odd_part * &other.odd_part)
            .exact_div(&(&g * &g))
            .expect("squarefree parts share only simple factors");
        SquareClass {
            constant_class: squarefree_product(&self.constant_class, &other.constant_class),
            odd_part: odd,
            mode: self.mode,
        }
    }

    pub fn canonical_cmp(&self, other: &SquareClass) -> Ordering {
        self.constant_class
            .cmp(&other.constant_class)
            .then_with(|| self.odd_part.canonical_cmp(&other.odd_part))
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative())
    }
}

pub fn square_class(f: &RationalFunction, mode: BaseFieldMode) -> Result<SquareClass> {
    if f.is_zero() {
        return Err(Error::degenerate("square class of the zero function"));
    }
    // num/den = num*den / den^2, and num, den are coprime
    let odd_part = &squarefree_decompose(f.numer())?.odd_part() * &squarefree_decompose(f.denom())?.odd_part();
    let constant_class = match mode {
        BaseFieldMode::Complex => BigInt::one(),
        BaseFieldMode::Rational => square_class_of_rational(&f.leading_ratio()),
    };
    Ok(SquareClass {
        constant_class,
        odd_part,
        mode,
    })
}

pub fn is_square(f: &RationalFunction, mode: BaseFieldMode) -> Result<bool> {
    Ok(square_class(f, mode)?.is_trivial())
}

/// Places where representatives of the class have odd valuation.
pub fn class_support(c: &SquareClass) -> Vec<Place> {
    let mut places = if c.odd_part.is_constant() {
        Vec::new()
    } else {
        places_of(std::slice::from_ref(&c.odd_part)).expect("odd part is nonzero")
    };
    places.sort_by(Place::report_cmp);
    if c.odd_part.degree().unwrap_or(0) % 2 == 1 {
        places.push(Place::Infinity);
    }
    places
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }
    fn poly_fn(c: &[i64]) -> RationalFunction {
        RationalFunction::from(p(c))
    }

    #[test]
    fn perfect_square_is_trivial() {
        let c = square_class(&poly_fn(&[0, 0, 1]), BaseFieldMode::Complex).unwrap();
        assert!(c.is_trivial());
    }

    #[test]
    fn squarefree_input_is_its_own_class() {
        let f = poly_fn(&[-3, 2, 1]);
        let c = square_class(&f, BaseFieldMode::Complex).unwrap();
        assert_eq!(c.odd_part(), &p(&[-3, 2, 1]));
    }

    #[test]
    fn rational_constant_class() {
        // -12 t^3 / (-3 t) = 4 t^2
        let c = square_class(&poly_fn(&[0, 0, 0, -12]), BaseFieldMode::Rational).unwrap();
        assert_eq!(c.constant_class(), &BigInt::from(-3));
        assert_eq!(c.odd_part(), &p(&[0, 1]));
        let quotient = poly_fn(&[0, 0, 0, -12])
            .checked_div(&c.representative())
            .unwrap();
        assert_eq!(quotient, poly_fn(&[0, 0, 4]));
    }

    #[test]
    fn squares_by_mode() {
        assert!(is_square(&poly_fn(&[1, 2, 1]), BaseFieldMode::Complex).unwrap());
        assert!(!is_square(&poly_fn(&[0, 1]), BaseFieldMode::Complex).unwrap());
        assert!(!is_square(&poly_fn(&[-4]), BaseFieldMode::Rational).unwrap());
        assert!(is_square(&poly_fn(&[-4]), BaseFieldMode::Complex).unwrap());
        assert!(is_square(&RationalFunction::zero(), BaseFieldMode::Complex).is_err());
    }

    #[test]
    fn denominators_count() {
        // t / (t-1)^3 ~ t (t-1)
        let f = RationalFunction::new(p(&[0, 1]), p(&[-1, 1]).pow(3)).unwrap();
        let c = square_class(&f, BaseFieldMode::Complex).unwrap();
        assert_eq!(c.odd_part(), &p(&[0, -1, 1]));
    }

    #[test]
    fn supports() {
        let t = square_class(&poly_fn(&[0, 1]), BaseFieldMode::Complex).unwrap();
        assert_eq!(class_support(&t), vec![Place::origin(), Place::Infinity]);
        let c = square_class(&poly_fn(&[-3, 2, 1]), BaseFieldMode::Complex).unwrap();
        assert_eq!(class_support(&c), vec![Place::at(rat(-3)), Place::at(rat(1))]);
        assert!(class_support(&SquareClass::trivial(BaseFieldMode::Complex)).is_empty());
    }

    #[test]
    fn group_law() {
        let mode = BaseFieldMode::Rational;
        let a = square_class(&poly_fn(&[0, 6]), mode).unwrap();
        let b = square_class(&poly_fn(&[0, -10, 10]), mode).unwrap();
        // 6t * 10t(t-1) = 60 t^2 (t-1) ~ 15 (t-1)
        let ab = a.mul(&b);
        assert_eq!(ab.constant_class(), &BigInt::from(15));
        assert_eq!(ab.odd_part(), &p(&[-1, 1]));
        assert!(a.mul(&a).is_trivial());
    }
}

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{gcd_unchecked, rational::rational_to_f64, Polynomial, Rational};

/// A closed point of P^1 over Q.
///
/// A finite place is a monic squarefree polynomial. It need not be
/// irreducible: conjugate points that share every multiplicity we care about
/// are kept bundled in one factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(Polynomial),
    Infinity,
}

impl Place {
    pub fn finite(poly: Polynomial) -> Result<Place> {
        if poly.is_constant() {
            return Err(Error::Precondition(format!("place polynomial {poly} is constant")));
        }
        if !poly.is_monic() {
            return Err(Error::Precondition(format!("place polynomial {poly} is not monic")));
        }
        if !gcd_unchecked(&poly, &poly.derivative()).is_one() {
            return Err(Error::Precondition(format!("place polynomial {poly} is not squarefree")));
        }
        Ok(Place::Finite(poly))
    }

    /// The rational point `t = r`.
    pub fn at(r: Rational) -> Place {
        Place::Finite(Polynomial::linear_root(r))
    }

    /// `t = 0`.
    pub fn origin() -> Place {
        Place::at(Rational::zero())
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn polynomial(&self) -> Option<&Polynomial> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinity => None,
        }
    }

    /// The coordinate of a degree-one finite place.
    pub fn rational_root(&self) -> Option<Rational> {
        match self {
            Place::Finite(p) if p.degree() == Some(1) => {
                debug_assert!(p.leading_coeff().is_some_and(One::is_one));
                Some(-p.constant_term())
            }
            _ => None,
        }
    }

    /// Report order: rational places by coordinate, then bundled places by
    /// their polynomial text, then infinity.
    pub fn report_cmp(&self, other: &Place) -> Ordering {
        fn rank(p: &Place) -> u8 {
            match p {
                Place::Finite(f) if f.degree() == Some(1) => 0,
                Place::Finite(_) => 1,
                Place::Infinity => 2,
            }
        }
        rank(self).cmp(&rank(other)).then_with(|| match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => match (self.rational_root(), other.rational_root()) {
                (Some(x), Some(y)) => x.cmp(&y),
                _ => a
                    .to_string()
                    .cmp(&b.to_string())
                    .then_with(|| a.canonical_cmp(b)),
            },
            _ => Ordering::Equal,
        })
    }

    /// Numeric coordinate for plotting; infinity and bundled places give `None`.
    pub fn approx_coordinate(&self) -> Option<f64> {
        self.rational_root().map(|r| rational_to_f64(&r))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;

    #[test]
    fn validation() {
        assert!(Place::finite(Polynomial::from_ints(&[1, 0, 1])).is_ok());
        assert!(Place::finite(Polynomial::from_ints(&[0, 2])).is_err());
        assert!(Place::finite(Polynomial::from_ints(&[1, 2, 1])).is_err());
        assert!(Place::finite(Polynomial::from_ints(&[5])).is_err());
    }

    #[test]
    fn ordering() {
        let mut places = [
            Place::Infinity,
            Place::finite(Polynomial::from_ints(&[1, 0, 1])).unwrap(),
            Place::at(rat(3)),
            Place::at(rat(-3)),
            Place::origin(),
        ];
        places.sort_by(Place::report_cmp);
        let names: Vec<String> = places.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["t+3", "t", "t-3", "t^2+1", "infinity"]);
        assert_eq!(places[0].degree(), 1);
        assert_eq!(places[3].degree(), 2);
    }
}

//! Exact rational numbers and dense univariate polynomials over them.
//!
//! No factorization over Q is attempted: every geometric question asked of
//! p, q and f reduces to gcds and divisibility, so a gcd-free (coprime,
//! squarefree) basis stands in for irreducible factors. Rational roots are
//! split off when they can be found, which lets places like `t - 1` be named.

mod decompose;
mod polynomial;
pub mod rational;

pub use decompose::{
    coprime_basis, multiplicity_at, places_of, squarefree_decompose, CoprimeBasis,
    SquarefreeDecomposition,
};
pub(crate) use decompose::{coprime, multiplicity_in};
pub use polynomial::{extended_gcd, mod_inverse, poly_gcd, resultant, Polynomial};
pub(crate) use polynomial::gcd_unchecked;
pub use rational::Rational;

use crate::error::Result;

/// `s^m * a(1/s)`, the polynomial describing `a` near infinity.
pub fn reverse_at_infinity(a: &Polynomial, m: usize) -> Result<Polynomial> {
    a.reverse(m)
}

pub fn eval(a: &Polynomial, x: &Rational) -> Rational {
    a.eval(x)
}

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Trial divisors are tried up to this bound. Past it the remaining cofactor
/// is only tested for being a perfect square.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

/// Upper bound on the number of divisors enumerated for rational root search.
const MAX_DIVISORS: usize = 4096;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Whether `x` is the square of a rational number.
pub fn is_rational_square(x: &Rational) -> bool {
    // lowest terms: x is a square iff numerator and denominator are
    is_integer_square(x.numer()) && is_integer_square(x.denom())
}

/// Prime factorization by trial division. The last entry may be a composite
/// cofactor without small prime factors when `n` is very large.
fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d: u64 = 2;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        if is_integer_square(&n) {
            out.push((n.sqrt(), 2));
        } else {
            out.push((n, 1));
        }
    }
    out
}

/// Squarefree part of a nonzero integer, sign carried: `n = s * k^2` with `s`
/// squarefree.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero(), "squarefree part of zero");
    let mut s = BigInt::one();
    for (prime, e) in factor(n) {
        if e % 2 == 1 {
            s *= prime;
        }
    }
    if n.sign() == Sign::Minus {
        -s
    } else {
        s
    }
}

/// Squarefree integer representing the class of `x` in Q*/(Q*)^2.
pub fn square_class_of_rational(x: &Rational) -> BigInt {
    // a/b = a*b / b^2
    squarefree_part(&(x.numer() * x.denom()))
}

/// Product of two squarefree integers, reduced back to squarefree.
pub fn squarefree_product(a: &BigInt, b: &BigInt) -> BigInt {
    let g = a.gcd(b);
    (a / &g) * (b / &g)
}

/// All positive divisors of `|n|`, or `None` when there are too many to
/// enumerate (or when `n` is zero).
pub fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    if n.is_zero() {
        return None;
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factor(n) {
        let count = divs.len().checked_mul(e as usize + 1)?;
        if count > MAX_DIVISORS {
            return None;
        }
        let mut next = Vec::with_capacity(count);
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &prime;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Sort key used when ordering rational places by their root.
pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

use num_traits::Zero;

use super::polynomial::{gcd_unchecked, Polynomial};
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::function_field::Place;

/// `content * prod(part^multiplicity)`, parts monic, squarefree, pairwise
/// coprime, each multiplicity used once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub parts: Vec<(Polynomial, u32)>,
    pub content: Rational,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> Polynomial {
        self.parts
            .iter()
            .fold(Polynomial::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    /// Product of the parts whose multiplicity is odd.
    pub fn odd_part(&self) -> Polynomial {
        self.parts
            .iter()
            .filter(|(_, m)| m % 2 == 1)
            .fold(Polynomial::one(), |acc, (f, _)| &acc * f)
    }

    /// Product of all parts (the radical).
    pub fn radical(&self) -> Polynomial {
        self.parts
            .iter()
            .fold(Polynomial::one(), |acc, (f, _)| &acc * f)
    }
}

/// Yun's algorithm.
pub fn squarefree_decompose(a: &Polynomial) -> Result<SquarefreeDecomposition> {
    let Some(lc) = a.leading_coeff().cloned() else {
        return Err(Error::degenerate("squarefree decomposition of the zero polynomial"));
    };
    let f = a.monic();
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeDecomposition { parts, content: lc });
    }
    let df = f.derivative();
    let c = gcd_unchecked(&f, &df);
    let mut w = f.exact_div(&c).unwrap();
    let y = df.exact_div(&c).unwrap();
    let mut z = &y - &w.derivative();
    let mut i = 1u32;
    while !w.is_constant() {
        let g = gcd_unchecked(&w, &z);
        w = w.exact_div(&g).unwrap();
        let y = z.exact_div(&g).unwrap();
        z = &y - &w.derivative();
        if !g.is_constant() {
            parts.push((g, i));
        }
        i += 1;
    }
    Ok(SquarefreeDecomposition { parts, content: lc })
}

/// Largest `k` with `place^k` dividing `a`. Always 0 at infinity; the order at
/// infinity is a rational-function notion (see `RationalFunction::valuation`).
pub fn multiplicity_at(a: &Polynomial, place: &Place) -> Result<u32> {
    if a.is_zero() {
        return Err(Error::degenerate("multiplicity in the zero polynomial"));
    }
    let Place::Finite(pi) = place else {
        return Ok(0);
    };
    Ok(multiplicity_in(a, pi))
}

pub(crate) fn multiplicity_in(a: &Polynomial, pi: &Polynomial) -> u32 {
    debug_assert!(!a.is_zero() && !pi.is_constant());
    let mut k = 0;
    let mut rest = a.clone();
    while let Some(q) = rest.exact_div(pi) {
        rest = q;
        k += 1;
    }
    k
}

/// Gcd-free basis of a family of nonzero polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeBasis {
    /// Monic, squarefree, nonconstant, pairwise coprime.
    pub basis: Vec<Polynomial>,
    /// `exponents[i][j]`: exponent of `basis[j]` in input `i`.
    pub exponents: Vec<Vec<u32>>,
    /// `units[i]`: the constant with `input_i = units[i] * prod(basis_j^e_ij)`.
    pub units: Vec<Rational>,
}

impl CoprimeBasis {
    pub fn reconstruct(&self, i: usize) -> Polynomial {
        self.basis
            .iter()
            .zip(&self.exponents[i])
            .fold(Polynomial::constant(self.units[i].clone()), |acc, (b, &e)| {
                &acc * &b.pow(e)
            })
    }

    /// Splits off every rational root of every basis element as its own
    /// linear element. Elements without rational roots stay as they are.
    pub fn split_rational_roots(&self, inputs: &[Polynomial]) -> CoprimeBasis {
        let mut basis = Vec::new();
        for b in &self.basis {
            let mut rest = b.clone();
            for r in b.rational_roots() {
                let lin = Polynomial::linear_root(r);
                rest = rest.exact_div(&lin).unwrap();
                basis.push(lin);
            }
            if !rest.is_constant() {
                basis.push(rest.monic());
            }
        }
        assemble(inputs, basis)
    }
}

pub fn coprime_basis(inputs: &[Polynomial]) -> Result<CoprimeBasis> {
    if inputs.iter().any(Polynomial::is_zero) {
        return Err(Error::degenerate("coprime basis of a family containing zero"));
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for a in inputs {
        for (part, _) in squarefree_decompose(a)?.parts {
            insert_coprime(&mut basis, part);
        }
    }
    Ok(assemble(inputs, basis))
}

/// Adds `x` (squarefree) to a pairwise-coprime family, splitting against any
/// element it shares a factor with.
fn insert_coprime(basis: &mut Vec<Polynomial>, x: Polynomial) {
    let mut work = vec![x];
    while let Some(x) = work.pop() {
        if x.is_constant() {
            continue;
        }
        let hit = basis.iter().enumerate().find_map(|(i, b)| {
            let g = gcd_unchecked(b, &x);
            (!g.is_constant()).then_some((i, g))
        });
        match hit {
            None => basis.push(x.monic()),
            Some((i, g)) => {
                let b = basis.swap_remove(i);
                work.push(b.exact_div(&g).unwrap());
                work.push(x.exact_div(&g).unwrap());
                work.push(g);
            }
        }
    }
}

fn assemble(inputs: &[Polynomial], mut basis: Vec<Polynomial>) -> CoprimeBasis {
    basis.sort_by(|a, b| a.canonical_cmp(b));
    let exponents: Vec<Vec<u32>> = inputs
        .iter()
        .map(|a| basis.iter().map(|b| multiplicity_in(a, b)).collect())
        .collect();
    let units = inputs
        .iter()
        .map(|a| a.leading_coeff().cloned().unwrap_or_else(Rational::zero))
        .collect();
    let cb = CoprimeBasis {
        basis,
        exponents,
        units,
    };
    debug_assert!(inputs
        .iter()
        .enumerate()
        .all(|(i, a)| &cb.reconstruct(i) == a));
    cb
}

/// Places of the coprime basis of `inputs`, with rational roots split off.
pub fn places_of(inputs: &[Polynomial]) -> Result<Vec<Place>> {
    if inputs.iter().any(Polynomial::is_zero) {
        return Err(Error::degenerate("places of the zero polynomial"));
    }
    let nonconst: Vec<Polynomial> = inputs.iter().filter(|a| !a.is_constant()).cloned().collect();
    let cb = coprime_basis(&nonconst)?.split_rational_roots(&nonconst);
    Ok(cb.basis.into_iter().map(Place::Finite).collect())
}

pub(crate) fn coprime(a: &Polynomial, b: &Polynomial) -> bool {
    gcd_unchecked(a, b).is_one()
}

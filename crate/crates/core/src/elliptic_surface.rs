//! The elliptic surface `y^2 = x (x - p) (x - q)` over P^1 with `p, q` in Q[t].
//!
//! At a place where `p`, `q`, `p - q` vanish to orders `a`, `b`, `n`, the fiber
//! is stable iff `a * b = 0`, and is then of type `I_{2(a+b+n)}`. At infinity
//! the same test runs on the reversed data `s^m p(1/s)`, `s^m q(1/s)`, which
//! needs `m = max(deg p, deg q)` even.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_algebra::{multiplicity_in, places_of, Polynomial};
use crate::function_field::Place;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassData {
    p: Polynomial,
    q: Polynomial,
    diff: Polynomial,
}

impl WeierstrassData {
    pub fn new(p: Polynomial, q: Polynomial) -> Result<Self> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::Validation(
                "p and q must be nonzero (x = 0, p, q are the 2-torsion x-coordinates)".into(),
            ));
        }
        if p == q {
            return Err(Error::Validation(format!(
                "p = q = {p}: the generic fiber is singular"
            )));
        }
        let diff = &p - &q;
        Ok(WeierstrassData { p, q, diff })
    }

    pub fn p(&self) -> &Polynomial {
        &self.p
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }

    /// `p - q`.
    pub fn diff(&self) -> &Polynomial {
        &self.diff
    }

    /// `max(deg p, deg q)`.
    pub fn m(&self) -> usize {
        self.p.degree().unwrap().max(self.q.degree().unwrap())
    }

    /// The model near infinity: `(s^m p(1/s), s^m q(1/s))`, for even `m`.
    pub fn reversed(&self) -> Result<WeierstrassData> {
        let m = self.m();
        if m % 2 == 1 {
            return Err(Error::InapplicableModel { m });
        }
        WeierstrassData::new(self.p.reverse(m)?, self.q.reverse(m)?)
            .map_err(|e| Error::invariant(format!("reversed model: {e}")))
    }
}

/// Orders of vanishing of `p`, `q`, `p - q` at a place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberSignature {
    pub a: u32,
    pub b: u32,
    pub n: u32,
}

impl FiberSignature {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self> {
        if (a > 0) != (b > 0) && n > 0 {
            return Err(Error::invariant(format!(
                "signature (a, b, n) = ({a}, {b}, {n}): p - q cannot vanish where exactly one of p, q does"
            )));
        }
        Ok(FiberSignature { a, b, n })
    }

    pub fn is_stable(&self) -> bool {
        self.a == 0 || self.b == 0
    }

    /// Order of the discriminant `(p q (p - q))^2`.
    pub fn discriminant_order(&self) -> u32 {
        2 * (self.a + self.b + self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kodaira {
    /// `I_k`; `I_0` is a smooth fiber.
    I(u32),
    Unstable,
}

impl Kodaira {
    pub fn is_singular(&self) -> bool {
        !matches!(self, Kodaira::I(0))
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(k) => write!(f, "I_{k}"),
            Kodaira::Unstable => write!(f, "unstable"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub place: Place,
    pub signature: FiberSignature,
    pub stable: bool,
    pub kodaira: Kodaira,
}

impl FiberReport {
    fn from_signature(place: Place, signature: FiberSignature) -> Self {
        let stable = signature.is_stable();
        let kodaira = if stable {
            Kodaira::I(signature.discriminant_order())
        } else {
            Kodaira::Unstable
        };
        FiberReport {
            place,
            signature,
            stable,
            kodaira,
        }
    }
}

fn signature_in(w: &WeierstrassData, pi: &Polynomial) -> Result<FiberSignature> {
    let n = if w.diff.is_zero() { 0 } else { multiplicity_in(&w.diff, pi) };
    FiberSignature::new(multiplicity_in(&w.p, pi), multiplicity_in(&w.q, pi), n)
}

/// Fiber type over `v`.
pub fn classify_fiber(w: &WeierstrassData, v: &Place) -> Result<FiberReport> {
    match v {
        Place::Finite(pi) => Ok(FiberReport::from_signature(v.clone(), signature_in(w, pi)?)),
        Place::Infinity => classify_fiber_at_infinity(w),
    }
}

pub fn classify_fiber_at_infinity(w: &WeierstrassData) -> Result<FiberReport> {
    let rev = w.reversed()?;
    let sig = signature_in(&rev, &Polynomial::t())?;
    Ok(FiberReport::from_signature(Place::Infinity, sig))
}

/// Singular fibers over finite places, in report order.
pub fn finite_fibers(w: &WeierstrassData) -> Result<Vec<FiberReport>> {
    let mut places = places_of(&[w.p.clone(), w.q.clone(), w.diff.clone()])?;
    places.sort_by(Place::report_cmp);
    places.iter().map(|v| classify_fiber(w, v)).collect()
}

/// Every singular fiber, infinity last.
pub fn fiber_table(w: &WeierstrassData) -> Result<Vec<FiberReport>> {
    let mut table = finite_fibers(w)?;
    let at_inf = classify_fiber_at_infinity(w)?;
    if at_inf.kodaira.is_singular() {
        table.push(at_inf);
    }
    Ok(table)
}

/// Fiber table of a surface whose fibers are all stable. Finite places are
/// checked before the parity of `m`.
pub fn stable_fiber_table(w: &WeierstrassData) -> Result<Vec<FiberReport>> {
    let finite = finite_fibers(w)?;
    if let Some(bad) = finite.iter().find(|r| !r.stable) {
        return Err(Error::UnstableFiber {
            place: bad.place.to_string(),
            a: bad.signature.a,
            b: bad.signature.b,
        });
    }
    let mut table = finite;
    let at_inf = classify_fiber_at_infinity(w)?;
    if !at_inf.stable {
        return Err(Error::UnstableFiber {
            place: "infinity".into(),
            a: at_inf.signature.a,
            b: at_inf.signature.b,
        });
    }
    if at_inf.kodaira.is_singular() {
        table.push(at_inf);
    }
    Ok(table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub euler: u64,
    pub chi: u64,
    pub h11: u64,
    pub sum_m_minus_1: u64,
    /// `h11 - 2 - sum_m_minus_1`. An upper bound for the Mordell-Weil rank,
    /// exact iff the Picard number equals `h11`.
    pub mw_rank_bound: i64,
}

pub fn surface_invariants(w: &WeierstrassData) -> Result<SurfaceInvariants> {
    let table = stable_fiber_table(w)?;
    invariants_from_table(&table)
}

pub(crate) fn invariants_from_table(table: &[FiberReport]) -> Result<SurfaceInvariants> {
    let mut euler = 0u64;
    let mut sum_m_minus_1 = 0u64;
    for r in table {
        let Kodaira::I(k) = r.kodaira else {
            return Err(Error::invariant("unstable fiber in a stable table"));
        };
        let deg = r.place.degree() as u64;
        euler += deg * k as u64;
        if k >= 1 {
            sum_m_minus_1 += deg * (k as u64 - 1);
        }
    }
    if euler == 0 {
        return Err(Error::UnsupportedSurface(
            "every fiber is smooth (p, q constant): the family is isotrivial and has no Euler characteristic to work with"
                .into(),
        ));
    }
    if !euler.is_multiple_of(12) {
        return Err(Error::invariant(format!("Euler number {euler} is not divisible by 12")));
    }
    let chi = euler / 12;
    let h11 = 10 * chi;
    Ok(SurfaceInvariants {
        euler,
        chi,
        h11,
        sum_m_minus_1,
        mw_rank_bound: h11 as i64 - 2 - sum_m_minus_1 as i64,
    })
}

/// First slot of a quaternion symbol: `x`, `x - p` or `x - q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolSlot {
    #[serde(rename = "x")]
    X0,
    #[serde(rename = "x-p")]
    XminusP,
    #[serde(rename = "x-q")]
    XminusQ,
}

impl SymbolSlot {
    pub fn as_str(&self) -> &'static str {
        match self {
            SymbolSlot::X0 => "x",
            SymbolSlot::XminusP => "x-p",
            SymbolSlot::XminusQ => "x-q",
        }
    }
}

impl fmt::Display for SymbolSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SymbolSlot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "x" => Ok(SymbolSlot::X0),
            "x-p" => Ok(SymbolSlot::XminusP),
            "x-q" => Ok(SymbolSlot::XminusQ),
            _ => Err(Error::Validation(format!(
                "unknown symbol slot {s:?}; expected x, x-p or x-q"
            ))),
        }
    }
}

/// Moves the 2-torsion point of `slot` to `x = 0`, so that the symbol
/// `(slot, f)` reads `(x, f)` on the returned (isomorphic) model.
pub fn shift_coordinates(w: &WeierstrassData, slot: SymbolSlot) -> Result<WeierstrassData> {
    let shifted = match slot {
        SymbolSlot::X0 => return Ok(w.clone()),
        // x = X + p: y^2 = X (X + p) (X + p - q)
        SymbolSlot::XminusP => WeierstrassData::new(-&w.p, &w.q - &w.p),
        // x = X + q: y^2 = X (X + q) (X + q - p)
        SymbolSlot::XminusQ => WeierstrassData::new(-&w.q, &w.p - &w.q),
    };
    shifted.map_err(|e| Error::invariant(format!("shifted model: {e}")))
}

//! Quaternion symbols `(x - e, f)` on the surface `y^2 = x (x - p) (x - q)`.
//!
//! Over the generic fiber `E`, the 2-descent sequence
//!
//! ```text
//! 0 -> E(k)/2E(k) --delta--> (k*/k*^2)^2 --gamma--> Br_2^0(E) -> 0
//! ```
//!
//! with `delta(M) = (x(M), x(M) - p)` and `gamma(f, g) = (x, f) + (x - p, g)`
//! produces the symbols studied here. A symbol `(x, f)` extends over the
//! whole surface iff at every odd place `t0` of the square class of `f` the
//! fiber is nodal with the node on `x = 0`, i.e. `p(t0) q(t0) != 0` and
//! `p(t0) = q(t0)`. Symbols in `x - p` and `x - q` are first moved to `x` by
//! `shift_coordinates`.
//!
//! Triviality is decided only when the Mordell-Weil rank is certified zero:
//! then `E(k)/2E(k)` is generated by the 2-torsion, and `(x, f)` is trivial
//! iff `([f], 1)` is one of `delta(O)`, `delta(Q)`, `delta(R)`, `delta(P)`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::elliptic_surface::{
    shift_coordinates, stable_fiber_table, SurfaceInvariants, SymbolSlot, WeierstrassData,
};
use crate::error::{Error, Result};
use crate::exact_algebra::rational::is_rational_square;
use crate::exact_algebra::{coprime, places_of, Polynomial, Rational};
use crate::function_field::{
    is_square, square_class, BaseFieldMode, Place, RationalFunction, SquareClass,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionSymbol {
    pub slot: SymbolSlot,
    pub f: RationalFunction,
}

impl QuaternionSymbol {
    pub fn new(slot: SymbolSlot, f: RationalFunction) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::degenerate("quaternion symbol with zero second slot"));
        }
        Ok(QuaternionSymbol { slot, f })
    }
}

impl fmt::Display for QuaternionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.slot, self.f)
    }
}

/// The 2-torsion points `O`, `R = (0, 0)`, `P = (p, 0)`, `Q = (q, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionPoint {
    O,
    R,
    P,
    Q,
}

impl TorsionPoint {
    pub const ALL: [TorsionPoint; 4] = [TorsionPoint::O, TorsionPoint::R, TorsionPoint::P, TorsionPoint::Q];
}

/// Klein four-group law.
impl std::ops::Add for TorsionPoint {
    type Output = TorsionPoint;

    fn add(self, other: TorsionPoint) -> TorsionPoint {
        use TorsionPoint::*;
        match (self, other) {
            (O, m) | (m, O) => m,
            (a, b) if a == b => O,
            (R, P) | (P, R) => Q,
            (R, Q) | (Q, R) => P,
            _ => R,
        }
    }
}

pub type SquareClassPair = (SquareClass, SquareClass);

fn class_of(f: &RationalFunction, mode: BaseFieldMode) -> SquareClass {
    square_class(f, mode).expect("nonzero by construction")
}

/// Connecting map of the 2-descent sequence on the 2-torsion points.
pub fn delta(m: TorsionPoint, w: &WeierstrassData, mode: BaseFieldMode) -> SquareClassPair {
    let p = RationalFunction::from(w.p().clone());
    let q = RationalFunction::from(w.q().clone());
    match m {
        TorsionPoint::O => (SquareClass::trivial(mode), SquareClass::trivial(mode)),
        // (q/p, -p)
        TorsionPoint::R => (
            class_of(&q.checked_div(&p).unwrap(), mode),
            class_of(&-&p, mode),
        ),
        // (p, (p - q)/p)
        TorsionPoint::P => (
            class_of(&p, mode),
            class_of(&(&p - &q).checked_div(&p).unwrap(), mode),
        ),
        // generic formula at x = q
        TorsionPoint::Q => (class_of(&q, mode), class_of(&(&q - &p), mode)),
    }
}

/// `delta` at a point with `x`-coordinate `x0` other than `0` and `p`.
pub fn delta_general(
    x0: &RationalFunction,
    w: &WeierstrassData,
    mode: BaseFieldMode,
) -> Result<SquareClassPair> {
    let p = RationalFunction::from(w.p().clone());
    if x0.is_zero() || x0 == &p {
        return Err(Error::WrongCase(format!(
            "x0 = {x0} is the x-coordinate of R or P; use delta(TorsionPoint)"
        )));
    }
    Ok((square_class(x0, mode)?, square_class(&(x0 - &p), mode)?))
}

/// `gamma(f, g) = (x, f) + (x - p, g)`, dropping trivial factors.
pub fn gamma(fclass: &SquareClass, gclass: &SquareClass) -> Vec<QuaternionSymbol> {
    let mut out = Vec::new();
    if !fclass.is_trivial() {
        out.push(QuaternionSymbol {
            slot: SymbolSlot::X0,
            f: fclass.representative(),
        });
    }
    if !gclass.is_trivial() {
        out.push(QuaternionSymbol {
            slot: SymbolSlot::XminusP,
            f: gclass.representative(),
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalizedSymbol {
    Trivial,
    /// Canonically ordered pair of nontrivial classes.
    Pair(SquareClass, SquareClass),
}

/// Rewrites `(a, b)` with the elementary identities: each slot only matters up
/// to squares, `(a, b) = (b, a)`, `(a, a) = (a, -1)` and `(1, b) = 0`. Equal
/// outputs imply equal Brauer classes; the converse is not claimed.
pub fn normalize_symbol(
    a: &RationalFunction,
    b: &RationalFunction,
    mode: BaseFieldMode,
) -> Result<NormalizedSymbol> {
    let ca = square_class(a, mode)?;
    let mut cb = square_class(b, mode)?;
    if ca == cb {
        cb = square_class(&RationalFunction::constant(-Rational::from_integer(1.into())), mode)?;
    }
    if ca.is_trivial() || cb.is_trivial() {
        return Ok(NormalizedSymbol::Trivial);
    }
    Ok(match ca.canonical_cmp(&cb) {
        Ordering::Greater => NormalizedSymbol::Pair(cb, ca),
        _ => NormalizedSymbol::Pair(ca, cb),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlaceVerdict {
    Unramified,
    Ramified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictReason {
    /// `p(t0) = q(t0) != 0`: the fiber is nodal with its node on `x = 0`.
    #[serde(rename = "common-node")]
    CommonNode,
    /// `p(t0) q(t0) = 0`.
    #[serde(rename = "zero-of-pq")]
    ZeroOfPq,
    /// `p(t0) != q(t0)`.
    #[serde(rename = "node-mismatch")]
    NodeMismatch,
}

impl VerdictReason {
    pub fn code(&self) -> &'static str {
        match self {
            VerdictReason::CommonNode => "common-node",
            VerdictReason::ZeroOfPq => "zero-of-pq",
            VerdictReason::NodeMismatch => "node-mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedPlace {
    pub place: Place,
    pub verdict: PlaceVerdict,
    pub reason: VerdictReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub checked_places: Vec<CheckedPlace>,
    pub overall_extends: bool,
    /// Rational mode: values that must be squares in the base field.
    pub required_squares: Vec<Rational>,
    /// Rational mode: `p(t0)` at bundled places, as a residue modulo the place.
    pub symbolic_conditions: Vec<(Place, Polynomial)>,
}

impl RamificationReport {
    /// Whether every required square is a square in Q. Meaningful in rational
    /// mode; `None` when some condition lives in a larger residue field.
    pub fn required_squares_hold(&self) -> Option<bool> {
        if !self.symbolic_conditions.is_empty() {
            return None;
        }
        Some(self.required_squares.iter().all(is_rational_square))
    }
}

fn check_values(p0: &Rational, q0: &Rational) -> (PlaceVerdict, VerdictReason) {
    if p0.is_zero() || q0.is_zero() {
        (PlaceVerdict::Ramified, VerdictReason::ZeroOfPq)
    } else if p0 != q0 {
        (PlaceVerdict::Ramified, VerdictReason::NodeMismatch)
    } else {
        (PlaceVerdict::Unramified, VerdictReason::CommonNode)
    }
}

/// Does the symbol extend to an Azumaya algebra on the whole surface?
pub fn ramification_verdict(
    w: &WeierstrassData,
    sym: &QuaternionSymbol,
    mode: BaseFieldMode,
) -> Result<RamificationReport> {
    if sym.f.is_zero() {
        return Err(Error::degenerate("quaternion symbol with zero second slot"));
    }
    stable_fiber_table(w)?;
    let shifted = shift_coordinates(w, sym.slot)?;
    let (p, q) = (shifted.p(), shifted.q());
    let odd = square_class(&sym.f, mode)?.odd_part().clone();

    let mut checked = Vec::new();
    let mut required_squares = Vec::new();
    let mut symbolic_conditions = Vec::new();

    if !odd.is_constant() {
        // refine so every place has uniform behaviour against p, q, p - q
        let mut places: Vec<Place> = places_of(&[odd.clone(), p.clone(), q.clone(), shifted.diff().clone()])?
            .into_iter()
            .filter(|v| v.polynomial().is_some_and(|h| h.divides(&odd)))
            .collect();
        places.sort_by(Place::report_cmp);
        for place in places {
            let h = place.polynomial().unwrap();
            let (verdict, reason) = if !coprime(h, &(p * q)) {
                (PlaceVerdict::Ramified, VerdictReason::ZeroOfPq)
            } else if !h.divides(shifted.diff()) {
                (PlaceVerdict::Ramified, VerdictReason::NodeMismatch)
            } else {
                (PlaceVerdict::Unramified, VerdictReason::CommonNode)
            };
            if verdict == PlaceVerdict::Unramified && mode == BaseFieldMode::Rational {
                match place.rational_root() {
                    Some(r) => required_squares.push(p.eval(&r)),
                    None => symbolic_conditions.push((place.clone(), p.rem(h))),
                }
            }
            checked.push(CheckedPlace {
                place,
                verdict,
                reason,
            });
        }
    }

    if odd.degree().unwrap_or(0) % 2 == 1 {
        // (s^m X, s) ~ (X, s) for m even: test s = 0 on the reversed model
        let rev = shifted.reversed()?;
        let (p0, q0) = (rev.p().constant_term(), rev.q().constant_term());
        let (verdict, reason) = check_values(&p0, &q0);
        if verdict == PlaceVerdict::Unramified && mode == BaseFieldMode::Rational {
            required_squares.push(p0);
        }
        checked.push(CheckedPlace {
            place: Place::Infinity,
            verdict,
            reason,
        });
    }

    let overall_extends = checked.iter().all(|c| c.verdict == PlaceVerdict::Unramified);
    Ok(RamificationReport {
        checked_places: checked,
        overall_extends,
        required_squares,
        symbolic_conditions,
    })
}

/// Which 2-torsion point trivializes `(x, f)`, numbered 1..=4 for
/// `O`, `Q`, `R`, `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrivialCase(pub u8);

impl TrivialCase {
    pub fn point(&self) -> TorsionPoint {
        match self.0 {
            1 => TorsionPoint::O,
            2 => TorsionPoint::Q,
            3 => TorsionPoint::R,
            _ => TorsionPoint::P,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    RamifiedInput,
    RankBoundPositive,
    SymbolicSquareUndecided,
    /// Some 2-torsion point is divisible by 2, so E(k)/2E(k) is not spanned by
    /// the 2-torsion and the missing descent class is not computed.
    TwoDivisibleTorsion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivialityVerdict {
    Trivial(TrivialCase),
    Nontrivial,
    Inconclusive(InconclusiveReason),
}

/// The first of the four descent cases that `f` satisfies on `w`, if any.
///
/// 1. `f` is a square;
/// 2. `f ~ q` and `q - p` is a square (`delta(Q)`);
/// 3. `f ~ -q` and `-p` is a square (`delta(R)`);
/// 4. `f ~ p` and `(p - q)/p` is a square (`delta(P)`).
pub fn trivializing_case(
    w: &WeierstrassData,
    f: &RationalFunction,
    mode: BaseFieldMode,
) -> Result<Option<TrivialCase>> {
    if f.is_zero() {
        return Err(Error::degenerate("zero function"));
    }
    let p = RationalFunction::from(w.p().clone());
    let q = RationalFunction::from(w.q().clone());
    let sq = |g: &RationalFunction| is_square(g, mode);
    if sq(f)? {
        return Ok(Some(TrivialCase(1)));
    }
    if sq(&q.checked_div(f)?)? && sq(&(&q - &p))? {
        return Ok(Some(TrivialCase(2)));
    }
    if sq(&(-&q).checked_div(f)?)? && sq(&-&p)? {
        return Ok(Some(TrivialCase(3)));
    }
    if sq(&p.checked_div(f)?)? && sq(&(&(&p - &q) * &p))? {
        return Ok(Some(TrivialCase(4)));
    }
    Ok(None)
}

/// True when `delta(M)` is trivial for some nonzero 2-torsion point `M`.
pub fn has_two_divisible_torsion(w: &WeierstrassData, mode: BaseFieldMode) -> bool {
    [TorsionPoint::R, TorsionPoint::P, TorsionPoint::Q]
        .into_iter()
        .any(|m| {
            let (a, b) = delta(m, w, mode);
            a.is_trivial() && b.is_trivial()
        })
}

/// Is the (unramified) symbol trivial in Br(X)?
pub fn triviality_verdict(
    w: &WeierstrassData,
    sym: &QuaternionSymbol,
    inv: &SurfaceInvariants,
    mode: BaseFieldMode,
) -> Result<TrivialityVerdict> {
    let report = ramification_verdict(w, sym, mode)?;
    triviality_from_report(w, sym, inv, mode, &report)
}

pub(crate) fn triviality_from_report(
    w: &WeierstrassData,
    sym: &QuaternionSymbol,
    inv: &SurfaceInvariants,
    mode: BaseFieldMode,
    report: &RamificationReport,
) -> Result<TrivialityVerdict> {
    use InconclusiveReason::*;
    if !report.overall_extends {
        return Ok(TrivialityVerdict::Inconclusive(RamifiedInput));
    }
    if mode == BaseFieldMode::Rational {
        match report.required_squares_hold() {
            None => return Ok(TrivialityVerdict::Inconclusive(SymbolicSquareUndecided)),
            Some(false) => return Ok(TrivialityVerdict::Inconclusive(RamifiedInput)),
            Some(true) => {}
        }
    }
    if inv.mw_rank_bound > 0 {
        return Ok(TrivialityVerdict::Inconclusive(RankBoundPositive));
    }
    let shifted = shift_coordinates(w, sym.slot)?;
    match trivializing_case(&shifted, &sym.f, mode)? {
        Some(TrivialCase(4)) if mode == BaseFieldMode::Complex => Err(Error::Anomaly(format!(
            "{sym}: f ~ p with (p - q)/p a square on a stable surface; over C this forces p and q to share a zero"
        ))),
        Some(case) => Ok(TrivialityVerdict::Trivial(case)),
        None if has_two_divisible_torsion(&shifted, mode) => {
            Ok(TrivialityVerdict::Inconclusive(TwoDivisibleTorsion))
        }
        None => Ok(TrivialityVerdict::Nontrivial),
    }
}

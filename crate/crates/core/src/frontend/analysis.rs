//! Batch driver: parse a request, analyze the surface and each symbol, and
//! collect a serializable report.

use serde::{Deserialize, Serialize};

use super::parser::{parse_poly, parse_ratfunc};
use crate::brauer_symbols::{
    ramification_verdict, triviality_from_report, InconclusiveReason, PlaceVerdict,
    QuaternionSymbol, RamificationReport, TrivialityVerdict, VerdictReason,
};
use crate::elliptic_surface::{
    invariants_from_table, stable_fiber_table, FiberReport, SurfaceInvariants, SymbolSlot,
    WeierstrassData,
};
use crate::error::{Error, Result};
use crate::exact_algebra::Rational;
use crate::function_field::{BaseFieldMode, Place};

pub const RANK_BOUND_NOTE: &str = "upper bound; exact iff Picard number is maximal";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolRequest {
    pub slot: String,
    #[serde(alias = "f_expr")]
    pub f: String,
}

impl SymbolRequest {
    /// `slot:expr`, e.g. `x-p:(t-1)*(t+3)`.
    pub fn parse_flag(s: &str) -> Result<Self> {
        let (slot, f) = s.split_once(':').ok_or_else(|| {
            Error::Validation(format!("symbol {s:?} is not of the form <slot>:<expr>"))
        })?;
        Ok(SymbolRequest {
            slot: slot.trim().to_string(),
            f: f.trim().to_string(),
        })
    }
}

fn default_mode() -> BaseFieldMode {
    BaseFieldMode::Complex
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisRequest {
    #[serde(alias = "p_expr")]
    pub p: String,
    #[serde(alias = "q_expr")]
    pub q: String,
    #[serde(default)]
    pub symbols: Vec<SymbolRequest>,
    #[serde(default = "default_mode")]
    pub mode: BaseFieldMode,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default)]
    pub invariants_only: bool,
}

impl AnalysisRequest {
    pub fn new(p: &str, q: &str) -> Self {
        AnalysisRequest {
            p: p.into(),
            q: q.into(),
            symbols: Vec::new(),
            mode: BaseFieldMode::Complex,
            output: OutputFormat::Text,
            invariants_only: false,
        }
    }

    pub fn symbol(mut self, slot: &str, f: &str) -> Self {
        self.symbols.push(SymbolRequest {
            slot: slot.into(),
            f: f.into(),
        });
        self
    }

    pub fn mode(mut self, mode: BaseFieldMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PlaceDto {
    Finite { poly: String, degree: usize },
    Infinity,
}

impl From<&Place> for PlaceDto {
    fn from(v: &Place) -> Self {
        match v {
            Place::Finite(pi) => PlaceDto::Finite {
                poly: pi.to_string(),
                degree: v.degree(),
            },
            Place::Infinity => PlaceDto::Infinity,
        }
    }
}

impl std::fmt::Display for PlaceDto {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlaceDto::Finite { poly, .. } => f.write_str(poly),
            PlaceDto::Infinity => f.write_str("infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDto {
    pub place: PlaceDto,
    pub a: u32,
    pub b: u32,
    pub n: u32,
    pub kodaira: String,
}

impl From<&FiberReport> for FiberDto {
    fn from(r: &FiberReport) -> Self {
        FiberDto {
            place: (&r.place).into(),
            a: r.signature.a,
            b: r.signature.b,
            n: r.signature.n,
            kodaira: r.kodaira.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDto {
    pub euler: u64,
    pub chi: u64,
    pub h11: u64,
    pub sum_m_minus_1: u64,
    pub mw_rank_bound: i64,
    pub mw_rank_bound_note: String,
}

impl From<&SurfaceInvariants> for InvariantsDto {
    fn from(i: &SurfaceInvariants) -> Self {
        InvariantsDto {
            euler: i.euler,
            chi: i.chi,
            h11: i.h11,
            sum_m_minus_1: i.sum_m_minus_1,
            mw_rank_bound: i.mw_rank_bound,
            mw_rank_bound_note: RANK_BOUND_NOTE.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDto {
    pub p: String,
    pub q: String,
    pub mode: BaseFieldMode,
    pub fibers: Vec<FiberDto>,
    pub invariants: InvariantsDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckedPlaceDto {
    pub place: PlaceDto,
    pub verdict: PlaceVerdict,
    pub reason: VerdictReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicConditionDto {
    pub place: PlaceDto,
    /// `p(t0)` as a residue modulo the place polynomial; must be a square there.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationDto {
    pub overall_extends: bool,
    pub checked_places: Vec<CheckedPlaceDto>,
    pub symbolic_conditions: Vec<SymbolicConditionDto>,
}

impl From<&RamificationReport> for RamificationDto {
    fn from(r: &RamificationReport) -> Self {
        RamificationDto {
            overall_extends: r.overall_extends,
            checked_places: r
                .checked_places
                .iter()
                .map(|c| CheckedPlaceDto {
                    place: (&c.place).into(),
                    verdict: c.verdict,
                    reason: c.reason,
                })
                .collect(),
            symbolic_conditions: r
                .symbolic_conditions
                .iter()
                .map(|(v, value)| SymbolicConditionDto {
                    place: v.into(),
                    value: value.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TrivialityDto {
    Trivial { case: u8 },
    Nontrivial,
    Inconclusive { reason: InconclusiveReason },
}

impl From<TrivialityVerdict> for TrivialityDto {
    fn from(v: TrivialityVerdict) -> Self {
        match v {
            TrivialityVerdict::Trivial(c) => TrivialityDto::Trivial { case: c.0 },
            TrivialityVerdict::Nontrivial => TrivialityDto::Nontrivial,
            TrivialityVerdict::Inconclusive(reason) => TrivialityDto::Inconclusive { reason },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolReport {
    pub slot: SymbolSlot,
    pub f: String,
    pub ramification: RamificationDto,
    pub triviality: TrivialityDto,
    /// Exact rationals, rendered as `a` or `a/b`.
    pub required_squares: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub surface: SurfaceDto,
    pub symbols: Vec<SymbolReport>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn render_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn run_analysis(req: &AnalysisRequest) -> Result<AnalysisReport> {
    if req.symbols.is_empty() && !req.invariants_only {
        return Err(Error::Validation(
            "no symbols requested; pass at least one symbol or ask for invariants only".into(),
        ));
    }
    let p = parse_poly(&req.p)?;
    let q = parse_poly(&req.q)?;
    // parse every symbol before any heavy work so syntax errors surface first
    let mut symbols = Vec::new();
    if !req.invariants_only {
        for s in &req.symbols {
            let slot: SymbolSlot = s.slot.parse()?;
            symbols.push(QuaternionSymbol::new(slot, parse_ratfunc(&s.f)?)?);
        }
    }

    let w = WeierstrassData::new(p, q)?;
    let table = stable_fiber_table(&w)?;
    let inv = invariants_from_table(&table)?;
    let mode = req.mode;

    let mut warnings = Vec::new();
    for r in &table {
        if r.place.degree() > 1 {
            warnings.push(format!(
                "place {} bundles {} conjugate points; its fiber type holds at each of them",
                r.place,
                r.place.degree()
            ));
        }
    }
    warnings.push(format!("mw_rank_bound = {}: {RANK_BOUND_NOTE}", inv.mw_rank_bound));

    let mut reports = Vec::new();
    for sym in &symbols {
        let ram = ramification_verdict(&w, sym, mode)?;
        let triv = triviality_from_report(&w, sym, &inv, mode, &ram)?;
        for (v, value) in &ram.symbolic_conditions {
            warnings.push(format!(
                "{sym}: {value} must be a square in Q[t]/({v}); not decided"
            ));
        }
        reports.push(SymbolReport {
            slot: sym.slot,
            f: sym.f.to_string(),
            ramification: (&ram).into(),
            triviality: triv.into(),
            required_squares: ram.required_squares.iter().map(render_rational).collect(),
        });
    }

    Ok(AnalysisReport {
        surface: SurfaceDto {
            p: w.p().to_string(),
            q: w.q().to_string(),
            mode,
            fibers: table.iter().map(FiberDto::from).collect(),
            invariants: (&inv).into(),
        },
        symbols: reports,
        warnings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport {
            error: ErrorBody {
                code: e.code().into(),
                message: e.to_string(),
            },
        }
    }
}

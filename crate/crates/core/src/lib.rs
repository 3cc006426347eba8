//! Exact analysis of quaternion symbols `(x - e, f)` on stable elliptic
//! surfaces `y^2 = x (x - p) (x - q)` over P^1, with `p, q` in Q[t].
//!
//! Fibers are classified place by place, the Euler number and Shioda-Tate
//! rank bound are derived from the fiber table, and each symbol gets a
//! ramification verdict and, when the rank is certified zero, a triviality
//! verdict from 2-descent.
//!
//! ```
//! use azumaya_core::{analyze, AnalysisRequest};
//!
//! let req = AnalysisRequest::new("3*(t+1)^3*(t-3)", "3*(t-1)^3*(t+3)").symbol("x", "t");
//! let report = analyze(&req).unwrap();
//! assert_eq!(report.surface.invariants.euler, 24);
//! assert!(report.symbols[0].ramification.overall_extends);
//! ```

pub mod brauer_symbols;
pub mod elliptic_surface;
pub mod error;
pub mod exact_algebra;
pub mod frontend;
pub mod function_field;
pub mod tame_symbol;

pub use brauer_symbols::{
    delta, delta_general, gamma, normalize_symbol, ramification_verdict, triviality_verdict,
    trivializing_case, InconclusiveReason, QuaternionSymbol, RamificationReport, TorsionPoint,
    TrivialCase, TrivialityVerdict,
};
pub use elliptic_surface::{
    classify_fiber, fiber_table, shift_coordinates, surface_invariants, FiberReport,
    FiberSignature, Kodaira, SurfaceInvariants, SymbolSlot, WeierstrassData,
};
pub use error::{Error, Result};
pub use exact_algebra::{Polynomial, Rational};
pub use frontend::analysis::{AnalysisReport, AnalysisRequest};
pub use frontend::{parse_poly, parse_ratfunc, render_text};
pub use function_field::{BaseFieldMode, Place, RationalFunction, SquareClass};

/// Runs a full analysis; see [`frontend::run_analysis`].
pub fn analyze(req: &AnalysisRequest) -> Result<AnalysisReport> {
    frontend::run_analysis(req)
}

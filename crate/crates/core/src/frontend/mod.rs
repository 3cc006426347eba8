//! Text input and report output.

pub mod analysis;
pub mod parser;
pub mod render;

pub use analysis::{run_analysis, AnalysisReport, AnalysisRequest, OutputFormat, SymbolRequest};
pub use parser::{parse_poly, parse_ratfunc, ParseError, ParseErrorKind};
pub use render::render_text;

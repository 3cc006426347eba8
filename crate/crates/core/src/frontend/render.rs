//! Plain-text rendering of analysis reports.

use std::fmt::Write;

use super::analysis::{AnalysisReport, TrivialityDto};
use crate::brauer_symbols::InconclusiveReason;

fn triviality_text(t: &TrivialityDto) -> String {
    match t {
        TrivialityDto::Trivial { case } => format!("trivial (case {case})"),
        TrivialityDto::Nontrivial => "nontrivial".into(),
        TrivialityDto::Inconclusive { reason } => {
            let why = match reason {
                InconclusiveReason::RamifiedInput => "ramified input",
                InconclusiveReason::RankBoundPositive => "Mordell-Weil rank bound is positive",
                InconclusiveReason::SymbolicSquareUndecided => "square condition at a bundled place undecided",
                InconclusiveReason::TwoDivisibleTorsion => "a 2-torsion point is 2-divisible",
            };
            format!("inconclusive ({why})")
        }
    }
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let s = &r.surface;
    writeln!(out, "surface  y^2 = x (x - p) (x - q)   [{} mode]", s.mode).unwrap();
    writeln!(out, "  p = {}", s.p).unwrap();
    writeln!(out, "  q = {}", s.q).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "singular fibers").unwrap();
    let width = s.fibers.iter().map(|f| f.place.to_string().len()).max().unwrap_or(0);
    for f in &s.fibers {
        writeln!(
            out,
            "  {:<width$}  {:<5}  (a, b, n) = ({}, {}, {})",
            f.place.to_string(),
            f.kodaira,
            f.a,
            f.b,
            f.n
        )
        .unwrap();
    }
    let i = &s.invariants;
    writeln!(out).unwrap();
    writeln!(out, "invariants").unwrap();
    writeln!(out, "  euler          {}", i.euler).unwrap();
    writeln!(out, "  chi            {}", i.chi).unwrap();
    writeln!(out, "  h11            {}", i.h11).unwrap();
    writeln!(out, "  sum(m_v - 1)   {}", i.sum_m_minus_1).unwrap();
    writeln!(out, "  mw_rank_bound  {}   ({})", i.mw_rank_bound, i.mw_rank_bound_note).unwrap();

    for sym in &r.symbols {
        writeln!(out).unwrap();
        writeln!(out, "symbol ({}, {})", sym.slot, sym.f).unwrap();
        let ram = &sym.ramification;
        for c in &ram.checked_places {
            let verdict = match c.verdict {
                crate::brauer_symbols::PlaceVerdict::Unramified => "unramified",
                crate::brauer_symbols::PlaceVerdict::Ramified => "ramified",
            };
            writeln!(out, "  {:<12} {verdict:<10}  {}", c.place.to_string(), c.reason.code()).unwrap();
        }
        writeln!(
            out,
            "  extends over the surface: {}",
            if ram.overall_extends { "yes" } else { "no" }
        )
        .unwrap();
        if !sym.required_squares.is_empty() {
            writeln!(out, "  required squares: {}", sym.required_squares.join(", ")).unwrap();
        }
        for c in &ram.symbolic_conditions {
            writeln!(out, "  required square mod {}: {}", c.place, c.value).unwrap();
        }
        writeln!(out, "  triviality: {}", triviality_text(&sym.triviality)).unwrap();
    }

    if !r.warnings.is_empty() {
        writeln!(out).unwrap();
        writeln!(out, "warnings").unwrap();
        for w in &r.warnings {
            writeln!(out, "  - {w}").unwrap();
        }
    }
    out
}

//! Recursive-descent parser for polynomial and rational-function input.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' exponent)?
//! atom  := integer | 't' | '(' expr ')'
//! ```
//!
//! An exponent is an integer literal or a parenthesized constant expression.
//! Juxtaposition (`2t`, `(t+1)(t-1)`) is rejected. Positions are byte offsets.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::exact_algebra::{Polynomial, Rational};
use crate::function_field::RationalFunction;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    ImplicitMultiplication,
    NegativeExponent,
    FractionalExponent,
    NonConstantExponent,
    ExponentTooLarge,
    /// Division by something other than a nonzero constant in polynomial input.
    NonPolynomial,
    DivisionByZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        write!(f, "parse error at position {}: ", self.position)?;
        match &self.kind {
            Empty => write!(f, "empty expression"),
            UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            UnexpectedEnd => write!(f, "unexpected end of input"),
            UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ImplicitMultiplication => write!(f, "implicit multiplication is not allowed; write '*'"),
            NegativeExponent => write!(f, "negative exponent"),
            FractionalExponent => write!(f, "fractional exponent"),
            NonConstantExponent => write!(f, "exponent must be a constant"),
            ExponentTooLarge => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            NonPolynomial => write!(f, "division by a non-constant in a polynomial"),
            DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Int(_) | Tok::T | Tok::LParen)
    }

    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::T => "'t'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn err(position: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { position, kind }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                Tok::Int(src[i..end].parse().unwrap())
            }
            't' => Tok::T,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(i, ParseErrorKind::UnexpectedChar(other))),
        };
        out.push((i, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    polynomial_only: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(err(self.offset(), ParseErrorKind::UnexpectedToken(t.describe()))),
            None => Err(err(self.end, ParseErrorKind::UnexpectedEnd)),
        }
    }

    /// After a complete operand: an operand start here means juxtaposition.
    fn reject_juxtaposition(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t.starts_atom() => Err(err(self.offset(), ParseErrorKind::ImplicitMultiplication)),
            _ => Ok(()),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.reject_juxtaposition()?;
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    let at = self.offset();
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(err(at, ParseErrorKind::DivisionByZero));
                    }
                    if self.polynomial_only && !(rhs.is_polynomial() && rhs.numer().is_constant()) {
                        return Err(err(at, ParseErrorKind::NonPolynomial));
                    }
                    acc = acc.checked_div(&rhs).expect("nonzero divisor");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        if self.peek() == Some(&Tok::Caret) {
            return Err(err(self.offset(), ParseErrorKind::UnexpectedToken("'^' (parenthesize repeated powers)".into())));
        }
        Ok(base.powi(e as i64).expect("nonnegative exponent"))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let value = match self.peek() {
            Some(Tok::Int(n)) => {
                let n = Rational::from_integer(n.clone());
                self.pos += 1;
                n
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                if !(inner.is_polynomial() && inner.numer().is_constant()) {
                    return Err(err(at, ParseErrorKind::NonConstantExponent));
                }
                inner.numer().constant_term()
            }
            Some(Tok::Minus) => return Err(err(at, ParseErrorKind::NegativeExponent)),
            Some(Tok::T) => return Err(err(at, ParseErrorKind::NonConstantExponent)),
            Some(t) => return Err(err(at, ParseErrorKind::UnexpectedToken(t.describe()))),
            None => return Err(err(self.end, ParseErrorKind::UnexpectedEnd)),
        };
        if value.is_negative() {
            return Err(err(at, ParseErrorKind::NegativeExponent));
        }
        if !value.is_integer() {
            return Err(err(at, ParseErrorKind::FractionalExponent));
        }
        match value.to_integer().to_u32() {
            Some(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(err(at, ParseErrorKind::ExponentTooLarge)),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(RationalFunction::constant(Rational::from_integer(n))),
            Some(Tok::T) => Ok(RationalFunction::t()),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(err(at, ParseErrorKind::UnexpectedToken(t.describe()))),
            None => Err(err(self.end, ParseErrorKind::UnexpectedEnd)),
        }
    }
}

fn parse(src: &str, polynomial_only: bool) -> Result<RationalFunction, ParseError> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: src.len(),
        polynomial_only,
    };
    let value = parser.expr()?;
    parser.reject_juxtaposition()?;
    if let Some(t) = parser.peek() {
        return Err(err(parser.offset(), ParseErrorKind::UnexpectedToken(t.describe())));
    }
    Ok(value)
}

/// Parses a polynomial in `t` with rational coefficients.
pub fn parse_poly(src: &str) -> Result<Polynomial, ParseError> {
    let f = parse(src, true)?;
    debug_assert!(f.is_polynomial());
    Ok(f.numer().clone())
}

/// Parses an element of Q(t); the result is normalized.
pub fn parse_ratfunc(src: &str) -> Result<RationalFunction, ParseError> {
    parse(src, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::rat;
    use crate::function_field::Place;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }
    fn kind(src: &str) -> ParseErrorKind {
        parse_ratfunc(src).unwrap_err().kind
    }

    #[test]
    fn example_polynomials() {
        let got = parse_poly("3*(t+1)^3*(t-3)").unwrap();
        assert_eq!(got, (&p(&[1, 1]).pow(3) * &p(&[-3, 1])).scale(&rat(3)));
        assert!(parse_poly("0").unwrap().is_zero());
        assert_eq!(parse_poly("(t-1)*(t+3)").unwrap(), p(&[-3, 2, 1]));
        assert_eq!(parse_poly(" - t ^ 2 + 2 * t - 3 ").unwrap(), p(&[-3, 2, -1]));
        assert_eq!(parse_poly("3/4*t-1/2").unwrap().coeffs(), &[rat(-1) / rat(2), rat(3) / rat(4)]);
        assert_eq!(parse_poly("t^(2*3-4)").unwrap(), p(&[0, 0, 1]));
        assert_eq!(parse_poly("--t").unwrap(), p(&[0, 1]));
    }

    #[test]
    fn example_ratfuncs() {
        assert_eq!(parse_ratfunc("t").unwrap(), RationalFunction::t());
        assert_eq!(parse_ratfunc("1/t").unwrap().valuation(&Place::origin()).unwrap(), -1);
        assert_eq!(parse_ratfunc("(t^2-1)/(t-1)").unwrap(), RationalFunction::from(p(&[1, 1])));
        assert_eq!(parse_ratfunc("t/t^2*t").unwrap(), RationalFunction::one());
    }

    #[test]
    fn errors() {
        use ParseErrorKind::*;
        assert_eq!(kind(""), Empty);
        assert_eq!(kind("  "), Empty);
        assert_eq!(kind("2t"), ImplicitMultiplication);
        assert_eq!(kind("(t+1)(t-1)"), ImplicitMultiplication);
        assert_eq!(kind("t 2"), ImplicitMultiplication);
        assert_eq!(kind("t^-1"), NegativeExponent);
        assert_eq!(kind("t^(0-2)"), NegativeExponent);
        assert_eq!(kind("t^(1/2)"), FractionalExponent);
        assert_eq!(kind("t^t"), NonConstantExponent);
        assert_eq!(kind("t^2000"), ExponentTooLarge);
        assert_eq!(kind("t^2^3"), UnexpectedToken("'^' (parenthesize repeated powers)".into()));
        assert_eq!(kind("1/(t-t)"), DivisionByZero);
        assert_eq!(kind("x"), UnexpectedChar('x'));
        assert_eq!(kind("(t+1"), UnexpectedEnd);
        assert_eq!(kind("t+"), UnexpectedEnd);
        assert_eq!(kind("t)"), UnexpectedToken("')'".into()));
        assert_eq!(parse_poly("1/t").unwrap_err().kind, NonPolynomial);
        assert_eq!(parse_poly("t/0").unwrap_err().kind, DivisionByZero);
    }

    #[test]
    fn positions() {
        assert_eq!(parse_ratfunc("t + 2t").unwrap_err().position, 5);
        assert_eq!(parse_ratfunc("t^ -1").unwrap_err().position, 3);
        assert_eq!(parse_poly("t+1/ t").unwrap_err().position, 3);
        assert_eq!(parse_ratfunc("t*(t+1").unwrap_err().position, 6);
    }

    #[test]
    fn message() {
        let e = parse_ratfunc("2t").unwrap_err();
        assert_eq!(e.to_string(), "parse error at position 1: implicit multiplication is not allowed; write '*'");
    }
}

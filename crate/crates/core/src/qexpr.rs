//! A small expression language for q-series.
//!
//! Identities can be written as text, parsed, and evaluated to an exact
//! [`Series`], from the command line or from test fixtures. The grammar,
//! which is the stable contract:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := 'q' | int | '(' expr ')' | func
//! func   := 'poch' '(' sign ',' uint ',' uint [',' uint] ')'
//!         | 'qbinom' '(' uint ',' uint ')'
//!         | 'lambert' '(' uint ')'
//!         | 'theta' '(' ('pent'|'gauss') ')'
//!         | 'trunc' '(' ('pent'|'gauss') ',' uint ')'
//!         | 'stat' '(' name [',' uint] ')'          name: p,Q,b,s,S,e,M,MP
//! sign   := '+' | '-'
//! ```
//!
//! `poch(sign,j,m)` is the infinite product `(sign*q^j; q^m)_inf`;
//! `poch(sign,j,m,n)` the finite one. Only `a = +-q^j` arguments exist, which
//! keeps every evaluation in integer coefficients. Division is defined when
//! the denominator has constant term 1.

use crate::qkernels::{
    gauss_theta, lambert, pentagonal_theta, poch_fin, poch_inf, qbinomial, truncated_gauss,
    truncated_pentagonal, Sign,
};
use crate::series::{Series, SeriesError};
use crate::statistics::{self as stats, StatKind};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    Pentagonal,
    Gauss,
}

impl ThetaKind {
    fn as_str(&self) -> &'static str {
        match self {
            ThetaKind::Pentagonal => "pent",
            ThetaKind::Gauss => "gauss",
        }
    }
}

/// Parsed q-series expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    PochInf { sign: Sign, start: u32, step: u32 },
    PochFin { sign: Sign, start: u32, step: u32, len: u32 },
    QBinom { n: u32, k: u32 },
    Lambert { step: u32 },
    Theta(ThetaKind),
    TruncTheta { kind: ThetaKind, k: u32 },
    Stat { kind: StatKind, k: Option<u32> },
}

// ---------------------------------------------------------------------------
// lexing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {}", v),
            Tok::Ident(s) => format!("'{}'", s),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Unexpected token; `expected` lists what would have been accepted.
    Syntax { expected: Vec<&'static str>, found: String },
    UnknownFunction { name: String },
    /// Wrong argument count or an argument outside the allowed domain.
    Argument { message: String },
}

/// Parse failure with its byte offset and 1-based line/column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{} (offset {}): ", self.line, self.column, self.offset)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                write!(f, "syntax error: expected {}, found {}", expected.join(" or "), found)
            }
            ParseErrorKind::UnknownFunction { name } => {
                write!(f, "unknown function name '{}'", name)
            }
            ParseErrorKind::Argument { message } => write!(f, "{}", message),
        }
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut line_start = 0;
    for (i, ch) in text.char_indices() {
        if i >= offset {
            break;
        }
        if ch == '\n' {
            line += 1;
            line_start = i + 1;
        }
    }
    (line, offset - line_start + 1)
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                tokens.push(Token {
                    tok: Tok::Int(digits.parse::<BigInt>().expect("digits")),
                    offset: start,
                });
                continue;
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(Token {
                    tok: Tok::Ident(text[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            other => {
                let (line, column) = line_column(text, i);
                return Err(ParseError {
                    offset: i,
                    line,
                    column,
                    kind: ParseErrorKind::Syntax {
                        expected: vec!["token"],
                        found: format!("character '{}'", other),
                    },
                });
            }
        };
        tokens.push(Token { tok, offset: i });
        i += 1;
    }
    tokens.push(Token {
        tok: Tok::Eof,
        offset: bytes.len(),
    });
    Ok(tokens)
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

/// Parse an expression in the grammar above into its unique AST.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser { text, tokens, pos: 0 };
    let expr = parser.parse_expr()?;
    if parser.peek().tok != Tok::Eof {
        return Err(parser.syntax_error(vec!["'+'", "'-'", "'*'", "'/'", "end of input"]));
    }
    Ok(expr)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        let (line, column) = line_column(self.text, offset);
        ParseError {
            offset,
            line,
            column,
            kind,
        }
    }

    fn syntax_error(&self, expected: Vec<&'static str>) -> ParseError {
        let tok = self.peek();
        self.error_at(
            tok.offset,
            ParseErrorKind::Syntax {
                expected,
                found: tok.tok.describe(),
            },
        )
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.syntax_error(vec![expected]))
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.parse_term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.parse_term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.parse_factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.parse_factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.parse_factor()?)));
        }
        let atom = self.parse_atom()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let (exp, _) = self.parse_uint("power exponent")?;
            return Ok(Expr::Pow(Box::new(atom), exp));
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(_) => {
                if let Tok::Int(v) = self.bump().tok {
                    Ok(Expr::Int(v))
                } else {
                    unreachable!()
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let offset = self.peek().offset;
                self.bump();
                self.parse_named(&name, offset)
            }
            _ => Err(self.syntax_error(vec!["'q'", "integer", "'('", "function name"])),
        }
    }

    fn parse_named(&mut self, name: &str, offset: usize) -> Result<Expr, ParseError> {
        match name {
            "q" => Ok(Expr::Q),
            "poch" => {
                self.expect(Tok::LParen, "'('")?;
                let sign = self.parse_sign()?;
                self.expect(Tok::Comma, "','")?;
                let (start, start_off) = self.parse_uint("pochhammer start exponent")?;
                if start == 0 {
                    return Err(self.error_at(
                        start_off,
                        ParseErrorKind::Argument {
                            message: "pochhammer start exponent must be >= 1".into(),
                        },
                    ));
                }
                self.expect(Tok::Comma, "','")?;
                let (step, step_off) = self.parse_uint("pochhammer step")?;
                if step == 0 {
                    return Err(self.error_at(
                        step_off,
                        ParseErrorKind::Argument {
                            message: "pochhammer step must be >= 1".into(),
                        },
                    ));
                }
                let len = if self.peek().tok == Tok::Comma {
                    self.bump();
                    Some(self.parse_uint("pochhammer length")?.0)
                } else {
                    None
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(match len {
                    None => Expr::PochInf { sign, start, step },
                    Some(len) => Expr::PochFin {
                        sign,
                        start,
                        step,
                        len,
                    },
                })
            }
            "qbinom" => {
                self.expect(Tok::LParen, "'('")?;
                let (n, _) = self.parse_uint("qbinom n")?;
                self.expect(Tok::Comma, "','")?;
                let (k, _) = self.parse_uint("qbinom k")?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::QBinom { n, k })
            }
            "lambert" => {
                self.expect(Tok::LParen, "'('")?;
                let (step, step_off) = self.parse_uint("lambert step")?;
                if step == 0 {
                    return Err(self.error_at(
                        step_off,
                        ParseErrorKind::Argument {
                            message: "lambert step must be >= 1".into(),
                        },
                    ));
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Lambert { step })
            }
            "theta" => {
                self.expect(Tok::LParen, "'('")?;
                let kind = self.parse_theta_kind()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Theta(kind))
            }
            "trunc" => {
                self.expect(Tok::LParen, "'('")?;
                let kind = self.parse_theta_kind()?;
                self.expect(Tok::Comma, "','")?;
                let (k, k_off) = self.parse_uint("truncation index")?;
                if k == 0 {
                    return Err(self.error_at(
                        k_off,
                        ParseErrorKind::Argument {
                            message: "truncation index must be >= 1".into(),
                        },
                    ));
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::TruncTheta { kind, k })
            }
            "stat" => {
                self.expect(Tok::LParen, "'('")?;
                let kind = self.parse_stat_name()?;
                let k = if self.peek().tok == Tok::Comma {
                    self.bump();
                    Some(self.parse_uint("stat parameter")?.0)
                } else {
                    None
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Stat { kind, k })
            }
            _ => Err(self.error_at(
                offset,
                ParseErrorKind::UnknownFunction {
                    name: name.to_string(),
                },
            )),
        }
    }

    fn parse_sign(&mut self) -> Result<Sign, ParseError> {
        match self.peek().tok {
            Tok::Plus => {
                self.bump();
                Ok(Sign::Plus)
            }
            Tok::Minus => {
                self.bump();
                Ok(Sign::Minus)
            }
            _ => Err(self.syntax_error(vec!["'+'", "'-'"])),
        }
    }

    fn parse_uint(&mut self, what: &'static str) -> Result<(u32, usize), ParseError> {
        let offset = self.peek().offset;
        match self.peek().tok.clone() {
            Tok::Int(v) => {
                self.bump();
                match v.to_u32() {
                    Some(u) => Ok((u, offset)),
                    None => Err(self.error_at(
                        offset,
                        ParseErrorKind::Argument {
                            message: format!("{} out of range: {}", what, v),
                        },
                    )),
                }
            }
            _ => Err(self.syntax_error(vec!["unsigned integer"])),
        }
    }

    fn parse_theta_kind(&mut self) -> Result<ThetaKind, ParseError> {
        match self.peek().tok.clone() {
            Tok::Ident(s) if s == "pent" => {
                self.bump();
                Ok(ThetaKind::Pentagonal)
            }
            Tok::Ident(s) if s == "gauss" => {
                self.bump();
                Ok(ThetaKind::Gauss)
            }
            _ => Err(self.syntax_error(vec!["'pent'", "'gauss'"])),
        }
    }

    fn parse_stat_name(&mut self) -> Result<StatKind, ParseError> {
        let offset = self.peek().offset;
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let kind = match s.as_str() {
                    "p" => StatKind::P,
                    "Q" => StatKind::Q,
                    "b" => StatKind::B,
                    "s" => StatKind::S,
                    "S" => StatKind::STotal,
                    "e" => StatKind::E,
                    "M" => StatKind::M,
                    "MP" => StatKind::Mp,
                    _ => {
                        return Err(self.error_at(
                            offset,
                            ParseErrorKind::Argument {
                                message: format!(
                                    "unknown statistic '{}': expected p, Q, b, s, S, e, M or MP",
                                    s
                                ),
                            },
                        ))
                    }
                };
                self.bump();
                Ok(kind)
            }
            _ => Err(self.syntax_error(vec!["statistic name"])),
        }
    }
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

// binding strengths: 0 add/sub, 1 mul/div, 2 unary minus, 3 pow, 4 atom
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) | Expr::Div(..) => 1,
        Expr::Neg(..) => 2,
        Expr::Pow(..) => 3,
        _ => 4,
    }
}

fn fmt_prec(e: &Expr, min_level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(e) < min_level {
        write!(f, "(")?;
        fmt_prec(e, 0, f)?;
        return write!(f, ")");
    }
    match e {
        Expr::Int(v) => write!(f, "{}", v),
        Expr::Q => write!(f, "q"),
        Expr::Add(a, b) => {
            fmt_prec(a, 0, f)?;
            write!(f, " + ")?;
            fmt_prec(b, 1, f)
        }
        Expr::Sub(a, b) => {
            fmt_prec(a, 0, f)?;
            write!(f, " - ")?;
            fmt_prec(b, 1, f)
        }
        Expr::Mul(a, b) => {
            fmt_prec(a, 1, f)?;
            write!(f, "*")?;
            fmt_prec(b, 2, f)
        }
        Expr::Div(a, b) => {
            fmt_prec(a, 1, f)?;
            write!(f, "/")?;
            fmt_prec(b, 2, f)
        }
        Expr::Neg(a) => {
            write!(f, "-")?;
            fmt_prec(a, 2, f)
        }
        Expr::Pow(a, e) => {
            fmt_prec(a, 4, f)?;
            write!(f, "^{}", e)
        }
        Expr::PochInf { sign, start, step } => {
            write!(f, "poch({},{},{})", sign_char(*sign), start, step)
        }
        Expr::PochFin {
            sign,
            start,
            step,
            len,
        } => write!(f, "poch({},{},{},{})", sign_char(*sign), start, step, len),
        Expr::QBinom { n, k } => write!(f, "qbinom({},{})", n, k),
        Expr::Lambert { step } => write!(f, "lambert({})", step),
        Expr::Theta(kind) => write!(f, "theta({})", kind.as_str()),
        Expr::TruncTheta { kind, k } => write!(f, "trunc({},{})", kind.as_str(), k),
        Expr::Stat { kind, k } => match k {
            Some(k) => write!(f, "stat({},{})", kind.symbol(), k),
            None => write!(f, "stat({})", kind.symbol()),
        },
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 0, f)
    }
}

fn sign_char(sign: Sign) -> char {
    match sign {
        Sign::Plus => '+',
        Sign::Minus => '-',
    }
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division requires a denominator with constant term 1, found {found}")]
    DivisorNotUnit { found: BigInt },
    #[error("statistic {0} requires a k argument")]
    MissingStatK(StatKind),
    #[error("statistic {0} takes no k argument")]
    SuperfluousStatK(StatKind),
    #[error("statistic {0} requires k >= 1")]
    ZeroStatK(StatKind),
}

/// Evaluate an expression to an exact series of the given order.
pub fn eval(expr: &Expr, order: usize) -> Result<Series, EvalError> {
    Ok(match expr {
        Expr::Int(v) => Series::monomial(v.clone(), 0, order),
        Expr::Q => Series::monomial(1, 1, order),
        Expr::Add(a, b) => &eval(a, order)? + &eval(b, order)?,
        Expr::Sub(a, b) => &eval(a, order)? - &eval(b, order)?,
        Expr::Mul(a, b) => &eval(a, order)? * &eval(b, order)?,
        Expr::Div(a, b) => {
            let denom = eval(b, order)?;
            let inv = denom.inverse().map_err(|e| match e {
                SeriesError::NonUnitConstant { found } => EvalError::DivisorNotUnit { found },
            })?;
            &eval(a, order)? * &inv
        }
        Expr::Neg(a) => eval(a, order)?.neg(),
        Expr::Pow(a, e) => pow_series(&eval(a, order)?, *e, order),
        Expr::PochInf { sign, start, step } => {
            poch_inf(*sign, *start as usize, *step as usize, order)
        }
        Expr::PochFin {
            sign,
            start,
            step,
            len,
        } => poch_fin(*sign, *start as usize, *step as usize, *len as usize, order),
        Expr::QBinom { n, k } => qbinomial(*n as usize, *k as i64, order),
        Expr::Lambert { step } => lambert(*step as usize, order),
        Expr::Theta(ThetaKind::Pentagonal) => pentagonal_theta(order),
        Expr::Theta(ThetaKind::Gauss) => gauss_theta(order),
        Expr::TruncTheta {
            kind: ThetaKind::Pentagonal,
            k,
        } => truncated_pentagonal(*k as usize, order),
        Expr::TruncTheta {
            kind: ThetaKind::Gauss,
            k,
        } => truncated_gauss(*k as usize, order),
        Expr::Stat { kind, k } => eval_stat(*kind, *k, order)?,
    })
}

fn eval_stat(kind: StatKind, k: Option<u32>, order: usize) -> Result<Series, EvalError> {
    if kind.takes_k() {
        let k = k.ok_or(EvalError::MissingStatK(kind))? as usize;
        if k == 0 {
            return Err(EvalError::ZeroStatK(kind));
        }
        Ok(match kind {
            StatKind::M => stats::mk_series(k, order),
            _ => stats::mpk_series(k, order),
        })
    } else {
        if k.is_some() {
            return Err(EvalError::SuperfluousStatK(kind));
        }
        Ok(match kind {
            StatKind::P => stats::p_series(order),
            StatKind::Q => stats::big_q_series(order),
            // a and c alias the b series
            StatKind::B | StatKind::A | StatKind::C => stats::b_series(order),
            StatKind::S => stats::s_series(order),
            StatKind::STotal => stats::big_s_series(order),
            StatKind::E => stats::e_series(order),
            StatKind::M | StatKind::Mp => unreachable!(),
        })
    }
}

fn pow_series(base: &Series, mut e: u32, order: usize) -> Series {
    let mut result = Series::one(order);
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(v: i64) -> Box<Expr> {
        Box::new(Expr::Int(BigInt::from(v)))
    }

    #[test]
    fn parses_partition_generating_function() {
        let got = parse("1/poch(+,1,1)").unwrap();
        let expected = Expr::Div(
            int(1),
            Box::new(Expr::PochInf {
                sign: Sign::Plus,
                start: 1,
                step: 1,
            }),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn parses_product_of_functions() {
        let got = parse("poch(-,1,1)*lambert(2)").unwrap();
        let expected = Expr::Mul(
            Box::new(Expr::PochInf {
                sign: Sign::Minus,
                start: 1,
                step: 1,
            }),
            Box::new(Expr::Lambert { step: 2 }),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn out_of_range_qbinom_evaluates_to_zero() {
        let got = parse("qbinom(3,5)").unwrap();
        assert_eq!(got, Expr::QBinom { n: 3, k: 5 });
        assert!(eval(&got, 8).unwrap().is_zero());
    }

    #[test]
    fn precedence() {
        let got = parse("1+2*q^2").unwrap();
        let expected = Expr::Add(
            int(1),
            Box::new(Expr::Mul(int(2), Box::new(Expr::Pow(Box::new(Expr::Q), 2)))),
        );
        assert_eq!(got, expected);
        // unary minus binds tighter than * but looser than ^
        assert_eq!(
            parse("-q^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Q), 2)))
        );
        assert_eq!(
            parse("(1+q)^2").unwrap(),
            Expr::Pow(Box::new(Expr::Add(int(1), Box::new(Expr::Q))), 2)
        );
    }

    #[test]
    fn syntax_error_carries_offset_and_position() {
        let err = parse("1/(").unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!((err.line, err.column), (1, 4));
        match err.kind {
            ParseErrorKind::Syntax { expected, found } => {
                assert!(!expected.is_empty());
                assert_eq!(found, "end of input");
            }
            other => panic!("wrong error kind: {:?}", other),
        }
    }

    #[test]
    fn multiline_positions() {
        let err = parse("1 +\n2 *").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.column, 4);
    }

    #[test]
    fn unknown_function_is_reported() {
        let err = parse("frobnicate(1)").unwrap_err();
        assert_eq!(err.offset, 0);
        assert_eq!(
            err.kind,
            ParseErrorKind::UnknownFunction {
                name: "frobnicate".into()
            }
        );
    }

    #[test]
    fn argument_validation() {
        assert!(matches!(
            parse("poch(+,0,1)").unwrap_err().kind,
            ParseErrorKind::Argument { .. }
        ));
        assert!(matches!(
            parse("poch(+,1)").unwrap_err().kind,
            ParseErrorKind::Syntax { .. }
        ));
        assert!(matches!(
            parse("lambert(0)").unwrap_err().kind,
            ParseErrorKind::Argument { .. }
        ));
        assert!(matches!(
            parse("stat(z)").unwrap_err().kind,
            ParseErrorKind::Argument { .. }
        ));
        assert!(matches!(
            parse("theta(elliptic)").unwrap_err().kind,
            ParseErrorKind::Syntax { .. }
        ));
    }

    #[test]
    fn eval_partition_count() {
        let s = eval(&parse("1/poch(+,1,1)").unwrap(), 5).unwrap();
        assert_eq!(*s.coeff(5), BigInt::from(7));
    }

    #[test]
    fn eval_part_difference_factorization() {
        let s = eval(&parse("poch(-,1,1)*lambert(2)").unwrap(), 5).unwrap();
        assert_eq!(*s.coeff(5), BigInt::from(4));
    }

    #[test]
    fn eval_pentagonal_identity_is_zero() {
        let s = eval(&parse("theta(pent) - poch(+,1,1)").unwrap(), 60).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn eval_geometric_division() {
        let s = eval(&parse("1/(1-q)").unwrap(), 4).unwrap();
        assert_eq!(s.coeffs().iter().map(i64::try_from).collect::<Result<Vec<_>, _>>().unwrap(),
            vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn eval_division_by_non_unit_fails() {
        assert_eq!(
            eval(&parse("1/q").unwrap(), 4),
            Err(EvalError::DivisorNotUnit {
                found: BigInt::from(0)
            })
        );
        assert_eq!(
            eval(&parse("1/(2+q)").unwrap(), 4),
            Err(EvalError::DivisorNotUnit {
                found: BigInt::from(2)
            })
        );
    }

    #[test]
    fn eval_stat_requires_matching_k() {
        assert_eq!(
            eval(&parse("stat(M)").unwrap(), 4),
            Err(EvalError::MissingStatK(StatKind::M))
        );
        assert_eq!(
            eval(&parse("stat(p,3)").unwrap(), 4),
            Err(EvalError::SuperfluousStatK(StatKind::P))
        );
        assert_eq!(
            eval(&parse("stat(MP,0)").unwrap(), 4),
            Err(EvalError::ZeroStatK(StatKind::Mp))
        );
        let m1 = eval(&parse("stat(M,1)").unwrap(), 5).unwrap();
        assert_eq!(*m1.coeff(2), BigInt::from(1));
    }

    #[test]
    fn eval_pow_matches_repeated_multiplication() {
        let base = eval(&parse("1+q").unwrap(), 8).unwrap();
        let cube = eval(&parse("(1+q)^3").unwrap(), 8).unwrap();
        assert_eq!(cube, &(&base * &base) * &base);
        let zeroth = eval(&parse("(1+q)^0").unwrap(), 8).unwrap();
        assert_eq!(zeroth, Series::one(8));
    }

    #[test]
    fn printer_round_trips_spec_examples() {
        for text in [
            "1/poch(+,1,1)",
            "poch(-,1,1)*lambert(2)",
            "qbinom(3,5)",
            "theta(pent) - poch(+,1,1)",
            "trunc(gauss,2)*stat(S)/stat(MP,2)",
            "-(1 + q)^3*q",
            "1 - q - q^3 + q^6",
        ] {
            let ast = parse(text).unwrap();
            let printed = ast.to_string();
            assert_eq!(parse(&printed).unwrap(), ast, "printed form: {}", printed);
        }
    }
}

//! The scalar expression grammar and matrix input forms.
//!
//! Scalars: integers, `x_<i>` for field variables (negative indices written
//! `x_-2`), `t` for the loop variable, operators `+ - * / ^` with integer
//! exponents, and parentheses. Each command evaluates the same grammar into
//! its own ring; out-of-ring symbols and fold-time division by zero are
//! position-tagged errors.
//!
//! Matrices come inline as `[[a, b], [c, d]]` or as the shared JSON record
//! `{"n": …, "ring": …, "entries": […]}`; number-field entries are
//! coordinate vectors like `[0, 1/3]` or plain rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use loopdeg::matrices::MatrixRecord;
use loopdeg::{LaurentPolynomial, Matrix, NFElement, NumberField, Rational, RationalFunction};

/// A syntax or evaluation error with the byte offset it occurred at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

// ---- lexer ----

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var(i32),
    LoopVar,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                tokens.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::from_str(&text[start..i]).expect("digits parse");
                tokens.push((start, Token::Int(n)));
            }
            't' => {
                tokens.push((i, Token::LoopVar));
                i += 1;
            }
            'x' => {
                let start = i;
                i += 1;
                if i >= bytes.len() || bytes[i] as char != '_' {
                    return Err(ParseError::new(
                        start,
                        "expected '_' after 'x' (variables are written x_<i>)",
                    ));
                }
                i += 1;
                let sign_start = i;
                if i < bytes.len() && bytes[i] as char == '-' {
                    i += 1;
                }
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == digits_start {
                    return Err(ParseError::new(start, "expected an index after 'x_'"));
                }
                let index: i32 = text[sign_start..i].parse().map_err(|_| {
                    ParseError::new(start, "variable index out of range")
                })?;
                tokens.push((start, Token::Var(index)));
            }
            _ => {
                return Err(ParseError::new(i, format!("unexpected character '{}'", c)));
            }
        }
    }
    Ok(tokens)
}

// ---- AST ----

#[derive(Debug, Clone, PartialEq, Eq)]
enum Ast {
    Int(BigInt),
    Var(usize, i32),
    LoopVar(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(usize, Box<Ast>, Box<Ast>),
    Pow(usize, Box<Ast>, i64),
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&(usize, Token)> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        while let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    lhs = Ast::Add(Box::new(lhs), Box::new(rhs));
                }
                Token::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(&(pos, ref tok)) = self.peek() {
            match tok {
                Token::Star => {
                    self.next();
                    let rhs = self.unary()?;
                    lhs = Ast::Mul(Box::new(lhs), Box::new(rhs));
                }
                Token::Slash => {
                    self.next();
                    let rhs = self.unary()?;
                    lhs = Ast::Div(pos, Box::new(lhs), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if let Some((_, Token::Minus)) = self.peek() {
            self.next();
            let inner = self.unary()?;
            return Ok(Ast::Neg(Box::new(inner)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Ast, ParseError> {
        let base = self.primary()?;
        if let Some(&(pos, Token::Caret)) = self.peek() {
            self.next();
            let mut negative = false;
            if let Some((_, Token::Minus)) = self.peek() {
                self.next();
                negative = true;
            }
            match self.next() {
                Some((ipos, Token::Int(n))) => {
                    let exp: i64 = n.try_into().map_err(|_| {
                        ParseError::new(*ipos, "exponent too large")
                    })?;
                    let exp = if negative { -exp } else { exp };
                    Ok(Ast::Pow(pos, Box::new(base), exp))
                }
                Some(&(p, _)) => Err(ParseError::new(p, "expected an integer exponent after '^'")),
                None => Err(ParseError::new(pos, "expected an integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Ast, ParseError> {
        match self.next() {
            Some(&(pos, ref tok)) => match tok {
                Token::Int(n) => Ok(Ast::Int(n.clone())),
                Token::Var(i) => Ok(Ast::Var(pos, *i)),
                Token::LoopVar => Ok(Ast::LoopVar(pos)),
                Token::LParen => {
                    let inner = self.expr()?;
                    match self.next() {
                        Some((_, Token::RParen)) => Ok(inner),
                        Some(&(p, _)) => Err(ParseError::new(p, "expected ')'")),
                        None => Err(ParseError::new(self.len, "unclosed '('")),
                    }
                }
                _ => Err(ParseError::new(pos, "expected a value")),
            },
            None => Err(ParseError::new(self.len, "unexpected end of input")),
        }
    }
}

// ---- evaluation ----

/// A ring the scalar grammar can be evaluated into.
pub trait ScalarRing: Sized + Clone {
    /// Tag used by the shared matrix record format.
    const RING_TAG: &'static str;

    fn from_bigint(n: &BigInt) -> Self;
    /// The field variable `x_i`, if the ring has it.
    fn variable(index: i32) -> Result<Self, String>;
    /// The loop variable `t`, if the ring has it.
    fn loop_variable() -> Result<Self, String>;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, rhs: &Self) -> Result<Self, String>;
    fn pow(&self, exp: i64) -> Result<Self, String>;
}

impl ScalarRing for Rational {
    const RING_TAG: &'static str = "rational";

    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn variable(index: i32) -> Result<Self, String> {
        Err(format!("variable x_{index} is not allowed in the rational ring"))
    }

    fn loop_variable() -> Result<Self, String> {
        Err("the loop variable t is not allowed in the rational ring".to_string())
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, rhs: &Self) -> Result<Self, String> {
        if num_traits::Zero::is_zero(rhs) {
            Err("division by zero".to_string())
        } else {
            Ok(self / rhs)
        }
    }

    fn pow(&self, exp: i64) -> Result<Self, String> {
        if exp < 0 && num_traits::Zero::is_zero(self) {
            return Err("zero cannot be raised to a negative power".to_string());
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut acc = Rational::from_integer(1.into());
        for _ in 0..exp.unsigned_abs() {
            acc *= base.clone();
        }
        Ok(acc)
    }
}

impl ScalarRing for RationalFunction {
    const RING_TAG: &'static str = "rational_function";

    fn from_bigint(n: &BigInt) -> Self {
        RationalFunction::constant(Rational::from_integer(n.clone()))
    }

    fn variable(index: i32) -> Result<Self, String> {
        Ok(RationalFunction::variable(index))
    }

    fn loop_variable() -> Result<Self, String> {
        Err("the loop variable t is not allowed in the rational-function ring".to_string())
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, rhs: &Self) -> Result<Self, String> {
        self.checked_div(rhs).map_err(|e| e.to_string())
    }

    fn pow(&self, exp: i64) -> Result<Self, String> {
        RationalFunction::pow(self, exp).map_err(|e| e.to_string())
    }
}

impl ScalarRing for LaurentPolynomial {
    const RING_TAG: &'static str = "laurent";

    fn from_bigint(n: &BigInt) -> Self {
        LaurentPolynomial::rational(Rational::from_integer(n.clone()))
    }

    fn variable(index: i32) -> Result<Self, String> {
        Ok(LaurentPolynomial::constant(RationalFunction::variable(index)))
    }

    fn loop_variable() -> Result<Self, String> {
        Ok(LaurentPolynomial::t())
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, rhs: &Self) -> Result<Self, String> {
        if rhs.is_zero() {
            return Err("division by zero".to_string());
        }
        let inv = rhs
            .inverse()
            .map_err(|_| "division by a non-unit Laurent polynomial".to_string())?;
        Ok(self * &inv)
    }

    fn pow(&self, exp: i64) -> Result<Self, String> {
        if exp >= 0 {
            return Ok(LaurentPolynomial::pow(self, exp as u32));
        }
        if self.is_zero() {
            return Err("zero cannot be raised to a negative power".to_string());
        }
        let inv = self
            .inverse()
            .map_err(|_| "negative power of a non-unit Laurent polynomial".to_string())?;
        Ok(LaurentPolynomial::pow(&inv, exp.unsigned_abs() as u32))
    }
}

fn eval<R: ScalarRing>(ast: &Ast) -> Result<R, ParseError> {
    match ast {
        Ast::Int(n) => Ok(R::from_bigint(n)),
        Ast::Var(pos, i) => R::variable(*i).map_err(|m| ParseError::new(*pos, m)),
        Ast::LoopVar(pos) => R::loop_variable().map_err(|m| ParseError::new(*pos, m)),
        Ast::Neg(a) => Ok(eval::<R>(a)?.neg()),
        Ast::Add(a, b) => Ok(eval::<R>(a)?.add(&eval::<R>(b)?)),
        Ast::Sub(a, b) => Ok(eval::<R>(a)?.sub(&eval::<R>(b)?)),
        Ast::Mul(a, b) => Ok(eval::<R>(a)?.mul(&eval::<R>(b)?)),
        Ast::Div(pos, a, b) => eval::<R>(a)?
            .div(&eval::<R>(b)?)
            .map_err(|m| ParseError::new(*pos, m)),
        Ast::Pow(pos, a, e) => eval::<R>(a)?
            .pow(*e)
            .map_err(|m| ParseError::new(*pos, m)),
    }
}

/// Parse one scalar expression into the ring `R`.
pub fn parse_scalar<R: ScalarRing>(text: &str) -> Result<R, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        len: text.len(),
    };
    let ast = parser.expr()?;
    if parser.pos != tokens.len() {
        let (pos, _) = tokens[parser.pos];
        return Err(ParseError::new(pos, "unexpected trailing input"));
    }
    eval(&ast)
}

// ---- matrix input forms ----

/// Split `[[a, b], [c, d]]` into entry strings, tracking bracket and paren
/// depth so entries may themselves contain brackets (coordinate vectors).
pub fn split_matrix_rows(text: &str) -> Result<Vec<Vec<String>>, ParseError> {
    let trimmed = text.trim();
    if !trimmed.starts_with('[') || !trimmed.ends_with(']') {
        return Err(ParseError::new(0, "matrix must be bracketed: [[…], […]]"));
    }
    let inner = &trimmed[1..trimmed.len() - 1];
    let row_texts = split_depth_zero(inner)?;
    let mut rows = Vec::new();
    for row in row_texts {
        let r = row.trim();
        if !r.starts_with('[') || !r.ends_with(']') {
            return Err(ParseError::new(0, "each matrix row must be bracketed"));
        }
        let entries = split_depth_zero(&r[1..r.len() - 1])?;
        rows.push(entries.into_iter().map(|e| e.trim().to_string()).collect());
    }
    Ok(rows)
}

fn split_depth_zero(text: &str) -> Result<Vec<String>, ParseError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => {
                depth += 1;
                current.push(c);
            }
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::new(i, "unbalanced brackets"));
                }
                current.push(c);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    if depth != 0 {
        return Err(ParseError::new(text.len(), "unbalanced brackets"));
    }
    parts.push(current);
    Ok(parts)
}

fn rows_to_matrix<R: loopdeg::Ring>(rows: Vec<Vec<R>>) -> Result<Matrix<R>, ParseError> {
    Matrix::from_rows(rows).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parse a matrix over an expression ring from the inline bracket form or
/// the JSON record form (detected by a leading `{`).
pub fn parse_matrix<R: ScalarRing + loopdeg::Ring>(text: &str) -> Result<Matrix<R>, ParseError> {
    let trimmed = text.trim();
    let entry_rows: Vec<Vec<String>> = if trimmed.starts_with('{') {
        let record: MatrixRecord = serde_json::from_str(trimmed)
            .map_err(|e| ParseError::new(0, format!("invalid matrix record: {e}")))?;
        if record.ring != R::RING_TAG {
            return Err(ParseError::new(
                0,
                format!("record ring '{}' does not match expected '{}'", record.ring, R::RING_TAG),
            ));
        }
        if record.entries.len() != record.n * record.n {
            return Err(ParseError::new(
                0,
                format!("record claims n = {} but has {} entries", record.n, record.entries.len()),
            ));
        }
        record
            .entries
            .chunks(record.n)
            .map(|c| c.to_vec())
            .collect()
    } else {
        split_matrix_rows(trimmed)?
    };
    let mut rows = Vec::with_capacity(entry_rows.len());
    for row in entry_rows {
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            out.push(parse_scalar::<R>(&e)?);
        }
        rows.push(out);
    }
    rows_to_matrix(rows)
}

/// Parse one number-field entry: a coordinate vector `[c0, c1, …]` or a
/// plain rational expression.
pub fn parse_nf_entry(text: &str, field: &NumberField) -> Result<NFElement, ParseError> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        if !trimmed.ends_with(']') {
            return Err(ParseError::new(0, "unclosed coordinate vector"));
        }
        let parts = split_depth_zero(&trimmed[1..trimmed.len() - 1])?;
        let mut coords = Vec::with_capacity(parts.len());
        for p in parts {
            coords.push(parse_scalar::<Rational>(p.trim())?);
        }
        field
            .element(coords)
            .map_err(|e| ParseError::new(0, e.to_string()))
    } else {
        let q = parse_scalar::<Rational>(trimmed)?;
        Ok(field.from_rational(q))
    }
}

/// Parse a matrix over a number field from the inline bracket form or the
/// JSON record form.
pub fn parse_nf_matrix(text: &str, field: &NumberField) -> Result<Matrix<NFElement>, ParseError> {
    let trimmed = text.trim();
    let entry_rows: Vec<Vec<String>> = if trimmed.starts_with('{') {
        let record: MatrixRecord = serde_json::from_str(trimmed)
            .map_err(|e| ParseError::new(0, format!("invalid matrix record: {e}")))?;
        if record.ring != "number_field" {
            return Err(ParseError::new(
                0,
                format!("record ring '{}' does not match expected 'number_field'", record.ring),
            ));
        }
        record
            .entries
            .chunks(record.n)
            .map(|c| c.to_vec())
            .collect()
    } else {
        split_matrix_rows(trimmed)?
    };
    let mut rows = Vec::with_capacity(entry_rows.len());
    for row in entry_rows {
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            out.push(parse_nf_entry(&e, field)?);
        }
        rows.push(out);
    }
    rows_to_matrix(rows)
}

/// Parse a comma-separated list of rationals (used for minimal polynomials,
/// points, and target coefficient lists).
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, ParseError> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let p = part.trim();
        if p.is_empty() {
            return Err(ParseError::new(0, "empty entry in rational list"));
        }
        out.push(parse_scalar::<Rational>(p)?);
    }
    Ok(out)
}

//! Expression language for distributions, signumdistributions and operator
//! chains: parsing, evaluation against the kernel, and canonical printing.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor (factor)*        -- juxtaposition applies operators,
//!                                      right-associating onto the final delta
//! factor := scalar | opname ('^' nat)? | '(' expr ')' | 'delta'
//! scalar := rational literal | '(m+c)'-style DimScalar literal
//! ```
//!
//! Operators: `r dr w x D L E G LB inv_r inv_x inv_r_dr`; exponents are
//! only allowed on `r dr w x D L inv_r inv_r_dr`. A parenthesized group
//! may be a full delta-expression or a pure operator fragment (`(w dr)`),
//! which splices into the surrounding chain. Even powers of `r`, `dr`, `w`
//! on a distribution are rewritten to the classical composite operators
//! before dispatch, so `r^2 delta` is the classical `x^2` action.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::kernel::{Distribution, GeneralizedFunction, KernelError, Space};
use crate::symq::{DimScalar, IntPoly};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParserError {
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    #[error("arity error at byte {offset}: {message}")]
    Arity { offset: usize, message: String },
    #[error("unsupported action in `{context}`: {source}")]
    Eval {
        context: String,
        source: KernelError,
    },
}

impl ParserError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParserError::Parse { offset, .. } | ParserError::Arity { offset, .. } => Some(*offset),
            ParserError::Eval { .. } => None,
        }
    }
}

/// Operator names of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpCode {
    R,
    Dr,
    W,
    X,
    Dirac,
    Laplace,
    Euler,
    Gamma,
    LaplaceBeltrami,
    InvR,
    InvX,
    InvRDr,
}

impl OpCode {
    fn from_name(name: &str) -> Option<OpCode> {
        Some(match name {
            "r" => OpCode::R,
            "dr" => OpCode::Dr,
            "w" => OpCode::W,
            "x" => OpCode::X,
            "D" => OpCode::Dirac,
            "L" => OpCode::Laplace,
            "E" => OpCode::Euler,
            "G" => OpCode::Gamma,
            "LB" => OpCode::LaplaceBeltrami,
            "inv_r" => OpCode::InvR,
            "inv_x" => OpCode::InvX,
            "inv_r_dr" => OpCode::InvRDr,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            OpCode::R => "r",
            OpCode::Dr => "dr",
            OpCode::W => "w",
            OpCode::X => "x",
            OpCode::Dirac => "D",
            OpCode::Laplace => "L",
            OpCode::Euler => "E",
            OpCode::Gamma => "G",
            OpCode::LaplaceBeltrami => "LB",
            OpCode::InvR => "inv_r",
            OpCode::InvX => "inv_x",
            OpCode::InvRDr => "inv_r_dr",
        }
    }

    fn allows_power(self) -> bool {
        matches!(
            self,
            OpCode::R
                | OpCode::Dr
                | OpCode::W
                | OpCode::X
                | OpCode::Dirac
                | OpCode::Laplace
                | OpCode::InvR
                | OpCode::InvRDr
        )
    }
}

impl fmt::Display for OpCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Abstract syntax tree of the expression language.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Delta,
    Apply {
        op: OpCode,
        pow: u32,
        arg: Box<Expr>,
    },
    Scale(DimScalar, Box<Expr>),
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Delta => write!(f, "delta"),
            Expr::Apply { op, pow, arg } => {
                if *pow == 1 {
                    write!(f, "{op} ")?;
                } else {
                    write!(f, "{op}^{pow} ")?;
                }
                match **arg {
                    Expr::Sum(_) | Expr::Neg(_) | Expr::Scale(..) => write!(f, "({arg})"),
                    _ => write!(f, "{arg}"),
                }
            }
            Expr::Scale(c, e) => {
                if matches!(**e, Expr::Sum(_)) {
                    write!(f, "{c} * ({e})")
                } else {
                    write!(f, "{c} * {e}")
                }
            }
            Expr::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Neg(e) => {
                if matches!(**e, Expr::Sum(_)) {
                    write!(f, "-({e})")
                } else {
                    write!(f, "-{e}")
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Caret => write!(f, "^"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParserError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let offset = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'+' | b'-' | b'*' | b'/' | b'^' | b'(' | b')' => {
                let tok = match b {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'/' => Tok::Slash,
                    b'^' => Tok::Caret,
                    b'(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(Token { tok, offset });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = std::str::from_utf8(&bytes[start..i]).unwrap();
                out.push(Token {
                    tok: Tok::Int(text.parse().unwrap()),
                    offset,
                });
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let text = std::str::from_utf8(&bytes[start..i]).unwrap();
                out.push(Token {
                    tok: Tok::Ident(text.to_string()),
                    offset,
                });
            }
            _ => {
                return Err(ParserError::Parse {
                    offset,
                    expected: "an operator name, number, sign, '^', '/', '*' or parenthesis"
                        .to_string(),
                })
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Item {
    Scalar(DimScalar),
    Op { op: OpCode, pow: u32, offset: usize },
    Final { expr: Expr, offset: usize },
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_err(&self, expected: impl Into<String>) -> ParserError {
        ParserError::Parse {
            offset: self.offset(),
            expected: expected.into(),
        }
    }

    fn eat(&mut self, tok: &Tok, expected: &str) -> Result<(), ParserError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.parse_err(expected))
        }
    }

    /// Index just past the parenthesis matching the one at `start`.
    fn matching_paren(&self, start: usize) -> Option<usize> {
        let mut depth = 0usize;
        for (i, t) in self.tokens.iter().enumerate().skip(start) {
            match t.tok {
                Tok::LParen => depth += 1,
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(i + 1);
                    }
                }
                _ => {}
            }
        }
        None
    }

    /// Whether the token at `pos` starts a scalar literal (number, `m`, or
    /// a parenthesized group containing only scalar material).
    fn starts_scalar(&self, pos: usize) -> bool {
        match self.tokens.get(pos).map(|t| &t.tok) {
            Some(Tok::Int(_)) => true,
            Some(Tok::Ident(s)) => s == "m",
            Some(Tok::LParen) => match self.matching_paren(pos) {
                Some(close) => self.tokens[pos + 1..close - 1].iter().all(|t| {
                    matches!(
                        t.tok,
                        Tok::Int(_)
                            | Tok::Plus
                            | Tok::Minus
                            | Tok::Star
                            | Tok::Slash
                            | Tok::Caret
                            | Tok::LParen
                            | Tok::RParen
                    ) || matches!(&t.tok, Tok::Ident(s) if s == "m")
                }),
                None => false,
            },
            _ => false,
        }
    }

    // scalar grammar: sum of products of powered atoms
    fn parse_scalar_sum(&mut self) -> Result<DimScalar, ParserError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = self.parse_scalar_prod()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.parse_scalar_prod()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.parse_scalar_prod()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_scalar_prod(&mut self) -> Result<DimScalar, ParserError> {
        let mut acc = self.parse_scalar_pow()?;
        loop {
            match self.peek() {
                Some(Tok::Star) if self.starts_scalar(self.pos + 1) => {
                    self.bump();
                    acc = acc * self.parse_scalar_pow()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let offset = self.offset();
                    let den = self.parse_scalar_pow()?;
                    acc = acc.checked_div(&den).map_err(|_| ParserError::Parse {
                        offset,
                        expected: "a nonzero denominator".to_string(),
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_scalar_pow(&mut self) -> Result<DimScalar, ParserError> {
        let base = self.parse_scalar_prim()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let exp = self.parse_nat()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn parse_scalar_prim(&mut self) -> Result<DimScalar, ParserError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.bump();
                Ok(DimScalar::from_poly(IntPoly::constant(n)))
            }
            Some(Tok::Ident(s)) if s == "m" => {
                self.bump();
                Ok(DimScalar::m())
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.parse_scalar_sum()?;
                self.eat(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.parse_err("a number, 'm', or '('")),
        }
    }

    fn parse_nat(&mut self) -> Result<u32, ParserError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                let v = n
                    .to_u32()
                    .ok_or_else(|| self.parse_err("an exponent that fits in 32 bits"))?;
                self.bump();
                Ok(v)
            }
            _ => Err(self.parse_err("a natural-number exponent")),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParserError> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let first = self.parse_term()?;
        terms.push(if negate {
            Expr::Neg(Box::new(first))
        } else {
            first
        });
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.parse_term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.parse_term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn parse_term(&mut self) -> Result<Expr, ParserError> {
        let term_offset = self.offset();
        let mut items = Vec::new();
        loop {
            match self.peek() {
                None | Some(Tok::Plus) | Some(Tok::Minus) | Some(Tok::RParen) => {
                    if items.is_empty() {
                        return Err(self.parse_err("a term"));
                    }
                    break;
                }
                Some(Tok::Star) => {
                    // multiplication separator between factors
                    self.bump();
                }
                Some(Tok::Slash) | Some(Tok::Caret) => {
                    return Err(self.parse_err("a factor"));
                }
                Some(Tok::Int(_)) => items.push(Item::Scalar(self.parse_scalar_prod()?)),
                Some(Tok::Ident(_)) => items.push(self.parse_word()?),
                Some(Tok::LParen) => {
                    if self.starts_scalar(self.pos) {
                        items.push(Item::Scalar(self.parse_scalar_prod()?));
                    } else {
                        self.parse_group(&mut items)?;
                    }
                }
            }
        }
        assemble_term(items, term_offset)
    }

    fn parse_word(&mut self) -> Result<Item, ParserError> {
        let offset = self.offset();
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            return Err(self.parse_err("an identifier"));
        };
        if name == "m" {
            return Ok(Item::Scalar(self.parse_scalar_prod()?));
        }
        self.bump();
        if name == "delta" {
            return Ok(Item::Final {
                expr: Expr::Delta,
                offset,
            });
        }
        let Some(op) = OpCode::from_name(&name) else {
            return Err(ParserError::Parse {
                offset,
                expected: format!(
                    "'delta' or an operator (r, dr, w, x, D, L, E, G, LB, inv_r, inv_x, inv_r_dr), found '{name}'"
                ),
            });
        };
        let mut pow = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            let caret_offset = self.offset();
            if !op.allows_power() {
                return Err(ParserError::Parse {
                    offset: caret_offset,
                    expected: format!("no exponent: operator '{op}' cannot be raised to a power"),
                });
            }
            self.bump();
            pow = self.parse_nat()?;
        }
        Ok(Item::Op { op, pow, offset })
    }

    /// Parenthesized group: a full delta-expression, or an operator
    /// fragment that splices into the surrounding chain.
    fn parse_group(&mut self, items: &mut Vec<Item>) -> Result<(), ParserError> {
        let open_offset = self.offset();
        self.eat(&Tok::LParen, "'('")?;
        let save = self.pos;
        match self.parse_expr().and_then(|e| {
            self.eat(&Tok::RParen, "')'")?;
            Ok(e)
        }) {
            Ok(expr) => {
                items.push(Item::Final {
                    expr,
                    offset: open_offset,
                });
                Ok(())
            }
            Err(ParserError::Arity { .. }) => {
                // no delta inside: re-read as an operator fragment
                self.pos = save;
                loop {
                    match self.peek() {
                        Some(Tok::RParen) => {
                            self.bump();
                            return Ok(());
                        }
                        Some(Tok::Star) => {
                            self.bump();
                        }
                        Some(Tok::Int(_)) => items.push(Item::Scalar(self.parse_scalar_prod()?)),
                        Some(Tok::Ident(_)) => items.push(self.parse_word()?),
                        Some(Tok::LParen) => {
                            if self.starts_scalar(self.pos) {
                                items.push(Item::Scalar(self.parse_scalar_prod()?));
                            } else {
                                self.parse_group(items)?;
                            }
                        }
                        _ => return Err(self.parse_err("an operator, scalar, or ')'")),
                    }
                }
            }
            Err(e) => Err(e),
        }
    }
}

fn assemble_term(items: Vec<Item>, term_offset: usize) -> Result<Expr, ParserError> {
    let final_positions: Vec<usize> = items
        .iter()
        .enumerate()
        .filter(|(_, it)| matches!(it, Item::Final { .. }))
        .map(|(i, _)| i)
        .collect();
    match final_positions.len() {
        0 => {
            return Err(ParserError::Arity {
                offset: term_offset,
                message: "term contains no 'delta'".to_string(),
            })
        }
        1 => {}
        _ => {
            let second = final_positions[1];
            let offset = match &items[second] {
                Item::Final { offset, .. } => *offset,
                _ => term_offset,
            };
            return Err(ParserError::Arity {
                offset,
                message: "term contains more than one 'delta'".to_string(),
            });
        }
    }
    let final_idx = final_positions[0];
    if final_idx != items.len() - 1 {
        let offset = match &items[final_idx + 1] {
            Item::Op { offset, .. } | Item::Final { offset, .. } => *offset,
            Item::Scalar(_) => term_offset,
        };
        return Err(ParserError::Arity {
            offset,
            message: "operators must stand to the left of 'delta'".to_string(),
        });
    }
    let mut items = items;
    let Some(Item::Final { expr, .. }) = items.pop() else {
        unreachable!("final item checked above")
    };
    let mut acc = expr;
    for item in items.into_iter().rev() {
        acc = match item {
            Item::Op { op, pow, .. } => Expr::Apply {
                op,
                pow,
                arg: Box::new(acc),
            },
            Item::Scalar(c) => Expr::Scale(c, Box::new(acc)),
            Item::Final { .. } => unreachable!("single final item"),
        };
    }
    Ok(acc)
}

/// Parses an expression of the operator language. The bare literal `0`
/// is accepted for the zero value, so printed canonical forms re-parse.
pub fn parse(input: &str) -> Result<Expr, ParserError> {
    let tokens = lex(input)?;
    if let [Token {
        tok: Tok::Int(n), ..
    }] = tokens.as_slice()
    {
        if n == &BigInt::from(0) {
            return Ok(Expr::Scale(DimScalar::zero(), Box::new(Expr::Delta)));
        }
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: input.len(),
    };
    if parser.peek().is_none() {
        return Err(parser.parse_err("an expression"));
    }
    let expr = parser.parse_expr()?;
    if parser.peek().is_some() {
        return Err(parser.parse_err("end of input"));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluates an expression innermost-first, dispatching to the kernel.
pub fn evaluate(expr: &Expr) -> Result<GeneralizedFunction, ParserError> {
    match expr {
        Expr::Delta => Ok(GeneralizedFunction::delta()),
        Expr::Scale(c, e) => Ok(evaluate(e)?.scale(c)),
        Expr::Neg(e) => Ok(evaluate(e)?.neg()),
        Expr::Sum(terms) => {
            let mut acc: Option<GeneralizedFunction> = None;
            for t in terms {
                let v = evaluate(t)?;
                acc = Some(match acc {
                    None => v,
                    Some(prev) => prev.add(&v).map_err(|source| ParserError::Eval {
                        context: expr.to_string(),
                        source,
                    })?,
                });
            }
            Ok(acc.expect("sums are non-empty"))
        }
        Expr::Apply { op, pow, arg } => {
            let g = evaluate(arg)?;
            apply_operator(*op, *pow, g).map_err(|source| ParserError::Eval {
                context: expr.to_string(),
                source,
            })
        }
    }
}

fn apply_operator(
    op: OpCode,
    pow: u32,
    g: GeneralizedFunction,
) -> Result<GeneralizedFunction, KernelError> {
    match op {
        OpCode::Dirac => {
            let mut d = g.as_dist()?.clone();
            for _ in 0..pow {
                d = d.apply_dirac();
            }
            Ok(d.into())
        }
        OpCode::Laplace => {
            let mut d = g.as_dist()?.clone();
            for _ in 0..pow {
                d = d.apply_laplace();
            }
            Ok(d.into())
        }
        OpCode::Euler => Ok(g.as_dist()?.apply_euler().into()),
        OpCode::Gamma => Ok(g.as_dist()?.apply_gamma()?.into()),
        OpCode::LaplaceBeltrami => Ok(g.as_dist()?.apply_laplace_beltrami()?.into()),
        OpCode::X => Ok(g.as_dist()?.mul_x_pow(pow).into()),
        OpCode::InvX => Ok(g.as_dist()?.div_x().into()),
        OpCode::InvRDr => {
            let mut d = g.as_dist()?.clone();
            for _ in 0..pow {
                d = d.apply_inv_r_dr()?;
            }
            Ok(d.into())
        }
        OpCode::InvR => {
            if pow == 0 {
                return Ok(g);
            }
            Ok(g.as_dist()?.div_r(pow)?.into())
        }
        OpCode::R | OpCode::Dr | OpCode::W => apply_radial_power(op, pow, g),
    }
}

/// Even powers of `r`, `dr`, `w` on a distribution are rewritten to the
/// classical composite before dispatch; a remaining odd step crosses the
/// space. On signum input the transition map simply iterates.
fn apply_radial_power(
    op: OpCode,
    pow: u32,
    g: GeneralizedFunction,
) -> Result<GeneralizedFunction, KernelError> {
    if g.space() == Space::Sign {
        let mut acc = g;
        for _ in 0..pow {
            acc = transition(op, &acc);
        }
        return Ok(acc);
    }
    let half = pow / 2;
    let classical: Distribution = {
        let d = g.as_dist()?.clone();
        match op {
            // r^{2h} = (-1)^h x^{2h}
            OpCode::R => {
                let mut out = d.mul_x_pow(2 * half);
                if half % 2 == 1 {
                    out = -out;
                }
                out
            }
            OpCode::Dr => {
                let mut out = d;
                for _ in 0..half {
                    out = out.apply_dr2();
                }
                out
            }
            OpCode::W => {
                let mut out = d;
                if half % 2 == 1 {
                    out = -out;
                }
                out
            }
            _ => unreachable!("radial operators only"),
        }
    };
    let g = GeneralizedFunction::Dist(classical);
    if pow % 2 == 1 {
        Ok(transition(op, &g))
    } else {
        Ok(g)
    }
}

fn transition(op: OpCode, g: &GeneralizedFunction) -> GeneralizedFunction {
    match op {
        OpCode::R => g.act_r(),
        OpCode::Dr => g.act_dr(),
        OpCode::W => g.act_omega(),
        _ => unreachable!("radial operators only"),
    }
}

// ---------------------------------------------------------------------------
// Canonical printing
// ---------------------------------------------------------------------------

/// Renders a generalized function in the radial-operator notation, e.g.
/// `-1/m * dr delta` for signum values.
pub fn radial_string(g: &GeneralizedFunction) -> String {
    g.to_radial().to_string()
}

/// Deterministic canonical rendering: distributions in ascending `D^n`
/// form, signumdistributions in the radial alias notation. A printed
/// distribution form re-evaluates to an equal value.
pub fn print_canonical(g: &GeneralizedFunction) -> String {
    if g.is_zero() {
        return "0".to_string();
    }
    match g {
        GeneralizedFunction::Dist(d) => d.to_string(),
        GeneralizedFunction::Sign(_) => radial_string(g),
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_str(input: &str) -> Result<GeneralizedFunction, ParserError> {
    evaluate(&parse(input)?)
}

#[cfg(test)]
mod tests;

//! Boolean expressions and their translation into ANF.
//!
//! Grammar, loosest binding first (all binary operators left-associative):
//!
//! ```text
//! expr  := or
//! or    := xor ("|" xor)*
//! xor   := and ("^" and)*
//! and   := unary ("&" unary)*
//! unary := "!" unary | atom
//! atom  := "0" | "1" | "x" DIGITS | "(" expr ")"
//! ```
//!
//! `and`, `or`, `xor` and `not` are accepted as spellings of the operators.
//! Translation uses `a ∧ b = ab`, `a ∨ b = a + b + ab`, `¬a = 1 + a` and
//! `a ⊕ b = a + b`.

use std::fmt;

use crate::anf::ZhegalkinPoly;
use crate::error::{Error, ParseError, Result};

/// Parenthesis nesting limit, keeping the recursive descent off the stack edge.
const MAX_NESTING: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(bool),
    /// 1-based variable index.
    Var(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Xor(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Direct evaluation at a vertex (bit `i - 1` is `x_i`).
    pub fn eval(&self, vertex_bits: u32) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => (1..=32).contains(i) && (vertex_bits >> (i - 1)) & 1 == 1,
            Expr::Not(e) => !e.eval(vertex_bits),
            Expr::And(a, b) => a.eval(vertex_bits) && b.eval(vertex_bits),
            Expr::Or(a, b) => a.eval(vertex_bits) || b.eval(vertex_bits),
            Expr::Xor(a, b) => a.eval(vertex_bits) ^ b.eval(vertex_bits),
        }
    }

    /// Largest variable index used, 0 if there is none.
    pub fn max_var(&self) -> usize {
        match self {
            Expr::Const(_) => 0,
            Expr::Var(i) => *i,
            Expr::Not(e) => e.max_var(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// The ANF of the expression in `arity` variables.
    pub fn to_anf(&self, arity: usize) -> Result<ZhegalkinPoly> {
        let top = self.max_var();
        if top > arity {
            return Err(Error::IndexOutOfRange { index: top, arity });
        }
        ZhegalkinPoly::zero(arity)?;
        Ok(self.translate(arity))
    }

    fn translate(&self, n: usize) -> ZhegalkinPoly {
        match self {
            Expr::Const(b) => ZhegalkinPoly::constant(n, *b).expect("arity checked"),
            Expr::Var(i) => ZhegalkinPoly::variable(n, *i).expect("index checked"),
            Expr::Not(e) => &ZhegalkinPoly::one(n).expect("arity checked") + &e.translate(n),
            Expr::And(a, b) => &a.translate(n) * &b.translate(n),
            Expr::Xor(a, b) => &a.translate(n) + &b.translate(n),
            Expr::Or(a, b) => {
                let (p, q) = (a.translate(n), b.translate(n));
                &(&p + &q) + &(&p * &q)
            }
        }
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesised; parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(b) => write!(f, "{}", *b as u8),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::Not(e) => write!(f, "!{e}"),
            Expr::And(a, b) => write!(f, "({a} & {b})"),
            Expr::Or(a, b) => write!(f, "({a} | {b})"),
            Expr::Xor(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

/// Parses and translates in one step.
pub fn expr_to_anf(src: &str, arity: usize) -> Result<ZhegalkinPoly> {
    parse_expr(src)?.to_anf(arity)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Const(bool),
    Var(usize),
    Not,
    And,
    Or,
    Xor,
    Open,
    Close,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let single = match c {
            b'!' => Some(Tok::Not),
            b'&' => Some(Tok::And),
            b'|' => Some(Tok::Or),
            b'^' => Some(Tok::Xor),
            b'(' => Some(Tok::Open),
            b')' => Some(Tok::Close),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, start));
            pos += 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if !c.is_ascii_alphanumeric() {
            return Err(ParseError::new(start, "unexpected character"));
        }
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        let word = &src[start..pos];
        let tok = match word {
            "0" => Tok::Const(false),
            "1" => Tok::Const(true),
            "and" => Tok::And,
            "or" => Tok::Or,
            "xor" => Tok::Xor,
            "not" => Tok::Not,
            _ => {
                let digits = word
                    .strip_prefix('x')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| ParseError::new(start, format!("unknown token `{word}`")))?;
                let index: usize = digits
                    .parse()
                    .map_err(|_| ParseError::new(start, "variable index too large"))?;
                if index == 0 {
                    return Err(ParseError::new(start, "variable indices start at 1"));
                }
                Tok::Var(index)
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Tok {
        self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn binary(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Expr, ParseError>,
        build: fn(Box<Expr>, Box<Expr>) -> Expr,
    ) -> Result<Expr, ParseError> {
        let mut lhs = next(self)?;
        while self.peek() == op {
            self.bump();
            let rhs = next(self)?;
            lhs = build(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr, ParseError> {
        self.binary(Tok::Or, Self::xor, Expr::Or)
    }

    fn xor(&mut self) -> Result<Expr, ParseError> {
        self.binary(Tok::Xor, Self::and, Expr::Xor)
    }

    fn and(&mut self) -> Result<Expr, ParseError> {
        self.binary(Tok::And, Self::unary, Expr::And)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        let mut negations = 0usize;
        while self.peek() == Tok::Not {
            self.bump();
            negations += 1;
        }
        let mut e = self.atom()?;
        for _ in 0..negations {
            e = Expr::Not(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Const(b) => Ok(Expr::Const(b)),
            Tok::Var(i) => Ok(Expr::Var(i)),
            Tok::Open => {
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return Err(ParseError::new(pos, "parentheses nested too deeply"));
                }
                let e = self.or()?;
                if self.peek() != Tok::Close {
                    return Err(ParseError::new(self.pos(), "expected `)`"));
                }
                self.bump();
                self.depth -= 1;
                Ok(e)
            }
            Tok::End => Err(ParseError::new(pos, "unexpected end of input")),
            _ => Err(ParseError::new(pos, "expected an operand")),
        }
    }
}

/// Parses an expression; errors carry the byte offset of the offending token.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        depth: 0,
    };
    let e = p.or()?;
    if p.peek() != Tok::End {
        return Err(ParseError::new(
            p.pos(),
            "unexpected token after expression",
        ));
    }
    Ok(e)
}

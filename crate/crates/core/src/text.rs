//! Text formats for polynomials, forms, secants and truth tables.
//!
//! ```text
//! ANF      x1*x2 + x3 + 1          "0" for the zero polynomial
//! form     (1 + x2)*d{1} + (x1)*d{2}   degree-0 forms print as bare ANF
//! secant   (x2)*D1 + (x1)*D2       "0" when every coefficient vanishes
//! table    3:e8                    arity, then the table as a hex number
//! ```
//!
//! Printers emit terms in canonical order. The table hex string is the
//! integer `Σ f(v_k) 2^k`, most significant nibble first, padded to
//! `ceil(2^n / 4)` digits.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::anf::{Monomial, ZhegalkinPoly};
use crate::cube::{check_arity, check_index};
use crate::error::{Error, ParseError, Result};
use crate::forms::{IndexSet, KForm};
use crate::secant::SecantElement;
use crate::table::{check_table_arity, TruthTable};

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask() == 0 {
            return f.write_str("1");
        }
        for (k, i) in self.vars().enumerate() {
            if k > 0 {
                f.write_char('*')?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ZhegalkinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, m) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("d{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_char(',')?;
            }
            write!(f, "{i}")?;
        }
        f.write_char('}')
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.grade() == 0 {
            return write!(f, "{}", self.coeff_of(IndexSet::EMPTY));
        }
        for (k, (set, g)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({g})*{set}")?;
        }
        Ok(())
    }
}

impl fmt::Display for SecantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, g) in self.coeffs().iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({g})*D{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nibbles = self.len().div_ceil(4);
        write!(f, "{}:", self.arity())?;
        for j in (0..nibbles).rev() {
            let w = self.words()[j / 16];
            let digit = (w >> (4 * (j % 16))) & 0xF;
            f.write_char(char::from_digit(digit as u32, 16).expect("nibble"))?;
        }
        Ok(())
    }
}

/// Byte cursor shared by the term-list parsers.
struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.src.as_bytes().get(self.pos + offset).copied()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    /// A decimal index `>= 1`.
    fn index(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.src[start..self.pos];
        if digits.is_empty() {
            return Err(ParseError::new(start, "expected an index"));
        }
        match digits.parse::<usize>() {
            Ok(0) => Err(ParseError::new(start, "indices start at 1")),
            Ok(i) => Ok(i),
            Err(_) => Err(ParseError::new(start, "index too large")),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// `x<i>` with range check against `arity`.
fn variable(cur: &mut Cursor, arity: usize) -> Result<usize> {
    if !cur.eat(b'x') {
        return Err(cur.error("expected a variable `x<i>`").into());
    }
    let i = cur.index()?;
    check_index(arity, i)?;
    Ok(i)
}

/// A product term: `1`, or variables joined by `*` in strictly ascending
/// order. With `stop_at_secant`, a `*D` ends the term.
fn monomial(cur: &mut Cursor, arity: usize, stop_at_secant: bool) -> Result<Monomial> {
    if cur.eat(b'1') {
        return Ok(Monomial::ONE);
    }
    let mut mask = 0u32;
    let mut last = 0usize;
    loop {
        let at = {
            cur.skip_ws();
            cur.pos
        };
        let i = variable(cur, arity)?;
        if i <= last {
            return Err(
                ParseError::new(at, "variables in a term must ascend without repeats").into(),
            );
        }
        mask |= 1 << (i - 1);
        last = i;
        cur.skip_ws();
        let secant_next = cur.peek() == Some(b'*') && {
            let mut k = 1;
            while cur.peek_at(k).is_some_and(|c| c.is_ascii_whitespace()) {
                k += 1;
            }
            cur.peek_at(k) == Some(b'D')
        };
        if (stop_at_secant && secant_next) || !cur.eat(b'*') {
            return Ok(Monomial::from_mask(mask));
        }
    }
}

/// Terms separated by `+`, up to (not including) a `)` or the end.
fn anf_terms(cur: &mut Cursor, arity: usize) -> Result<ZhegalkinPoly> {
    cur.skip_ws();
    if cur.peek() == Some(b'0') {
        cur.pos += 1;
        return ZhegalkinPoly::zero(arity);
    }
    let mut terms = vec![monomial(cur, arity, false)?];
    while cur.eat(b'+') {
        terms.push(monomial(cur, arity, false)?);
    }
    ZhegalkinPoly::from_monomials(arity, terms)
}

/// Parses the ANF text format. Terms may come in any order; a repeated
/// term cancels its partner.
pub fn parse_anf(src: &str, arity: usize) -> Result<ZhegalkinPoly> {
    check_arity(arity)?;
    let mut cur = Cursor::new(src);
    let p = anf_terms(&mut cur, arity)?;
    cur.finish()?;
    Ok(p)
}

/// Parses a form. A bare ANF is a 0-form; otherwise every term is
/// `(ANF)*d{i,...}` and all terms must share one degree.
pub fn parse_form(src: &str, arity: usize) -> Result<KForm> {
    check_arity(arity)?;
    let mut cur = Cursor::new(src);
    cur.skip_ws();
    if cur.peek() != Some(b'(') {
        let p = anf_terms(&mut cur, arity)?;
        cur.finish()?;
        return Ok(KForm::from_poly(p));
    }
    let mut terms = Vec::new();
    let mut degree = None;
    loop {
        let term_start = {
            cur.skip_ws();
            cur.pos
        };
        cur.expect(b'(')?;
        let coeff = anf_terms(&mut cur, arity)?;
        cur.expect(b')')?;
        cur.expect(b'*')?;
        cur.expect(b'd')?;
        cur.expect(b'{')?;
        let mut indices = Vec::new();
        if !cur.eat(b'}') {
            loop {
                let at = {
                    cur.skip_ws();
                    cur.pos
                };
                let i = cur.index()?;
                check_index(arity, i)?;
                if indices.last().is_some_and(|&last| i <= last) {
                    return Err(ParseError::new(
                        at,
                        "indices in d{...} must ascend without repeats",
                    )
                    .into());
                }
                indices.push(i);
                if cur.eat(b'}') {
                    break;
                }
                cur.expect(b',')?;
            }
        }
        let set = IndexSet::from_indices(arity, &indices)?;
        match degree {
            None => degree = Some(set.len()),
            Some(k) if k != set.len() => {
                return Err(ParseError::new(term_start, "terms of mixed degree").into());
            }
            _ => {}
        }
        terms.push((set, coeff));
        if !cur.eat(b'+') {
            break;
        }
    }
    cur.finish()?;
    KForm::from_terms(arity, degree.unwrap_or(0), terms)
}

/// Parses a secant-space element `f1*D1 + f2*D2 + ...`. Each coefficient is
/// either a parenthesised ANF or a single product term; missing indices are
/// zero and repeated indices add.
pub fn parse_secant(src: &str, arity: usize) -> Result<SecantElement> {
    check_arity(arity)?;
    let mut cur = Cursor::new(src);
    cur.skip_ws();
    if cur.peek() == Some(b'0') {
        cur.pos += 1;
        cur.finish()?;
        return SecantElement::zero(arity);
    }
    let zero = ZhegalkinPoly::zero(arity)?;
    let mut coeffs = vec![zero; arity];
    loop {
        let coeff = if cur.eat(b'(') {
            let p = anf_terms(&mut cur, arity)?;
            cur.expect(b')')?;
            p
        } else {
            ZhegalkinPoly::from_monomials(arity, [monomial(&mut cur, arity, true)?])?
        };
        cur.expect(b'*')?;
        cur.expect(b'D')?;
        let i = cur.index()?;
        check_index(arity, i)?;
        coeffs[i - 1] = &coeffs[i - 1] + &coeff;
        if !cur.eat(b'+') {
            break;
        }
    }
    cur.finish()?;
    SecantElement::new(coeffs)
}

/// Parses `n:HEX`. Hex digits may be upper or lower case.
pub fn parse_table(src: &str) -> Result<TruthTable> {
    let src = src.trim();
    let colon = src
        .find(':')
        .ok_or_else(|| ParseError::new(0, "expected `n:HEX`"))?;
    let arity: usize = src[..colon]
        .trim()
        .parse()
        .map_err(|_| ParseError::new(0, "expected a decimal arity before `:`"))?;
    check_table_arity(arity)?;
    let hex = &src[colon + 1..];
    let entries = 1usize << arity;
    let nibbles = entries.div_ceil(4);
    if hex.len() != nibbles {
        return Err(ParseError::new(
            colon + 1,
            format!(
                "expected {nibbles} hex digits for arity {arity}, found {}",
                hex.len()
            ),
        )
        .into());
    }
    let mut words = vec![0u64; entries.div_ceil(64)];
    for (k, c) in hex.char_indices() {
        let digit = c
            .to_digit(16)
            .ok_or_else(|| ParseError::new(colon + 1 + k, "invalid hex digit"))?
            as u64;
        let j = nibbles - 1 - k;
        words[j / 16] |= digit << (4 * (j % 16));
    }
    TruthTable::from_words(arity, words)
        .map_err(|_| ParseError::new(colon + 1, "bits set beyond the last table entry").into())
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_table(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::ZhegalkinPoly as P;
    use crate::secant::differential;

    fn var(n: usize, i: usize) -> P {
        P::variable(n, i).unwrap()
    }

    #[test]
    fn anf_round_trip_examples() {
        let p = parse_anf("x1*x2 + 1", 2).unwrap();
        assert_eq!(p, &(&var(2, 1) * &var(2, 2)) + &P::one(2).unwrap());
        assert_eq!(p.to_string(), "1 + x1*x2");
        assert_eq!(parse_anf(&p.to_string(), 2).unwrap(), p);

        assert!(parse_anf("0", 3).unwrap().is_zero());
        assert_eq!(P::zero(3).unwrap().to_string(), "0");

        let e = parse_anf("x2*x1", 2).unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { position: 3, .. })));
        assert!(parse_anf("x1*x1", 2).is_err());
        assert_eq!(
            parse_anf("x1 + x3", 2),
            Err(Error::IndexOutOfRange { index: 3, arity: 2 })
        );
        assert!(parse_anf("x1 +", 2).is_err());
        assert!(parse_anf("x1 x2", 2).is_err());
        assert!(parse_anf("", 2).is_err());
    }

    #[test]
    fn anf_canonical_print_order() {
        let p = parse_anf("x1*x2 + x3 + 1 + x1", 3).unwrap();
        assert_eq!(p.to_string(), "1 + x1 + x3 + x1*x2");
        assert!(parse_anf("x1 + x1", 2).unwrap().is_zero());
    }

    #[test]
    fn form_round_trip_examples() {
        let f = &var(2, 1) * &var(2, 2);
        let w = parse_form("(x2)*d{1} + (x1)*d{2}", 2).unwrap();
        assert_eq!(w, differential(&f));
        assert_eq!(w.to_string(), "(x2)*d{1} + (x1)*d{2}");

        let z = parse_form("0", 2).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");

        let e = parse_form("(1)*d{1} + (1)*d{1,2}", 2).unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { position: 11, .. })));

        assert!(parse_form("(1)*d{2,1}", 2).is_err());
        assert!(parse_form("(1)*d{1,1}", 2).is_err());
        assert!(parse_form("(1)*d{3}", 2).is_err());
        assert!(parse_form("(1)*d{1", 2).is_err());

        let zero_form = parse_form("x1*x2", 2).unwrap();
        assert_eq!(zero_form.grade(), 0);
        assert_eq!(zero_form.to_string(), "x1*x2");

        let top = parse_form("(1 + x2)*d{1,2}", 2).unwrap();
        assert_eq!(top.grade(), 2);
        assert_eq!(top.to_string(), "(1 + x2)*d{1,2}");
    }

    #[test]
    fn secant_formats() {
        let phi = parse_secant("(x2)*D1 + (x1)*D2", 2).unwrap();
        assert_eq!(phi, SecantElement::new(vec![var(2, 2), var(2, 1)]).unwrap());
        assert_eq!(phi.to_string(), "(x2)*D1 + (x1)*D2");
        assert_eq!(parse_secant("x2*D1 + x1*D2", 2).unwrap(), phi);
        assert_eq!(
            parse_secant("x1*x2*D1", 2).unwrap().coeff(1),
            Some(&(&var(2, 1) * &var(2, 2)))
        );
        assert_eq!(
            parse_secant("1*D2", 2).unwrap(),
            SecantElement::basis(2, 2).unwrap()
        );
        assert!(parse_secant("0", 3).unwrap().is_zero());
        assert_eq!(SecantElement::zero(2).unwrap().to_string(), "0");
        assert!(parse_secant("(x1)*D3", 2).is_err());
        assert!(parse_secant("(x1)*D", 2).is_err());
    }

    #[test]
    fn table_examples() {
        let and = parse_table("2:8").unwrap();
        assert_eq!(and.to_bits(), vec![false, false, false, true]);
        let xor = parse_table("2:6").unwrap();
        assert_eq!(xor.to_bits(), vec![false, true, true, false]);
        let id = parse_table("1:2").unwrap();
        assert_eq!(id.to_bits(), vec![false, true]);
        assert_eq!(and.to_string(), "2:8");

        let maj = TruthTable::from_bits(3, &[false, false, false, true, false, true, true, true])
            .unwrap();
        assert_eq!(maj.to_string(), "3:e8");
        assert_eq!(parse_table("3:E8").unwrap(), maj);

        let t7 = TruthTable::from_fn(7, |k| k == 0 || k == 127).unwrap();
        let s = t7.to_string();
        assert_eq!(s.len(), 2 + 32);
        assert!(s.starts_with("7:8") && s.ends_with('1'));
        assert_eq!(parse_table(&s).unwrap(), t7);
    }

    #[test]
    fn table_errors() {
        assert!(parse_table("2:88").is_err());
        assert!(parse_table("2:g").is_err());
        assert!(parse_table("1:4").is_err());
        assert!(parse_table("0:1").is_err());
        assert!(parse_table("25:0").is_err());
        assert!(parse_table("8").is_err());
        assert!("2:8".parse::<TruthTable>().is_ok());
    }
}

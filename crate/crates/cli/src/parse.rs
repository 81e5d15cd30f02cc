//! Text syntax for symbols, polynomials and operator words.
//!
//! Symbols are sums of terms `[±] coeff [* z^n | * zbar^n]` where `coeff` is
//! an integer or `p/q`. The coefficient may be dropped before a variable and
//! `^1` may be dropped after one. Whitespace is ignored.
//!
//! Words are comma-separated factors written left to right and applied right
//! to left: `W`, `W*`, `T(symbol)`, `B(symbol)` (= `W, T(symbol)`), or `I`.

use std::fmt;

use num_traits::One;
use slant_lab::{parse_rational, Expr, Poly, Primitive, Rational, Symbol};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let hit = self.text[self.pos..].starts_with(word);
        if hit {
            self.pos += word.len();
        }
        hit
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        (len > 0).then(|| &self.text[start..start + len])
    }
}

fn coefficient(cur: &mut Cursor) -> Result<Option<Rational>, ParseError> {
    let start = {
        cur.skip_ws();
        cur.pos
    };
    let Some(num) = cur.digits() else {
        return Ok(None);
    };
    if !cur.eat('/') {
        return Ok(parse_rational(num));
    }
    let den_pos = {
        cur.skip_ws();
        cur.pos
    };
    let Some(den) = cur.digits() else {
        return err(den_pos, "expected a denominator after `/`");
    };
    match parse_rational(&format!("{num}/{den}")) {
        Some(r) => Ok(Some(r)),
        None => err(start, "zero denominator"),
    }
}

fn exponent(cur: &mut Cursor) -> Result<usize, ParseError> {
    if !cur.eat('^') {
        return Ok(1);
    }
    let pos = {
        cur.skip_ws();
        cur.pos
    };
    if cur.peek() == Some('-') {
        return err(pos, "negative exponents are not allowed");
    }
    let Some(d) = cur.digits() else {
        return err(pos, "expected an exponent after `^`");
    };
    d.parse().or_else(|_| err(pos, "exponent too large"))
}

/// Parses a symbol and canonicalizes it (`zbar^0` folds into the constant).
pub fn parse_symbol(text: &str) -> Result<Symbol, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut analytic = Poly::zero();
    let mut coanalytic = Poly::zero();
    if cur.peek().is_none() {
        return err(0, "empty symbol");
    }
    let mut first = true;
    while cur.peek().is_some() {
        let term_pos = cur.pos;
        let negative = cur.eat('-');
        if !negative && !cur.eat('+') && !first {
            return err(term_pos, "expected `+` or `-` between terms");
        }
        first = false;
        let coeff = coefficient(&mut cur)?;
        let has_star = coeff.is_some() && cur.eat('*');
        let var_pos = {
            cur.skip_ws();
            cur.pos
        };
        let var = if cur.eat_word("zbar") {
            Some(true)
        } else if cur.eat_word("z") {
            Some(false)
        } else {
            None
        };
        let (coeff, var) = match (coeff, var) {
            (None, None) => return err(var_pos, "expected a coefficient, `z` or `zbar`"),
            (Some(_), None) if has_star => return err(var_pos, "expected `z` or `zbar` after `*`"),
            (c, v) => (c.unwrap_or_else(Rational::one), v),
        };
        let coeff = if negative { -coeff } else { coeff };
        match var {
            None => analytic.add_term(0, coeff),
            Some(bar) => {
                let n = exponent(&mut cur)?;
                if bar {
                    coanalytic.add_term(n, coeff);
                } else {
                    analytic.add_term(n, coeff);
                }
            }
        }
    }
    Ok(Symbol::new(analytic, coanalytic))
}

/// Parses a polynomial in `z` only.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let sym = parse_symbol(text)?;
    if !sym.coanalytic_part().is_zero() {
        return err(0, "expected an analytic polynomial (no `zbar` terms)");
    }
    Ok(sym.analytic_part().clone())
}

/// Canonical text of a symbol; parses back to an equal symbol.
pub fn format_symbol(sym: &Symbol) -> String {
    sym.to_string()
}

/// Splits on commas outside parentheses, keeping byte offsets.
fn split_factors(text: &str) -> Result<Vec<(usize, &str)>, ParseError> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut parts = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return err(i, "unbalanced `)`");
                }
            }
            ',' if depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return err(text.len(), "unclosed `(`");
    }
    parts.push((start, &text[start..]));
    Ok(parts)
}

/// Parses an operator word such as `W, T(zbar^2), W*, B(z + zbar)`.
pub fn parse_word(text: &str) -> Result<Expr, ParseError> {
    let mut word = Vec::new();
    if text.trim().is_empty() || text.trim() == "I" {
        return Ok(Expr::identity());
    }
    for (offset, raw) in split_factors(text)? {
        let lead = raw.len() - raw.trim_start().len();
        let pos = offset + lead;
        let factor = raw.trim();
        let inner = |name: &str| -> Result<Option<Symbol>, ParseError> {
            let Some(rest) = factor.strip_prefix(name) else {
                return Ok(None);
            };
            let rest = rest.trim_start();
            let Some(body) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
                return err(pos, format!("expected `{name}(symbol)`"));
            };
            let body_pos = pos + factor.len() - rest.len() + 1;
            parse_symbol(body)
                .map(Some)
                .map_err(|e| ParseError { pos: body_pos + e.pos, message: e.message })
        };
        match factor {
            "W" => word.push(Primitive::Slant),
            "W*" => word.push(Primitive::SlantAdjoint),
            "I" => {}
            "" => return err(pos, "empty factor"),
            _ => {
                if let Some(sym) = inner("T")? {
                    word.push(Primitive::Toeplitz(sym));
                } else if let Some(sym) = inner("B")? {
                    word.push(Primitive::Slant);
                    word.push(Primitive::Toeplitz(sym));
                } else {
                    return err(pos, format!("unknown factor `{factor}` (expected W, W*, T(..), B(..) or I)"));
                }
            }
        }
    }
    Ok(Expr::new(word))
}

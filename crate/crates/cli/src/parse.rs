//! Recursive-descent parser for the class-expression surface syntax.
//!
//! ```text
//! class  := term (('+'|'-') term)*
//! term   := [rational '*'] atom
//! atom   := 'Diag(' sizes ')' ['[' twists ']']
//!         | 'G' int ['[' twists ']']
//!         | 'F(' int ';' int ':' dist '|' dist ')' ['[' twists '|' twists ']']
//!         | 'Sect(' int ';' int ':' dist '|' dist ')' ['[' twists '|' twists ']']
//! twist  := product of 'L' and 'w' with optional '^' powers, or '1'
//! ```
//!
//! Coefficients are printed and parsed in the locus normalization: a parsed
//! atom contributes `coeff / aut(term)` to the stored class, matching the
//! printer exactly.

use hilbcalc_core::base::{Backend, BaseMonomial};
use hilbcalc_core::taut::{DiagonalTerm, NodeScrollTerm, ScrollTwist, TautClass, TautTerm};
use hilbcalc_core::{rat, Rat};
use num_traits::One;

/// Parse error with byte position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn err(&self, message: String) -> ParseError {
        ParseError {
            pos: self.pos,
            message,
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range".into()))
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let n = self.integer()?;
        if self.eat(b'/') {
            let d = self.integer()?;
            if d == 0 {
                return Err(self.err("zero denominator".into()));
            }
            Ok(rat(n, d))
        } else {
            Ok(rat(n, 1))
        }
    }

    fn twist(&mut self) -> Result<BaseMonomial, ParseError> {
        let mut e_l = 0u32;
        let mut e_w = 0u32;
        let mut any = false;
        loop {
            match self.peek() {
                Some(b'1') if !any => {
                    self.pos += 1;
                    any = true;
                }
                Some(b'L') | Some(b'w') => {
                    let is_l = self.src[self.pos] == b'L';
                    self.pos += 1;
                    let mut p = 1u32;
                    if self.eat(b'^') {
                        p = self.integer()? as u32;
                    }
                    if is_l {
                        e_l += p;
                    } else {
                        e_w += p;
                    }
                    any = true;
                }
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        if !any {
            return Err(self.err("expected twist monomial".into()));
        }
        Ok(BaseMonomial::new(e_l, e_w))
    }

    fn twist_list(&mut self) -> Result<Vec<BaseMonomial>, ParseError> {
        let mut out = vec![self.twist()?];
        while self.eat(b',') {
            out.push(self.twist()?);
        }
        Ok(out)
    }

    fn size_list(&mut self, sep: u8) -> Result<Vec<u32>, ParseError> {
        let mut out = Vec::new();
        let first = self.integer()? as u32;
        out.push(first);
        loop {
            self.skip_ws();
            if self.src.get(self.pos) == Some(&sep) {
                self.pos += 1;
                out.push(self.integer()? as u32);
            } else {
                break;
            }
        }
        Ok(out)
    }
}

fn scroll_side(
    sizes: &[u32],
    twists: Option<&[BaseMonomial]>,
    cur: &Cursor,
) -> Result<Vec<(u32, ScrollTwist)>, ParseError> {
    let sizes: Vec<u32> = sizes.iter().copied().filter(|&s| s > 0).collect();
    let mut out = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        let tw = match twists {
            Some(list) => *list.get(i).ok_or_else(|| cur.err("missing twist".into()))?,
            None => BaseMonomial::ONE,
        };
        out.push((s, ScrollTwist::from_base(tw)));
    }
    Ok(out)
}

fn atom(cur: &mut Cursor, m: u32, backend: Backend) -> Result<(TautTerm, Rat), ParseError> {
    cur.skip_ws();
    let rest = &cur.src[cur.pos..];
    if rest.starts_with(b"Diag(") {
        cur.pos += 5;
        let sizes = cur.size_list(b'|')?;
        cur.expect(b')')?;
        let twists = if cur.eat(b'[') {
            let t = cur.twist_list()?;
            cur.expect(b']')?;
            Some(t)
        } else {
            None
        };
        let total: u32 = sizes.iter().sum();
        if total > m {
            return Err(cur.err(format!("distribution of length {total} exceeds m={m}")));
        }
        let mut blocks: Vec<(u32, BaseMonomial)> = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            let tw = twists
                .as_ref()
                .and_then(|t| t.get(i).copied())
                .unwrap_or(BaseMonomial::ONE);
            if tw.deg() > backend.dim_x() {
                return Err(cur.err("twist degree exceeds the fibre-space dimension".into()));
            }
            blocks.push((s, tw));
        }
        for _ in 0..(m - total) {
            blocks.push((1, BaseMonomial::ONE));
        }
        let term = TautTerm::Diagonal(DiagonalTerm::new(blocks));
        let unit = Rat::one() / term.aut();
        return Ok((term, unit));
    }
    if rest.starts_with(b"G") && rest.get(1).is_some_and(|b| b.is_ascii_digit()) {
        cur.pos += 1;
        let gm = cur.integer()? as u32;
        if gm != m {
            return Err(cur.err(format!("polarization length {gm} does not match m={m}")));
        }
        let twists = if cur.eat(b'[') {
            let t = cur.twist_list()?;
            cur.expect(b']')?;
            t
        } else {
            Vec::new()
        };
        // desugar through the polarization constructor
        let c = TautClass::gamma_twisted(m, backend, &twists);
        let mut it = c.terms.into_iter();
        return match (it.next(), it.next()) {
            (Some((t, coeff)), None) => Ok((t, coeff)),
            _ => Err(cur.err("twisted polarization vanished or split".into())),
        };
    }
    let section = if rest.starts_with(b"Sect(") {
        cur.pos += 5;
        true
    } else if rest.starts_with(b"F(") {
        cur.pos += 2;
        false
    } else {
        return Err(cur.err("expected Diag(, G, F( or Sect(".into()));
    };
    let j = cur.integer()? as u32;
    cur.expect(b';')?;
    let n = cur.integer()? as u32;
    cur.expect(b':')?;
    let xs = cur.size_list(b',')?;
    cur.expect(b'|')?;
    let ys = cur.size_list(b',')?;
    cur.expect(b')')?;
    let (xt, yt) = if cur.eat(b'[') {
        let xt = if cur.peek() == Some(b'|') {
            Vec::new()
        } else {
            cur.twist_list()?
        };
        cur.expect(b'|')?;
        let yt = if cur.peek() == Some(b']') {
            Vec::new()
        } else {
            cur.twist_list()?
        };
        cur.expect(b']')?;
        (Some(xt), Some(yt))
    } else {
        (None, None)
    };
    if n < 2 || j == 0 || j >= n {
        return Err(cur.err(format!("scroll index {j} out of range for length {n}")));
    }
    let xb = scroll_side(&xs, xt.as_deref(), cur)?;
    let yb = scroll_side(&ys, yt.as_deref(), cur)?;
    let term = NodeScrollTerm::new(n, j, xb, yb, section);
    if term.total_length() != m {
        return Err(cur.err(format!(
            "scroll total length {} does not match m={m}",
            term.total_length()
        )));
    }
    let term = TautTerm::Scroll(term);
    let unit = Rat::one() / term.aut();
    Ok((term, unit))
}

/// Parse a class expression with declared ambient length and backend.
pub fn parse_class(text: &str, m: u32, backend: Backend) -> Result<TautClass, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = TautClass::zero(m, backend);
    let mut sign = Rat::one();
    if cur.eat(b'-') {
        sign = -Rat::one();
    }
    loop {
        cur.skip_ws();
        let mut coeff = sign.clone();
        if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = &coeff * &cur.rational()?;
            cur.expect(b'*')?;
        }
        let (term, unit) = atom(&mut cur, m, backend)?;
        out.add_term(term, &coeff * &unit);
        match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                sign = Rat::one();
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = -Rat::one();
            }
            None => break,
            Some(c) => return Err(cur.err(format!("unexpected '{}'", c as char))),
        }
    }
    Ok(out.normalize())
}

//! Parser for `base<gens>/(rel, ...)` presentations.

use super::{Poly, Presentation, Word};
use crate::error::{Error, Result};

pub const BASES: [(&str, u32, u32); 5] = [("F2", 2, 1), ("F3", 3, 1), ("Z4", 2, 2), ("Z8", 2, 3), ("Z9", 3, 2)];

/// Longest exponent accepted after `^`.
const MAX_EXPONENT: u64 = 16;

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, q: 0, gens: Vec::new() };
    let pres = p.presentation()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input after presentation"));
    }
    Ok(pres)
}

/// Parses one polynomial over the generators of `pres`, e.g. for evaluating an
/// expression in a built ring.
pub fn parse_polynomial(pres: &Presentation, text: &str) -> Result<Poly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, q: pres.modulus(), gens: pres.generators.clone() };
    let poly = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(poly)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    q: u32,
    gens: Vec<String>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Option<(usize, String)> {
        self.ws();
        let start = self.pos;
        if !self.s.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            return None;
        }
        while self.s.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            self.pos += 1;
        }
        Some((start, String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()))
    }

    fn number(&mut self) -> Result<Option<u64>> {
        self.ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse()
            .map(Some)
            .map_err(|_| Error::Syntax { pos: start, msg: "integer literal too large".into() })
    }

    fn presentation(&mut self) -> Result<Presentation> {
        let (at, base) = self.ident().ok_or_else(|| self.err("expected base ring F2, F3, Z4, Z8 or Z9"))?;
        let &(_, p, k) = BASES
            .iter()
            .find(|(name, _, _)| *name == base)
            .ok_or(Error::Syntax { pos: at, msg: format!("unknown base ring `{base}`") })?;
        self.q = p.pow(k);
        self.expect(b'<')?;
        loop {
            let (at, g) = self.ident().ok_or_else(|| self.err("expected generator name"))?;
            if self.gens.contains(&g) {
                return Err(Error::Syntax { pos: at, msg: format!("duplicate generator `{g}`") });
            }
            self.gens.push(g);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'>') => break,
                _ => return Err(self.err("expected `,` or `>`")),
            }
        }
        self.expect(b'>')?;
        self.expect(b'/')?;
        self.expect(b'(')?;
        let mut relations = Vec::new();
        if self.peek() == Some(b')') {
            self.pos += 1;
        } else {
            loop {
                relations.push(self.expr()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected `,` or `)`")),
                }
            }
        }
        Ok(Presentation { p, k, generators: std::mem::take(&mut self.gens), relations, expected_order: None })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.q);
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = acc.add(&if negate { t.neg() } else { t });
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_alphanumeric())
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            acc = acc.mul(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.number()?.ok_or_else(|| self.err("expected exponent"))?;
        if e > MAX_EXPONENT {
            return Err(Error::Syntax { pos: at, msg: format!("exponent {e} exceeds {MAX_EXPONENT}") });
        }
        Ok((0..e).fold(Poly::constant(self.q, 1), |acc, _| acc.mul(&base)))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?.unwrap();
                Ok(Poly::constant(self.q, (n % self.q as u64) as u32))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (at, name) = self.ident().unwrap();
                self.word(at, &name).map(|w| Poly::monomial(self.q, w, 1))
            }
            _ => Err(self.err("expected generator, integer or `(`")),
        }
    }

    /// A generator name, or a run of single-letter generators such as `uvu`.
    fn word(&self, at: usize, name: &str) -> Result<Word> {
        if let Some(i) = self.gens.iter().position(|g| g == name) {
            return Ok(vec![i as u8]);
        }
        let single = |ch: char| self.gens.iter().position(|g| g.len() == 1 && g.starts_with(ch));
        name.chars()
            .map(|ch| single(ch).map(|i| i as u8))
            .collect::<Option<Word>>()
            .ok_or(Error::UnknownGenerator { name: name.into(), pos: at })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order16_semicommutative() {
        let p = parse_presentation("F2<u,v>/(u^3,v^2,v*u,u^2-u*v)").unwrap();
        assert_eq!(p.generators, vec!["u", "v"]);
        assert_eq!(p.relations.len(), 4);
        assert_eq!(p.modulus(), 2);
        // u^2 - uv = u^2 + uv over F_2
        assert_eq!(p.relations[3].terms().count(), 2);
    }

    #[test]
    fn z4_relations() {
        let p = parse_presentation("Z4<u,v>/(u^3,v^2,v*u,u^2-u*v,2-u*v,2u,2v)").unwrap();
        assert_eq!(p.modulus(), 4);
        assert_eq!(p.relations.len(), 7);
        let r = &p.relations[4];
        assert_eq!(r.coeff(&vec![]), 2);
        assert_eq!(r.coeff(&vec![0, 1]), 3);
        assert_eq!(p.relations[5].coeff(&vec![0]), 2);
    }

    #[test]
    fn juxtaposed_words() {
        let p = parse_presentation("F2<u,v>/(uvu-vuv, u(u+v)^2)").unwrap();
        assert_eq!(p.relations[0].coeff(&vec![0, 1, 0]), 1);
        assert_eq!(p.relations[0].coeff(&vec![1, 0, 1]), 1);
        // u(u+v)^2 = uuu + uuv + uvu + uvv
        assert_eq!(p.relations[1].terms().count(), 4);
    }

    #[test]
    fn free_algebra() {
        let p = parse_presentation("F2<u>/()").unwrap();
        assert!(p.relations.is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_presentation("F2<u>/(w)"), Err(Error::UnknownGenerator { pos: 7, .. })));
        assert!(matches!(parse_presentation("F5<u>/(u)"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_presentation("F2<u>/(u^)"), Err(Error::Syntax { pos: 9, .. })));
        assert!(matches!(parse_presentation("F2<u,u>/(u)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_presentation("F2<u>/(u))"), Err(Error::Syntax { pos: 9, .. })));
        assert!(matches!(parse_presentation("F2<u>/(u"), Err(Error::Syntax { .. })));
    }
}

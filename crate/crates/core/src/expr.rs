//! Ring expressions: constructor calls, direct sums, opposites and
//! presentations, e.g. `sum(M(2,GF(2)),U(2,GF(2)))` or
//! `op(F2<u,v>/(u^2,v^2,u*v*u-v*u*v))`.
//!
//! ```text
//! expr  := call | presentation
//! call  := "Zn(" int ")" | "GF(" int ["," int] ")" | "M(" int "," expr ")"
//!        | "U(" int "," expr ")" | "GA(" expr "," group ")" | "SkewF4x2()"
//!        | "Ex3_11()" | "sum(" expr ("," expr)+ ")" | "op(" expr ")"
//!        | "Corpus(" name ")"
//! group := "Q8" | "C" int
//! ```

use crate::constructors::{
    cyclic, cyclic_group, galois, group_algebra, matrix_ring, quaternion_group, reflexive_nonabelian_64,
    skew_quotient_f4, upper_triangular,
};
use crate::corpus;
use crate::error::{Error, Result};
use crate::presentation::{build_ring, parse_presentation, BASES};
use crate::ring::RingTable;

pub fn parse_ring_expr(text: &str) -> Result<RingTable> {
    let mut p = ExprParser { s: text, pos: 0 };
    let r = p.expr()?;
    p.ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input after ring expression"));
    }
    Ok(r)
}

/// True when `text` is a bare presentation rather than a constructor call.
pub fn is_presentation(text: &str) -> bool {
    let t = text.trim_start();
    BASES.iter().any(|(b, _, _)| t.strip_prefix(b).is_some_and(|rest| rest.trim_start().starts_with('<')))
}

struct ExprParser<'a> {
    s: &'a str,
    pos: usize,
}

impl ExprParser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.s.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.rest().starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.ws();
        let len = self.rest().find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(self.rest().len());
        if len == 0 || !self.rest().starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(self.err("expected a name"));
        }
        let id = self.rest()[..len].to_string();
        self.pos += len;
        Ok(id)
    }

    fn int(&mut self) -> Result<usize> {
        self.ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.err("expected an integer"));
        }
        let v = self.rest()[..len].parse().map_err(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(v)
    }

    fn expr(&mut self) -> Result<RingTable> {
        self.ws();
        if is_presentation(self.rest()) {
            return self.presentation();
        }
        let start = self.pos;
        let name = self.ident()?;
        self.expect('(')?;
        let at = |e: Error| match e {
            Error::InvalidArgument(msg) | Error::Unsupported(msg) => Error::Syntax { pos: start, msg },
            other => other,
        };
        let r = match name.as_str() {
            "Zn" => {
                let n = self.int()?;
                cyclic(n).map_err(at)?
            }
            "GF" => {
                let p = self.int()?;
                let k = if self.eat(',') { self.int()? } else { 1 };
                galois(p, k).map_err(at)?.ring
            }
            "M" | "U" => {
                let k = self.int()?;
                self.expect(',')?;
                let base = self.expr()?;
                if name == "M" {
                    matrix_ring(&base, k).map_err(at)?
                } else {
                    upper_triangular(&base, k).map_err(at)?
                }
            }
            "GA" => {
                let field = self.expr()?;
                self.expect(',')?;
                self.ws();
                let gpos = self.pos;
                let g = self.ident()?;
                let group = match g.as_str() {
                    "Q8" => quaternion_group(),
                    _ => match g.strip_prefix('C').and_then(|k| k.parse::<usize>().ok()) {
                        Some(k) if k >= 1 => cyclic_group(k),
                        _ => return Err(Error::Syntax { pos: gpos, msg: format!("unknown group `{g}` (Q8 or C<n>)") }),
                    },
                };
                if field.order() != 1 && field.units().len() != field.order() - 1 {
                    return Err(Error::Syntax { pos: start, msg: "group algebra base must be a field".into() });
                }
                group_algebra(&field, &group).map_err(at)?
            }
            "SkewF4x2" => skew_quotient_f4()?,
            "Ex3_11" => reflexive_nonabelian_64()?,
            "sum" => {
                let mut acc = self.expr()?;
                let mut count = 1;
                while self.eat(',') {
                    acc = RingTable::direct_sum(&acc, &self.expr()?)?;
                    count += 1;
                }
                if count < 2 {
                    return Err(self.err("sum needs at least two summands"));
                }
                acc
            }
            "op" => self.expr()?.opposite(),
            "Corpus" => {
                let npos = self.pos;
                let entry = self.ident()?;
                corpus::build(&entry).map_err(|e| match e {
                    Error::InvalidArgument(msg) => Error::Syntax { pos: npos, msg },
                    other => other,
                })?
            }
            _ => return Err(Error::Syntax { pos: start, msg: format!("unknown constructor `{name}`") }),
        };
        self.expect(')')?;
        Ok(r)
    }

    /// A presentation runs to the parenthesis closing its relation list.
    fn presentation(&mut self) -> Result<RingTable> {
        let start = self.pos;
        let rest = self.rest();
        let open = rest.find("/(").ok_or_else(|| self.err("expected `/(` in presentation"))?;
        let mut depth = 0usize;
        let mut end = None;
        for (i, c) in rest[open + 1..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(open + 1 + i + 1);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| Error::Syntax { pos: self.s.len(), msg: "unclosed relation list".into() })?;
        let shift = |e: Error| match e {
            Error::Syntax { pos, msg } => Error::Syntax { pos: pos + start, msg },
            Error::UnknownGenerator { name, pos } => Error::UnknownGenerator { name, pos: pos + start },
            other => other,
        };
        let pres = parse_presentation(&rest[..end]).map_err(shift)?;
        self.pos = start + end;
        build_ring(&pres).map(|b| b.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_calls() {
        assert_eq!(parse_ring_expr("M(2,GF(2))").unwrap().order(), 16);
        assert_eq!(parse_ring_expr("U(2, GF(3))").unwrap().order(), 27);
        assert_eq!(parse_ring_expr("Zn(6)").unwrap().order(), 6);
        assert_eq!(parse_ring_expr("GF(2,2)").unwrap().units().len(), 3);
        assert_eq!(parse_ring_expr("GA(GF(2),C1)").unwrap().order(), 2);
        assert_eq!(parse_ring_expr("SkewF4x2()").unwrap().order(), 16);
    }

    #[test]
    fn sums_and_opposites() {
        let r = parse_ring_expr("sum(M(2,GF(2)),U(2,GF(2)))").unwrap();
        assert_eq!(r.order(), 128);
        assert_eq!(r.provenance(), "sum(M(2,GF(2,1)),U(2,GF(2,1)))");
        let u = parse_ring_expr("U(2,GF(2))").unwrap();
        let o = parse_ring_expr("op(op(U(2,GF(2))))").unwrap();
        assert!(u.same_tables(&o));
        assert_eq!(parse_ring_expr("sum(Zn(2),Zn(3),Zn(5))").unwrap().order(), 30);
    }

    #[test]
    fn presentations_inside_expressions() {
        let r = parse_ring_expr("sum(F2<x>/(x^2), Zn(2))").unwrap();
        assert_eq!(r.order(), 8);
        let r = parse_ring_expr("op(F2<u,v>/(u^3,v^2,v*u,u^2-u*v))").unwrap();
        assert_eq!(r.order(), 16);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ring_expr("sum(Zn(2),Foo(3))").unwrap_err();
        assert!(matches!(e, Error::Syntax { pos: 10, .. }), "{e:?}");
        let e = parse_ring_expr("M(2,GF(2)").unwrap_err();
        assert!(matches!(e, Error::Syntax { pos: 9, .. }), "{e:?}");
        let e = parse_ring_expr("sum(Zn(2), F2<u>/(w))").unwrap_err();
        assert!(matches!(e, Error::UnknownGenerator { pos: 18, .. }), "{e:?}");
        let e = parse_ring_expr("GA(GF(2),D4)").unwrap_err();
        assert!(matches!(e, Error::Syntax { pos: 9, .. }), "{e:?}");
        let e = parse_ring_expr("GF(4,1)").unwrap_err();
        assert!(matches!(e, Error::Syntax { pos: 0, .. }), "{e:?}");
        assert!(parse_ring_expr("Zn(2) junk").is_err());
        assert!(parse_ring_expr("sum(Zn(2))").is_err());
        assert!(parse_ring_expr("").is_err());
    }
}

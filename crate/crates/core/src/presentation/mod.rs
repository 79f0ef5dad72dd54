//! Finitely presented algebras over `Z_{p^k}` and their materialization as
//! ring tables.

mod engine;
mod howell;
mod parse;

pub use engine::{bounded_ideal_span, build_ring, build_ring_at_degree, build_ring_from_text, BuiltRing, D_MAX};
pub use howell::{howell_form, ModuleMatrix};
pub use parse::{parse_polynomial, parse_presentation, BASES};

use std::collections::BTreeMap;

/// A word in the generators; empty is the identity.
pub type Word = Vec<u8>;

/// A noncommutative polynomial with coefficients in `Z_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    q: u32,
    terms: BTreeMap<Word, u32>,
}

impl Poly {
    pub fn zero(q: u32) -> Self {
        Self { q, terms: BTreeMap::new() }
    }

    pub fn constant(q: u32, c: u32) -> Self {
        Self::monomial(q, Vec::new(), c)
    }

    pub fn monomial(q: u32, w: Word, c: u32) -> Self {
        let mut p = Self::zero(q);
        if c % q != 0 {
            p.terms.insert(w, c % q);
        }
        p
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, u32)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &Word) -> u32 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Length of the longest word with nonzero coefficient (0 for constants
    /// and for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Word, c: u32) {
        let q = self.q;
        let e = self.terms.entry(w).or_insert(0);
        *e = (*e + c) % q;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.q);
        for (w, c) in self.terms() {
            out.add_term(w.clone(), self.q - c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.q);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ((x as u64 * y as u64) % self.q as u64) as u32);
            }
        }
        out
    }

    pub fn render(&self, gens: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sep = if gens.iter().all(|g| g.len() == 1) { "" } else { "*" };
        self.terms()
            .map(|(w, c)| {
                let word: Vec<&str> = w.iter().map(|&g| gens[g as usize].as_str()).collect();
                match (c, w.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => word.join(sep),
                    _ => format!("{c}*{}", word.join(sep)),
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// A free algebra over `Z_{p^k}` modulo a two-sided ideal given by relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub p: u32,
    pub k: u32,
    pub generators: Vec<String>,
    pub relations: Vec<Poly>,
    pub expected_order: Option<usize>,
}

impl Presentation {
    pub fn modulus(&self) -> u32 {
        self.p.pow(self.k)
    }

    pub fn base_name(&self) -> &'static str {
        BASES.iter().find(|b| b.1 == self.p && b.2 == self.k).map(|b| b.0).unwrap_or("?")
    }

    pub fn with_expected_order(mut self, n: usize) -> Self {
        self.expected_order = Some(n);
        self
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().map(Poly::degree).max().unwrap_or(0)
    }

    /// Canonical text form, parseable by [`parse_presentation`].
    pub fn render(&self) -> String {
        let rels: Vec<String> = self.relations.iter().map(|r| r.render(&self.generators)).collect();
        format!("{}<{}>/({})", self.base_name(), self.generators.join(","), rels.join(","))
    }
}

//! Degree-truncated ideal spans and materialization of the quotient ring.
//!
//! Columns are words up to length `D`, ordered so that longer words lead and,
//! among words of equal length, the lexicographically smallest (first
//! generator smallest) leads. The ideal is truncated to the span of all
//! `w1 * r * w2` of degree at most `D`, kept in an echelon form with the
//! Howell property so that normal forms of polynomials are canonical.

use super::howell::{howell_form, ModuleMatrix, ZMod};
use super::{parse_presentation, Poly, Presentation, Word};
use crate::error::{Error, Result};
use crate::ring::{RingTable, MAX_ORDER};
use std::collections::{BTreeMap, HashMap};

/// Largest truncation degree tried before giving up on stabilization.
pub const D_MAX: usize = 10;

const KMAX: u64 = 63;

type Row = Vec<(u64, u32)>;

/// A presented ring together with the basis it was built on.
#[derive(Clone, Debug)]
pub struct BuiltRing {
    pub ring: RingTable,
    pub presentation: Presentation,
    /// Truncation degree the tables were read off at.
    pub degree: usize,
    /// Surviving words, in index order (the first varies fastest).
    pub basis: Vec<Word>,
    /// Additive order of each basis word.
    pub moduli: Vec<u32>,
    /// The element each generator reduces to.
    pub generators: Vec<usize>,
}

impl BuiltRing {
    pub fn basis_labels(&self) -> Vec<String> {
        self.basis.iter().map(|w| word_label(w, &self.presentation.generators)).collect()
    }

    /// The element represented by generator `i`.
    pub fn generator(&self, i: usize) -> usize {
        self.generators[i]
    }

    /// Substitutes the generators into `poly` using the ring tables.
    pub fn evaluate(&self, poly: &Poly) -> usize {
        let r = &self.ring;
        let gens = &self.generators;
        poly.terms().fold(r.zero(), |acc, (w, c)| {
            let m = w.iter().fold(r.one(), |x, &g| r.mul(x, gens[g as usize]));
            r.add(acc, r.scalar(c as u64, m))
        })
    }

    /// Indices of relations that do not evaluate to zero.
    pub fn nonvanishing_relations(&self) -> Vec<usize> {
        (0..self.presentation.relations.len())
            .filter(|&i| self.evaluate(&self.presentation.relations[i]) != self.ring.zero())
            .collect()
    }

}

fn word_label(w: &Word, gens: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let sep = if gens.iter().all(|g| g.len() == 1) { "" } else { "*" };
    w.iter().map(|&g| gens[g as usize].as_str()).collect::<Vec<_>>().join(sep)
}

struct Engine {
    z: ZMod,
    g: u64,
    relations: Vec<Vec<(Word, u32)>>,
    pivots: HashMap<u64, Row>,
    stages_done: usize,
}

impl Engine {
    fn new(p: &Presentation) -> Result<Self> {
        let g = p.generators.len();
        if g == 0 || g > 8 {
            return Err(Error::Unsupported(format!("{g} generators (supported: 1 to 8)")));
        }
        let z = ZMod::new(p.modulus())?;
        let relations = p
            .relations
            .iter()
            .map(|r| r.terms().map(|(w, c)| (w.clone(), c % z.q)).filter(|t| t.1 != 0).collect())
            .collect();
        Ok(Self { z, g: g as u64, relations, pivots: HashMap::new(), stages_done: 0 })
    }

    fn key(&self, w: &[u8]) -> u64 {
        let lex = w.iter().fold(0u64, |acc, &x| acc * self.g + x as u64);
        ((KMAX - w.len() as u64) << 48) | lex
    }

    fn words(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..self.g as u8).map(move |x| {
                        let mut w2 = w.clone();
                        w2.push(x);
                        w2
                    })
                })
                .collect();
        }
        out
    }

    /// Inserts every `w1 r w2` of total degree exactly `s`.
    fn stage(&mut self, s: usize) {
        let mut rows = Vec::new();
        for rel in &self.relations {
            let d = rel.iter().map(|(w, _)| w.len()).max().unwrap_or(0);
            if rel.is_empty() || d > s {
                continue;
            }
            let t = s - d;
            for a in 0..=t {
                let lefts = self.words(a);
                let rights = self.words(t - a);
                for w1 in &lefts {
                    for w2 in &rights {
                        let mut row: Row = rel
                            .iter()
                            .map(|(w, c)| {
                                let mut full = w1.clone();
                                full.extend_from_slice(w);
                                full.extend_from_slice(w2);
                                (self.key(&full), *c)
                            })
                            .collect();
                        row.sort_unstable();
                        rows.push(row);
                    }
                }
            }
        }
        for row in rows {
            self.insert(row);
        }
        self.stages_done = s + 1;
    }

    fn scale(&self, row: &Row, f: u32) -> Row {
        row.iter().map(|&(c, x)| (c, self.z.mul(x, f))).filter(|t| t.1 != 0).collect()
    }

    /// `row - f * piv`, both sorted by key.
    fn sub_multiple(&self, row: &Row, f: u32, piv: &Row) -> Row {
        let q = self.z.q;
        let mut out = Vec::with_capacity(row.len() + piv.len());
        let (mut i, mut j) = (0, 0);
        while i < row.len() || j < piv.len() {
            let take_row = j == piv.len() || (i < row.len() && row[i].0 < piv[j].0);
            let take_piv = i == row.len() || (j < piv.len() && piv[j].0 < row[i].0);
            let (c, x) = if take_row {
                i += 1;
                row[i - 1]
            } else if take_piv {
                j += 1;
                (piv[j - 1].0, (q - self.z.mul(f, piv[j - 1].1)) % q)
            } else {
                i += 1;
                j += 1;
                (row[i - 1].0, (row[i - 1].1 + q - self.z.mul(f, piv[j - 1].1)) % q)
            };
            if x != 0 {
                out.push((c, x));
            }
        }
        out
    }

    fn insert(&mut self, row: Row) {
        let z = self.z;
        let mut work = vec![row];
        while let Some(mut row) = work.pop() {
            loop {
                let Some(&(c, x)) = row.first() else { break };
                let (v, uinv) = z.split(x);
                if uinv != 1 {
                    row = self.scale(&row, uinv);
                }
                match self.pivots.get_mut(&c) {
                    Some(piv) => {
                        let pv = z.val(piv[0].1);
                        if v >= pv {
                            let piv = piv.clone();
                            row = self.sub_multiple(&row, z.p.pow(v - pv), &piv);
                        } else {
                            std::mem::swap(piv, &mut row);
                            let fresh = piv.clone();
                            work.push(self.scale(&fresh, z.p.pow(z.k - v)));
                        }
                    }
                    None => {
                        if v > 0 {
                            work.push(self.scale(&row, z.p.pow(z.k - v)));
                        }
                        self.pivots.insert(c, row);
                        break;
                    }
                }
            }
        }
    }

    /// Additive order of a word modulo the current span; 1 when the word is
    /// a pivot with unit leading coefficient.
    fn modulus_of(&self, w: &[u8]) -> u32 {
        match self.pivots.get(&self.key(w)) {
            None => self.z.q,
            Some(piv) => self.z.p.pow(self.z.val(piv[0].1)),
        }
    }

    /// Shortest length `l <= d` at which every word rewrites to shorter
    /// ones. Every longer word then does too, so the quotient is spanned by
    /// the words below `l`.
    fn cutoff(&self, d: usize) -> Option<usize> {
        (0..=d).find(|&l| self.words(l).iter().all(|w| self.modulus_of(w) == 1))
    }

    /// Surviving columns among words shorter than `below`, with moduli.
    fn signature(&self, below: usize) -> Vec<(Word, u32)> {
        let mut out = Vec::new();
        for len in 0..below {
            for w in self.words(len) {
                let m = self.modulus_of(&w);
                if m > 1 {
                    out.push((w, m));
                }
            }
        }
        out
    }

    /// Canonical remainder of `poly` modulo the current span.
    fn normal_form(&self, poly: &BTreeMap<u64, u32>) -> Vec<(u64, u32)> {
        let q = self.z.q;
        let mut work = poly.clone();
        let mut out = Vec::new();
        while let Some((c, x)) = work.pop_first() {
            match self.pivots.get(&c) {
                None => out.push((c, x)),
                Some(piv) => {
                    let lead = piv[0].1;
                    let (t, r) = (x / lead, x % lead);
                    if t > 0 {
                        for &(c2, y) in &piv[1..] {
                            let e = work.entry(c2).or_insert(0);
                            *e = (*e + q - self.z.mul(t, y)) % q;
                            if *e == 0 {
                                work.remove(&c2);
                            }
                        }
                    }
                    if r > 0 {
                        out.push((c, r));
                    }
                }
            }
        }
        out
    }

    fn materialize(&self, p: &Presentation, degree: usize, sig: Vec<(Word, u32)>) -> Result<BuiltRing> {
        let mut sig = sig;
        sig.sort_by_key(|(w, _)| (w.len(), self.key(w)));
        let basis: Vec<Word> = sig.iter().map(|(w, _)| w.clone()).collect();
        let moduli: Vec<u32> = sig.iter().map(|&(_, m)| m).collect();
        let size = moduli.iter().try_fold(1u128, |a, &m| a.checked_mul(m as u128)).unwrap_or(u128::MAX);
        if size > MAX_ORDER as u128 {
            return Err(Error::SizeCap { what: format!("quotient of {}", p.render()), size, cap: MAX_ORDER });
        }
        let n = size as usize;
        let r = basis.len();
        let position: HashMap<u64, usize> = basis.iter().enumerate().map(|(i, w)| (self.key(w), i)).collect();

        let coords = |mut x: usize| -> Vec<u32> {
            moduli
                .iter()
                .map(|&m| {
                    let d = (x % m as usize) as u32;
                    x /= m as usize;
                    d
                })
                .collect()
        };
        let index = |c: &[u32]| c.iter().zip(&moduli).rev().fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize);

        // Products of basis words, as coordinate vectors.
        let mut prod = vec![vec![0u32; r]; r * r];
        for a in 0..r {
            for b in 0..r {
                let mut w = basis[a].clone();
                w.extend_from_slice(&basis[b]);
                if w.len() > degree {
                    return Err(Error::Internal(format!("product of basis words exceeds degree {degree}")));
                }
                let nf = self.normal_form(&BTreeMap::from([(self.key(&w), 1 % self.z.q)]));
                for (c, x) in nf {
                    let t = *position
                        .get(&c)
                        .ok_or_else(|| Error::Internal("normal form left the surviving basis".into()))?;
                    prod[a * r + b][t] = x;
                }
            }
        }

        let all: Vec<Vec<u32>> = (0..n).map(coords).collect();
        let mut add = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                let s: Vec<u32> = all[x].iter().zip(&all[y]).zip(&moduli).map(|((a, b), m)| (a + b) % m).collect();
                add[x * n + y] = index(&s) as u16;
            }
        }
        // left[a][y] = basis_a * y
        let mut left = vec![0usize; r * n];
        for a in 0..r {
            for y in 0..n {
                let mut acc = vec![0u64; r];
                for (b, &cb) in all[y].iter().enumerate() {
                    if cb == 0 {
                        continue;
                    }
                    for (t, &e) in prod[a * r + b].iter().enumerate() {
                        acc[t] += cb as u64 * e as u64;
                    }
                }
                let c: Vec<u32> = acc.iter().zip(&moduli).map(|(&v, &m)| (v % m as u64) as u32).collect();
                left[a * n + y] = index(&c);
            }
        }
        let mut mul = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut acc = 0usize;
                for (a, &ca) in all[x].iter().enumerate() {
                    let term = left[a * n + y];
                    for _ in 0..ca {
                        acc = add[acc * n + term] as usize;
                    }
                }
                mul[x * n + y] = acc as u16;
            }
        }

        let labels = all
            .iter()
            .map(|c| {
                let terms: Vec<String> = c
                    .iter()
                    .zip(&basis)
                    .filter(|(&x, _)| x != 0)
                    .map(|(&x, w)| match (x, w.is_empty()) {
                        (_, true) => x.to_string(),
                        (1, false) => word_label(w, &p.generators),
                        _ => format!("{x}*{}", word_label(w, &p.generators)),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        let one = index(&{
            let mut c = vec![0u32; r];
            if let Some(i) = basis.iter().position(Vec::is_empty) {
                c[i] = 1 % moduli[i];
            }
            c
        });
        let ring = RingTable::new(labels, add, mul, 0, one, p.render()).map_err(|e| match e {
            Error::Axioms(msg) => Error::Internal(format!("quotient tables violate ring axioms: {msg}")),
            other => other,
        })?;
        let mut generators = Vec::with_capacity(self.g as usize);
        for g in 0..self.g as u8 {
            let nf = self.normal_form(&BTreeMap::from([(self.key(&[g]), 1 % self.z.q)]));
            let mut c = vec![0u32; r];
            for (col, x) in nf {
                let t = *position
                    .get(&col)
                    .ok_or_else(|| Error::Internal("normal form left the surviving basis".into()))?;
                c[t] = x;
            }
            generators.push(index(&c));
        }
        let built = BuiltRing { ring, presentation: p.clone(), degree, basis, moduli, generators };
        let bad = built.nonvanishing_relations();
        if !bad.is_empty() {
            return Err(Error::Internal(format!("relations {bad:?} do not vanish in the built ring")));
        }
        if let Some(expected) = p.expected_order {
            if expected != n {
                return Err(Error::OrderMismatch { expected, actual: n });
            }
        }
        Ok(built)
    }
}

/// The signature at truncation `d` when it is usable: some length `l`
/// has every word reducible, and products of two surviving words (length at
/// most `2(l - 1)`) stay within the truncation.
fn usable_signature(e: &Engine, d: usize) -> Option<Vec<(Word, u32)>> {
    let l = e.cutoff(d)?;
    (2 * l.saturating_sub(1) <= d).then(|| e.signature(l))
}

/// Builds the ring at the first degree `D <= D_MAX` where the truncated
/// quotient is spanned by short words and agrees with the one at `D + 1`.
pub fn build_ring(p: &Presentation) -> Result<BuiltRing> {
    let mut e = Engine::new(p)?;
    let start = p.max_relation_degree().max(1);
    if start > D_MAX {
        return Err(Error::PossiblyInfinite { max_degree: D_MAX });
    }
    for s in 0..=start {
        e.stage(s);
    }
    let mut prev = usable_signature(&e, start);
    for d in start..=D_MAX {
        e.stage(d + 1);
        let sig = usable_signature(&e, d + 1);
        if let (Some(a), Some(b)) = (&prev, &sig) {
            if a == b {
                return e.materialize(p, d + 1, b.clone());
            }
        }
        prev = sig;
    }
    Err(Error::PossiblyInfinite { max_degree: D_MAX })
}

/// Builds the ring from the span truncated at exactly `degree`.
pub fn build_ring_at_degree(p: &Presentation, degree: usize) -> Result<BuiltRing> {
    let mut e = Engine::new(p)?;
    for s in 0..=degree {
        e.stage(s);
    }
    let sig = usable_signature(&e, degree).ok_or(Error::PossiblyInfinite { max_degree: degree })?;
    e.materialize(p, degree, sig)
}

pub fn build_ring_from_text(text: &str) -> Result<BuiltRing> {
    build_ring(&parse_presentation(text)?)
}

/// The truncated ideal as a Howell-form matrix whose columns are all words of
/// length at most `degree`, longest first. Dense; meant for small cases.
pub fn bounded_ideal_span(p: &Presentation, degree: usize) -> Result<(Vec<Word>, ModuleMatrix)> {
    let mut e = Engine::new(p)?;
    let mut columns: Vec<Word> = (0..=degree).flat_map(|l| e.words(l)).collect();
    if columns.len() > 4096 {
        return Err(Error::SizeCap { what: "dense ideal span columns".into(), size: columns.len() as u128, cap: 4096 });
    }
    for s in 0..=degree {
        e.stage(s);
    }
    columns.sort_by_key(|w| e.key(w));
    let pos: HashMap<u64, usize> = columns.iter().enumerate().map(|(i, w)| (e.key(w), i)).collect();
    let rows = e
        .pivots
        .values()
        .map(|row| {
            let mut dense = vec![0u32; columns.len()];
            for &(c, x) in row {
                dense[pos[&c]] = x;
            }
            dense
        })
        .collect();
    let m = ModuleMatrix::new(e.z.q, columns.len(), rows)?;
    Ok((columns, howell_form(&m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(text: &str) -> usize {
        build_ring_from_text(text).unwrap().ring.order()
    }

    #[test]
    fn small_quotients() {
        assert_eq!(order("F2<x>/(x^2)"), 4);
        assert_eq!(order("F2<x>/(x^2+x+1)"), 4);
        assert_eq!(order("F3<x>/(x^3)"), 27);
        assert_eq!(order("Z4<x>/(x^2, 2x)"), 8);
        assert_eq!(order("Z4<x>/(x)"), 4);
        assert_eq!(order("Z8<x>/(x - 2)"), 8);
    }

    #[test]
    fn dual_numbers_labels() {
        let b = build_ring_from_text("F2<x>/(x^2)").unwrap();
        assert_eq!(b.ring.labels(), ["0", "1", "x", "1+x"]);
        assert_eq!(b.generator(0), 2);
    }

    #[test]
    fn order16_semicommutative_f2() {
        let b = build_ring_from_text("F2<u,v>/(u^3,v^3,v*u,u^2-u*v,v^2-u*v)").unwrap();
        assert_eq!(b.ring.order(), 16);
        assert!(!b.ring.is_commutative());
    }

    #[test]
    fn symmetric_nonduo_basis() {
        let b = build_ring_from_text("F2<u,v>/(u^3,v^2,u^2+u*v+v*u,u*v*u)").unwrap();
        assert_eq!(b.ring.order(), 32);
        assert_eq!(b.basis_labels(), ["1", "u", "v", "uv", "vu"]);
    }

    #[test]
    fn z4_torsion_basis() {
        let b = build_ring_from_text("Z4<u,v>/(u^3,v^2,v*u,u^2-u*v,2-u*v,2u,2v)").unwrap();
        assert_eq!(b.ring.order(), 16);
        assert_eq!(b.moduli[0], 4);
        assert!(b.nonvanishing_relations().is_empty());
    }

    #[test]
    fn free_algebra_is_flagged() {
        assert!(matches!(
            build_ring_from_text("F2<u>/()"),
            Err(Error::PossiblyInfinite { max_degree: D_MAX })
        ));
        assert!(matches!(
            build_ring_from_text("F2<u,v>/(u^2,v^2)"),
            Err(Error::PossiblyInfinite { .. })
        ));
    }

    #[test]
    fn expected_order_mismatch() {
        let p = parse_presentation("F2<x>/(x^2)").unwrap().with_expected_order(8);
        assert!(matches!(build_ring(&p), Err(Error::OrderMismatch { expected: 8, actual: 4 })));
    }

    #[test]
    fn degree_independence() {
        let p = parse_presentation("F2<u,v>/(u^2,v^2,u*v*u-v*u*v)").unwrap();
        let a = build_ring_at_degree(&p, 10).unwrap();
        let b = build_ring_at_degree(&p, 12).unwrap();
        assert_eq!(a.ring.order(), 64);
        assert!(a.ring.same_tables(&b.ring));
    }

    #[test]
    fn dense_span_small() {
        let p = parse_presentation("Z4<x>/(2x, x^2)").unwrap();
        let (cols, m) = bounded_ideal_span(&p, 2).unwrap();
        assert_eq!(cols, vec![vec![0, 0], vec![0], vec![]]);
        // span: x^2 and 2x
        assert_eq!(m.rows, vec![vec![1, 0, 0], vec![0, 2, 0]]);
        assert_eq!(howell_form(&m), m);
    }
}

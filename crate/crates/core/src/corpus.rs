//! Named rings with the properties they are known to have.
//!
//! Every expectation carries the claim it checks. Properties that no claim
//! asserts are computed and reported, never judged.

use crate::constructors::{cyclic, dual_numbers, formal_triangular, from_structure_constants, matrix_ring, BimoduleSpec, StructureConstants};
use crate::error::{Error, Result};
use crate::expr::{is_presentation, parse_ring_expr};
use crate::ring::RingTable;

#[derive(Clone, Copy, Debug)]
pub enum Recipe {
    /// A ring expression, possibly a bare presentation.
    Expr(&'static str),
    /// A construction with no short expression.
    Builtin(&'static str, fn() -> Result<RingTable>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Property(&'static str, bool),
    /// The only central idempotents are 0 and 1 (or not).
    Indecomposable(bool),
    /// Basis words the presentation engine keeps, in index order.
    Basis(&'static [&'static str]),
}

#[derive(Clone, Copy, Debug)]
pub struct Expectation {
    pub check: Check,
    pub claim: &'static str,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub recipe: Recipe,
    pub order: usize,
    pub expectations: Vec<Expectation>,
    /// Set when the recipe, taken literally, cannot meet its claims. The
    /// expectations are still evaluated and reported.
    pub discrepancy: Option<&'static str>,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<RingTable> {
        let r = match self.recipe {
            Recipe::Expr(text) => parse_ring_expr(text)?,
            Recipe::Builtin(_, f) => f()?,
        };
        if r.order() != self.order {
            return Err(Error::OrderMismatch { expected: self.order, actual: r.order() });
        }
        Ok(r)
    }

    pub fn recipe_text(&self) -> &'static str {
        match self.recipe {
            Recipe::Expr(t) | Recipe::Builtin(t, _) => t,
        }
    }

    /// The presentation text when the recipe is a bare presentation.
    pub fn presentation(&self) -> Option<&'static str> {
        match self.recipe {
            Recipe::Expr(t) if is_presentation(t) => Some(t),
            _ => None,
        }
    }
}

pub fn find(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

pub fn build(name: &str) -> Result<RingTable> {
    find(name).ok_or_else(|| Error::InvalidArgument(format!("no corpus entry named `{name}`")))?.build()
}

fn prop(key: &'static str, value: bool, claim: &'static str) -> Expectation {
    Expectation { check: Check::Property(key, value), claim }
}

fn props(pairs: &[(&'static str, bool)], claim: &'static str) -> Vec<Expectation> {
    pairs.iter().map(|&(k, v)| prop(k, v, claim)).collect()
}

fn entry(name: &'static str, recipe: Recipe, order: usize, expectations: Vec<Expectation>) -> CorpusEntry {
    CorpusEntry { name, recipe, order, expectations, discrepancy: None }
}

const ORDER4: &str = "the rings of order 4 are F4, Z4, F2[x]/(x^2) and F2+F2";
const SEMI16: &str = "the noncommutative semicommutative rings of order 16 are exactly the noncommutative local ones";
const NONREF_DUO: &str = "minimal nonreflexive duo rings have order 16";
const SEMI_NONDUO: &str = "minimal semicommutative nonduo rings have order 16 and are nonreflexive";
const NOT_REVERSIBLE16: &str = "the nonreflexive local rings of order 16 are not reversible";
const LOCAL32: &str = "local rings of order 32 with nonzero cube of the radical are semicommutative";
const NONNI_NONREF: &str = "minimal non-NI nonreflexive rings have order 128";
const NONNI_SUM: &str = "the non-NI rings of order p^5 and p^6 are M2(Fp) plus a ring of order p or p^2";
const NONLOCAL16: &str = "noncommutative nonlocal indecomposable rings of order p^4 (pairing with the cited list presumed)";
const NONLOCAL16_NONREF: &str = "every nonabelian indecomposable ring of order p^4 other than M2(Fp) has M != 0 and M^2 = 0, so it is nonreflexive";

pub const REV_NONDUO_DISCREPANCY: &str = "taken literally the presentation has graded dimensions 1, 2, 3, 2, 1, so the quotient has order 512 rather than 256, and it is not reversible; no order-256 ring obtained by varying which words appear in the two mixed relations is reversible";

const SEMI16_PROPS: [(&str, bool); 3] = [("semicommutative", true), ("commutative", false), ("local", true)];

/// Every named ring, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    use Recipe::{Builtin, Expr};
    let mut v = vec![
        entry("Z2", Expr("Zn(2)"), 2, props(&[("commutative", true), ("reduced", true)], "a prime field is reduced and commutative")),
        entry("Z4", Expr("Zn(4)"), 4, props(&[("commutative", true), ("reduced", false), ("local", true)], ORDER4)),
        entry("DualF2", Expr("F2<x>/(x^2)"), 4, props(&[("commutative", true), ("reduced", false), ("local", true)], ORDER4)),
        entry("F4", Expr("GF(2,2)"), 4, props(&[("commutative", true), ("reduced", true), ("local", true)], ORDER4)),
        entry("F2SumF2", Expr("sum(Zn(2),Zn(2))"), 4, props(&[("commutative", true), ("reduced", true), ("local", false)], ORDER4)),
        entry("U2F2", Expr("U(2,GF(2))"), 8, {
            let mut e = props(&[("ni", true), ("abelian", false), ("reflexive", false)], "U2(F2) is the minimal nonreflexive ring and a minimal NI nonabelian ring");
            e.push(prop("commutative", false, "U2(Fp) is the only noncommutative ring of order p^3"));
            e
        }),
        entry("U2F3", Expr("U(2,GF(3))"), 27, {
            let mut e = props(&[("commutative", false), ("ni", true)], "U2(Fp) is the only noncommutative ring of order p^3");
            e.push(prop("reflexive", false, "U2(Fp) is nonreflexive"));
            e
        }),
        entry("M2F2", Expr("M(2,GF(2))"), 16, {
            let mut e = props(&[("reflexive", true), ("ni", false)], "M2(F2) is the minimal non-NI reflexive ring");
            e.push(prop("ni", false, "M2(Fp) is the only non-NI ring of order p^4"));
            e.push(prop("reflexive", true, "the reflexive noncommutative rings of order 16 are the skew ring over F4 and M2(F2)"));
            e.push(Expectation { check: Check::Indecomposable(true), claim: NONLOCAL16 });
            e
        }),
        entry("M2F3", Expr("M(2,GF(3))"), 81, {
            let mut e = props(&[("ni", false)], "M2(Fp) is the only non-NI ring of order p^4");
            e.push(prop("reflexive", true, "M2(F3) is a reflexive non-NI ring"));
            e
        }),
        entry("SkewF4", Expr("SkewF4x2()"), 16, {
            let mut e = props(&SEMI16_PROPS, SEMI16);
            e.push(prop("duo", true, "the duo noncommutative rings of order 16 include the skew ring over F4"));
            e.push(prop("reflexive", true, "the reflexive noncommutative rings of order 16 are the skew ring over F4 and M2(F2)"));
            e.push(prop("symmetric", true, "the skew ring over F4 is a minimal noncommutative symmetric duo ring"));
            e
        }),
    ];

    let semi_duo = [
        ("SemiDuoF2", "F2<u,v>/(u^3,v^3,v*u,u^2-u*v,v^2-u*v)"),
        ("SemiDuoZ4", "Z4<u,v>/(u^3,v^3,v*u,u^2-u*v,v^2-u*v,2-u*v,2u,2v)"),
    ];
    for (name, text) in semi_duo {
        let mut e = props(&SEMI16_PROPS, SEMI16);
        e.push(prop("duo", true, "the duo noncommutative rings of order 16 include the two u,v rings with v^3 = 0"));
        e.push(prop("reflexive", false, NONREF_DUO));
        e.push(prop("reversible", false, NOT_REVERSIBLE16));
        v.push(entry(name, Expr(text), 16, e));
    }
    let semi_nonduo = [
        ("SemiNonduoF2", "F2<u,v>/(u^3,v^2,v*u,u^2-u*v)"),
        ("SemiNonduoZ4", "Z4<u,v>/(u^3,v^2,v*u,u^2-u*v,2-u*v,2u,2v)"),
    ];
    for (name, text) in semi_nonduo {
        let mut e = props(&SEMI16_PROPS, SEMI16);
        e.extend(props(&[("duo", false), ("reflexive", false)], SEMI_NONDUO));
        e.push(prop("reversible", false, NOT_REVERSIBLE16));
        v.push(entry(name, Expr(text), 16, e));
    }

    let local32 = [
        ("Local32a", "F2<u,v>/(u^4,u*v,v*u-u^3,v^2)"),
        ("Local32b", "F2<u,v>/(u^4,u*v,v*u-u^3,v^2-u^3)"),
        ("Local32c", "Z4<u,v>/(u^4,u*v,v*u-u^3,v^2,u^3-2)"),
        ("Local32d", "Z4<u,v>/(u^4,u*v,v*u-u^3,v^2-u^3,u^3-2)"),
        ("Local32e", "Z4<u,v>/(u^4,u*v,v*u-u^3,v^2,u^2-2)"),
        ("Local32f", "Z4<u,v>/(u^4,u*v,v*u-u^3,v^2-u^3,u^2-2)"),
        ("Local32g", "Z4<u,v>/(u^4,u*v,v*u-u^3,v^2,u^2-2-2u)"),
    ];
    for (name, text) in local32 {
        v.push(entry(name, Expr(text), 32, props(&[("semicommutative", true), ("local", true), ("commutative", false)], LOCAL32)));
    }

    v.extend([
        entry("SymNonduo32", Expr("F2<u,v>/(u^3,v^2,u^2+u*v+v*u,u*v*u)"), 32, {
            let claim = "minimal symmetric nonduo rings have order 32";
            let mut e = props(&[("symmetric", true), ("duo", false)], claim);
            e.push(Expectation { check: Check::Basis(&["1", "u", "v", "uv", "vu"]), claim });
            e
        }),
        entry(
            "AbelianNonsemi64",
            Expr("F2<u,v>/(u^2,v^2,u*v*u-v*u*v)"),
            64,
            props(&[("abelian", true), ("semicommutative", false), ("reflexive", false)], "minimal abelian nonsemicommutative rings have order 64"),
        ),
        entry(
            "NiReflexive64",
            Expr("Ex3_11()"),
            64,
            props(&[("ni", true), ("abelian", false), ("reflexive", true)], "minimal NI nonabelian reflexive rings have order 64"),
        ),
        entry("NonNiTri128", Builtin("[[M2(F2), F2^2], [0, F2]]", non_ni_triangular), 128, props(&[("ni", false), ("reflexive", false)], NONNI_NONREF)),
        entry("NonNiTriOp128", Builtin("[[F2, F2^2], [0, M2(F2)]]", non_ni_triangular_op), 128, props(&[("ni", false), ("reflexive", false)], NONNI_NONREF)),
        entry("M2F2SumU2F2", Expr("sum(M(2,GF(2)),U(2,GF(2)))"), 128, props(&[("ni", false), ("reflexive", false)], NONNI_NONREF)),
        entry(
            "F2Q8",
            Expr("GA(GF(2),Q8)"),
            256,
            props(
                &[("reversible", true), ("symmetric", false), ("right_duo", true), ("left_duo", true), ("duo", true)],
                "the group algebra F2Q8 is a minimal reversible nonsymmetric ring and is duo",
            ),
        ),
        entry("M2F2SumF2", Expr("sum(M(2,GF(2)),Zn(2))"), 32, props(&[("ni", false)], NONNI_SUM)),
        entry("M2F2SumF2F2", Expr("sum(M(2,GF(2)),Zn(2),Zn(2))"), 64, props(&[("ni", false)], NONNI_SUM)),
        entry("M2F2SumDualF2", Expr("sum(M(2,GF(2)),F2<x>/(x^2))"), 64, props(&[("ni", false)], NONNI_SUM)),
        entry("M2F2SumZ4", Expr("sum(M(2,GF(2)),Zn(4))"), 64, props(&[("ni", false)], NONNI_SUM)),
        entry("M2F2SumF4", Expr("sum(M(2,GF(2)),GF(2,2))"), 64, props(&[("ni", false)], NONNI_SUM)),
    ]);

    v.push(CorpusEntry {
        discrepancy: Some(REV_NONDUO_DISCREPANCY),
        ..entry(
            "RevNonduoPresented",
            Expr("F2<u,v>/(u^3,v^3,u^2+v^2+v*u,v*u^2+u*v*u+v*u*v)"),
            512,
            props(&[("reversible", true), ("symmetric", false), ("duo", false)], "minimal reversible nonsymmetric nonduo rings have order 256; this presentation is the example given"),
        )
    });

    let nonlocal16: [(&'static str, &'static str, fn() -> Result<RingTable>); 6] = [
        ("TriF2F2sq", "[[F2, F2^2], [0, F2]]", tri_f2_f2sq),
        ("CycleF2", "1, e, x, y with e^2 = e, ex = x = x(1-e), ye = y = (1-e)y, xy = yx = 0", two_cycle_f2),
        ("TriDualF2", "[[F2[x]/(x^2), F2], [0, F2]]", tri_dual_f2),
        ("TriF2Dual", "[[F2, F2], [0, F2[x]/(x^2)]]", tri_f2_dual),
        ("TriZ4F2", "[[Z4, F2], [0, F2]]", tri_z4_f2),
        ("TriF2Z4", "[[F2, F2], [0, Z4]]", tri_f2_z4),
    ];
    for (name, text, f) in nonlocal16 {
        let mut e = props(&[("commutative", false), ("local", false)], NONLOCAL16);
        e.push(Expectation { check: Check::Indecomposable(true), claim: NONLOCAL16 });
        e.push(prop("reflexive", false, NONLOCAL16_NONREF));
        v.push(entry(name, Builtin(text, f), 16, e));
    }
    v.push(entry("U2F2SumF2", Expr("sum(U(2,GF(2)),Zn(2))"), 16, {
        let claim = "the decomposable noncommutative ring of order 16 is U2(F2)+F2";
        let mut e = props(&[("commutative", false)], claim);
        e.push(Expectation { check: Check::Indecomposable(false), claim });
        e
    }));
    v
}

/// The thirteen noncommutative rings of order 16, as corpus names.
pub const NONCOMMUTATIVE_16: [&str; 13] = [
    "M2F2",
    "TriF2F2sq",
    "CycleF2",
    "TriDualF2",
    "TriF2Dual",
    "TriZ4F2",
    "TriF2Z4",
    "SkewF4",
    "SemiDuoF2",
    "SemiDuoZ4",
    "SemiNonduoF2",
    "SemiNonduoZ4",
    "U2F2SumF2",
];

fn f2_vectors(dim: usize) -> Vec<String> {
    (0..1usize << dim)
        .map(|m| format!("({})", (0..dim).map(|i| ((m >> i) & 1).to_string()).collect::<Vec<_>>().join(",")))
        .collect()
}

/// `M` = F2^2 as columns: `M2(F2)` acts by matrix-vector product on the
/// left, `F2` by scalars on the right. Matrix entry `(i, j)` is bit `2i + j`.
fn non_ni_triangular() -> Result<RingTable> {
    let m2 = matrix_ring(&cyclic(2)?, 2)?;
    let f2 = cyclic(2)?;
    let bit = |x: usize, i: usize| (x >> i) & 1;
    let spec = BimoduleSpec::from_fns(
        &m2,
        &f2,
        f2_vectors(2),
        0,
        |x, y| x ^ y,
        |a, m| (0..2).map(|i| ((bit(a, 2 * i) & bit(m, 0)) ^ (bit(a, 2 * i + 1) & bit(m, 1))) << i).sum(),
        |m, b| m * b,
    );
    formal_triangular(&m2, &f2, &spec)
}

/// `M` = F2^2 as rows: `F2` acts by scalars on the left, `M2(F2)` by
/// vector-matrix product on the right.
fn non_ni_triangular_op() -> Result<RingTable> {
    let m2 = matrix_ring(&cyclic(2)?, 2)?;
    let f2 = cyclic(2)?;
    let bit = |x: usize, i: usize| (x >> i) & 1;
    let spec = BimoduleSpec::from_fns(
        &f2,
        &m2,
        f2_vectors(2),
        0,
        |x, y| x ^ y,
        |a, m| a * m,
        |m, b| (0..2).map(|j| ((bit(m, 0) & bit(b, j)) ^ (bit(m, 1) & bit(b, 2 + j))) << j).sum(),
    );
    formal_triangular(&f2, &m2, &spec)
}

fn tri_f2_f2sq() -> Result<RingTable> {
    let f2 = cyclic(2)?;
    let spec = BimoduleSpec::from_fns(&f2, &f2, f2_vectors(2), 0, |x, y| x ^ y, |a, m| a * m, |m, b| m * b);
    formal_triangular(&f2, &f2, &spec)
}

/// `[[A, F2], [0, B]]` where `A` and `B` act on F2 through their residue
/// field; `residue` maps an element of each ring to 0 or 1.
fn residue_triangular(a: &RingTable, ra: fn(usize) -> usize, b: &RingTable, rb: fn(usize) -> usize) -> Result<RingTable> {
    let spec = BimoduleSpec::from_fns(a, b, f2_vectors(1), 0, |x, y| x ^ y, |x, m| ra(x) * m, |m, y| m * rb(y));
    formal_triangular(a, b, &spec)
}

fn id(x: usize) -> usize {
    x
}

fn mod2(x: usize) -> usize {
    x % 2
}

fn tri_dual_f2() -> Result<RingTable> {
    // Dual numbers index c0 + 2 c1; the residue is c0.
    residue_triangular(&dual_numbers(2)?, mod2, &cyclic(2)?, id)
}

fn tri_f2_dual() -> Result<RingTable> {
    residue_triangular(&cyclic(2)?, id, &dual_numbers(2)?, mod2)
}

fn tri_z4_f2() -> Result<RingTable> {
    residue_triangular(&cyclic(4)?, mod2, &cyclic(2)?, id)
}

fn tri_f2_z4() -> Result<RingTable> {
    residue_triangular(&cyclic(2)?, id, &cyclic(4)?, mod2)
}

/// Two idempotents `e`, `1 - e` with `x ∈ eR(1-e)`, `y ∈ (1-e)Re` and
/// `xy = yx = 0`.
fn two_cycle_f2() -> Result<RingTable> {
    // Basis 1, e, x, y.
    let z = vec![0, 0, 0, 0];
    let basis = |i: usize| {
        let mut c = z.clone();
        c[i] = 1;
        c
    };
    let mut products = vec![vec![z.clone(); 4]; 4];
    for i in 0..4 {
        products[0][i] = basis(i);
        products[i][0] = basis(i);
    }
    products[1][1] = basis(1);
    products[1][2] = basis(2);
    products[3][1] = basis(3);
    let sc = StructureConstants {
        basis_names: ["1", "e", "x", "y"].map(String::from).to_vec(),
        moduli: vec![2; 4],
        products,
        one: basis(0),
    };
    let mut r = from_structure_constants(&sc)?;
    r.set_provenance("two-cycle ring over F2");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique_and_cover_the_nonlocal_list() {
        let c = corpus();
        let names: HashSet<_> = c.iter().map(|e| e.name).collect();
        assert_eq!(names.len(), c.len());
        assert!(c.len() >= 28);
        for n in NONCOMMUTATIVE_16 {
            assert!(names.contains(n), "{n}");
        }
    }

    #[test]
    fn small_builtins_build() {
        for name in ["TriF2F2sq", "CycleF2", "TriDualF2", "TriF2Dual", "TriZ4F2", "TriF2Z4"] {
            let r = build(name).unwrap();
            assert_eq!(r.order(), 16);
            assert!(!r.is_commutative(), "{name}");
        }
        assert!(build("Nope").is_err());
    }
}

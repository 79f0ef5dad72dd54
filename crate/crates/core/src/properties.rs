//! Ring-theoretic properties decided by exhaustive scans with witnesses.

use crate::radicals::{
    annihilators_of_right_ideals, ideal_power, jacobson_radical, lower_nilradical, right_zero_sets,
};
use crate::ring::{ElementSet, RingTable};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use std::collections::HashSet;
use std::fmt;

/// Default largest order for which the PS I scan runs.
pub const PS_I_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Elements that violate the defining condition, with a short reason.
    Fails { witness: Vec<usize>, reason: String },
    Skipped(String),
}

impl Verdict {
    fn fails(witness: Vec<usize>, reason: impl Into<String>) -> Self {
        Verdict::Fails { witness, reason: reason.into() }
    }

    fn from_option(w: Option<(Vec<usize>, String)>) -> Self {
        match w {
            None => Verdict::Holds,
            Some((witness, reason)) => Verdict::Fails { witness, reason },
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    /// `None` when skipped.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails { .. } => Some(false),
            Verdict::Skipped(_) => None,
        }
    }

    pub fn describe(&self, r: &RingTable) -> String {
        match self {
            Verdict::Holds => "holds".into(),
            Verdict::Skipped(why) => format!("skipped ({why})"),
            Verdict::Fails { witness, reason } => {
                let w: Vec<&str> = witness.iter().map(|&x| r.label(x)).collect();
                format!("fails at ({}): {reason}", w.join(", "))
            }
        }
    }
}

/// Per-element data shared by the scans.
struct Tables {
    /// `Z(x) = { c : x c = 0 }`.
    zero: Vec<FixedBitSet>,
    /// `rann(aR)`.
    ann: Vec<FixedBitSet>,
}

impl Tables {
    fn new(r: &RingTable) -> Self {
        let zero = right_zero_sets(r);
        let ann = annihilators_of_right_ideals(r, &zero);
        Self { zero, ann }
    }
}

fn first_pair<T: Send>(n: usize, f: impl Fn(usize, usize) -> Option<T> + Sync) -> Option<T> {
    (0..n).into_par_iter().find_map_first(|a| (0..n).find_map(|b| f(a, b)))
}

pub fn check_commutative(r: &RingTable) -> Verdict {
    Verdict::from_option(first_pair(r.order(), |a, b| {
        (r.mul(a, b) != r.mul(b, a)).then(|| (vec![a, b], "ab != ba".into()))
    }))
}

pub fn check_reduced(r: &RingTable) -> Verdict {
    Verdict::from_option(
        (0..r.order())
            .find(|&a| a != r.zero() && r.mul(a, a) == r.zero())
            .map(|a| (vec![a], "a^2 = 0 with a != 0".into())),
    )
}

fn symmetric_with(r: &RingTable, t: &Tables) -> Verdict {
    Verdict::from_option(first_pair(r.order(), |a, b| {
        let (ab, ba) = (r.mul(a, b), r.mul(b, a));
        t.zero[ab]
            .difference(&t.zero[ba])
            .next()
            .map(|c| (vec![a, b, c], "abc = 0 but bac != 0".into()))
    }))
}

pub fn check_symmetric(r: &RingTable) -> Verdict {
    symmetric_with(r, &Tables::new(r))
}

fn reversible_with(r: &RingTable, t: &Tables) -> Verdict {
    Verdict::from_option(first_pair(r.order(), |a, b| {
        (t.zero[a].contains(b) && r.mul(b, a) != r.zero()).then(|| (vec![a, b], "ab = 0 but ba != 0".into()))
    }))
}

pub fn check_reversible(r: &RingTable) -> Verdict {
    reversible_with(r, &Tables::new(r))
}

fn semicommutative_with(r: &RingTable, t: &Tables) -> Verdict {
    let n = r.order();
    Verdict::from_option((0..n).into_par_iter().find_map_first(|a| {
        t.zero[a].difference(&t.ann[a]).next().map(|b| {
            let s = (0..n).find(|&s| r.mul3(a, s, b) != r.zero()).unwrap();
            (vec![a, b, s], "ab = 0 but asb != 0".into())
        })
    }))
}

pub fn check_semicommutative(r: &RingTable) -> Verdict {
    semicommutative_with(r, &Tables::new(r))
}

fn reflexive_with(r: &RingTable, t: &Tables) -> Verdict {
    let n = r.order();
    Verdict::from_option(first_pair(n, |a, b| {
        (t.ann[a].contains(b) && !t.ann[b].contains(a)).then(|| {
            let s = (0..n).find(|&s| r.mul3(b, s, a) != r.zero()).unwrap();
            (vec![a, b, s], "aRb = 0 but bsa != 0".into())
        })
    }))
}

pub fn check_reflexive(r: &RingTable) -> Verdict {
    reflexive_with(r, &Tables::new(r))
}

/// `Ra ⊆ aR` for every `a` (right) or `aR ⊆ Ra` (left).
fn duo_side(r: &RingTable, right: bool) -> Verdict {
    let n = r.order();
    Verdict::from_option((0..n).into_par_iter().find_map_first(|a| {
        let mut principal = FixedBitSet::with_capacity(n);
        for s in 0..n {
            principal.insert(if right { r.mul(a, s) } else { r.mul(s, a) });
        }
        (0..n).find_map(|s| {
            let other = if right { r.mul(s, a) } else { r.mul(a, s) };
            (!principal.contains(other)).then(|| {
                let why = if right { "sa is not in aR" } else { "as is not in Ra" };
                (vec![a, s], why.into())
            })
        })
    }))
}

pub fn check_right_duo(r: &RingTable) -> Verdict {
    duo_side(r, true)
}

pub fn check_left_duo(r: &RingTable) -> Verdict {
    duo_side(r, false)
}

pub fn check_duo(r: &RingTable) -> Verdict {
    match check_right_duo(r) {
        Verdict::Holds => check_left_duo(r),
        fail => fail,
    }
}

pub fn check_abelian(r: &RingTable) -> Verdict {
    let n = r.order();
    Verdict::from_option(r.idempotents().iter().find_map(|e| {
        (0..n)
            .find(|&x| r.mul(e, x) != r.mul(x, e))
            .map(|x| (vec![e, x], "idempotent e does not commute with x".into()))
    }))
}

/// The nilpotent elements form a two-sided ideal.
pub fn check_ni(r: &RingTable) -> Verdict {
    let n = r.order();
    let nil = r.nilpotents();
    for a in nil.iter() {
        for b in nil.iter() {
            if !nil.contains(r.add(a, b)) {
                return Verdict::fails(vec![a, b], "a + b is not nilpotent");
            }
        }
        for s in 0..n {
            if !nil.contains(r.mul(s, a)) || !nil.contains(r.mul(a, s)) {
                return Verdict::fails(vec![a, s], "sa or as is not nilpotent");
            }
        }
    }
    Verdict::Holds
}

/// The nilpotent elements are exactly the prime radical.
pub fn check_two_primal(r: &RingTable) -> Verdict {
    let nil = r.nilpotents();
    let lower = lower_nilradical(r);
    let outside = nil.iter().find(|&x| !lower.contains(x));
    match outside {
        None => Verdict::Holds,
        Some(x) => Verdict::fails(vec![x], "nilpotent outside the prime radical"),
    }
}

/// `R / rann(aR)` is 2-primal for every `a`; runs only up to `cap`.
pub fn check_ps_i(r: &RingTable, cap: usize) -> Verdict {
    let n = r.order();
    if n > cap {
        return Verdict::Skipped(format!("order {n} above the PS I cap {cap}"));
    }
    let t = Tables::new(r);
    let mut seen = HashSet::new();
    for a in 0..n {
        if !seen.insert(t.ann[a].clone()) {
            continue;
        }
        let ideal = ElementSet::from_bits(t.ann[a].clone());
        let q = match r.quotient(&ideal) {
            Ok(q) => q,
            Err(e) => return Verdict::fails(vec![a], format!("annihilator is not an ideal: {e}")),
        };
        if let Verdict::Fails { .. } = check_two_primal(&q) {
            return Verdict::fails(vec![a], "R/rann(aR) is not 2-primal");
        }
    }
    Verdict::Holds
}

/// Non-units form a two-sided ideal.
pub fn check_local(r: &RingTable) -> Verdict {
    let nonunits = r.units().complement();
    match r.ideal_violation(&nonunits) {
        None => Verdict::Holds,
        Some(why) => Verdict::fails(vec![], format!("non-units are not an ideal: {why}")),
    }
}

macro_rules! bool_wrappers {
    ($($name:ident => $check:ident),* $(,)?) => {
        $( pub fn $name(r: &RingTable) -> bool { $check(r).holds() } )*
    };
}

bool_wrappers!(
    is_commutative => check_commutative,
    is_reduced => check_reduced,
    is_symmetric => check_symmetric,
    is_reversible => check_reversible,
    is_semicommutative => check_semicommutative,
    is_reflexive => check_reflexive,
    is_right_duo => check_right_duo,
    is_left_duo => check_left_duo,
    is_duo => check_duo,
    is_abelian => check_abelian,
    is_ni => check_ni,
    is_two_primal => check_two_primal,
    is_local => check_local,
);

/// `None` when the ring is above the default cap.
pub fn is_ps_i(r: &RingTable) -> Option<bool> {
    check_ps_i(r, PS_I_CAP).as_bool()
}

/// Local, residue ring of prime order and `J^3 = 0`: the hypotheses under
/// which the ring must be semicommutative. `None` when they do not hold,
/// otherwise whether the ring is semicommutative.
pub fn cube_zero_local_check(r: &RingTable) -> Option<bool> {
    if !is_local(r) {
        return None;
    }
    let j = jacobson_radical(r);
    let residue = r.order() / j.len();
    if !crate::ring::is_prime(residue) || ideal_power(r, &j, 3).len() != 1 {
        return None;
    }
    Some(is_semicommutative(r))
}

/// Names of the boolean properties, in rendering order.
pub const PROPERTY_KEYS: [&str; 14] = [
    "commutative",
    "reduced",
    "symmetric",
    "reversible",
    "semicommutative",
    "reflexive",
    "right_duo",
    "left_duo",
    "duo",
    "abelian",
    "ni",
    "two_primal",
    "ps_i",
    "local",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyProfile {
    pub order: usize,
    pub commutative: bool,
    pub reduced: bool,
    pub symmetric: bool,
    pub reversible: bool,
    pub semicommutative: bool,
    pub reflexive: bool,
    pub right_duo: bool,
    pub left_duo: bool,
    pub duo: bool,
    pub abelian: bool,
    pub ni: bool,
    pub two_primal: bool,
    /// `None` when the scan was skipped.
    pub ps_i: Option<bool>,
    pub local: bool,
    pub j_size: usize,
    pub n_size: usize,
    /// One entry per failing property: `(key, description)`.
    pub witnesses: Vec<(String, String)>,
}

impl PropertyProfile {
    /// Value of a property by key; `None` for unknown keys or a skipped PS I.
    pub fn get(&self, key: &str) -> Option<bool> {
        Some(match key {
            "commutative" => self.commutative,
            "reduced" => self.reduced,
            "symmetric" => self.symmetric,
            "reversible" => self.reversible,
            "semicommutative" => self.semicommutative,
            "reflexive" => self.reflexive,
            "right_duo" => self.right_duo,
            "left_duo" => self.left_duo,
            "duo" => self.duo,
            "abelian" => self.abelian,
            "ni" => self.ni,
            "two_primal" => self.two_primal,
            "ps_i" => return self.ps_i,
            "local" => self.local,
            _ => return None,
        })
    }

    pub fn witness(&self, key: &str) -> Option<&str> {
        self.witnesses.iter().find(|(k, _)| k == key).map(|(_, w)| w.as_str())
    }

    /// Implications between the properties that hold in every finite ring.
    /// Returns a description of each one that fails.
    pub fn implication_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        check(self.reversible == (self.semicommutative && self.reflexive), "reversible <=> semicommutative and reflexive");
        check(!self.semicommutative || self.abelian, "semicommutative => abelian");
        check(!self.reduced || self.commutative, "reduced => commutative");
        check(self.right_duo == self.left_duo, "right duo <=> left duo");
        check(self.ni == self.two_primal, "NI <=> 2-primal");
        if let Some(ps) = self.ps_i {
            check(ps == self.ni, "PS I <=> NI");
        }
        check(!self.duo || self.semicommutative, "duo => semicommutative");
        check(!self.symmetric || self.reversible, "symmetric => reversible");
        check(!self.commutative || (self.symmetric && self.duo), "commutative => symmetric and duo");
        check(!self.reduced || self.symmetric, "reduced => symmetric");
        check(!self.semicommutative || self.ni, "semicommutative => NI");
        check(!self.local || self.ni, "local => NI");
        out
    }

    /// `key=value` lines in fixed order.
    pub fn key_values(&self) -> String {
        let mut s = format!("order={}\n", self.order);
        for key in PROPERTY_KEYS {
            let v = match self.get(key) {
                Some(b) => b.to_string(),
                None => "skipped".into(),
            };
            s.push_str(&format!("{key}={v}\n"));
        }
        s.push_str(&format!("jacobson_size={}\nnilpotent_size={}\n", self.j_size, self.n_size));
        s
    }
}

impl fmt::Display for PropertyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order            {}", self.order)?;
        for key in PROPERTY_KEYS {
            let v = match self.get(key) {
                Some(true) => "yes",
                Some(false) => "no",
                None => "skipped",
            };
            writeln!(f, "{key:<16} {v}")?;
        }
        writeln!(f, "|J|              {}", self.j_size)?;
        writeln!(f, "|N|              {}", self.n_size)?;
        for (k, w) in &self.witnesses {
            writeln!(f, "  {k}: {w}")?;
        }
        Ok(())
    }
}

pub fn profile(r: &RingTable) -> PropertyProfile {
    profile_with(r, PS_I_CAP)
}

pub fn profile_with(r: &RingTable, ps_i_cap: usize) -> PropertyProfile {
    let t = Tables::new(r);
    let mut witnesses = Vec::new();
    let mut record = |key: &str, v: Verdict| -> Verdict {
        if let Verdict::Fails { .. } = v {
            witnesses.push((key.to_string(), v.describe(r)));
        }
        v
    };
    let commutative = record("commutative", check_commutative(r)).holds();
    let reduced = record("reduced", check_reduced(r)).holds();
    let symmetric = record("symmetric", symmetric_with(r, &t)).holds();
    let reversible = record("reversible", reversible_with(r, &t)).holds();
    let semicommutative = record("semicommutative", semicommutative_with(r, &t)).holds();
    let reflexive = record("reflexive", reflexive_with(r, &t)).holds();
    let right_duo = record("right_duo", check_right_duo(r)).holds();
    let left_duo = record("left_duo", check_left_duo(r)).holds();
    let abelian = record("abelian", check_abelian(r)).holds();
    let ni = record("ni", check_ni(r)).holds();
    let two_primal = record("two_primal", check_two_primal(r)).holds();
    let ps_i = record("ps_i", check_ps_i(r, ps_i_cap)).as_bool();
    let local = record("local", check_local(r)).holds();
    PropertyProfile {
        order: r.order(),
        commutative,
        reduced,
        symmetric,
        reversible,
        semicommutative,
        reflexive,
        right_duo,
        left_duo,
        duo: right_duo && left_duo,
        abelian,
        ni,
        two_primal,
        ps_i,
        local,
        j_size: jacobson_radical(r).len(),
        n_size: r.nilpotents().len(),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, galois, matrix_ring, skew_quotient_f4, upper_triangular};

    #[test]
    fn field_has_everything() {
        let p = profile(&cyclic(2).unwrap());
        for key in PROPERTY_KEYS {
            assert_eq!(p.get(key), Some(true), "{key}");
        }
        let f4 = profile(&galois(2, 2).unwrap().ring);
        assert!(f4.reduced && f4.commutative);
    }

    #[test]
    fn upper_triangular_f2() {
        let u = upper_triangular(&cyclic(2).unwrap(), 2).unwrap();
        let p = profile(&u);
        assert!(p.ni && !p.abelian && !p.reflexive);
        assert!(p.implication_violations().is_empty());
        assert!(p.witness("reflexive").is_some());
    }

    #[test]
    fn matrix_ring_f2() {
        let m = matrix_ring(&cyclic(2).unwrap(), 2).unwrap();
        let p = profile(&m);
        assert!(p.reflexive && !p.ni && !p.two_primal);
        assert_eq!(p.ps_i, Some(false));
        assert!(!p.local);
    }

    #[test]
    fn skew_ring() {
        let p = profile(&skew_quotient_f4().unwrap());
        assert!(p.symmetric && p.duo && !p.commutative && p.local);
    }

    #[test]
    fn ps_i_cap_reports_skip() {
        let m = matrix_ring(&cyclic(2).unwrap(), 2).unwrap();
        assert!(matches!(check_ps_i(&m, 8), Verdict::Skipped(_)));
    }

    #[test]
    fn duo_sides_swap_under_opposite() {
        let u = upper_triangular(&cyclic(2).unwrap(), 2).unwrap();
        assert_eq!(is_right_duo(&u), is_left_duo(&u.opposite()));
    }

    #[test]
    fn cube_zero_criterion() {
        let d = crate::presentation::build_ring_from_text("F2<x>/(x^3)").unwrap().ring;
        assert_eq!(cube_zero_local_check(&d), Some(true));
        let f4 = galois(2, 2).unwrap().ring;
        assert_eq!(cube_zero_local_check(&f4), None);
    }
}

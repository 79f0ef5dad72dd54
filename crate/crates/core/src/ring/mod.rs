//! Finite unital rings stored as dense operation tables.
//!
//! Elements are the indices `0..n`. Both tables are flat row-major arrays, so
//! `add[a * n + b]` is `a + b`. Every table built through [`RingTable::new`]
//! has passed the exhaustive axiom scan in [`verify_axioms`].

mod axioms;
mod elements;
pub mod iso;
pub mod ringtab;

pub use axioms::{verify_axioms, verify_tables, AxiomReport, Law, Violation};
pub use elements::ElementSet;

use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use std::fmt;

/// Largest order accepted for table-driven rings.
pub const MAX_ORDER: usize = 1024;

#[derive(Clone, PartialEq, Eq)]
pub struct RingTable {
    order: usize,
    labels: Vec<String>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    provenance: String,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .field("provenance", &self.provenance)
            .finish_non_exhaustive()
    }
}

impl RingTable {
    /// Builds a ring from raw tables and rejects it unless every ring axiom holds.
    pub fn new(
        labels: Vec<String>,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let ring = Self::unchecked(labels, add, mul, zero, one, provenance)?;
        let report = verify_axioms(&ring);
        if !report.passed {
            return Err(Error::Axioms(report.summary()));
        }
        Ok(ring)
    }

    /// Builds a ring after structural validation only. The result may violate
    /// ring axioms; call [`verify_axioms`] before relying on it.
    pub fn unchecked(
        labels: Vec<String>,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Structural("order must be positive".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::SizeCap {
                what: "ring table".into(),
                size: n as u128,
                cap: MAX_ORDER,
            });
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::Structural(format!(
                "expected {n}x{n} tables, got {} and {} entries",
                add.len(),
                mul.len()
            )));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&v| v as usize >= n) {
            return Err(Error::Structural(format!("table entry {bad} out of range 0..{n}")));
        }
        if zero >= n || one >= n {
            return Err(Error::Structural("zero/one index out of range".into()));
        }
        if let Some(l) = labels.iter().find(|l| l.is_empty() || l.chars().any(char::is_whitespace)) {
            return Err(Error::Structural(format!("invalid label {l:?}")));
        }
        let mut neg = vec![0u16; n];
        let mut found = vec![false; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] as usize == zero {
                    neg[a] = b as u16;
                    found[a] = true;
                    break;
                }
            }
        }
        // A missing inverse is reported by verify_axioms; keep neg total.
        for a in 0..n {
            if !found[a] {
                neg[a] = a as u16;
            }
        }
        Ok(Self {
            order: n,
            labels,
            add,
            mul,
            neg,
            zero,
            one,
            provenance: provenance.into(),
        })
    }

    /// Builds a ring from closures over `0..n`.
    pub fn from_fns(
        labels: Vec<String>,
        zero: usize,
        one: usize,
        provenance: impl Into<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        if n > MAX_ORDER {
            return Err(Error::SizeCap {
                what: "ring table".into(),
                size: n as u128,
                cap: MAX_ORDER,
            });
        }
        let mut at = Vec::with_capacity(n * n);
        let mut mt = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                at.push(add(a, b) as u16);
                mt.push(mul(a, b) as u16);
            }
        }
        Self::new(labels, at, mt, zero, one, provenance)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }
    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }
    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }
    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }
    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn provenance(&self) -> &str {
        &self.provenance
    }
    pub fn set_provenance(&mut self, p: impl Into<String>) {
        self.provenance = p.into();
    }
    pub fn add_table(&self) -> &[u16] {
        &self.add
    }
    pub fn mul_table(&self) -> &[u16] {
        &self.mul
    }
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Same tables, same zero and one. Labels and provenance are ignored.
    pub fn same_tables(&self, other: &RingTable) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    /// `k * a` for a nonnegative integer `k`.
    pub fn scalar(&self, k: u64, a: usize) -> usize {
        let mut acc = self.zero;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest `k >= 1` with `a^k = 0`, if any.
    pub fn nilpotency_index(&self, a: usize) -> Option<usize> {
        let mut x = a;
        for k in 1..=self.order {
            if x == self.zero {
                return Some(k);
            }
            x = self.mul(x, a);
        }
        None
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order).all(|x| self.mul(a, x) == self.mul(x, a))
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::from_members(self.order, [self.zero])
    }

    /// Elements with a two-sided multiplicative inverse.
    pub fn units(&self) -> ElementSet {
        let n = self.order;
        let mut set = ElementSet::empty(n);
        for a in 0..n {
            if (0..n).any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one) {
                set.insert(a);
            }
        }
        set
    }

    pub fn idempotents(&self) -> ElementSet {
        ElementSet::from_members(self.order, (0..self.order).filter(|&a| self.is_idempotent(a)))
    }

    pub fn nilpotents(&self) -> ElementSet {
        ElementSet::from_members(
            self.order,
            (0..self.order).filter(|&a| self.nilpotency_index(a).is_some()),
        )
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_members(self.order, (0..self.order).filter(|&a| self.is_central(a)))
    }

    /// The opposite ring: same addition, `a * b` becomes `b * a`.
    pub fn opposite(&self) -> RingTable {
        let n = self.order;
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        RingTable {
            order: n,
            labels: self.labels.clone(),
            add: self.add.clone(),
            mul,
            neg: self.neg.clone(),
            zero: self.zero,
            one: self.one,
            provenance: format!("op({})", self.provenance),
        }
    }

    /// Componentwise direct sum. The element `(a, b)` has index `a * |B| + b`.
    pub fn direct_sum(a: &RingTable, b: &RingTable) -> Result<RingTable> {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        if n > MAX_ORDER {
            return Err(Error::SizeCap {
                what: "direct sum".into(),
                size: n as u128,
                cap: MAX_ORDER,
            });
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
            .collect();
        let pair = |x: usize| (x / nb, x % nb);
        RingTable::from_fns(
            labels,
            a.zero * nb + b.zero,
            a.one * nb + b.one,
            format!("sum({},{})", a.provenance, b.provenance),
            |x, y| {
                let ((xa, xb), (ya, yb)) = (pair(x), pair(y));
                a.add(xa, ya) * nb + b.add(xb, yb)
            },
            |x, y| {
                let ((xa, xb), (ya, yb)) = (pair(x), pair(y));
                a.mul(xa, ya) * nb + b.mul(xb, yb)
            },
        )
    }

    /// Additive subgroup generated by `gens`.
    pub fn additive_span(&self, gens: impl IntoIterator<Item = usize>) -> ElementSet {
        let n = self.order;
        let mut set = ElementSet::from_members(n, [self.zero]);
        let mut members = vec![self.zero];
        for g in gens {
            if set.contains(g) {
                continue;
            }
            // H + <g> = union of cosets H + k g.
            let base = members.clone();
            let mut kg = g;
            while !set.contains(kg) {
                for &h in &base {
                    let x = self.add(h, kg);
                    set.insert(x);
                    members.push(x);
                }
                kg = self.add(kg, g);
            }
        }
        set
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_generated(&self, s: &ElementSet) -> ElementSet {
        let n = self.order;
        let mut products = FixedBitSet::with_capacity(n);
        for x in s.iter() {
            for r in 0..n {
                let rx = self.mul(r, x);
                for t in 0..n {
                    products.insert(self.mul(rx, t));
                }
            }
        }
        self.additive_span(products.ones())
    }

    /// Smallest right ideal containing `s`: additive span of `s R`.
    pub fn right_ideal_generated(&self, s: &ElementSet) -> ElementSet {
        let n = self.order;
        let mut products = FixedBitSet::with_capacity(n);
        for x in s.iter() {
            for r in 0..n {
                products.insert(self.mul(x, r));
            }
        }
        self.additive_span(products.ones())
    }

    /// `{ t : (a r) t = 0 for all r }`, the right annihilator of `aR`.
    pub fn right_annihilator(&self, a: usize) -> ElementSet {
        let n = self.order;
        let mut set = FixedBitSet::with_capacity(n);
        set.insert_range(..);
        let mut seen = FixedBitSet::with_capacity(n);
        for r in 0..n {
            let ar = self.mul(a, r);
            if seen.put(ar) {
                continue;
            }
            for t in 0..n {
                if self.mul(ar, t) != self.zero {
                    set.set(t, false);
                }
            }
        }
        ElementSet::from_bits(set)
    }

    pub fn is_additive_subgroup(&self, s: &ElementSet) -> bool {
        if !s.contains(self.zero) {
            return false;
        }
        s.iter().all(|a| s.iter().all(|b| s.contains(self.sub(a, b))))
    }

    /// Returns a witness `(element, ring element)` when `s` fails to be a
    /// two-sided ideal.
    pub fn ideal_violation(&self, s: &ElementSet) -> Option<String> {
        if s.universe() != self.order {
            return Some("element set belongs to a ring of different order".into());
        }
        if !self.is_additive_subgroup(s) {
            return Some("not an additive subgroup".into());
        }
        for a in s.iter() {
            for r in 0..self.order {
                if !s.contains(self.mul(r, a)) {
                    return Some(format!("{} * {} leaves the set", self.label(r), self.label(a)));
                }
                if !s.contains(self.mul(a, r)) {
                    return Some(format!("{} * {} leaves the set", self.label(a), self.label(r)));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &ElementSet) -> bool {
        self.ideal_violation(s).is_none()
    }

    /// Every element of `s` is nilpotent.
    pub fn is_nil(&self, s: &ElementSet) -> bool {
        s.iter().all(|a| self.nilpotency_index(a).is_some())
    }

    /// The coset ring `R / I`. Cosets are numbered by their smallest member.
    pub fn quotient(&self, ideal: &ElementSet) -> Result<RingTable> {
        if let Some(why) = self.ideal_violation(ideal) {
            return Err(Error::NotAnIdeal(why));
        }
        let n = self.order;
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for i in ideal.iter() {
                coset[self.add(x, i)] = c;
            }
        }
        let labels = if ideal.len() == 1 {
            self.labels.clone()
        } else {
            reps.iter().map(|&r| format!("[{}]", self.label(r))).collect()
        };
        RingTable::from_fns(
            labels,
            coset[self.zero],
            coset[self.one],
            format!("quotient({})", self.provenance),
            |a, b| coset[self.add(reps[a], reps[b])],
            |a, b| coset[self.mul(reps[a], reps[b])],
        )
    }

    /// Products `{ a b : a in A, b in B }` and their additive span.
    pub fn product_span(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut prods = FixedBitSet::with_capacity(self.order);
        for x in a.iter() {
            for y in b.iter() {
                prods.insert(self.mul(x, y));
            }
        }
        self.additive_span(prods.ones())
    }

    /// Invariant factors `d_1 | d_2 | ... | d_k` of the additive group.
    pub fn additive_invariants(&self) -> Vec<usize> {
        let orders: Vec<usize> = (0..self.order).map(|a| self.additive_order(a)).collect();
        invariant_factors(self.order, &orders)
    }

    /// Subring generated by `gens` (always contains 1).
    pub fn subring_generated(&self, gens: &[usize]) -> ElementSet {
        let n = self.order;
        let mut seen = FixedBitSet::with_capacity(n);
        let mut queue = vec![self.one];
        seen.insert(self.one);
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen.put(y) {
                    queue.push(y);
                }
            }
        }
        self.additive_span(seen.ones())
    }
}

/// Invariant factors of a finite abelian group of order `n`, recovered from
/// the multiset of element orders.
pub fn invariant_factors(n: usize, element_orders: &[usize]) -> Vec<usize> {
    let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_factors(n) {
        // |G[p^k]| for k = 0, 1, ... until the p-part is exhausted.
        let mut sizes = vec![1usize];
        let mut pk = 1usize;
        loop {
            pk *= p;
            let count = element_orders.iter().filter(|&&o| pk % o == 0).count();
            if count == *sizes.last().unwrap() {
                break;
            }
            sizes.push(count);
        }
        // Number of cyclic factors of order >= p^k is log_p(|G[p^k]| / |G[p^(k-1)]|).
        let mut at_least = Vec::new();
        for k in 1..sizes.len() {
            let mut ratio = sizes[k] / sizes[k - 1];
            let mut e = 0;
            while ratio > 1 {
                ratio /= p;
                e += 1;
            }
            at_least.push(e);
        }
        let mut exps = Vec::new();
        for (k, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(cnt - next) {
                exps.push((k + 1) as u32);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primary.push((p, exps));
    }
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; len];
    for (p, exps) in &primary {
        for (i, &e) in exps.iter().enumerate() {
            factors[len - 1 - i] *= p.pow(e);
        }
    }
    factors
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, galois, matrix_ring, upper_triangular};

    #[test]
    fn z4_units_and_idempotents() {
        let z4 = cyclic(4).unwrap();
        assert_eq!(z4.units().members(), vec![1, 3]);
        assert_eq!(z4.idempotents().members(), vec![0, 1]);
        assert_eq!(z4.characteristic(), 4);
    }

    #[test]
    fn field_units() {
        let f4 = galois(2, 2).unwrap().ring;
        assert_eq!(f4.units().len(), 3);
    }

    #[test]
    fn direct_sum_f2_f2() {
        let f2 = cyclic(2).unwrap();
        let s = RingTable::direct_sum(&f2, &f2).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.idempotents().len(), 4);
    }

    #[test]
    fn opposite_is_involution() {
        let u2 = upper_triangular(&cyclic(2).unwrap(), 2).unwrap();
        assert!(u2.opposite().opposite().same_tables(&u2));
        let z4 = cyclic(4).unwrap();
        assert!(z4.opposite().same_tables(&z4));
    }

    #[test]
    fn ideal_generation() {
        let z4 = cyclic(4).unwrap();
        assert_eq!(z4.ideal_generated(&ElementSet::from_members(4, [2])).members(), vec![0, 2]);
        assert_eq!(z4.ideal_generated(&z4.zero_set()).members(), vec![0]);
        let m2 = matrix_ring(&cyclic(2).unwrap(), 2).unwrap();
        let e12 = m2.find_label("[0,1;0,0]").unwrap();
        assert_eq!(m2.ideal_generated(&ElementSet::from_members(16, [e12])).len(), 16);
    }

    #[test]
    fn annihilators() {
        let z4 = cyclic(4).unwrap();
        assert_eq!(z4.right_annihilator(2).members(), vec![0, 2]);
        assert_eq!(z4.right_annihilator(0).len(), 4);
        // Brute-force oracle on U_2(F_2).
        let u2 = upper_triangular(&cyclic(2).unwrap(), 2).unwrap();
        let e12 = u2.find_label("[0,1;0,0]").unwrap();
        let ann = u2.right_annihilator(e12);
        let oracle: Vec<usize> = (0..8)
            .filter(|&x| (0..8).all(|r| u2.mul3(e12, r, x) == u2.zero()))
            .collect();
        assert_eq!(ann.members(), oracle);
        assert!(u2.is_ideal(&ann));
    }

    #[test]
    fn quotients() {
        let z4 = cyclic(4).unwrap();
        let q = z4.quotient(&ElementSet::from_members(4, [0, 2])).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.same_tables(&cyclic(2).unwrap()));
        let same = z4.quotient(&z4.zero_set()).unwrap();
        assert!(same.same_tables(&z4));
        assert!(matches!(
            z4.quotient(&ElementSet::from_members(4, [0, 1])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn invariant_factor_recovery() {
        let z6 = cyclic(6).unwrap();
        assert_eq!(z6.additive_invariants(), vec![6]);
        let f2 = cyclic(2).unwrap();
        let z4 = cyclic(4).unwrap();
        let s = RingTable::direct_sum(&z4, &f2).unwrap();
        assert_eq!(s.additive_invariants(), vec![2, 4]);
        let m = matrix_ring(&f2, 2).unwrap();
        assert_eq!(m.additive_invariants(), vec![2, 2, 2, 2]);
    }
}

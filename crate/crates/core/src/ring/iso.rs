//! Isomorphism testing: invariant fingerprints first, then backtracking over
//! images of a small ring-generating set.

use super::RingTable;
use fixedbitset::FixedBitSet;
use std::collections::HashMap;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Per-element data preserved by every ring isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementInvariant {
    pub additive_order: u32,
    pub unit: bool,
    pub idempotent: bool,
    pub central: bool,
    /// 0 when the element is not nilpotent.
    pub nilpotency: u32,
    pub square_is_zero: bool,
    pub right_principal: u32,
    pub left_principal: u32,
}

/// Isomorphism-invariant summary used for fast rejection and sorting.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub characteristic: usize,
    pub additive_type: Vec<usize>,
    pub units: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    pub center: usize,
    pub commutative: bool,
    pub element_profile: Vec<(ElementInvariant, usize)>,
}

impl Fingerprint {
    /// First differing field, for reporting.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        macro_rules! cmp {
            ($($f:ident),*) => {
                $( if self.$f != other.$f { return Some(stringify!($f)); } )*
            };
        }
        cmp!(order, characteristic, additive_type, units, idempotents, nilpotents, center, commutative);
        if self.element_profile != other.element_profile {
            return Some(if self.one_sided_swap() == other.element_profile {
                "principal one-sided ideal profile (right vs left)"
            } else {
                "element_profile"
            });
        }
        None
    }

    /// The element profile with right and left principal ideal sizes swapped,
    /// i.e. the profile of the opposite ring.
    pub fn one_sided_swap(&self) -> Vec<(ElementInvariant, usize)> {
        let mut v: Vec<_> = self
            .element_profile
            .iter()
            .map(|&(mut inv, c)| {
                std::mem::swap(&mut inv.right_principal, &mut inv.left_principal);
                (inv, c)
            })
            .collect();
        v.sort();
        v
    }
}

pub fn element_invariants(r: &RingTable) -> Vec<ElementInvariant> {
    let n = r.order();
    let units = r.units();
    let mut buf = FixedBitSet::with_capacity(n);
    (0..n)
        .map(|a| {
            buf.clear();
            for x in 0..n {
                buf.insert(r.mul(a, x));
            }
            let right = buf.count_ones(..) as u32;
            buf.clear();
            for x in 0..n {
                buf.insert(r.mul(x, a));
            }
            let left = buf.count_ones(..) as u32;
            ElementInvariant {
                additive_order: r.additive_order(a) as u32,
                unit: units.contains(a),
                idempotent: r.is_idempotent(a),
                central: r.is_central(a),
                nilpotency: r.nilpotency_index(a).unwrap_or(0) as u32,
                square_is_zero: r.mul(a, a) == r.zero(),
                right_principal: right,
                left_principal: left,
            }
        })
        .collect()
}

pub fn fingerprint(r: &RingTable) -> Fingerprint {
    fingerprint_with(r, &element_invariants(r))
}

pub fn fingerprint_with(r: &RingTable, inv: &[ElementInvariant]) -> Fingerprint {
    let mut hist: HashMap<ElementInvariant, usize> = HashMap::new();
    for &i in inv {
        *hist.entry(i).or_default() += 1;
    }
    let mut element_profile: Vec<_> = hist.into_iter().collect();
    element_profile.sort();
    Fingerprint {
        order: r.order(),
        characteristic: r.characteristic(),
        additive_type: r.additive_invariants(),
        units: inv.iter().filter(|i| i.unit).count(),
        idempotents: inv.iter().filter(|i| i.idempotent).count(),
        nilpotents: inv.iter().filter(|i| i.nilpotency > 0).count(),
        center: inv.iter().filter(|i| i.central).count(),
        commutative: r.is_commutative(),
        element_profile,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[a]` is the image in the second ring of element `a` of the first.
    Isomorphic(Vec<usize>),
    NotIsomorphic(String),
    Inconclusive,
}

impl IsoOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
    pub fn is_no(&self) -> bool {
        matches!(self, IsoOutcome::NotIsomorphic(_))
    }
}

pub fn is_isomorphic(a: &RingTable, b: &RingTable, budget: u64) -> IsoOutcome {
    if a.order() != b.order() {
        return IsoOutcome::NotIsomorphic("order".into());
    }
    let ia = element_invariants(a);
    let ib = element_invariants(b);
    let fa = fingerprint_with(a, &ia);
    let fb = fingerprint_with(b, &ib);
    if let Some(field) = fa.first_difference(&fb) {
        return IsoOutcome::NotIsomorphic(format!("fingerprint differs in {field}"));
    }
    isomorphism_search(a, b, &ia, &ib, budget)
}

/// Backtracking search once fingerprints agree.
pub fn isomorphism_search(
    a: &RingTable,
    b: &RingTable,
    ia: &[ElementInvariant],
    ib: &[ElementInvariant],
    budget: u64,
) -> IsoOutcome {
    let n = a.order();
    let mut classes: HashMap<ElementInvariant, Vec<usize>> = HashMap::new();
    for (y, inv) in ib.iter().enumerate() {
        classes.entry(*inv).or_default().push(y);
    }
    let candidates = |x: usize| classes.get(&ia[x]).map(Vec::as_slice).unwrap_or(&[]);

    // Greedy generating set, preferring elements with few candidate images.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates(x).len(), x));
    let mut gens = Vec::new();
    let mut sub = a.subring_generated(&gens);
    for &x in &order {
        if sub.len() == n {
            break;
        }
        if !sub.contains(x) {
            gens.push(x);
            sub = a.subring_generated(&gens);
        }
    }

    let mut search = Search { a, b, gens: &gens, images: Vec::new(), nodes: 0, budget };
    match search.descend(&candidates) {
        Some(map) => IsoOutcome::Isomorphic(map),
        None if search.nodes > budget => IsoOutcome::Inconclusive,
        None => IsoOutcome::NotIsomorphic("no generator assignment extends to an isomorphism".into()),
    }
}

struct Search<'a> {
    a: &'a RingTable,
    b: &'a RingTable,
    gens: &'a [usize],
    images: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn descend<'c>(&mut self, candidates: &dyn Fn(usize) -> &'c [usize]) -> Option<Vec<usize>> {
        let k = self.images.len();
        if k == self.gens.len() {
            let map = extend_map(self.a, self.b, self.gens, &self.images)?;
            return map.into_iter().collect::<Option<Vec<_>>>();
        }
        for &y in candidates(self.gens[k]) {
            if self.images.contains(&y) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.images.push(y);
            let consistent = k + 1 == self.gens.len()
                || extend_map(self.a, self.b, &self.gens[..=k], &self.images).is_some();
            if consistent {
                if let Some(m) = self.descend(candidates) {
                    return Some(m);
                }
            }
            self.images.pop();
            if self.nodes > self.budget {
                return None;
            }
        }
        None
    }
}

/// Extends `gens[i] -> images[i]` (with `1 -> 1`) to the subring generated by
/// `gens`, checking that the extension is a well-defined injective ring map.
fn extend_map(a: &RingTable, b: &RingTable, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let n = a.order();
    let mut f: Vec<Option<usize>> = vec![None; n];
    let mut used = FixedBitSet::with_capacity(n);
    let mut assign = |f: &mut Vec<Option<usize>>, x: usize, y: usize| -> Option<bool> {
        match f[x] {
            Some(prev) => (prev == y).then_some(false),
            None => {
                if used.put(y) {
                    return None;
                }
                f[x] = Some(y);
                Some(true)
            }
        }
    };
    assign(&mut f, a.one(), b.one())?;
    // Monomials: closure of 1 under right multiplication by generators.
    let mut monomials = vec![a.one()];
    let mut i = 0;
    while i < monomials.len() {
        let x = monomials[i];
        let fx = f[x].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            if assign(&mut f, y, b.mul(fx, t))? {
                monomials.push(y);
            }
        }
        i += 1;
    }
    // Additive span of the monomials.
    assign(&mut f, a.zero(), b.zero())?;
    let mut span = vec![a.zero()];
    span.extend(monomials.iter().copied().filter(|&m| m != a.zero()));
    let mut i = 0;
    while i < span.len() {
        let v = span[i];
        let fv = f[v].unwrap();
        for &m in &monomials {
            let w = a.add(v, m);
            let fm = f[m].unwrap();
            if assign(&mut f, w, b.add(fv, fm))? {
                span.push(w);
            }
        }
        i += 1;
    }
    Some(f)
}

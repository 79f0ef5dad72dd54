//! Radicals of a finite ring, each computed by its own definition.

use crate::ring::{ElementSet, RingTable};
use fixedbitset::FixedBitSet;
use rayon::prelude::*;

/// `J(R) = { x : 1 - r x is a unit for every r }`.
pub fn jacobson_radical(r: &RingTable) -> ElementSet {
    let n = r.order();
    let units = r.units();
    let members: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&x| (0..n).all(|t| units.contains(r.sub(r.one(), r.mul(t, x)))))
        .collect();
    ElementSet::from_members(n, members)
}

/// `N(R)`, the nilpotent elements.
pub fn nilpotent_set(r: &RingTable) -> ElementSet {
    r.nilpotents()
}

/// The sum of all nil ideals: the ideals generated by single nilpotents that
/// are themselves nil, added together.
pub fn upper_nilradical(r: &RingTable) -> ElementSet {
    let n = r.order();
    let nil = r.nilpotents();
    let mut sum = ElementSet::from_members(n, [r.zero()]);
    for x in nil.iter() {
        if sum.contains(x) {
            continue;
        }
        let ideal = r.ideal_generated(&ElementSet::from_members(n, [x]));
        if ideal.is_subset(&nil) {
            sum = r.additive_span(sum.iter().chain(ideal.iter()));
        }
    }
    sum
}

/// The prime radical via the Baer chain: `I_0 = 0` and `I_{t+1}` is the ideal
/// generated by `{ x : x R x ⊆ I_t }`, iterated to its fixpoint.
pub fn lower_nilradical(r: &RingTable) -> ElementSet {
    let n = r.order();
    let mut current = ElementSet::from_members(n, [r.zero()]);
    for _ in 0..n {
        let seeds: Vec<usize> = (0..n)
            .into_par_iter()
            .filter(|&x| (0..n).all(|t| current.contains(r.mul3(x, t, x))))
            .collect();
        let next = r.ideal_generated(&ElementSet::from_members(n, seeds));
        if next == current {
            break;
        }
        current = next;
    }
    current
}

/// Products `a_1 a_2 ... a_k` spanned, i.e. the ideal power `I^k` for an ideal `I`.
pub fn ideal_power(r: &RingTable, ideal: &ElementSet, k: usize) -> ElementSet {
    let mut acc = ideal.clone();
    for _ in 1..k {
        acc = r.product_span(&acc, ideal);
    }
    acc
}

/// Right zero sets `Z(x) = { c : x c = 0 }`, indexed by `x`.
pub(crate) fn right_zero_sets(r: &RingTable) -> Vec<FixedBitSet> {
    let n = r.order();
    (0..n)
        .into_par_iter()
        .map(|x| {
            let mut b = FixedBitSet::with_capacity(n);
            for c in 0..n {
                if r.mul(x, c) == r.zero() {
                    b.insert(c);
                }
            }
            b
        })
        .collect()
}

/// `rann(aR) = ∩_r Z(a r)`, indexed by `a`.
pub(crate) fn annihilators_of_right_ideals(r: &RingTable, zero_sets: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = r.order();
    (0..n)
        .into_par_iter()
        .map(|a| {
            let mut acc = FixedBitSet::with_capacity(n);
            acc.insert_range(..);
            let mut seen = FixedBitSet::with_capacity(n);
            for t in 0..n {
                let at = r.mul(a, t);
                if !seen.put(at) {
                    acc.intersect_with(&zero_sets[at]);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, galois, matrix_ring, upper_triangular};

    #[test]
    fn z4() {
        let z4 = cyclic(4).unwrap();
        for f in [jacobson_radical, upper_nilradical, lower_nilradical, nilpotent_set] {
            assert_eq!(f(&z4).members(), vec![0, 2]);
        }
    }

    #[test]
    fn semisimple_rings() {
        let m = matrix_ring(&cyclic(2).unwrap(), 2).unwrap();
        assert_eq!(jacobson_radical(&m).len(), 1);
        assert_eq!(upper_nilradical(&m).len(), 1);
        assert_eq!(lower_nilradical(&m).len(), 1);
        // Zero, E12, E21 and the all-ones matrix.
        assert_eq!(nilpotent_set(&m).len(), 4);
        let f9 = galois(3, 2).unwrap().ring;
        assert_eq!(lower_nilradical(&f9).len(), 1);
    }

    #[test]
    fn upper_triangular_radical() {
        let f2 = cyclic(2).unwrap();
        let u = upper_triangular(&f2, 2).unwrap();
        let strict = ElementSet::from_members(8, (0..8).filter(|&x| u.label(x).ends_with(";0,0]") && u.label(x).starts_with("[0,")));
        assert_eq!(strict.len(), 2);
        assert_eq!(lower_nilradical(&u), strict);
        assert_eq!(jacobson_radical(&u), strict);
        let q = u.quotient(&strict).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_commutative());
        assert_eq!(q.nilpotents().len(), 1);
    }

    #[test]
    fn power_of_radical() {
        let d = crate::presentation::build_ring_from_text("F2<x>/(x^3)").unwrap().ring;
        let j = jacobson_radical(&d);
        assert_eq!(j.len(), 4);
        assert_eq!(ideal_power(&d, &j, 2).len(), 2);
        assert_eq!(ideal_power(&d, &j, 3).len(), 1);
    }
}

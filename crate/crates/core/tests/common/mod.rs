//! Brute-force oracles straight from the definitions, for cross-checking the
//! optimized scans.

#![allow(dead_code)]

use finring::RingTable;
use std::collections::BTreeSet;

pub fn units(r: &RingTable) -> BTreeSet<usize> {
    r.elements().filter(|&a| r.elements().any(|b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one())).collect()
}

pub fn nilpotents(r: &RingTable) -> BTreeSet<usize> {
    r.elements()
        .filter(|&a| {
            let mut x = a;
            for _ in 0..=r.order() {
                if x == r.zero() {
                    return true;
                }
                x = r.mul(x, a);
            }
            false
        })
        .collect()
}

/// `J = { x : 1 - r x is a unit for every r }`.
pub fn jacobson(r: &RingTable) -> BTreeSet<usize> {
    let u = units(r);
    r.elements().filter(|&x| r.elements().all(|y| u.contains(&r.sub(r.one(), r.mul(y, x))))).collect()
}

pub fn commutative(r: &RingTable) -> bool {
    r.elements().all(|a| r.elements().all(|b| r.mul(a, b) == r.mul(b, a)))
}

pub fn reduced(r: &RingTable) -> bool {
    nilpotents(r).len() == 1
}

pub fn reversible(r: &RingTable) -> bool {
    r.elements().all(|a| r.elements().all(|b| r.mul(a, b) != r.zero() || r.mul(b, a) == r.zero()))
}

pub fn symmetric(r: &RingTable) -> bool {
    r.elements().all(|a| {
        r.elements().all(|b| r.elements().all(|c| r.mul3(a, b, c) != r.zero() || r.mul3(b, a, c) == r.zero()))
    })
}

pub fn semicommutative(r: &RingTable) -> bool {
    r.elements().all(|a| {
        r.elements().all(|b| r.mul(a, b) != r.zero() || r.elements().all(|c| r.mul3(a, c, b) == r.zero()))
    })
}

pub fn reflexive(r: &RingTable) -> bool {
    let arb = |a: usize, b: usize| r.elements().all(|c| r.mul3(a, c, b) == r.zero());
    r.elements().all(|a| r.elements().all(|b| !arb(a, b) || arb(b, a)))
}

fn principal_right(r: &RingTable, a: usize) -> BTreeSet<usize> {
    r.elements().map(|x| r.mul(a, x)).collect()
}

fn principal_left(r: &RingTable, a: usize) -> BTreeSet<usize> {
    r.elements().map(|x| r.mul(x, a)).collect()
}

/// Every principal right ideal `aR` is two-sided, i.e. `Ra ⊆ aR`.
pub fn right_duo(r: &RingTable) -> bool {
    r.elements().all(|a| principal_left(r, a).is_subset(&principal_right(r, a)))
}

pub fn left_duo(r: &RingTable) -> bool {
    r.elements().all(|a| principal_right(r, a).is_subset(&principal_left(r, a)))
}

pub fn abelian(r: &RingTable) -> bool {
    r.elements()
        .filter(|&e| r.mul(e, e) == e)
        .all(|e| r.elements().all(|x| r.mul(e, x) == r.mul(x, e)))
}

/// Nilpotents closed under addition and under multiplication by anything.
pub fn ni(r: &RingTable) -> bool {
    let n = nilpotents(r);
    n.iter().all(|&a| n.iter().all(|&b| n.contains(&r.add(a, b))))
        && n.iter().all(|&a| r.elements().all(|x| n.contains(&r.mul(a, x)) && n.contains(&r.mul(x, a))))
}

pub fn local(r: &RingTable) -> bool {
    let u = units(r);
    let non: Vec<usize> = r.elements().filter(|x| !u.contains(x)).collect();
    non.iter().all(|&a| non.iter().all(|&b| !u.contains(&r.add(a, b))))
}

pub fn central_idempotents(r: &RingTable) -> usize {
    r.elements()
        .filter(|&e| r.mul(e, e) == e && r.elements().all(|x| r.mul(e, x) == r.mul(x, e)))
        .count()
}

/// The same ring with element `x` renamed `perm[x]`.
pub fn relabel(r: &RingTable, perm: &[usize]) -> RingTable {
    let n = r.order();
    let mut inv = vec![0; n];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    let labels = (0..n).map(|y| r.label(inv[y]).to_string()).collect();
    RingTable::from_fns(labels, perm[r.zero()], perm[r.one()], "relabelled", |a, b| perm[r.add(inv[a], inv[b])], |a, b| {
        perm[r.mul(inv[a], inv[b])]
    })
    .expect("relabelling preserves the axioms")
}

/// Graded dimensions of `F_2<x_1..x_g>/(relations)` for homogeneous
/// relations, by dense rank over F_2, degree by degree. Each relation is a
/// list of words; a word is a list of generator indices.
pub fn graded_dimensions_f2(g: usize, relations: &[Vec<Vec<usize>>], max_degree: usize) -> Vec<usize> {
    let words = |len: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out.into_iter().flat_map(|w: Vec<usize>| (0..g).map(move |x| [w.clone(), vec![x]].concat())).collect();
        }
        out
    };
    let index = |w: &[usize]| w.iter().fold(0usize, |a, &x| a * g + x);
    let mut dims = Vec::new();
    for d in 0..=max_degree {
        let size = g.pow(d as u32);
        let mut pivots: Vec<Option<Vec<u64>>> = vec![None; size];
        let blocks = size.div_ceil(64);
        let mut rank = 0;
        for rel in relations {
            let k = rel[0].len();
            if k > d {
                continue;
            }
            for s in 0..=d - k {
                for a in words(s) {
                    for b in words(d - k - s) {
                        let mut v = vec![0u64; blocks];
                        for t in rel {
                            let i = index(&[a.clone(), t.clone(), b.clone()].concat());
                            v[i / 64] ^= 1 << (i % 64);
                        }
                        loop {
                            let Some(lead) = (0..size).find(|&i| v[i / 64] >> (i % 64) & 1 == 1) else { break };
                            match &pivots[lead] {
                                Some(p) => v.iter_mut().zip(p).for_each(|(x, y)| *x ^= y),
                                None => {
                                    pivots[lead] = Some(v);
                                    rank += 1;
                                    break;
                                }
                            }
                        }
                    }
                }
            }
        }
        dims.push(size - rank);
    }
    dims
}

/// Parses `"uuv+vu"` style homogeneous relations over generators `u`, `v`.
pub fn words_uv(rel: &str) -> Vec<Vec<usize>> {
    rel.split('+').map(|w| w.chars().map(|c| if c == 'u' { 0 } else { 1 }).collect()).collect()
}

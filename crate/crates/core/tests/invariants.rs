//! Relabelling, opposite and direct-sum invariants over random choices.

mod common;

use finring::corpus;
use finring::enumeration::{enumerate, EnumOptions};
use finring::properties::profile;
use finring::radicals::jacobson_radical;
use finring::ring::iso::{fingerprint, is_isomorphic, IsoOutcome, DEFAULT_BUDGET};
use finring::ring::ringtab::{from_ringtab, to_ringtab};
use finring::RingTable;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use std::sync::OnceLock;

fn pool() -> &'static [RingTable] {
    static POOL: OnceLock<Vec<RingTable>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v = Vec::new();
        for order in [4, 8, 9] {
            v.extend(enumerate(order, &EnumOptions::default()).unwrap().rings);
        }
        v.extend(enumerate(16, &EnumOptions { deep: true, noncommutative_only: true, shuffle_seed: None }).unwrap().rings);
        for name in ["SymNonduo32", "Local32e", "NiReflexive64", "AbelianNonsemi64"] {
            v.push(corpus::build(name).unwrap());
        }
        v
    })
}

fn shuffled(r: &RingTable, seed: u64) -> (Vec<usize>, RingTable) {
    let mut perm: Vec<usize> = r.elements().collect();
    perm.shuffle(&mut StdRng::seed_from_u64(seed));
    let s = common::relabel(r, &perm);
    (perm, s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabelling_preserves_invariants(k in 0usize..1000, seed: u64) {
        let r = &pool()[k % pool().len()];
        let (perm, s) = shuffled(r, seed);
        let (p, q) = (profile(r), profile(&s));
        prop_assert_eq!(&p.witnesses.len(), &q.witnesses.len());
        for key in finring::properties::PROPERTY_KEYS {
            prop_assert_eq!(p.get(key), q.get(key), "{}", key);
        }
        prop_assert_eq!(fingerprint(r), fingerprint(&s));
        let j: Vec<usize> = {
            let mut v: Vec<usize> = jacobson_radical(r).iter().map(|x| perm[x]).collect();
            v.sort();
            v
        };
        prop_assert_eq!(jacobson_radical(&s).members(), j);
        match is_isomorphic(r, &s, DEFAULT_BUDGET) {
            IsoOutcome::Isomorphic(map) => {
                for a in r.elements() {
                    for b in r.elements() {
                        prop_assert_eq!(map[r.mul(a, b)], s.mul(map[a], map[b]));
                        prop_assert_eq!(map[r.add(a, b)], s.add(map[a], map[b]));
                    }
                }
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn opposite_is_an_involution(k in 0usize..1000) {
        let r = &pool()[k % pool().len()];
        prop_assert!(r.opposite().opposite().same_tables(r));
        prop_assert_eq!(jacobson_radical(&r.opposite()), jacobson_radical(r));
        let (p, q) = (profile(r), profile(&r.opposite()));
        prop_assert_eq!(p.right_duo, q.left_duo);
        prop_assert_eq!(p.reversible, q.reversible);
    }

    #[test]
    fn direct_sum_is_ni_iff_both_are(i in 0usize..1000, j in 0usize..1000) {
        let (a, b) = (&pool()[i % pool().len()], &pool()[j % pool().len()]);
        prop_assume!(a.order() * b.order() <= 256);
        let s = RingTable::direct_sum(a, b).unwrap();
        let (pa, pb, ps) = (profile(a), profile(b), profile(&s));
        prop_assert_eq!(ps.ni, pa.ni && pb.ni);
        prop_assert_eq!(ps.reversible, pa.reversible && pb.reversible);
        prop_assert_eq!(ps.abelian, pa.abelian && pb.abelian);
        prop_assert!(!ps.local);
        prop_assert_eq!(ps.j_size, pa.j_size * pb.j_size);
    }

    #[test]
    fn ringtab_text_round_trips(k in 0usize..1000, seed: u64) {
        let (_, s) = shuffled(&pool()[k % pool().len()], seed);
        let back = from_ringtab(&to_ringtab(&s)).unwrap();
        prop_assert!(back.same_tables(&s));
        prop_assert_eq!(back.labels(), s.labels());
    }
}

mod common;

use finring::corpus::{self, NONCOMMUTATIVE_16};
use finring::enumeration::{enumerate, enumerate_unital, taxonomy_census, EnumOptions};
use finring::expr::parse_ring_expr;
use finring::ring::iso::{fingerprint, is_isomorphic, DEFAULT_BUDGET};
use finring::ring::verify_axioms;
use finring::Error;

fn deep() -> EnumOptions {
    EnumOptions { deep: true, ..Default::default() }
}

#[test]
fn class_counts() {
    for (order, want) in [(2, 1), (3, 1), (4, 4), (5, 1), (7, 1), (8, 11), (9, 4)] {
        let rings = enumerate_unital(order).unwrap();
        assert_eq!(rings.len(), want, "order {order}");
        for r in &rings {
            assert!(verify_axioms(r).passed);
            assert_eq!(r.order(), order);
        }
    }
}

#[test]
fn order_four_classes_are_the_known_ones() {
    let rings = enumerate_unital(4).unwrap();
    for expr in ["Zn(4)", "F2<x>/(x^2)", "GF(2,2)", "sum(Zn(2),Zn(2))"] {
        let r = parse_ring_expr(expr).unwrap();
        assert_eq!(rings.iter().filter(|c| is_isomorphic(c, &r, DEFAULT_BUDGET).is_yes()).count(), 1, "{expr}");
    }
}

#[test]
fn order_eight_noncommutative_is_triangular() {
    let e = enumerate(8, &EnumOptions { noncommutative_only: true, ..Default::default() }).unwrap();
    assert_eq!(e.rings.len(), 1);
    let u = parse_ring_expr("U(2,GF(2))").unwrap();
    assert!(is_isomorphic(&e.rings[0], &u, DEFAULT_BUDGET).is_yes());
}

#[test]
fn order_sixteen() {
    assert!(matches!(enumerate(16, &EnumOptions::default()), Err(Error::Unsupported(_) | Error::InvalidArgument(_))));
    let e = enumerate(16, &deep()).unwrap();
    assert_eq!(e.rings.len(), 50);
    let census = taxonomy_census(&e.rings);
    assert_eq!(census.noncommutative(), 13);
    assert_eq!(census.non_ni(), 1);
    let non_ni = e.rings.iter().find(|r| !common::ni(r)).unwrap();
    assert!(is_isomorphic(non_ni, &parse_ring_expr("M(2,GF(2))").unwrap(), DEFAULT_BUDGET).is_yes());

    let mut matched = vec![false; e.rings.len()];
    for name in NONCOMMUTATIVE_16 {
        let r = corpus::build(name).unwrap();
        let hits: Vec<usize> = (0..e.rings.len()).filter(|&k| is_isomorphic(&e.rings[k], &r, DEFAULT_BUDGET).is_yes()).collect();
        assert_eq!(hits.len(), 1, "{name}");
        assert!(!matched[hits[0]], "{name} duplicates another class");
        matched[hits[0]] = true;
    }
}

#[test]
fn classes_are_pairwise_distinct() {
    for order in [4, 8, 9] {
        let rings = enumerate_unital(order).unwrap();
        for i in 0..rings.len() {
            for j in i + 1..rings.len() {
                assert!(is_isomorphic(&rings[i], &rings[j], DEFAULT_BUDGET).is_no(), "order {order}: {i} vs {j}");
            }
        }
    }
}

#[test]
fn shuffled_branching_gives_the_same_classes() {
    for order in [4, 8, 9] {
        let base: Vec<_> = enumerate_unital(order).unwrap().iter().map(fingerprint).collect();
        for seed in [1, 7, 2024] {
            let e = enumerate(order, &EnumOptions { shuffle_seed: Some(seed), ..Default::default() }).unwrap();
            let got: Vec<_> = e.rings.iter().map(fingerprint).collect();
            assert_eq!(got, base, "order {order} seed {seed}");
        }
    }
    let e16 = enumerate(16, &EnumOptions { deep: true, noncommutative_only: true, shuffle_seed: Some(5) }).unwrap();
    assert_eq!(e16.rings.len(), 13);
}

#[test]
fn unsupported_orders_are_rejected() {
    for order in [0, 1, 6, 10, 32] {
        assert!(enumerate(order, &deep()).is_err(), "order {order}");
    }
}

mod common;

use finring::corpus::corpus;
use finring::decomposition::{peirce, primitive_central_idempotents, square_zero_model_holds, structural_checks};
use finring::enumeration::{enumerate, EnumOptions};
use finring::expr::parse_ring_expr;
use finring::properties::profile;
use finring::RingTable;

fn rings() -> Vec<(String, RingTable)> {
    let mut out = Vec::new();
    for order in [4, 8, 9, 16] {
        let e = enumerate(order, &EnumOptions { deep: true, ..Default::default() }).unwrap();
        out.extend(e.rings.into_iter().enumerate().map(|(k, r)| (format!("order {order} class {k}"), r)));
    }
    for entry in corpus() {
        if entry.order <= 128 {
            out.push((entry.name.to_string(), entry.build().unwrap()));
        }
    }
    out
}

#[test]
fn idempotents_are_orthogonal_and_complete() {
    for (name, r) in rings() {
        let d = peirce(&r).unwrap_or_else(|e| panic!("{name}: {e}"));
        let sum = d.idempotents.iter().fold(r.zero(), |a, &e| r.add(a, e));
        assert_eq!(sum, r.one(), "{name}");
        for (i, &e) in d.idempotents.iter().enumerate() {
            assert_eq!(r.mul(e, e), e, "{name}");
            for (j, &f) in d.idempotents.iter().enumerate() {
                if i != j {
                    assert_eq!(r.mul(e, f), r.zero(), "{name}");
                }
            }
        }
        for x in r.elements() {
            let (s, m) = d.split(&r, x);
            assert_eq!(r.add(s, m), x, "{name}");
            assert!(d.s.contains(s) && d.m.contains(m), "{name}");
        }
        let total: usize = d.components.iter().map(|c| c.ring.order()).product::<usize>()
            * d.modules.iter().enumerate().map(|(i, row)| row.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, m)| m.len()).product::<usize>()).product::<usize>();
        assert_eq!(total, r.order(), "{name}");
    }
}

#[test]
fn structural_statements_hold() {
    for (name, r) in rings() {
        let d = peirce(&r).unwrap();
        let checks = structural_checks(&r, &d, &profile(&r));
        assert!(checks.all_agree(), "{name}: {:?}", checks.violations());
        assert_ne!(square_zero_model_holds(&r, &d), Some(false), "{name}");
    }
}

#[test]
fn block_count_matches_central_idempotents() {
    for (name, r) in rings() {
        let k = primitive_central_idempotents(&r).len();
        assert_eq!(1 << k, common::central_idempotents(&r), "{name}");
    }
}

#[test]
fn triangular_ring_pieces() {
    let u = parse_ring_expr("U(2,GF(2))").unwrap();
    let d = peirce(&u).unwrap();
    assert_eq!(d.len(), 2);
    assert!(d.all_components_local);
    assert!(d.m_nonzero && d.m_square_zero);
    assert_eq!(d.m.len(), 2);
    let m2 = parse_ring_expr("M(2,GF(2))").unwrap();
    let d = peirce(&m2).unwrap();
    assert_eq!(d.len(), 1);
    assert!(!d.m_nonzero);
    assert!(!d.all_components_local);
    assert!(d.components[0].primary);
    let z4 = parse_ring_expr("Zn(4)").unwrap();
    assert_eq!(peirce(&z4).unwrap().len(), 1);
}

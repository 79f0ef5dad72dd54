use super::RingTable;
use crate::error::Result;
use rayon::prelude::*;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    LeftUnity,
    RightUnity,
    ZeroAnnihilation,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::AdditiveIdentity => "additive identity",
            Law::AdditiveInverse => "additive inverse",
            Law::AdditiveCommutativity => "additive commutativity",
            Law::AdditiveAssociativity => "additive associativity",
            Law::MultiplicativeAssociativity => "multiplicative associativity",
            Law::LeftDistributivity => "left distributivity",
            Law::RightDistributivity => "right distributivity",
            Law::LeftUnity => "left unity",
            Law::RightUnity => "right unity",
            Law::ZeroAnnihilation => "zero annihilation",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

/// Outcome of the exhaustive axiom scan: at most one witness per law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn summary(&self) -> String {
        if self.passed {
            return "all axioms hold".into();
        }
        self.violations
            .iter()
            .map(|v| format!("{} fails at {:?}", v.law, v.witness))
            .collect::<Vec<_>>()
            .join("; ")
    }

    pub fn violation(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

/// Scans every ring axiom over all element tuples.
pub fn verify_axioms(r: &RingTable) -> AxiomReport {
    scan(r.order, &r.add, &r.mul, r.zero, r.one)
}

/// Structural checks on raw tables, then the full axiom scan.
pub fn verify_tables(
    n: usize,
    add: &[u16],
    mul: &[u16],
    zero: usize,
    one: usize,
) -> Result<AxiomReport> {
    let labels = (0..n).map(|i| i.to_string()).collect();
    let r = RingTable::unchecked(labels, add.to_vec(), mul.to_vec(), zero, one, "raw")?;
    Ok(verify_axioms(&r))
}

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool + Sync) -> Option<Vec<usize>> {
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
        None
    })
}

fn scan(n: usize, add: &[u16], mul: &[u16], zero: usize, one: usize) -> AxiomReport {
    let ad = |a: usize, b: usize| add[a * n + b] as usize;
    let mu = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut violations = Vec::new();
    let mut push = |law, witness: Option<Vec<usize>>| {
        if let Some(witness) = witness {
            violations.push(Violation { law, witness });
        }
    };

    push(Law::AdditiveIdentity, (0..n).find(|&a| ad(zero, a) != a || ad(a, zero) != a).map(|a| vec![a]));
    push(Law::AdditiveInverse, (0..n).find(|&a| !(0..n).any(|b| ad(a, b) == zero)).map(|a| vec![a]));
    push(
        Law::AdditiveCommutativity,
        (0..n).find_map(|a| (a + 1..n).find(|&b| ad(a, b) != ad(b, a)).map(|b| vec![a, b])),
    );
    push(
        Law::AdditiveAssociativity,
        first_triple(n, |a, b, c| ad(ad(a, b), c) != ad(a, ad(b, c))),
    );
    push(
        Law::MultiplicativeAssociativity,
        first_triple(n, |a, b, c| mu(mu(a, b), c) != mu(a, mu(b, c))),
    );
    push(
        Law::LeftDistributivity,
        first_triple(n, |a, b, c| mu(a, ad(b, c)) != ad(mu(a, b), mu(a, c))),
    );
    push(
        Law::RightDistributivity,
        first_triple(n, |a, b, c| mu(ad(a, b), c) != ad(mu(a, c), mu(b, c))),
    );
    push(Law::LeftUnity, (0..n).find(|&a| mu(one, a) != a).map(|a| vec![a]));
    push(Law::RightUnity, (0..n).find(|&a| mu(a, one) != a).map(|a| vec![a]));
    push(
        Law::ZeroAnnihilation,
        (0..n).find(|&a| mu(zero, a) != zero || mu(a, zero) != zero).map(|a| vec![a]),
    );

    AxiomReport { passed: violations.is_empty(), violations }
}

//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always show up in the test log. Exits non-zero when a
//! criterion fails for any reason other than a documented discrepancy.

use finring::corpus::{self, corpus};
use finring::enumeration::enumerate_unital;
use finring::ring::iso::{is_isomorphic, DEFAULT_BUDGET};
use finring::ring::ringtab::{export_ring, import_ring, to_ringtab};
use finring::verify::{self, verify_paper, VerificationReport, VerifyOptions};
use std::process::ExitCode;
use std::time::Instant;

struct Outcome {
    failures: Vec<String>,
    /// Failures explained by a corpus discrepancy note.
    documented: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new(detail: impl Into<String>) -> Self {
        Self { failures: Vec::new(), documented: Vec::new(), detail: detail.into() }
    }
}

/// Property values restated from the published claims, independently of the
/// corpus expectation lists.
const PROFILE_CLAIMS: &[(&str, usize, &[(&str, bool)])] = &[
    ("F2Q8", 256, &[("reversible", true), ("symmetric", false), ("right_duo", true), ("left_duo", true)]),
    ("RevNonduoPresented", 256, &[("reversible", true), ("symmetric", false), ("duo", false)]),
    ("SymNonduo32", 32, &[("symmetric", true), ("duo", false)]),
    ("AbelianNonsemi64", 64, &[("abelian", true), ("semicommutative", false), ("reflexive", false)]),
    ("NiReflexive64", 64, &[("ni", true), ("abelian", false), ("reflexive", true)]),
    ("U2F2", 8, &[("ni", true), ("abelian", false), ("reflexive", false)]),
    ("M2F2", 16, &[("reflexive", true), ("ni", false)]),
    ("SkewF4", 16, &[("semicommutative", true), ("commutative", false), ("duo", true)]),
    ("SemiDuoF2", 16, &[("semicommutative", true), ("commutative", false), ("duo", true), ("reflexive", false)]),
    ("SemiDuoZ4", 16, &[("semicommutative", true), ("commutative", false), ("duo", true), ("reflexive", false)]),
    ("SemiNonduoF2", 16, &[("semicommutative", true), ("commutative", false), ("duo", false), ("reflexive", false)]),
    ("SemiNonduoZ4", 16, &[("semicommutative", true), ("commutative", false), ("duo", false), ("reflexive", false)]),
    ("Local32a", 32, &[("semicommutative", true)]),
    ("Local32b", 32, &[("semicommutative", true)]),
    ("Local32c", 32, &[("semicommutative", true)]),
    ("Local32d", 32, &[("semicommutative", true)]),
    ("Local32e", 32, &[("semicommutative", true)]),
    ("Local32f", 32, &[("semicommutative", true)]),
    ("Local32g", 32, &[("semicommutative", true)]),
    ("NonNiTri128", 128, &[("ni", false), ("reflexive", false)]),
    ("NonNiTriOp128", 128, &[("ni", false), ("reflexive", false)]),
    ("M2F2SumU2F2", 128, &[("ni", false), ("reflexive", false)]),
];

fn documented(name: &str) -> bool {
    corpus::find(name).is_some_and(|e| e.discrepancy.is_some())
}

fn profiles(report: &VerificationReport) -> Outcome {
    let mut o = Outcome::new("");
    let mut checks = 0;
    for &(name, order, claims) in PROFILE_CLAIMS {
        let e = report.entry(name).unwrap_or_else(|| panic!("{name} missing from the corpus"));
        let mut bad = Vec::new();
        checks += 1 + claims.len();
        if e.order != order {
            bad.push(format!("{name}: order {} (claimed {order})", e.order));
        }
        match &e.profile {
            None => bad.push(format!("{name}: not built: {:?}", e.error)),
            Some(p) => {
                for &(key, want) in claims {
                    if p.get(key) != Some(want) {
                        bad.push(format!("{name}: {key}={:?} (claimed {want})", p.get(key)));
                    }
                }
            }
        }
        if documented(name) {
            o.documented.extend(bad);
        } else {
            o.failures.extend(bad);
        }
    }
    match report.entry("SymNonduo32").and_then(|e| e.expectations.iter().find(|x| matches!(x.check, corpus::Check::Basis(_)))) {
        Some(x) if x.passed => {}
        Some(x) => o.failures.push(format!("SymNonduo32: basis {}", x.actual)),
        None => o.failures.push("SymNonduo32: no basis check".into()),
    }
    o.detail = format!("{checks} claimed values over {} rings", PROFILE_CLAIMS.len());
    o
}

fn suite(report: &VerificationReport, name: &str) -> Outcome {
    let s = report.suite(name).unwrap_or_else(|| panic!("suite {name} missing"));
    let mut o = Outcome::new(format!("{} cases", s.checked));
    o.failures.extend(s.failures.iter().cloned());
    o
}

fn enumeration(report: &VerificationReport) -> Outcome {
    let mut o = suite(report, verify::SUITE_ENUMERATION);
    let u2 = corpus::build("U2F2").unwrap();
    for (order, want) in [(2, 1), (3, 1), (4, 4), (5, 1), (7, 1)] {
        let got = enumerate_unital(order).unwrap().len();
        if got != want {
            o.failures.push(format!("order {order}: {got} classes, expected {want}"));
        }
    }
    let eight: Vec<_> = enumerate_unital(8).unwrap().into_iter().filter(|r| !r.is_commutative()).collect();
    if eight.len() != 1 || !is_isomorphic(&eight[0], &u2, DEFAULT_BUDGET).is_yes() {
        o.failures.push(format!("order 8: {} noncommutative classes, expected one isomorphic to U2(F2)", eight.len()));
    }
    o.detail = format!("{}; orders 2-9 and 16 (13 noncommutative, 1 non-NI)", o.detail);
    o
}

fn presentations(report: &VerificationReport) -> Outcome {
    let mut o = suite(report, verify::SUITE_PRESENTATIONS);
    // The suite checks the order the recipe actually has; compare with the
    // published order as well.
    for &(name, order, _) in PROFILE_CLAIMS {
        let Some(entry) = corpus::find(name) else { continue };
        if entry.presentation().is_some() && entry.order != order {
            let line = format!("{name}: presentation rebuilds stably to order {}, published order {order}", entry.order);
            if entry.discrepancy.is_some() {
                o.documented.push(line);
            } else {
                o.failures.push(line);
            }
        }
    }
    o
}

fn persistence(report: &VerificationReport) -> Outcome {
    let mut o = suite(report, verify::SUITE_RINGTAB);
    let dir = std::env::temp_dir().join(format!("finring-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for e in corpus() {
        let r = e.build().unwrap();
        let path = dir.join(format!("{}.ringtab", e.name));
        export_ring(&r, &path).unwrap();
        match import_ring(&path) {
            Ok(back) if back.same_tables(&r) && back.labels() == r.labels() && to_ringtab(&back) == to_ringtab(&r) => {}
            Ok(_) => o.failures.push(format!("{}: file round trip changed the ring", e.name)),
            Err(err) => o.failures.push(format!("{}: {err}", e.name)),
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    o.detail = format!("{}, in memory and through files", o.detail);
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = verify_paper(&VerifyOptions { deep: true, ..Default::default() });
    let criteria: Vec<(&str, Outcome)> = vec![
        ("corpus profile reproduction", profiles(&report)),
        ("radical agreement", suite(&report, verify::SUITE_RADICALS)),
        ("taxonomy implications", suite(&report, verify::SUITE_IMPLICATIONS)),
        ("enumeration counts", enumeration(&report)),
        ("peirce structural statements", suite(&report, verify::SUITE_STRUCTURE)),
        ("cube-zero local rings", suite(&report, verify::SUITE_CUBE_ZERO)),
        ("presentation stability", presentations(&report)),
        ("ringtab persistence", persistence(&report)),
    ];
    let mut unexpected = false;
    for (i, (name, o)) in criteria.iter().enumerate() {
        let status = if o.failures.is_empty() && o.documented.is_empty() { "PASS" } else { "FAIL" };
        let note = if o.failures.is_empty() && !o.documented.is_empty() { " (documented discrepancy only)" } else { "" };
        println!("criterion {}: {status}{note} {name}: {}", i + 1, o.detail);
        for f in &o.failures {
            println!("    failure: {f}");
        }
        for f in &o.documented {
            println!("    documented: {f}");
        }
        unexpected |= !o.failures.is_empty();
    }
    for d in report.entries.iter().filter_map(|e| e.discrepancy.map(|d| (e.name, d))) {
        println!("note: {}: {}", d.0, d.1);
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn finring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("finring-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn build_prints_summary_and_basis() {
    let o = finring(&["build", "F2<u,v>/(u^3,v^2,u^2+u*v+v*u,u*v*u)"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("order            32"), "{s}");
    assert!(s.contains("basis            {1, u, v, uv, vu}"), "{s}");
}

#[test]
fn props_key_values() {
    let o = finring(&["props", "--kv", "U(2,GF(2))"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for line in ["order=8", "ni=true", "abelian=false", "reflexive=false", "jacobson_size=2"] {
        assert!(s.lines().any(|l| l == line), "{line} missing from\n{s}");
    }
}

#[test]
fn props_reports_witnesses() {
    let s = stdout(&finring(&["props", "M(2,GF(2))"]));
    assert!(s.contains("reversible       no"), "{s}");
    assert!(s.contains("reversible: fails at"), "{s}");
}

#[test]
fn iso_answers() {
    let s = stdout(&finring(&["iso", "Zn(6)", "sum(Zn(2),Zn(3))"]));
    assert!(s.starts_with("isomorphic"), "{s}");
    let s = stdout(&finring(&["iso", "Zn(4)", "F2<x>/(x^2)"]));
    assert!(s.starts_with("not isomorphic"), "{s}");
}

#[test]
fn decompose_triangular() {
    let o = finring(&["decompose", "U(2,GF(2))"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("reflexive check"), "{s}");
    assert!(!s.contains("DISAGREE"), "{s}");
}

#[test]
fn enumerate_writes_census_and_tables() {
    let dir = scratch("enum");
    let o = finring(&["enumerate", "--order", "8", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("order 8: 11 classes"));
    assert!(dir.join("census_order8.txt").is_file());
    assert!(dir.join("order8_class11.ringtab").is_file());
    let o = finring(&["import", dir.join("order8_class1.ringtab").to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order            8"));
    let o = finring(&["enumerate", "--order", "8", "--noncommutative-only"]);
    assert!(stdout(&o).starts_with("order 8: 1 classes"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn order_sixteen_needs_deep() {
    let o = finring(&["enumerate", "--order", "16"]);
    assert_eq!(o.status.code(), Some(2));
    let o = finring(&["--deep", "enumerate", "--order", "16", "--noncommutative-only"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("order 16: 13 classes"));
}

#[test]
fn export_import_and_file_arguments() {
    let dir = scratch("export");
    let path = dir.join("q8.ringtab");
    let p = path.to_str().unwrap();
    assert!(finring(&["export", "Corpus(F2Q8)", p]).status.success());
    let s = stdout(&finring(&["import", p]));
    assert!(s.contains("order            256"), "{s}");
    assert!(s.contains("units            128"), "{s}");
    let s = stdout(&finring(&["iso", p, "GA(GF(2),Q8)"]));
    assert!(s.starts_with("isomorphic"));
    std::fs::write(&path, "RINGTAB 1\nbroken\n").unwrap();
    let o = finring(&["import", p]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_expressions_exit_with_two() {
    for arg in ["M(2,GF(2)", "F2<u,v>/(u^2,w)", "Zn(1)", "GA(Zn(4),Q8)"] {
        let o = finring(&["build", arg]);
        assert_eq!(o.status.code(), Some(2), "{arg}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"), "{arg}");
    }
}

#[test]
fn verification_command_passes() {
    let o = finring(&["verify-paper", "--kv"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("entry.F2Q8.status=pass"), "{s}");
    assert!(s.contains("entry.RevNonduoPresented.status=discrepancy"), "{s}");
}

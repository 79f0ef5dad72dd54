//! The line-oriented `RINGTAB 1` text format.
//!
//! ```text
//! RINGTAB 1
//! order n
//! zero i
//! one j
//! <n labels, space separated>
//! <n lines of n indices: addition>
//! <n lines of n indices: multiplication>
//! ```

use super::RingTable;
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

pub fn to_ringtab(r: &RingTable) -> String {
    let n = r.order();
    let mut s = String::with_capacity(8 * n * n);
    writeln!(s, "RINGTAB 1").unwrap();
    writeln!(s, "order {n}").unwrap();
    writeln!(s, "zero {}", r.zero()).unwrap();
    writeln!(s, "one {}", r.one()).unwrap();
    writeln!(s, "{}", r.labels().join(" ")).unwrap();
    for table in [r.add_table(), r.mul_table()] {
        for row in table.chunks(n) {
            let line: Vec<String> = row.iter().map(u16::to_string).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
    }
    s
}

pub fn from_ringtab(text: &str) -> Result<RingTable> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let mut next = |what: &str| -> Result<(usize, &str)> {
        lines.next().ok_or_else(|| Error::Format { line: 0, msg: format!("missing {what}") })
    };
    let (ln, header) = next("header")?;
    if header != "RINGTAB 1" {
        return Err(Error::Format { line: ln, msg: format!("expected `RINGTAB 1`, found {header:?}") });
    }
    let keyed = |ln: usize, line: &str, key: &str| -> Result<usize> {
        let rest = line
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| Error::Format { line: ln, msg: format!("expected `{key} <int>`") })?;
        rest.parse().map_err(|_| Error::Format { line: ln, msg: format!("bad integer {rest:?}") })
    };
    let (ln, l) = next("order")?;
    let n = keyed(ln, l, "order")?;
    if n == 0 || n > super::MAX_ORDER {
        return Err(Error::Format { line: ln, msg: format!("order {n} out of range") });
    }
    let (ln, l) = next("zero")?;
    let zero = keyed(ln, l, "zero")?;
    let (ln, l) = next("one")?;
    let one = keyed(ln, l, "one")?;
    let (ln, l) = next("labels")?;
    let labels: Vec<String> = l.split(' ').map(str::to_owned).collect();
    if labels.len() != n || labels.iter().any(String::is_empty) {
        return Err(Error::Format { line: ln, msg: format!("expected {n} labels") });
    }
    let mut tables = [Vec::with_capacity(n * n), Vec::with_capacity(n * n)];
    for table in tables.iter_mut() {
        for _ in 0..n {
            let (ln, l) = next("table row")?;
            let row: Vec<&str> = l.split(' ').collect();
            if row.len() != n {
                return Err(Error::Format { line: ln, msg: format!("expected {n} entries, found {}", row.len()) });
            }
            for tok in row {
                let v: u16 = tok
                    .parse()
                    .ok()
                    .filter(|&v: &u16| (v as usize) < n)
                    .ok_or_else(|| Error::Format { line: ln, msg: format!("bad entry {tok:?}") })?;
                table.push(v);
            }
        }
    }
    match lines.next() {
        Some((_, "")) if lines.next().is_none() => {}
        Some((ln, _)) => return Err(Error::Format { line: ln, msg: "trailing content".into() }),
        None => return Err(Error::Format { line: 0, msg: "missing final newline".into() }),
    }
    let [add, mul] = tables;
    RingTable::new(labels, add, mul, zero, one, "imported")
}

pub fn export_ring(r: &RingTable, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_ringtab(r))?;
    Ok(())
}

pub fn import_ring(path: impl AsRef<Path>) -> Result<RingTable> {
    let text = std::fs::read_to_string(path)?;
    from_ringtab(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::cyclic;

    #[test]
    fn z4_text() {
        let z4 = cyclic(4).unwrap();
        let text = to_ringtab(&z4);
        assert!(text.starts_with("RINGTAB 1\norder 4\nzero 0\none 1\n0 1 2 3\n0 1 2 3\n"));
        let back = from_ringtab(&text).unwrap();
        assert!(back.same_tables(&z4));
        assert_eq!(to_ringtab(&back), text);
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let text = to_ringtab(&cyclic(2).unwrap());
        let bad = text.replacen("order 2", "order x", 1);
        assert!(matches!(from_ringtab(&bad), Err(Error::Format { line: 2, .. })));
        let bad = text.replacen("0 1\n1 0\n", "0 1\n1 9\n", 1);
        assert!(matches!(from_ringtab(&bad), Err(Error::Format { line: 7, .. })));
        let trunc = &text[..text.len() - 1];
        assert!(from_ringtab(trunc).is_err());
    }

    #[test]
    fn import_reverifies_axioms() {
        let z4 = cyclic(4).unwrap();
        let text = to_ringtab(&z4);
        // Break the multiplication table: 1*1 = 2.
        let lines: Vec<&str> = text.lines().collect();
        let mut patched: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
        patched[10] = "0 2 2 3".into();
        let bad = patched.join("\n") + "\n";
        assert!(matches!(from_ringtab(&bad), Err(Error::Axioms(_))));
    }
}

//! Howell normal form over `Z_{p^k}`.

use crate::error::{Error, Result};
use crate::ring::prime_factors;

/// Arithmetic in `Z_{p^k}`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ZMod {
    pub q: u32,
    pub p: u32,
    pub k: u32,
}

impl ZMod {
    pub fn new(q: u32) -> Result<Self> {
        let f = prime_factors(q as usize);
        if f.len() != 1 {
            return Err(Error::InvalidArgument(format!("modulus {q} is not a prime power")));
        }
        let p = f[0] as u32;
        Ok(Self { q, p, k: q.ilog(p) })
    }

    /// p-adic valuation; `k` for zero.
    pub fn val(&self, c: u32) -> u32 {
        let mut c = c % self.q;
        if c == 0 {
            return self.k;
        }
        let mut v = 0;
        while c % self.p == 0 {
            c /= self.p;
            v += 1;
        }
        v
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn inv(&self, u: u32) -> u32 {
        let (mut r0, mut r1) = (self.q as i64, (u % self.q) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let t = r0 / r1;
            (r0, r1) = (r1, r0 - t * r1);
            (t0, t1) = (t1, t0 - t * t1);
        }
        debug_assert_eq!(r0, 1, "{u} is not a unit mod {}", self.q);
        t0.rem_euclid(self.q as i64) as u32
    }

    /// Writes `c = p^v * u` and returns `(v, u^-1)`; `c` must be nonzero.
    pub fn split(&self, c: u32) -> (u32, u32) {
        let v = self.val(c);
        (v, self.inv(c / self.p.pow(v)))
    }
}

/// A matrix over `Z_modulus`; rows are generators of a submodule of
/// `Z_modulus^ncols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMatrix {
    pub modulus: u32,
    pub ncols: usize,
    pub rows: Vec<Vec<u32>>,
}

impl ModuleMatrix {
    pub fn new(modulus: u32, ncols: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        ZMod::new(modulus)?;
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Structural("row length differs from column count".into()));
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x % modulus).collect()).collect();
        Ok(Self { modulus, ncols, rows })
    }

    pub fn leading_column(row: &[u32]) -> Option<usize> {
        row.iter().position(|&x| x != 0)
    }
}

/// The Howell form: rows in echelon order with leading entries `p^v`,
/// entries above each leading entry reduced below it, and closed under the
/// Howell property (every span element vanishing left of column `c` is a
/// combination of the rows whose leading column is at least `c`). Two
/// matrices have the same row span exactly when their Howell forms agree.
pub fn howell_form(m: &ModuleMatrix) -> ModuleMatrix {
    let z = ZMod::new(m.modulus).expect("validated modulus");
    let n = m.ncols;
    let mut pivots: Vec<Option<Vec<u32>>> = vec![None; n];
    let mut work: Vec<Vec<u32>> = m.rows.clone();

    while let Some(mut row) = work.pop() {
        loop {
            let Some(c) = ModuleMatrix::leading_column(&row) else { break };
            let (v, uinv) = z.split(row[c]);
            for x in row.iter_mut() {
                *x = z.mul(*x, uinv);
            }
            match &mut pivots[c] {
                Some(piv) => {
                    let pv = z.val(piv[c]);
                    if v >= pv {
                        let f = z.p.pow(v - pv);
                        for (x, &y) in row.iter_mut().zip(piv.iter()) {
                            *x = (*x + z.q - z.mul(f, y)) % z.q;
                        }
                    } else {
                        std::mem::swap(piv, &mut row);
                        if v > 0 {
                            work.push(piv.iter().map(|&x| z.mul(x, z.p.pow(z.k - v))).collect());
                        }
                    }
                }
                None => {
                    if v > 0 {
                        work.push(row.iter().map(|&x| z.mul(x, z.p.pow(z.k - v))).collect());
                    }
                    pivots[c] = Some(row);
                    break;
                }
            }
        }
    }

    // Reduce above each pivot, left to right.
    for c in 0..n {
        let Some(piv) = pivots[c].clone() else { continue };
        let m = piv[c];
        for r in pivots[..c].iter_mut().flatten() {
            let t = r[c] / m;
            if t > 0 {
                for (x, &y) in r.iter_mut().zip(&piv) {
                    *x = (*x + z.q - z.mul(t, y)) % z.q;
                }
            }
        }
    }
    ModuleMatrix { modulus: m.modulus, ncols: n, rows: pivots.into_iter().flatten().collect() }
}

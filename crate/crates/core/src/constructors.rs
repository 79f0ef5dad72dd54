//! Concrete ring families, each materialized as a full [`RingTable`].

use crate::error::{Error, Result};
use crate::ring::{is_prime, RingTable, MAX_ORDER};

fn cap(what: &str, size: u128) -> Result<()> {
    if size > MAX_ORDER as u128 {
        return Err(Error::SizeCap { what: what.into(), size, cap: MAX_ORDER });
    }
    Ok(())
}

/// The integers modulo `n`.
pub fn cyclic(n: usize) -> Result<RingTable> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Z_n needs n >= 2, got {n}")));
    }
    cap("Z_n", n as u128)?;
    RingTable::from_fns(
        (0..n).map(|i| i.to_string()).collect(),
        0,
        1,
        format!("Zn({n})"),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )
}

/// `F_p[x]/(x^2)`, elements `c0 + c1 x` at index `c0 + p c1`.
pub fn dual_numbers(p: usize) -> Result<RingTable> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let n = p * p;
    cap("dual numbers", n as u128)?;
    let split = |x: usize| (x % p, x / p);
    let labels = (0..n)
        .map(|x| {
            let (c0, c1) = split(x);
            poly_label(&[c0, c1], "x")
        })
        .collect();
    RingTable::from_fns(
        labels,
        0,
        1,
        format!("F{p}<x>/(x^2)"),
        |a, b| {
            let ((a0, a1), (b0, b1)) = (split(a), split(b));
            (a0 + b0) % p + p * ((a1 + b1) % p)
        },
        |a, b| {
            let ((a0, a1), (b0, b1)) = (split(a), split(b));
            (a0 * b0) % p + p * ((a0 * b1 + a1 * b0) % p)
        },
    )
}

/// Label for `c_0 + c_1 t + c_2 t^2 + ...`.
fn poly_label(coeffs: &[usize], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// A finite field with its Frobenius map `x -> x^p`.
#[derive(Clone, Debug)]
pub struct GaloisField {
    pub ring: RingTable,
    pub p: usize,
    pub k: usize,
    /// Monic defining polynomial, constant term first, leading 1 omitted.
    pub modulus: Vec<usize>,
    pub frobenius: Vec<usize>,
}

/// `F_{p^k}` as `F_p[a]/(f)`, where `f` is the monic irreducible of degree `k`
/// whose lower coefficients, read as a base-`p` number with the constant term
/// least significant, are smallest.
pub fn galois(p: usize, k: usize) -> Result<GaloisField> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("extension degree must be positive".into()));
    }
    let n = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if n > 256 {
        return Err(Error::SizeCap { what: "GF(p,k)".into(), size: n, cap: 256 });
    }
    let n = n as usize;
    let digits = |mut x: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let modulus = (0..n)
        .map(digits)
        .find(|low| is_irreducible(p, low))
        .ok_or_else(|| Error::Internal("no irreducible polynomial found".into()))?;
    let undigits = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
    let mul_poly = |a: &[usize], b: &[usize]| -> Vec<usize> {
        let mut prod = vec![0usize; 2 * k];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // t^k = -(modulus)
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                prod[deg] = 0;
                for (i, &m) in modulus.iter().enumerate() {
                    prod[deg - k + i] = (prod[deg - k + i] + (p - m) * c) % p;
                }
            }
        }
        prod.truncate(k);
        prod
    };
    let labels = (0..n).map(|x| poly_label(&digits(x), "a")).collect();
    let ring = RingTable::from_fns(
        labels,
        0,
        1,
        format!("GF({p},{k})"),
        |a, b| {
            let s: Vec<usize> = digits(a).iter().zip(digits(b)).map(|(x, y)| (x + y) % p).collect();
            undigits(&s)
        },
        |a, b| undigits(&mul_poly(&digits(a), &digits(b))),
    )?;
    let frobenius = (0..n)
        .map(|x| (1..p).fold(x, |acc, _| ring.mul(acc, x)))
        .collect();
    Ok(GaloisField { ring, p, k, modulus, frobenius })
}

/// Monic `t^k + low(t)` has no monic factor of degree `1..=k/2`.
fn is_irreducible(p: usize, low: &[usize]) -> bool {
    let k = low.len();
    let mut f = low.to_vec();
    f.push(1);
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for x in 0..count {
            let mut g: Vec<usize> = (0..d).map(|i| (x / p.pow(i as u32)) % p).collect();
            g.push(1);
            if poly_rem(p, &f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(p: usize, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - gi) * c) % p;
        }
        r.pop();
    }
    r
}

fn matrix_like(r0: &RingTable, k: usize, upper: bool) -> Result<RingTable> {
    if k == 0 {
        return Err(Error::InvalidArgument("matrix size must be positive".into()));
    }
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper || i <= j)
        .collect();
    let n0 = r0.order();
    let size = (n0 as u128).checked_pow(slots.len() as u32).unwrap_or(u128::MAX);
    cap(if upper { "upper triangular ring" } else { "matrix ring" }, size)?;
    let n = size as usize;
    let slot_of = |i: usize, j: usize| slots.iter().position(|&s| s == (i, j));
    let entries = |mut x: usize| -> Vec<usize> {
        let mut full = vec![r0.zero(); k * k];
        for &(i, j) in &slots {
            full[i * k + j] = x % n0;
            x /= n0;
        }
        full
    };
    let encode = |full: &[usize]| -> usize {
        slots.iter().rev().fold(0, |acc, &(i, j)| acc * n0 + full[i * k + j])
    };
    let labels = (0..n)
        .map(|x| {
            let e = entries(x);
            let rows: Vec<String> = (0..k)
                .map(|i| (0..k).map(|j| r0.label(e[i * k + j]).to_string()).collect::<Vec<_>>().join(","))
                .collect();
            format!("[{}]", rows.join(";"))
        })
        .collect();
    let mut one = vec![r0.zero(); k * k];
    for i in 0..k {
        one[i * k + i] = r0.one();
    }
    let zero = encode(&vec![r0.zero(); k * k]);
    let _ = slot_of;
    RingTable::from_fns(
        labels,
        zero,
        encode(&one),
        format!("{}({k},{})", if upper { "U" } else { "M" }, r0.provenance()),
        |a, b| {
            let (ea, eb) = (entries(a), entries(b));
            let s: Vec<usize> = ea.iter().zip(&eb).map(|(&x, &y)| r0.add(x, y)).collect();
            encode(&s)
        },
        |a, b| {
            let (ea, eb) = (entries(a), entries(b));
            let mut c = vec![r0.zero(); k * k];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = r0.zero();
                    for t in 0..k {
                        acc = r0.add(acc, r0.mul(ea[i * k + t], eb[t * k + j]));
                    }
                    c[i * k + j] = acc;
                }
            }
            encode(&c)
        },
    )
}

/// Full `k x k` matrices over `r0`. Entry `(i, j)` is digit `i k + j` of the
/// element index in base `|r0|`.
pub fn matrix_ring(r0: &RingTable, k: usize) -> Result<RingTable> {
    matrix_like(r0, k, false)
}

/// Upper triangular `k x k` matrices over `r0`.
pub fn upper_triangular(r0: &RingTable, k: usize) -> Result<RingTable> {
    matrix_like(r0, k, true)
}

/// A finite group as a Cayley table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub name: String,
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<usize>,
    pub identity: usize,
}

impl GroupTable {
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let e = self.identity;
        let ok_identity = (0..n).all(|a| self.op(e, a) == a && self.op(a, e) == a);
        let ok_inverse = (0..n).all(|a| (0..n).any(|b| self.op(a, b) == e && self.op(b, a) == e));
        let ok_assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c))))
        });
        if ok_identity && ok_inverse && ok_assoc {
            Ok(())
        } else {
            Err(Error::Structural("group table violates group axioms".into()))
        }
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }
}

/// The quaternion group `{±1, ±i, ±j, ±k}`. Index `2t + s` is `(-1)^s` times
/// the unit `[1, i, j, k][t]`.
pub fn quaternion_group() -> GroupTable {
    // Unit quaternion products: (sign, unit) for units 1,i,j,k.
    const PROD: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
        .collect();
    let mut table = vec![0; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (s, u) = PROD[a / 2][b / 2];
            let sign = (a % 2 + b % 2 + s) % 2;
            table[a * 8 + b] = 2 * u + sign;
        }
    }
    GroupTable { name: "Q8".into(), order: 8, labels, table, identity: 0 }
}

pub fn cyclic_group(n: usize) -> GroupTable {
    GroupTable {
        name: format!("C{n}"),
        order: n,
        labels: (0..n).map(|i| format!("g{i}")).collect(),
        table: (0..n * n).map(|x| (x / n + x % n) % n).collect(),
        identity: 0,
    }
}

/// The group algebra `F[G]` over a finite field `F`. The coefficient of the
/// group element `g` is digit `g` of the element index in base `|F|`.
pub fn group_algebra(field: &RingTable, group: &GroupTable) -> Result<RingTable> {
    group.validate()?;
    let q = field.order();
    let units = field.units();
    if units.len() != q - 1 {
        return Err(Error::InvalidArgument("group algebra base ring must be a field".into()));
    }
    let g = group.order;
    let size = (q as u128).checked_pow(g as u32).unwrap_or(u128::MAX);
    cap("group algebra", size)?;
    let n = size as usize;
    let coeffs = |mut x: usize| -> Vec<usize> {
        (0..g)
            .map(|_| {
                let d = x % q;
                x /= q;
                d
            })
            .collect()
    };
    let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * q + d);
    let labels = (0..n)
        .map(|x| {
            let c = coeffs(x);
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != field.zero())
                .map(|(h, &d)| {
                    let gl = &group.labels[h];
                    let gl = if gl.starts_with('-') { format!("({gl})") } else { gl.clone() };
                    if d == field.one() {
                        gl
                    } else {
                        format!("({})*{gl}", field.label(d))
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let mut one = vec![field.zero(); g];
    one[group.identity] = field.one();
    RingTable::from_fns(
        labels,
        encode(&vec![field.zero(); g]),
        encode(&one),
        format!("GA({},{})", field.provenance(), group.name),
        |a, b| {
            let s: Vec<usize> = coeffs(a).iter().zip(coeffs(b)).map(|(&x, y)| field.add(x, y)).collect();
            encode(&s)
        },
        |a, b| {
            let (ca, cb) = (coeffs(a), coeffs(b));
            let mut out = vec![field.zero(); g];
            for (h1, &x) in ca.iter().enumerate() {
                if x == field.zero() {
                    continue;
                }
                for (h2, &y) in cb.iter().enumerate() {
                    let h = group.op(h1, h2);
                    out[h] = field.add(out[h], field.mul(x, y));
                }
            }
            encode(&out)
        },
    )
}

/// `F_4[x; σ]/(x^2)` with `σ` the Frobenius map: elements `a + b x`,
/// `x a = σ(a) x`. Index is `a + 4 b`.
pub fn skew_quotient_f4() -> Result<RingTable> {
    let f4 = galois(2, 2)?;
    let f = &f4.ring;
    let sigma = &f4.frobenius;
    let labels = (0..16)
        .map(|x| {
            let (a, b) = (x % 4, x / 4);
            let mut terms = Vec::new();
            if a != 0 {
                terms.push(f.label(a).to_string());
            }
            match b {
                0 => {}
                1 => terms.push("x".into()),
                _ => terms.push(format!("({})x", f.label(b))),
            }
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        })
        .collect();
    RingTable::from_fns(
        labels,
        0,
        1,
        "SkewF4x2()",
        |p, q| f.add(p % 4, q % 4) + 4 * f.add(p / 4, q / 4),
        |p, q| {
            let (a, b, c, d) = (p % 4, p / 4, q % 4, q / 4);
            // (a + b x)(c + d x) = ac + (a d + b σ(c)) x
            f.mul(a, c) + 4 * f.add(f.mul(a, d), f.mul(b, sigma[c]))
        },
    )
}

/// An `(A, B)`-bimodule given by explicit tables.
#[derive(Clone, Debug)]
pub struct BimoduleSpec {
    pub labels: Vec<String>,
    /// `m x m` addition table.
    pub add: Vec<usize>,
    pub zero: usize,
    /// `|A| x m`: `left[a * m + x] = a . x`.
    pub left: Vec<usize>,
    /// `m x |B|`: `right[x * |B| + b] = x . b`.
    pub right: Vec<usize>,
}

impl BimoduleSpec {
    pub fn from_fns(
        a: &RingTable,
        b: &RingTable,
        labels: Vec<String>,
        zero: usize,
        add: impl Fn(usize, usize) -> usize,
        left: impl Fn(usize, usize) -> usize,
        right: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let m = labels.len();
        let (na, nb) = (a.order(), b.order());
        Self {
            add: (0..m * m).map(|i| add(i / m, i % m)).collect(),
            left: (0..na * m).map(|i| left(i / m, i % m)).collect(),
            right: (0..m * nb).map(|i| right(i / nb, i % nb)).collect(),
            labels,
            zero,
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn madd(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order() + y]
    }

    pub fn lact(&self, a: usize, x: usize) -> usize {
        self.left[a * self.order() + x]
    }

    pub fn ract(&self, x: usize, b: usize, nb: usize) -> usize {
        self.right[x * nb + b]
    }

    /// Module axioms: abelian group, both actions unital, distributive on both
    /// sides and associative, and the two actions commute.
    pub fn validate(&self, a: &RingTable, b: &RingTable) -> Result<()> {
        let m = self.order();
        let (na, nb) = (a.order(), b.order());
        let err = |msg: String| Err(Error::Structural(format!("bimodule: {msg}")));
        if self.add.len() != m * m || self.left.len() != na * m || self.right.len() != m * nb {
            return err("table dimensions".into());
        }
        if self.add.iter().chain(&self.left).chain(&self.right).any(|&v| v >= m) {
            return err("entry out of range".into());
        }
        let add = |x, y| self.madd(x, y);
        for x in 0..m {
            if add(self.zero, x) != x || !(0..m).any(|y| add(x, y) == self.zero) {
                return err(format!("additive identity/inverse at {x}"));
            }
            for y in 0..m {
                if add(x, y) != add(y, x) {
                    return err(format!("addition not commutative at ({x},{y})"));
                }
                for z in 0..m {
                    if add(add(x, y), z) != add(x, add(y, z)) {
                        return err("addition not associative".into());
                    }
                }
            }
            if self.lact(a.one(), x) != x || self.ract(x, b.one(), nb) != x {
                return err(format!("actions not unital at {x}"));
            }
        }
        for x in 0..m {
            for y in 0..m {
                for r in 0..na {
                    if self.lact(r, add(x, y)) != add(self.lact(r, x), self.lact(r, y)) {
                        return err("left action not additive".into());
                    }
                }
                for s in 0..nb {
                    if self.ract(add(x, y), s, nb) != add(self.ract(x, s, nb), self.ract(y, s, nb)) {
                        return err("right action not additive".into());
                    }
                }
            }
            for r in 0..na {
                for r2 in 0..na {
                    if self.lact(a.add(r, r2), x) != add(self.lact(r, x), self.lact(r2, x)) {
                        return err("left action not distributive".into());
                    }
                    if self.lact(a.mul(r, r2), x) != self.lact(r, self.lact(r2, x)) {
                        return err("left action not associative".into());
                    }
                }
                for s in 0..nb {
                    if self.ract(self.lact(r, x), s, nb) != self.lact(r, self.ract(x, s, nb)) {
                        return err("actions do not commute".into());
                    }
                }
            }
            for s in 0..nb {
                for s2 in 0..nb {
                    if self.ract(x, b.add(s, s2), nb) != add(self.ract(x, s, nb), self.ract(x, s2, nb)) {
                        return err("right action not distributive".into());
                    }
                    if self.ract(x, b.mul(s, s2), nb) != self.ract(self.ract(x, s, nb), s2, nb) {
                        return err("right action not associative".into());
                    }
                }
            }
        }
        Ok(())
    }
}

/// The formal triangular ring `[[A, M], [0, B]]` with product
/// `(a, m, b)(a', m', b') = (a a', a m' + m b', b b')`.
/// The element `(a, m, b)` has index `a + |A| (m + |M| b)`.
pub fn formal_triangular(a: &RingTable, b: &RingTable, module: &BimoduleSpec) -> Result<RingTable> {
    module.validate(a, b)?;
    let (na, nm, nb) = (a.order(), module.order(), b.order());
    cap("formal triangular ring", (na * nm * nb) as u128)?;
    let n = na * nm * nb;
    let split = |x: usize| (x % na, (x / na) % nm, x / (na * nm));
    let enc = |ea: usize, em: usize, eb: usize| ea + na * (em + nm * eb);
    let labels = (0..n)
        .map(|x| {
            let (ea, em, eb) = split(x);
            format!("[{},{};0,{}]", a.label(ea), module.labels[em], b.label(eb))
        })
        .collect();
    RingTable::from_fns(
        labels,
        enc(a.zero(), module.zero, b.zero()),
        enc(a.one(), module.zero, b.one()),
        format!("Tri({},{})", a.provenance(), b.provenance()),
        |x, y| {
            let ((a1, m1, b1), (a2, m2, b2)) = (split(x), split(y));
            enc(a.add(a1, a2), module.madd(m1, m2), b.add(b1, b2))
        },
        |x, y| {
            let ((a1, m1, b1), (a2, m2, b2)) = (split(x), split(y));
            let m = module.madd(module.lact(a1, m2), module.ract(m1, b2, nb));
            enc(a.mul(a1, a2), m, b.mul(b1, b2))
        },
    )
}

/// The order-64 ring on `F_2[x]/(x^2) ⊕ F_2[x]/(x^2) ⊕ F_2 ⊕ F_2` with
/// orthogonal idempotents `(1,0,0,0)`, `(0,1,0,0)` whose off-diagonal pieces
/// multiply into the radicals of the diagonal pieces. It is NI, reflexive and
/// not abelian.
///
/// Coordinates `(α + βx, γ + δx, ε, ζ)`; the index is
/// `α + 2β + 4γ + 8δ + 16ε + 32ζ`.
pub fn reflexive_nonabelian_64() -> Result<RingTable> {
    let bits = |x: usize| -> [usize; 6] { [x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1, (x >> 4) & 1, (x >> 5) & 1] };
    let enc = |c: [usize; 6]| c.iter().enumerate().map(|(i, &b)| (b & 1) << i).sum::<usize>();
    let dual = |c0: usize, c1: usize| match (c0, c1) {
        (0, 0) => "0".to_string(),
        (1, 0) => "1".into(),
        (0, 1) => "x".into(),
        _ => "1+x".into(),
    };
    let labels = (0..64)
        .map(|x| {
            let c = bits(x);
            format!("({},{},{},{})", dual(c[0], c[1]), dual(c[2], c[3]), c[4], c[5])
        })
        .collect();
    RingTable::from_fns(
        labels,
        0,
        enc([1, 0, 1, 0, 0, 0]),
        "Ex3_11()",
        |x, y| x ^ y,
        |x, y| {
            let [a1, b1, c1, d1, e1, z1] = bits(x);
            let [a2, b2, c2, d2, e2, z2] = bits(y);
            // (a + b x)(a' + b' x) = a a' + (a b' + b a') x, plus the ε ζ' x term.
            let first = [a1 * a2, a1 * b2 + b1 * a2 + e1 * z2];
            let second = [c1 * c2, c1 * d2 + d1 * c2 + e2 * z1];
            enc([first[0], first[1], second[0], second[1], a1 * e2 + c2 * e1, c1 * z2 + a2 * z1])
        },
    )
}

/// A ring given on a basis of cyclic additive generators by the products of
/// basis pairs.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub basis_names: Vec<String>,
    /// Additive order of each basis element.
    pub moduli: Vec<usize>,
    /// `products[i][j]`: coordinates of `b_i b_j`.
    pub products: Vec<Vec<Vec<usize>>>,
    /// Coordinates of the identity.
    pub one: Vec<usize>,
}

/// Materializes a ring from structure constants. The element with
/// coordinates `c` has index `c_0 + m_0 (c_1 + m_1 (c_2 + ...))`.
pub fn from_structure_constants(sc: &StructureConstants) -> Result<RingTable> {
    let r = sc.moduli.len();
    if sc.basis_names.len() != r
        || sc.one.len() != r
        || sc.products.len() != r
        || sc.products.iter().any(|row| row.len() != r || row.iter().any(|v| v.len() != r))
    {
        return Err(Error::Structural("structure constant dimensions disagree".into()));
    }
    if sc.moduli.iter().any(|&m| m < 2) {
        return Err(Error::Structural("basis moduli must be at least 2".into()));
    }
    let size = sc.moduli.iter().try_fold(1u128, |acc, &m| acc.checked_mul(m as u128)).unwrap_or(u128::MAX);
    cap("structure-constant ring", size)?;
    let n = size as usize;
    let coords = |mut x: usize| -> Vec<usize> {
        sc.moduli
            .iter()
            .map(|&m| {
                let d = x % m;
                x /= m;
                d
            })
            .collect()
    };
    let enc = |c: &[usize]| -> usize {
        c.iter().zip(&sc.moduli).rev().fold(0, |acc, (&d, &m)| acc * m + d % m)
    };
    let labels = (0..n)
        .map(|x| {
            let terms: Vec<String> = coords(x)
                .iter()
                .zip(&sc.basis_names)
                .filter(|(&c, _)| c != 0)
                .map(|(&c, name)| if c == 1 { name.clone() } else { format!("{c}*{name}") })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        })
        .collect();
    RingTable::from_fns(
        labels,
        0,
        enc(&sc.one),
        "structure constants",
        |x, y| {
            let s: Vec<usize> = coords(x).iter().zip(coords(y)).map(|(a, b)| a + b).collect();
            enc(&s)
        },
        |x, y| {
            let (cx, cy) = (coords(x), coords(y));
            let mut out = vec![0usize; r];
            for i in 0..r {
                if cx[i] == 0 {
                    continue;
                }
                for j in 0..r {
                    if cy[j] == 0 {
                        continue;
                    }
                    for (t, o) in out.iter_mut().enumerate() {
                        *o = (*o + cx[i] * cy[j] * sc.products[i][j][t]) % sc.moduli[t];
                    }
                }
            }
            enc(&out)
        },
    )
}

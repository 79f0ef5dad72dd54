//! Exhaustive enumeration of unital rings of small prime-power order.
//!
//! A unital ring on an abelian group `G` is the same thing as a map
//! `x -> L(x)` into additive endomorphisms of `G` with `L(1) = id`,
//! `L(x)(1) = x` and `L(xy) = L(x) L(y)`. The search fixes `1` as the first
//! basis vector (every element of maximal additive order generates a direct
//! summand, and automorphisms of `G` act transitively on them), then grows
//! the set `H` of elements whose left multiplication is known. Choosing
//! `L(z)` for one new element `z` and closing `H` under products and sums
//! either fills the whole group or fails on an associativity clash, which
//! prunes early.

use crate::error::{Error, Result};
use crate::properties::{profile, PropertyProfile, PROPERTY_KEYS};
use crate::ring::iso::{element_invariants, fingerprint_with, isomorphism_search, ElementInvariant, Fingerprint, IsoOutcome, DEFAULT_BUDGET};
use crate::ring::{prime_factors, RingTable};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Orders enumerated by default.
pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];
/// Orders that need the long-run flag.
pub const DEEP_ORDERS: [usize; 1] = [16];

#[derive(Clone, Debug, Default)]
pub struct EnumOptions {
    /// Allow the long-running orders.
    pub deep: bool,
    pub noncommutative_only: bool,
    /// Shuffle the branching order at every node (results must not change).
    pub shuffle_seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub order: usize,
    /// One representative per isomorphism class, sorted by fingerprint.
    pub rings: Vec<RingTable>,
    /// Labelled multiplication tables found before deduplication.
    pub labelled: usize,
}

/// Finite abelian p-group `⊕ Z_{p^{a_i}}` with `a_0 >= a_1 >= ...`.
struct Group {
    n: usize,
    exps: Vec<u32>,
    radix: Vec<usize>,
    moduli: Vec<usize>,
    coords: Vec<Vec<usize>>,
    add: Vec<u8>,
}

impl Group {
    fn new(p: usize, exps: Vec<u32>) -> Self {
        let moduli: Vec<usize> = exps.iter().map(|&a| p.pow(a)).collect();
        let n: usize = moduli.iter().product();
        let mut radix = Vec::with_capacity(moduli.len());
        let mut acc = 1;
        for &m in &moduli {
            radix.push(acc);
            acc *= m;
        }
        let coords: Vec<Vec<usize>> = (0..n).map(|x| moduli.iter().zip(&radix).map(|(&m, &r)| x / r % m).collect()).collect();
        let index = |c: &[usize]| c.iter().zip(&radix).map(|(a, r)| a * r).sum::<usize>();
        let mut add = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                let c: Vec<usize> = coords[x].iter().zip(&coords[y]).zip(&moduli).map(|((a, b), m)| (a + b) % m).collect();
                add[x * n + y] = index(&c) as u8;
            }
        }
        Self { n, exps, radix, moduli, coords, add }
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y] as usize
    }

    fn scal(&self, t: usize, x: usize) -> usize {
        self.coords[x].iter().zip(&self.moduli).zip(&self.radix).map(|((c, m), r)| c * t % m * r).sum()
    }

    fn generator(&self, i: usize) -> usize {
        self.radix[i]
    }

    /// Elements killed by `m`.
    fn torsion(&self, m: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.scal(m, x) == 0).collect()
    }

    /// The additive endomorphism sending generator `i` to `images[i]`.
    fn hom(&self, images: &[usize]) -> Vec<u8> {
        (0..self.n)
            .map(|x| {
                self.coords[x]
                    .iter()
                    .zip(images)
                    .fold(0, |acc, (&c, &img)| self.add(acc, self.scal(c, img))) as u8
            })
            .collect()
    }

    fn label(&self, x: usize) -> String {
        const NAMES: [&str; 4] = ["", "a", "b", "c"];
        let terms: Vec<String> = self.coords[x]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, _) => c.to_string(),
                (_, 1) => NAMES[i].to_string(),
                _ => format!("{c}{}", NAMES[i]),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// Partial left-regular representation.
#[derive(Clone)]
struct State {
    rows: Vec<u8>,
    known: Vec<bool>,
    gens: Vec<usize>,
}

impl State {
    fn initial(g: &Group) -> Self {
        let n = g.n;
        let mut s = Self { rows: vec![0; n * n], known: vec![false; n], gens: vec![g.generator(0)] };
        for t in 0..g.moduli[0] {
            let x = g.scal(t, g.generator(0));
            s.known[x] = true;
            for y in 0..n {
                s.rows[x * n + y] = g.scal(t, y) as u8;
            }
        }
        s
    }

    fn row(&self, n: usize, x: usize) -> &[u8] {
        &self.rows[x * n..(x + 1) * n]
    }

    /// Adds the generator `z` with `L(z) = row` and closes.
    fn adjoin(&mut self, g: &Group, z: usize, row: &[u8]) -> bool {
        if !self.extend(g, z, row) {
            return false;
        }
        self.gens.push(z);
        self.close(g)
    }

    /// Adds `z` (not yet known) with `L(z) = row`, together with all sums.
    fn extend(&mut self, g: &Group, z: usize, row: &[u8]) -> bool {
        let n = g.n;
        let (mut t0, mut cur) = (1, z);
        while !self.known[cur] {
            cur = g.add(cur, z);
            t0 += 1;
        }
        if (0..n).any(|y| self.rows[cur * n + y] as usize != g.scal(t0, row[y] as usize)) {
            return false;
        }
        let old: Vec<usize> = (0..n).filter(|&h| self.known[h]).collect();
        for t in 1..t0 {
            let tz = g.scal(t, z);
            for &h in &old {
                let el = g.add(h, tz);
                for y in 0..n {
                    self.rows[el * n + y] = g.add(self.rows[h * n + y] as usize, g.scal(t, row[y] as usize)) as u8;
                }
                self.known[el] = true;
            }
        }
        true
    }

    /// Enforces `L(xy) = L(x) L(y)` on generator pairs, adding new products.
    fn close(&mut self, g: &Group) -> bool {
        let n = g.n;
        let mut k = 0;
        let mut comp = vec![0u8; n];
        while k < self.gens.len() {
            let mut i = 0;
            while i <= k {
                for (x, y) in [(self.gens[i], self.gens[k]), (self.gens[k], self.gens[i])] {
                    let prod = self.rows[x * n + y] as usize;
                    for (z, c) in comp.iter_mut().enumerate() {
                        *c = self.rows[x * n + self.rows[y * n + z] as usize];
                    }
                    if self.known[prod] {
                        if self.row(n, prod) != comp.as_slice() {
                            return false;
                        }
                    } else {
                        if !self.extend(g, prod, &comp) {
                            return false;
                        }
                        self.gens.push(prod);
                    }
                }
                i += 1;
            }
            k += 1;
        }
        true
    }
}

/// Candidate rows `L(z)`. Whenever `x` and `xz` are both known,
/// associativity forces `L(x) L(z) = L(xz)`, which is checked generator by
/// generator before taking the product of the choices.
fn candidates(g: &Group, z: usize, torsion: &[Vec<usize>], state: &State) -> Vec<Vec<u8>> {
    let n = g.n;
    let pairs: Vec<(usize, usize)> =
        (0..n).filter(|&x| state.known[x]).map(|x| (x, state.rows[x * n + z] as usize)).filter(|&(_, xz)| state.known[xz]).collect();
    let allowed = |k: usize, v: usize| pairs.iter().all(|&(x, xz)| state.rows[x * n + v] == state.rows[xz * n + g.generator(k)]);
    let mut images = vec![vec![z]];
    for (k, t) in torsion.iter().enumerate().skip(1) {
        let choices: Vec<usize> = t.iter().copied().filter(|&v| allowed(k, v)).collect();
        images = images
            .into_iter()
            .flat_map(|im| {
                choices.iter().map(move |&x| {
                    let mut v = im.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    images.iter().map(|im| g.hom(im)).collect()
}

fn search(g: &Group, torsion: &[Vec<usize>], state: State, seed: Option<u64>, out: &mut Vec<Vec<u8>>) {
    let Some(z) = (1..g.exps.len()).map(|i| g.generator(i)).find(|&z| !state.known[z]) else {
        out.push(state.rows);
        return;
    };
    let mut cands = candidates(g, z, torsion, &state);
    if let Some(s) = seed {
        let known = state.known.iter().filter(|&&k| k).count() as u64;
        cands.shuffle(&mut StdRng::seed_from_u64(s ^ (known << 32) ^ z as u64));
    }
    for row in cands {
        let mut s = state.clone();
        if s.adjoin(g, z, &row) {
            search(g, torsion, s, seed, out);
        }
    }
}

/// Every labelled unital multiplication on the group with `1` = first generator.
fn labelled_tables(g: &Group, seed: Option<u64>) -> Vec<Vec<u8>> {
    let torsion: Vec<Vec<usize>> = g.moduli.iter().map(|&m| g.torsion(m)).collect();
    let start = State::initial(g);
    let Some(z) = (1..g.exps.len()).map(|i| g.generator(i)).find(|&z| !start.known[z]) else {
        return vec![start.rows];
    };
    let mut cands = candidates(g, z, &torsion, &start);
    if let Some(s) = seed {
        cands.shuffle(&mut StdRng::seed_from_u64(s));
    }
    cands
        .into_par_iter()
        .flat_map_iter(|row| {
            let mut out = Vec::new();
            let mut s = start.clone();
            if s.adjoin(g, z, &row) {
                search(g, &torsion, s, seed, &mut out);
            }
            out
        })
        .collect()
}

fn partitions(m: u32, max: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=m.min(max)).rev() {
        for mut rest in partitions(m - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One representative per isomorphism class of unital rings of `order`.
pub fn enumerate_unital(order: usize) -> Result<Vec<RingTable>> {
    Ok(enumerate(order, &EnumOptions::default())?.rings)
}

pub fn enumerate(order: usize, opts: &EnumOptions) -> Result<Enumeration> {
    if !SUPPORTED_ORDERS.contains(&order) && !(opts.deep && DEEP_ORDERS.contains(&order)) {
        return Err(if DEEP_ORDERS.contains(&order) {
            Error::Unsupported(format!("order {order} needs the deep flag"))
        } else {
            Error::Unsupported(format!("enumeration of order {order} (supported: 2, 3, 4, 5, 7, 8, 9; 16 with the deep flag)"))
        });
    }
    let p = prime_factors(order)[0];
    let m = order.ilog(p);

    let mut tables: Vec<(Vec<u8>, usize)> = Vec::new();
    let groups: Vec<Group> = partitions(m, m).into_iter().map(|e| Group::new(p, e)).collect();
    for (gi, g) in groups.iter().enumerate() {
        tables.extend(labelled_tables(g, opts.shuffle_seed).into_iter().map(|t| (t, gi)));
    }
    let labelled = tables.len();

    let rings: Vec<(RingTable, Fingerprint, Vec<ElementInvariant>)> = tables
        .into_par_iter()
        .map(|(mul, gi)| {
            let g = &groups[gi];
            let labels = (0..g.n).map(|x| g.label(x)).collect();
            let add = g.add.iter().map(|&x| x as u16).collect();
            let mul = mul.into_iter().map(u16::from).collect();
            let prov = format!("enumerated order {order}");
            let r = RingTable::unchecked(labels, add, mul, 0, g.generator(0), prov).expect("well-formed tables");
            let inv = element_invariants(&r);
            let f = fingerprint_with(&r, &inv);
            (r, f, inv)
        })
        .filter(|(r, _, _)| !opts.noncommutative_only || !r.is_commutative())
        .collect();

    let mut buckets: BTreeMap<Fingerprint, Vec<(RingTable, Vec<ElementInvariant>)>> = BTreeMap::new();
    for (r, f, inv) in rings {
        buckets.entry(f).or_default().push((r, inv));
    }
    let classes: Vec<Vec<RingTable>> = buckets
        .into_par_iter()
        .map(|(_, members)| {
            let mut reps: Vec<(RingTable, Vec<ElementInvariant>)> = Vec::new();
            for (r, inv) in members {
                let mut seen = false;
                for (rep, rinv) in &reps {
                    match isomorphism_search(&r, rep, &inv, rinv, DEFAULT_BUDGET) {
                        IsoOutcome::Isomorphic(_) => {
                            seen = true;
                            break;
                        }
                        IsoOutcome::NotIsomorphic(_) => {}
                        IsoOutcome::Inconclusive => {
                            return Err(Error::Internal("isomorphism budget exhausted during deduplication".into()));
                        }
                    }
                }
                if !seen {
                    reps.push((r, inv));
                }
            }
            Ok(reps.into_iter().map(|(r, _)| r).collect())
        })
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for (k, r) in classes.into_iter().flatten().enumerate() {
        let prov = format!("enumerated order {order} class {}", k + 1);
        let r = RingTable::new(r.labels().to_vec(), r.add_table().to_vec(), r.mul_table().to_vec(), r.zero(), r.one(), prov)?;
        out.push(r);
    }
    Ok(Enumeration { order, rings: out, labelled })
}

/// Property profiles of a list of rings, aggregated by which properties hold.
#[derive(Clone, Debug)]
pub struct Census {
    pub profiles: Vec<PropertyProfile>,
    /// Set of holding property keys, with the number of rings showing it.
    pub rows: Vec<(Vec<&'static str>, usize)>,
}

impl Census {
    pub fn total(&self) -> usize {
        self.profiles.len()
    }

    pub fn count(&self, pred: impl Fn(&PropertyProfile) -> bool) -> usize {
        self.profiles.iter().filter(|p| pred(p)).count()
    }

    pub fn non_ni(&self) -> usize {
        self.count(|p| !p.ni)
    }

    pub fn noncommutative(&self) -> usize {
        self.count(|p| !p.commutative)
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rings            {}", self.total())?;
        writeln!(f, "noncommutative   {}", self.noncommutative())?;
        writeln!(f, "non-NI           {}", self.non_ni())?;
        writeln!(f, "local            {}", self.count(|p| p.local))?;
        writeln!(f, "count  properties")?;
        for (keys, c) in &self.rows {
            let keys = if keys.is_empty() { "-".to_string() } else { keys.join(",") };
            writeln!(f, "{c:>5}  {keys}")?;
        }
        Ok(())
    }
}

pub fn taxonomy_census(rings: &[RingTable]) -> Census {
    let profiles: Vec<PropertyProfile> = rings.par_iter().map(profile).collect();
    let mut counts: HashMap<Vec<&'static str>, usize> = HashMap::new();
    for p in &profiles {
        let keys: Vec<&'static str> = PROPERTY_KEYS.iter().copied().filter(|k| p.get(k) == Some(true)).collect();
        *counts.entry(keys).or_default() += 1;
    }
    let mut rows: Vec<_> = counts.into_iter().collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Census { profiles, rows }
}

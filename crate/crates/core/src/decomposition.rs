//! Peirce decomposition along lifted primitive central idempotents of `R/J`.

use crate::error::{Error, Result};
use crate::properties::{self, PropertyProfile};
use crate::radicals::jacobson_radical;
use crate::ring::{ElementSet, RingTable};
use std::fmt;

/// `e R e` as a ring with unit `e`, plus its embedding into `R`.
#[derive(Clone, Debug)]
pub struct Component {
    pub ring: RingTable,
    /// `embedding[i]` is the element of `R` that element `i` of the component is.
    pub embedding: Vec<usize>,
    pub local: bool,
    /// The quotient by its radical has no nontrivial central idempotents.
    pub primary: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub idempotents: Vec<usize>,
    pub components: Vec<Component>,
    /// `modules[i][j] = e_i R e_j`.
    pub modules: Vec<Vec<ElementSet>>,
    /// `⊕ e_i R e_i`.
    pub s: ElementSet,
    /// `⊕_{i != j} e_i R e_j`.
    pub m: ElementSet,
    pub all_components_local: bool,
    pub m_nonzero: bool,
    pub m_square_zero: bool,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// Splits `x` into its `S` and `M` parts.
    pub fn split(&self, r: &RingTable, x: usize) -> (usize, usize) {
        let mut s = r.zero();
        let mut m = r.zero();
        for (i, &ei) in self.idempotents.iter().enumerate() {
            for (j, &ej) in self.idempotents.iter().enumerate() {
                let part = r.mul3(ei, x, ej);
                if i == j {
                    s = r.add(s, part);
                } else {
                    m = r.add(m, part);
                }
            }
        }
        (s, m)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "idempotents      {}", self.idempotents.len())?;
        for (i, c) in self.components.iter().enumerate() {
            writeln!(
                f,
                "component {}      order {} local={} primary={}",
                i + 1,
                c.ring.order(),
                c.local,
                c.primary
            )?;
        }
        for (i, row) in self.modules.iter().enumerate() {
            for (j, mij) in row.iter().enumerate() {
                if i != j {
                    writeln!(f, "|M_{}{}|            {}", i + 1, j + 1, mij.len())?;
                }
            }
        }
        writeln!(f, "|S|              {}", self.s.len())?;
        writeln!(f, "|M|              {}", self.m.len())?;
        writeln!(f, "all_components_local={}", self.all_components_local)?;
        writeln!(f, "m_nonzero={}", self.m_nonzero)?;
        writeln!(f, "m_square_zero={}", self.m_square_zero)
    }
}

/// Coset index of every element, numbering cosets by their smallest member
/// (the numbering used by [`RingTable::quotient`]).
fn coset_map(r: &RingTable, ideal: &ElementSet) -> Vec<usize> {
    let n = r.order();
    let mut coset = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if coset[x] == usize::MAX {
            for i in ideal.iter() {
                coset[r.add(x, i)] = next;
            }
            next += 1;
        }
    }
    coset
}

/// Central idempotents `e != 0` with no central idempotent strictly below.
pub fn primitive_central_idempotents(r: &RingTable) -> Vec<usize> {
    let central: Vec<usize> = r.idempotents().iter().filter(|&e| r.is_central(e)).collect();
    central
        .iter()
        .copied()
        .filter(|&e| e != r.zero())
        .filter(|&e| !central.iter().any(|&f| f != r.zero() && f != e && r.mul(e, f) == f))
        .collect()
}

/// The corner ring `e R e` with unit `e`.
pub fn corner_ring(r: &RingTable, e: usize) -> Result<Component> {
    let n = r.order();
    let members = ElementSet::from_members(n, (0..n).map(|x| r.mul3(e, x, e)));
    let embedding = members.members();
    let mut index = vec![usize::MAX; n];
    for (i, &x) in embedding.iter().enumerate() {
        index[x] = i;
    }
    let labels = embedding.iter().map(|&x| r.label(x).to_string()).collect();
    let ring = RingTable::from_fns(
        labels,
        index[r.zero()],
        index[e],
        format!("corner({}, {})", r.provenance(), r.label(e)),
        |a, b| index[r.add(embedding[a], embedding[b])],
        |a, b| index[r.mul(embedding[a], embedding[b])],
    )
    .map_err(|err| Error::Internal(format!("corner ring at {}: {err}", r.label(e))))?;
    let local = properties::is_local(&ring);
    let primary = {
        let j = jacobson_radical(&ring);
        let q = ring.quotient(&j)?;
        primitive_central_idempotents(&q).len() == 1
    };
    Ok(Component { ring, embedding, local, primary })
}

/// Lifts the primitive central idempotents of `R/J` to orthogonal idempotents
/// of `R` summing to 1 and reads off the Peirce pieces.
pub fn peirce(r: &RingTable) -> Result<Decomposition> {
    let n = r.order();
    let j = jacobson_radical(r);
    let q = r.quotient(&j)?;
    let coset = coset_map(r, &j);
    let targets = primitive_central_idempotents(&q);
    if targets.is_empty() {
        return Err(Error::Internal("residue ring has no primitive central idempotents".into()));
    }

    let idem = r.idempotents();
    let mut remaining = r.one();
    let mut lifted = Vec::with_capacity(targets.len());
    for (i, &t) in targets.iter().enumerate() {
        let e = if i + 1 == targets.len() {
            remaining
        } else {
            idem.iter()
                .find(|&e| coset[e] == t && r.mul(remaining, e) == e && r.mul(e, remaining) == e)
                .ok_or_else(|| Error::Internal(format!("no idempotent lifts residue idempotent {}", q.label(t))))?
        };
        if !r.is_idempotent(e) || coset[e] != t {
            return Err(Error::Internal("final complement is not a lift".into()));
        }
        lifted.push(e);
        remaining = r.sub(remaining, e);
    }

    let modules: Vec<Vec<ElementSet>> = lifted
        .iter()
        .map(|&ei| {
            lifted
                .iter()
                .map(|&ej| ElementSet::from_members(n, (0..n).map(|x| r.mul3(ei, x, ej))))
                .collect()
        })
        .collect();
    let components = lifted.iter().map(|&e| corner_ring(r, e)).collect::<Result<Vec<_>>>()?;

    let mut d = Decomposition {
        idempotents: lifted,
        components,
        modules,
        s: ElementSet::empty(n),
        m: ElementSet::empty(n),
        all_components_local: false,
        m_nonzero: false,
        m_square_zero: false,
    };
    let mut s = ElementSet::empty(n);
    let mut m = ElementSet::empty(n);
    for x in 0..n {
        let (sx, mx) = d.split(r, x);
        s.insert(sx);
        m.insert(mx);
    }
    d.m_square_zero = m.iter().all(|a| m.iter().all(|b| r.mul(a, b) == r.zero()));
    d.m_nonzero = m.len() > 1;
    d.all_components_local = d.components.iter().all(|c| c.local);
    d.s = s;
    d.m = m;

    // Invariants.
    for (i, &a) in d.idempotents.iter().enumerate() {
        for (k, &b) in d.idempotents.iter().enumerate() {
            if i != k && r.mul(a, b) != r.zero() {
                return Err(Error::Internal("lifted idempotents are not orthogonal".into()));
            }
        }
    }
    let sum = d.idempotents.iter().fold(r.zero(), |acc, &e| r.add(acc, e));
    if sum != r.one() {
        return Err(Error::Internal("lifted idempotents do not sum to 1".into()));
    }
    let product: usize = d.modules.iter().flatten().map(ElementSet::len).product();
    if product != n {
        return Err(Error::Internal(format!("Peirce pieces have total size {product}, ring has {n}")));
    }
    if !d.m.is_subset(&j) {
        return Err(Error::Internal("off-diagonal part is not inside the radical".into()));
    }
    Ok(d)
}

/// When `M^2 = 0`, checks that with `x = s + u`, `y = t + v` the product is
/// `(st, sv + ut)` in `S ⊕ M` for every pair. `None` when `M^2 != 0`.
pub fn square_zero_model_holds(r: &RingTable, d: &Decomposition) -> Option<bool> {
    if !d.m_square_zero {
        return None;
    }
    let n = r.order();
    let parts: Vec<(usize, usize)> = (0..n).map(|x| d.split(r, x)).collect();
    Some((0..n).all(|x| {
        (0..n).all(|y| {
            let ((s, u), (t, v)) = (parts[x], parts[y]);
            parts[r.mul(x, y)] == (r.mul(s, t), r.add(r.mul(s, v), r.mul(u, t)))
        })
    }))
}

/// A prediction drawn from the decomposition compared with the computed property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prediction {
    /// `None` when the premise of an implication does not hold.
    pub predicted: Option<bool>,
    pub actual: bool,
}

impl Prediction {
    pub fn agrees(&self) -> bool {
        self.predicted.map_or(true, |p| p == self.actual)
    }
}

/// Structural statements tying the decomposition to ring properties.
#[derive(Clone, Debug)]
pub struct StructuralChecks {
    /// abelian ⇔ (M = 0 and every component local).
    pub abelian: Prediction,
    /// NI ⇔ every component local.
    pub ni: Prediction,
    /// (M ≠ 0 and M² = 0) ⇒ not reflexive; `predicted` is "reflexive".
    pub reflexive: Prediction,
    pub m_inside_radical: bool,
}

impl StructuralChecks {
    pub fn all_agree(&self) -> bool {
        self.abelian.agrees() && self.ni.agrees() && self.reflexive.agrees() && self.m_inside_radical
    }

    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.abelian.agrees() {
            v.push("abelian <=> (M = 0 and components local)");
        }
        if !self.ni.agrees() {
            v.push("NI <=> components local");
        }
        if !self.reflexive.agrees() {
            v.push("(M != 0 and M^2 = 0) => not reflexive");
        }
        if !self.m_inside_radical {
            v.push("M inside J");
        }
        v
    }
}

impl fmt::Display for StructuralChecks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Prediction| match p.predicted {
            None => format!("premise fails (actual {})", p.actual),
            Some(x) => format!("predicted {x}, actual {}, {}", p.actual, if p.agrees() { "agree" } else { "DISAGREE" }),
        };
        writeln!(f, "abelian check    {}", show(&self.abelian))?;
        writeln!(f, "ni check         {}", show(&self.ni))?;
        writeln!(f, "reflexive check  {}", show(&self.reflexive))?;
        writeln!(f, "M inside J       {}", self.m_inside_radical)
    }
}

pub fn structural_checks(r: &RingTable, d: &Decomposition, p: &PropertyProfile) -> StructuralChecks {
    let j = jacobson_radical(r);
    StructuralChecks {
        abelian: Prediction { predicted: Some(!d.m_nonzero && d.all_components_local), actual: p.abelian },
        ni: Prediction { predicted: Some(d.all_components_local), actual: p.ni },
        reflexive: Prediction {
            predicted: (d.m_nonzero && d.m_square_zero).then_some(false),
            actual: p.reflexive,
        },
        m_inside_radical: d.m.is_subset(&j),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{cyclic, matrix_ring, reflexive_nonabelian_64, upper_triangular};
    use crate::properties::profile;

    #[test]
    fn local_ring_is_one_piece() {
        let z4 = cyclic(4).unwrap();
        let d = peirce(&z4).unwrap();
        assert_eq!(d.len(), 1);
        assert!(!d.m_nonzero && d.m_square_zero);
        assert_eq!(square_zero_model_holds(&z4, &d), Some(true));
        let c = structural_checks(&z4, &d, &profile(&z4));
        assert!(c.all_agree());
        assert_eq!(c.abelian.predicted, Some(true));
    }

    #[test]
    fn upper_triangular_pieces() {
        let u = upper_triangular(&cyclic(2).unwrap(), 2).unwrap();
        let d = peirce(&u).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.components.iter().all(|c| c.ring.order() == 2));
        let sizes: Vec<usize> = [(0, 1), (1, 0)].iter().map(|&(i, j)| d.modules[i][j].len()).collect();
        assert!(sizes == vec![2, 1] || sizes == vec![1, 2]);
        assert!(d.m_square_zero && d.m_nonzero);
        assert_eq!(square_zero_model_holds(&u, &d), Some(true));
        let c = structural_checks(&u, &d, &profile(&u));
        assert_eq!(c.reflexive.predicted, Some(false));
        assert!(c.all_agree());
    }

    #[test]
    fn matrix_ring_single_nonlocal_component() {
        let m = matrix_ring(&cyclic(2).unwrap(), 2).unwrap();
        let d = peirce(&m).unwrap();
        assert_eq!(d.len(), 1);
        assert!(!d.all_components_local);
        assert!(d.components[0].primary);
        let c = structural_checks(&m, &d, &profile(&m));
        assert_eq!(c.ni.predicted, Some(false));
        assert!(c.all_agree());
    }

    #[test]
    fn order_64_example() {
        let r = reflexive_nonabelian_64().unwrap();
        let d = peirce(&r).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.components.iter().all(|c| c.ring.order() == 4));
        assert_eq!(d.modules[0][1].len(), 2);
        assert_eq!(d.modules[1][0].len(), 2);
        assert!(!d.m_square_zero);
        assert_eq!(square_zero_model_holds(&r, &d), None);
    }
}

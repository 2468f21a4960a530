//! Multi-modal antitone algebras: a Boolean algebra with a box `□_b` for
//! every `b` in a Boolean subalgebra `B` of indices.

use std::collections::BTreeMap;

use crate::boolean::{phi, submasks, supermasks, Elem, ElemSet, FinBoolAlg, Filter};
use crate::conditional::{box_preimage, check_law, d_set, require_ca, AxiomId, CondAlg};
use crate::duality::em;
use crate::error::{Error, Result};
use crate::verdict::{Binding, Value, Verdict};

/// Boxes are explicit tables keyed by index element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MMAlg {
    base: FinBoolAlg,
    index_set: ElemSet,
    boxes: BTreeMap<Elem, Vec<Elem>>,
}

impl MMAlg {
    /// Checks that `index_set` is a Boolean subalgebra and that there is one
    /// total box table per index.
    pub fn new(base: FinBoolAlg, index_set: ElemSet, boxes: BTreeMap<Elem, Vec<Elem>>) -> Result<Self> {
        let idx: Vec<Elem> = index_set.iter().collect();
        if idx.iter().any(|&b| !base.contains(b)) {
            return Err(Error::input("index set has out-of-range elements"));
        }
        let closed = index_set.contains(base.zero())
            && index_set.contains(base.top())
            && idx.iter().all(|&a| {
                index_set.contains(base.complement(a))
                    && idx.iter().all(|&b| index_set.contains(a & b) && index_set.contains(a | b))
            });
        if !closed {
            return Err(Error::input("index set is not a Boolean subalgebra"));
        }
        if boxes.keys().copied().ne(idx.iter().copied()) {
            return Err(Error::input("box family must have exactly one table per index"));
        }
        for (b, t) in &boxes {
            if t.len() != base.size() || t.iter().any(|&e| !base.contains(e)) {
                return Err(Error::input(format!("box table for index {b:#b} is malformed")));
            }
        }
        Ok(MMAlg { base, index_set, boxes })
    }

    pub fn base(&self) -> &FinBoolAlg {
        &self.base
    }

    pub fn index_set(&self) -> ElemSet {
        self.index_set
    }

    pub fn is_full(&self) -> bool {
        self.index_set == self.base.all_elements()
    }

    /// `□_b(a)`; `b` must be an index.
    pub fn apply(&self, b: Elem, a: Elem) -> Elem {
        self.boxes[&b][a as usize]
    }

    pub fn box_table(&self, b: Elem) -> Result<&[Elem]> {
        self.boxes
            .get(&b)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::input(format!("{b:#b} is not in the index set")))
    }
}

/// `□_a(b) := a ⇀ b`, over the whole algebra.
pub fn to_mma(alg: &CondAlg) -> Result<MMAlg> {
    require_ca(alg, "to_mma")?;
    let base = *alg.base();
    let boxes = base
        .elements()
        .map(|a| (a, base.elements().map(|b| alg.cond(a, b)).collect()))
        .collect();
    MMAlg::new(base, base.all_elements(), boxes)
}

/// `a ⇀ b := □_a(b)`.
pub fn to_conditional(m: &MMAlg) -> Result<CondAlg> {
    if !m.is_full() {
        return Err(Error::input("only full multi-modal algebras have a conditional reading"));
    }
    let v = check_mma_axioms(m);
    if !v.holds {
        return Err(Error::contract(format!("to_conditional needs a multi-modal antitone algebra, but {v}")));
    }
    let table = m.base.elements().flat_map(|a| m.boxes[&a].iter().copied()).collect();
    CondAlg::new(m.base, table)
}

/// M1 and M2 per index, M3 per pair of indices, and the order form
/// `b1 ≤ b2 ⟹ □_{b2}(a) ≤ □_{b1}(a)`, which must agree with M3.
pub fn check_mma_axioms(m: &MMAlg) -> Verdict {
    let op = |b: Elem, a: Elem| m.apply(b, a);
    let laws: Vec<Verdict> =
        [AxiomId::M1, AxiomId::M2, AxiomId::M3].iter().map(|&id| check_law(id, &m.base, op, m.index_set)).collect();
    let m3 = laws[2].holds;
    let idx: Vec<Elem> = m.index_set.iter().collect();
    let all: Vec<Elem> = m.base.elements().collect();
    let star = crate::conditional::first_violation(&[idx.clone(), idx, all], |v| {
        let (b1, b2, a) = (v[0], v[1], v[2]);
        b1 & b2 != b1 || op(b2, a) & op(b1, a) == op(b2, a)
    });
    if m3 != star.is_none() {
        return Verdict::fail("M3-iff-M3*", Vec::new());
    }
    Verdict::all("MMA", laws)
}

/// `Q_b(u)` for every ultrafilter `u`, as point masks:
/// `Q_b(u, v) iff atom_v ≤ ⋀{x : □_b(x) ∈ u}`.
pub fn q_relation(m: &MMAlg, b: Elem) -> Result<Vec<u64>> {
    let table = m.box_table(b)?;
    Ok(m.base
        .ultrafilters()
        .map(|u| {
            let g = m.base.elements().filter(|&x| u.contains(table[x as usize])).fold(m.base.top(), |acc, x| acc & x);
            m.base.ultrafilters().filter(|v| v.contains(g)).fold(0, |acc, v| acc | 1 << v.0)
        })
        .collect())
}

/// `[Q](V) = {u : Q(u) ⊆ V}`.
pub fn necessity(q: &[u64], v: u64) -> u64 {
    q.iter().enumerate().filter(|(_, &s)| s & !v == 0).fold(0, |acc, (u, _)| acc | 1 << u)
}

/// The canonical extension `⟨P(Ul A), {[Q_b]}⟩`, indexed by `φ(b)`.
pub fn canonical_extension(m: &MMAlg) -> Result<MMAlg> {
    let base = m.base;
    let mut boxes = BTreeMap::new();
    let mut index = ElemSet::EMPTY;
    for b in m.index_set.iter() {
        let q = q_relation(m, b)?;
        let key = phi(&base, b)?.mask();
        index.insert(key);
        boxes.insert(key, base.elements().map(|v| necessity(&q, v)).collect());
    }
    MMAlg::new(base, index, boxes)
}

/// `[Q_a] = □_{φ(a)}` in `Em(A)` for every `a`, and
/// `□_U(V) = ⋂_{Y ⊆ U, O ⊇ V} ⋃_{a ∈ F_Y} [Q_a](O)` for every `U, V`.
pub fn qa_equals_box_phi_check(alg: &CondAlg) -> Result<Verdict> {
    let ext = em(alg)?;
    let m = to_mma(alg)?;
    let base = *alg.base();
    let qa: Vec<Vec<Elem>> = base
        .elements()
        .map(|a| {
            let q = q_relation(&m, a)?;
            Ok(base.elements().map(|v| necessity(&q, v)).collect())
        })
        .collect::<Result<_>>()?;
    for a in base.elements() {
        let pa = phi(&base, a)?.mask();
        for v in base.elements() {
            if qa[a as usize][v as usize] != ext.cond(pa, v) {
                return Ok(Verdict::fail(
                    "Q_a=box_phi(a)",
                    vec![Binding::new("a", Value::Elem(a)), Binding::new("V", Value::Set(v))],
                ));
            }
        }
    }
    for u in base.elements() {
        for v in base.elements() {
            let mut acc = base.top();
            for y in submasks(u) {
                let fy = Filter::principal(y).members(&base);
                for o in supermasks(v, base.top()) {
                    acc &= fy.iter().fold(0, |s, a| s | qa[a as usize][o as usize]);
                }
            }
            if acc != ext.cond(u, v) {
                return Ok(Verdict::fail(
                    "box-decomposition",
                    vec![Binding::new("U", Value::Set(u)), Binding::new("V", Value::Set(v))],
                ));
            }
        }
    }
    Ok(Verdict::pass("Q_a=box_phi(a)"))
}

/// `φ(□_b(a)) = [Q_b](φ(a))` for every index `b` and element `a`.
pub fn embedding_check(m: &MMAlg) -> Result<Verdict> {
    for b in m.index_set.iter() {
        let q = q_relation(m, b)?;
        for a in m.base.elements() {
            if phi(&m.base, m.apply(b, a))?.mask() != necessity(&q, phi(&m.base, a)?.mask()) {
                return Ok(Verdict::fail(
                    "mma-embedding",
                    vec![Binding::new("b", Value::Elem(b)), Binding::new("a", Value::Elem(a))],
                ));
            }
        }
    }
    Ok(Verdict::pass("mma-embedding"))
}

/// `□_a⁻¹[F] = D_F(↑a)` for every filter `F`, and
/// `D_F(H) = ⋃_{a ∈ H} □_a⁻¹[F]` for every pair of filters.
pub fn box_d_bridge_check(alg: &CondAlg) -> Result<Verdict> {
    require_ca(alg, "box_d_bridge_check")?;
    let base = *alg.base();
    for f in base.filters() {
        let fm = f.members(&base);
        for a in base.elements() {
            if box_preimage(alg, a, fm) != d_set(alg, fm, ElemSet::up(&base, a)) {
                return Ok(Verdict::fail(
                    "box-preimage=D",
                    vec![Binding::new("F", Value::Elem(f.generator)), Binding::new("a", Value::Elem(a))],
                ));
            }
        }
        for h in base.filters() {
            let hm = h.members(&base);
            let union = hm.iter().fold(ElemSet::EMPTY, |acc, a| ElemSet(acc.0 | box_preimage(alg, a, fm).0));
            if union != d_set(alg, fm, hm) {
                return Ok(Verdict::fail(
                    "D-union",
                    vec![Binding::new("F", Value::Elem(f.generator)), Binding::new("H", Value::Elem(h.generator))],
                ));
            }
        }
    }
    Ok(Verdict::pass("box-D-bridge"))
}

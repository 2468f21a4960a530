//! Subalgebras through C-equivalences of the dual space, and congruences
//! through its T-closed sets.

use serde::{Deserialize, Serialize};

use crate::boolean::{bits, submasks, Elem, ElemSet, FinBoolAlg, UfSet};
use crate::conditional::{require_ca, CondAlg};
use crate::duality::ultrafilter_frame;
use crate::error::{Error, Result};
use crate::frame::{check_conditional_space, TFrame};
use crate::verdict::{Binding, Value, Verdict};

/// A partition of the ultrafilter indices `0..points` into nonempty blocks.
/// Every equivalence is Boolean on a finite discrete space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoolEquiv {
    points: usize,
    blocks: Vec<u64>,
}

impl BoolEquiv {
    /// Blocks are reordered by least member.
    pub fn new(points: usize, mut blocks: Vec<u64>) -> Result<Self> {
        let full = (1u64 << points) - 1;
        let mut seen = 0u64;
        for &b in &blocks {
            if b == 0 || b & !full != 0 || b & seen != 0 {
                return Err(Error::input("blocks must be nonempty, disjoint, and in range"));
            }
            seen |= b;
        }
        if seen != full {
            return Err(Error::input("blocks must cover every point"));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(BoolEquiv { points, blocks })
    }

    pub fn identity(points: usize) -> Self {
        BoolEquiv { points, blocks: (0..points).map(|i| 1 << i).collect() }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// The block containing `x`.
    pub fn class(&self, x: usize) -> u64 {
        *self.blocks.iter().find(|&&b| b >> x & 1 == 1).expect("blocks cover every point")
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class(x) >> y & 1 == 1
    }

    /// `E(U)`, the union of the blocks meeting `U`.
    pub fn saturate(&self, u: u64) -> u64 {
        self.blocks.iter().filter(|&&b| b & u != 0).fold(0, |acc, b| acc | b)
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &BoolEquiv) -> bool {
        self.blocks.iter().all(|&b| coarser.blocks.iter().any(|&c| b & c == b))
    }
}

/// The domain of a Boolean subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubalgRef {
    pub elements: ElemSet,
}

impl SubalgRef {
    /// Checks closure under `0, 1, ∧, ∨, ¬`.
    pub fn new(base: &FinBoolAlg, elements: ElemSet) -> Result<Self> {
        let idx: Vec<Elem> = elements.iter().collect();
        let closed = idx.iter().all(|&e| base.contains(e))
            && elements.contains(0)
            && elements.contains(base.top())
            && idx.iter().all(|&a| {
                elements.contains(base.complement(a))
                    && idx.iter().all(|&b| elements.contains(a & b) && elements.contains(a | b))
            });
        if !closed {
            return Err(Error::input("element set is not a Boolean subalgebra"));
        }
        Ok(SubalgRef { elements })
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.elements.contains(a)
    }

    pub fn is_subset(&self, other: &SubalgRef) -> bool {
        self.elements.is_subset(other.elements)
    }

    /// `a ⇀ b ∈ B` for all `a, b ∈ B`; a failure carries the least pair.
    pub fn closed_under(&self, alg: &CondAlg) -> Verdict {
        for a in self.elements.iter() {
            for b in self.elements.iter() {
                if !self.contains(alg.cond(a, b)) {
                    return Verdict::fail(
                        "subalgebra",
                        vec![Binding::new("a", Value::Elem(a)), Binding::new("b", Value::Elem(b))],
                    );
                }
            }
        }
        Verdict::pass("subalgebra")
    }

    /// `E_B`: `u ~ v` iff `u ∩ B = v ∩ B`, grouped by trace over `B`.
    pub fn equivalence(&self, base: &FinBoolAlg) -> BoolEquiv {
        let mut groups: Vec<(u64, u64)> = Vec::new();
        for u in base.ultrafilters() {
            let trace = self.elements.iter().filter(|&b| u.contains(b)).fold(0u64, |acc, b| acc | 1 << b);
            match groups.iter_mut().find(|(t, _)| *t == trace) {
                Some((_, block)) => *block |= 1 << u.0,
                None => groups.push((trace, 1 << u.0)),
            }
        }
        BoolEquiv::new(base.atoms(), groups.into_iter().map(|(_, b)| b).collect())
            .expect("traces partition the ultrafilters")
    }
}

/// Set partitions of `0..n` as block masks, in restricted-growth order.
pub fn set_partitions(n: usize) -> Vec<Vec<u64>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for k in 0..blocks.len() {
            blocks[k] |= 1 << i;
            go(i + 1, n, blocks, out);
            blocks[k] &= !(1 << i);
        }
        blocks.push(1 << i);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Boolean subalgebras of the base, one per partition of the atoms: the
/// elements are the unions of blocks.
pub fn enumerate_subalgebras(alg: &CondAlg) -> Vec<SubalgRef> {
    let base = alg.base();
    set_partitions(base.atoms())
        .into_iter()
        .map(|blocks| {
            let k = blocks.len();
            let elements = ElemSet::from_elems((0u64..1 << k).map(|pick| {
                bits(pick).fold(0, |acc, i| acc | blocks[i])
            }));
            SubalgRef::new(base, elements).expect("unions of blocks form a subalgebra")
        })
        .collect()
}

/// `Y ⪯_E C`: every `y ∈ Y` is `E`-related to some `x ∈ C`.
pub fn preceq_e(e: &BoolEquiv, y: UfSet, c: UfSet) -> bool {
    y.mask() & !e.saturate(c.mask()) == 0
}

fn require_space(f: &TFrame, what: &str) -> Result<()> {
    let v = check_conditional_space(f);
    if v.holds {
        Ok(())
    } else {
        Err(Error::contract(format!("{what} needs a conditional space, but {v}")))
    }
}

/// If `E(x, y)` and `T(x, Y, x')` then some `y'` with `E(x', y')` and some
/// `C ⪯_E Y` have `T(y, C, y')`.
pub fn is_c_equivalence(f: &TFrame, e: &BoolEquiv) -> Result<Verdict> {
    require_space(f, "is_c_equivalence")?;
    if e.points() != f.points() {
        return Err(Error::input("equivalence and frame have different point counts"));
    }
    for x in 0..f.points() {
        for y in 0..f.points() {
            if !e.related(x, y) {
                continue;
            }
            for ys in f.subsets() {
                for x2 in bits(f.successors(x, ys)) {
                    let targets = e.class(x2);
                    let found = f
                        .subsets()
                        .any(|c| preceq_e(e, UfSet(c), UfSet(ys)) && f.successors(y, c) & targets != 0);
                    if !found {
                        return Ok(Verdict::fail(
                            "C-equivalence",
                            vec![
                                Binding::new("x", Value::Point(x)),
                                Binding::new("x'", Value::Point(x2)),
                                Binding::new("y", Value::Point(y)),
                                Binding::new("Y", Value::Set(ys)),
                            ],
                        ));
                    }
                }
            }
        }
    }
    Ok(Verdict::pass("C-equivalence"))
}

/// Each subalgebra is `⇀`-closed exactly when its equivalence is a
/// C-equivalence, and `B ↦ E_B` reverses order on the `⇀`-closed ones.
pub fn subalgebra_duality_check(alg: &CondAlg) -> Result<Verdict> {
    let frame = ultrafilter_frame(alg)?;
    let base = alg.base();
    let subs = enumerate_subalgebras(alg);
    let mut closed = Vec::new();
    for b in &subs {
        let e = b.equivalence(base);
        let lhs = b.closed_under(alg).holds;
        let rhs = is_c_equivalence(&frame, &e)?.holds;
        if lhs != rhs {
            return Ok(Verdict::fail("subalgebra-iff-C-equivalence", vec![Binding::new("B", Value::Set(b.elements.0))]));
        }
        if lhs {
            closed.push((*b, e));
        }
    }
    for (b1, e1) in &closed {
        for (b2, e2) in &closed {
            if b1.is_subset(b2) != e2.refines(e1) || (b1 == b2) != (e1 == e2) {
                return Ok(Verdict::fail(
                    "dual-isomorphism",
                    vec![Binding::new("B1", Value::Set(b1.elements.0)), Binding::new("B2", Value::Set(b2.elements.0))],
                ));
            }
        }
    }
    Ok(Verdict::pass("subalgebra-duality"))
}

/// The `⊆`-minimal members of `C(x, y) = {Z : T(x, Z, y)}`, ascending.
pub fn minimal_witnesses(f: &TFrame, x: usize, y: usize) -> Vec<UfSet> {
    let members: Vec<u64> = f.subsets().filter(|&z| f.contains(x, z, y)).collect();
    members
        .iter()
        .copied()
        .filter(|&z| !members.iter().any(|&w| w != z && w & z == w))
        .map(UfSet)
        .collect()
}

/// For `x ∈ Y` and every minimal `Z ∈ C(x, y)`: `Z ⊆ Y` and `y ∈ Y`. An empty
/// `C(x, y)` imposes nothing.
pub fn is_t_closed(f: &TFrame, y: UfSet) -> bool {
    bits(y.mask()).all(|x| {
        (0..f.points()).all(|t| {
            minimal_witnesses(f, x, t).iter().all(|z| z.is_subset(y) && y.mask() >> t & 1 == 1)
        })
    })
}

/// `θ(Y)`, identifying `a` and `b` when `Y ∩ φ(a) = Y ∩ φ(b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CongruenceRef {
    pub y: UfSet,
}

impl CongruenceRef {
    pub fn related(&self, a: Elem, b: Elem) -> bool {
        a & self.y.mask() == b & self.y.mask()
    }

    /// `(a, b), (c, d) ∈ θ ⟹ (a ⇀ c, b ⇀ d) ∈ θ`.
    pub fn compatible(&self, alg: &CondAlg) -> Verdict {
        let base = alg.base();
        for a in base.elements() {
            for b in base.elements().filter(|&b| self.related(a, b)) {
                for c in base.elements() {
                    for d in base.elements().filter(|&d| self.related(c, d)) {
                        if !self.related(alg.cond(a, c), alg.cond(b, d)) {
                            return Verdict::fail(
                                "congruence",
                                ["a", "b", "c", "d"]
                                    .iter()
                                    .zip([a, b, c, d])
                                    .map(|(n, e)| Binding::new(*n, Value::Elem(e)))
                                    .collect(),
                            );
                        }
                    }
                }
            }
        }
        Verdict::pass("congruence")
    }

    /// `θ(self) ⊆ θ(other)`.
    pub fn is_finer(&self, other: &CongruenceRef, base: &FinBoolAlg) -> bool {
        base.elements().all(|a| base.elements().all(|b| !self.related(a, b) || other.related(a, b)))
    }
}

/// The T-closed sets of the dual space, ascending; each induces a congruence.
pub fn congruence_lattice(alg: &CondAlg) -> Result<Vec<CongruenceRef>> {
    let frame = ultrafilter_frame(alg)?;
    Ok(alg
        .base()
        .uf_sets()
        .filter(|&y| is_t_closed(&frame, y))
        .map(|y| CongruenceRef { y })
        .collect())
}

/// `θ(Y)` is compatible with `⇀` exactly when `Y` is T-closed, and
/// `Y ↦ θ(Y)` reverses order on T-closed sets.
pub fn congruence_duality_check(alg: &CondAlg) -> Result<Verdict> {
    require_ca(alg, "congruence_duality_check")?;
    let frame = ultrafilter_frame(alg)?;
    let base = alg.base();
    let mut closed = Vec::new();
    for y in base.uf_sets() {
        let theta = CongruenceRef { y };
        let lhs = theta.compatible(alg).holds;
        let rhs = is_t_closed(&frame, y);
        if lhs != rhs {
            return Ok(Verdict::fail("congruence-iff-T-closed", vec![Binding::new("Y", Value::Set(y.mask()))]));
        }
        if rhs {
            closed.push(theta);
        }
    }
    for t1 in &closed {
        for t2 in &closed {
            if t1.y.is_subset(t2.y) != t2.is_finer(t1, base) {
                return Ok(Verdict::fail(
                    "dual-isomorphism",
                    vec![Binding::new("Y1", Value::Set(t1.y.mask())), Binding::new("Y2", Value::Set(t2.y.mask()))],
                ));
            }
        }
    }
    Ok(Verdict::pass("congruence-duality"))
}

/// Every member of `C(x, y)`, ascending.
pub fn witnesses(f: &TFrame, x: usize, y: usize) -> Vec<UfSet> {
    submasks(f.full()).filter(|&z| f.contains(x, z, y)).map(UfSet).collect()
}

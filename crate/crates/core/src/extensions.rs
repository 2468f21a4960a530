//! π- and σ-extensions of `⇀` to sets of ultrafilters, evaluated through
//! their defining formulas rather than through the finite shortcut.
//!
//! On a finite algebra closed, open and clopen sets of ultrafilters coincide
//! with all subsets, so every range over closed `Y` or open `O` below is a
//! range over all masks.

use serde::{Deserialize, Serialize};

use crate::boolean::{
    element_of, filter_of_set, ideal_of_open, phi, submasks, supermasks, Elem, FinBoolAlg, UfSet,
};
use crate::conditional::{require_ca, CondAlg};
use crate::error::{Error, Result};
use crate::verdict::{Binding, Value, Verdict};

/// `G_⇀(u, Z, Y)` with the ideal `↓ideal` and filter `↑filter` witnessing it:
/// `Z = φ(¬↓ideal)`, `Y = φ(↑filter)` and `↓ideal × ↑filter ⊆ ⇀⁻¹[u]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GTriple {
    pub u: usize,
    pub z: UfSet,
    pub y: UfSet,
    pub ideal: Elem,
    pub filter: Elem,
}

/// Stone images of every element, indexed by element.
fn images(base: &FinBoolAlg) -> Vec<UfSet> {
    base.elements().map(|a| phi(base, a).expect("element of the base")).collect()
}

fn check_sets(base: &FinBoolAlg, sets: &[UfSet]) -> Result<()> {
    let full = base.full_uf_set();
    match sets.iter().find(|s| !s.is_subset(full)) {
        Some(s) => Err(Error::input(format!("ultrafilter set {:#b} is out of range", s.mask()))),
        None => Ok(()),
    }
}

/// Intersection over closed `Y ⊆ U` and open `O ⊇ V` of
/// `⋃_{(a,b) ∈ F_Y × I_O} φ(a ⇀ b)`.
fn pi_raw(alg: &CondAlg, img: &[UfSet], u: UfSet, v: UfSet) -> UfSet {
    let base = alg.base();
    let full = base.full_uf_set();
    let mut acc = full;
    for y in submasks(u.mask()) {
        let fy = filter_of_set(base, UfSet(y)).members(base);
        for o in supermasks(v.mask(), full.mask()) {
            let io = ideal_of_open(base, UfSet(o)).members(base);
            let mut union = UfSet::EMPTY;
            for a in fy.iter() {
                for b in io.iter() {
                    union = union.union(img[alg.cond(a, b) as usize]);
                }
            }
            acc = acc.intersection(union);
        }
    }
    acc
}

/// First stage: `W ⇀σ Y = ⋂_{(a,b) ∈ I × F_Y} φ(a ⇀ b)` for open `W = Z^c`,
/// where `φ(¬I) = Z`, i.e. `I` is the ideal of elements below `W`.
fn sigma_stage(alg: &CondAlg, img: &[UfSet], w: UfSet, y: UfSet) -> UfSet {
    let base = alg.base();
    let ideal = ideal_of_open(base, w).members(base);
    let filter = filter_of_set(base, y).members(base);
    let mut acc = base.full_uf_set();
    for a in ideal.iter() {
        for b in filter.iter() {
            acc = acc.intersection(img[alg.cond(a, b) as usize]);
        }
    }
    acc
}

/// Second stage: union over open `W ⊇ U` and closed `Y ⊆ V`.
fn sigma_raw(alg: &CondAlg, img: &[UfSet], u: UfSet, v: UfSet) -> UfSet {
    let full = alg.base().full_uf_set().mask();
    let mut acc = UfSet::EMPTY;
    for w in supermasks(u.mask(), full) {
        for y in submasks(v.mask()) {
            acc = acc.union(sigma_stage(alg, img, UfSet(w), UfSet(y)));
        }
    }
    acc
}

fn g_raw(alg: &CondAlg) -> Vec<GTriple> {
    let base = alg.base();
    let mut out = Vec::new();
    for u in base.ultrafilters() {
        for c in base.elements() {
            for y in base.elements() {
                let below = base.elements().filter(|&a| a & c == a);
                let ok = below.into_iter().all(|a| {
                    base.elements().filter(|&b| b & y == y).all(|b| u.contains(alg.cond(a, b)))
                });
                if ok {
                    out.push(GTriple {
                        u: u.0,
                        z: phi(base, base.complement(c)).expect("element of the base"),
                        y: phi(base, y).expect("element of the base"),
                        ideal: c,
                        filter: y,
                    });
                }
            }
        }
    }
    out
}

/// `u ∈ U ⇀σ V` iff some `(Z, Y) ∈ G_⇀(u)` has `Z ∩ U = ∅` and `Y ⊆ V`.
fn sigma_via_g(base: &FinBoolAlg, g: &[GTriple], u: UfSet, v: UfSet) -> UfSet {
    let mut out = UfSet::EMPTY;
    for t in g {
        if t.z.intersection(u).is_empty() && t.y.is_subset(v) {
            out = out.union(UfSet(1 << t.u));
        }
    }
    debug_assert!(out.is_subset(base.full_uf_set()));
    out
}

/// The dual relation `G_⇀` of the σ-extension.
pub fn g_relation(alg: &CondAlg) -> Result<Vec<GTriple>> {
    require_ca(alg, "g_relation")?;
    Ok(g_raw(alg))
}

pub fn pi_extend(alg: &CondAlg, u: UfSet, v: UfSet) -> Result<UfSet> {
    require_ca(alg, "pi_extend")?;
    check_sets(alg.base(), &[u, v])?;
    Ok(pi_raw(alg, &images(alg.base()), u, v))
}

/// The two-stage σ formula, cross-checked against the `G_⇀` characterization.
pub fn sigma_extend(alg: &CondAlg, u: UfSet, v: UfSet) -> Result<UfSet> {
    require_ca(alg, "sigma_extend")?;
    check_sets(alg.base(), &[u, v])?;
    let s = sigma_raw(alg, &images(alg.base()), u, v);
    agree(alg.base(), s, sigma_via_g(alg.base(), &g_raw(alg), u, v), u, v)
}

fn agree(base: &FinBoolAlg, s: UfSet, via_g: UfSet, u: UfSet, v: UfSet) -> Result<UfSet> {
    if s != via_g {
        return Err(Error::contract(format!(
            "σ formula and G relation disagree at U={:#b}, V={:#b} on {} atoms",
            u.mask(),
            v.mask(),
            base.atoms()
        )));
    }
    Ok(s)
}

/// The algebra on sets of ultrafilters with the π-extension as operator.
pub fn pi_algebra(alg: &CondAlg) -> Result<CondAlg> {
    require_ca(alg, "pi_algebra")?;
    let img = images(alg.base());
    CondAlg::from_fn(alg.atoms(), |u, v| pi_raw(alg, &img, UfSet(u), UfSet(v)).mask())
}

/// The algebra on sets of ultrafilters with the σ-extension as operator.
pub fn sigma_algebra(alg: &CondAlg) -> Result<CondAlg> {
    require_ca(alg, "sigma_algebra")?;
    let base = alg.base();
    let img = images(base);
    let g = g_raw(alg);
    let mut table = Vec::with_capacity(base.size() * base.size());
    for u in base.uf_sets() {
        for v in base.uf_sets() {
            let s = sigma_raw(alg, &img, u, v);
            table.push(agree(base, s, sigma_via_g(base, &g, u, v), u, v)?.mask());
        }
    }
    CondAlg::new(*base, table)
}

/// `U, V ↦ φ(a_U ⇀ a_V)` with `φ(a_U) = U`: the operator carried over to
/// sets of ultrafilters along the Stone map.
pub fn transported(alg: &CondAlg, u: UfSet, v: UfSet) -> UfSet {
    let base = alg.base();
    phi(base, alg.cond(element_of(base, u), element_of(base, v))).expect("element of the base")
}

/// `π = σ` on every pair of ultrafilter sets.
pub fn smoothness_check(alg: &CondAlg) -> Result<Verdict> {
    let (p, s) = (pi_algebra(alg)?, sigma_algebra(alg)?);
    for u in alg.base().elements() {
        for v in alg.base().elements() {
            if p.cond(u, v) != s.cond(u, v) {
                return Ok(Verdict::fail(
                    "smooth",
                    vec![Binding::new("U", Value::Set(u)), Binding::new("V", Value::Set(v))],
                ));
            }
        }
    }
    Ok(Verdict::pass("smooth"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditional::check_ca;

    fn proj2() -> CondAlg {
        CondAlg::projection(2).unwrap()
    }

    fn glob2() -> CondAlg {
        CondAlg::global_strict(2).unwrap()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_extend(&proj2(), UfSet(0b01), UfSet(0b01)).unwrap(), UfSet(0b01));
        assert_eq!(pi_extend(&glob2(), UfSet(0b11), UfSet(0b01)).unwrap(), UfSet::EMPTY);
        // the empty pair gives φ(0 ⇀ 0)
        assert_eq!(pi_extend(&glob2(), UfSet::EMPTY, UfSet::EMPTY).unwrap(), UfSet(0b11));
        assert_eq!(pi_extend(&proj2(), UfSet::EMPTY, UfSet::EMPTY).unwrap(), UfSet::EMPTY);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_extend(&proj2(), UfSet(0b01), UfSet(0b01)).unwrap(), UfSet(0b01));
        assert_eq!(sigma_extend(&glob2(), UfSet(0b11), UfSet(0b11)).unwrap(), UfSet(0b11));
    }

    #[test]
    fn finite_collapse_on_fixed_algebras() {
        for alg in [proj2(), glob2(), CondAlg::degenerate(), CondAlg::projection(3).unwrap()] {
            let base = *alg.base();
            let (p, s) = (pi_algebra(&alg).unwrap(), sigma_algebra(&alg).unwrap());
            for u in base.uf_sets() {
                for v in base.uf_sets() {
                    let t = transported(&alg, u, v).mask();
                    assert_eq!(p.cond(u.mask(), v.mask()), t);
                    assert_eq!(s.cond(u.mask(), v.mask()), t);
                }
            }
            assert!(check_ca(&p).holds && check_ca(&s).holds);
            assert!(smoothness_check(&alg).unwrap().holds);
        }
    }

    #[test]
    fn g_relation_witnesses() {
        let alg = glob2();
        let g = g_relation(&alg).unwrap();
        for t in &g {
            let base = alg.base();
            for a in base.elements().filter(|&a| a & t.ideal == a) {
                for b in base.elements().filter(|&b| b & t.filter == t.filter) {
                    assert!(alg.cond(a, b) >> t.u & 1 == 1);
                }
            }
            assert_eq!(t.z.mask(), base.complement(t.ideal));
        }
        // C1 gives every u the pair (∅, Ul) via ↓1 × ↑1
        for u in 0..2 {
            assert!(g.iter().any(|t| t.u == u && t.z.is_empty() && t.y == UfSet(0b11)));
        }
    }

    #[test]
    fn out_of_range_sets_are_rejected() {
        assert!(matches!(pi_extend(&proj2(), UfSet(0b100), UfSet(0)), Err(Error::Input(_))));
        let bad = proj2().with_entry(0, 0b11, 0).unwrap();
        assert!(matches!(sigma_extend(&bad, UfSet(0), UfSet(0)), Err(Error::Contract(_))));
    }
}

//! Ultrafilter frames, canonical extensions, the representation theorem, the
//! two duality roundtrips, and the correspondence between conditional
//! homomorphisms and conditional functions.

use crate::boolean::{bits, phi, phi_filter, Elem, FinBoolAlg, Filter};
use crate::conditional::{d_filter, require_ca, CondAlg};
use crate::error::{Error, Result};
use crate::frame::{check_conditional_space, cm, TFrame};
use crate::verdict::{Binding, Value, Verdict};

/// `T_A(u, φ(F), v) iff D_u(F) ⊆ v`, over all principal filters `F`
/// including the improper one.
pub fn ultrafilter_frame(alg: &CondAlg) -> Result<TFrame> {
    require_ca(alg, "ultrafilter_frame")?;
    let base = alg.base();
    let mut f = TFrame::empty(base.atoms())?;
    for u in base.ultrafilters() {
        for g in base.elements() {
            let filter = Filter::principal(g);
            let d = d_filter(alg, u, filter)?;
            let z = phi_filter(base, filter).mask();
            for v in base.ultrafilters().filter(|v| v.contains(d.generator)) {
                f.insert((u.0, z, v.0))?;
            }
        }
    }
    Ok(f)
}

/// The full complex algebra of the ultrafilter frame.
pub fn em(alg: &CondAlg) -> Result<CondAlg> {
    Ok(cm(&ultrafilter_frame(alg)?))
}

fn pair(a: Elem, b: Elem) -> Vec<Binding> {
    vec![Binding::new("a", Value::Elem(a)), Binding::new("b", Value::Elem(b))]
}

/// `φ` is an injective Boolean homomorphism into `Em(A)` with
/// `φ(a ⇀ b) = φ(a) ⇀_{T_A} φ(b)`.
pub fn representation_check(alg: &CondAlg) -> Result<Verdict> {
    let ext = em(alg)?;
    Ok(stone_map_verdict(alg, &ext, "representation", false))
}

/// `Co(Es(A)) ≅ A` via `φ`. Every subset is clopen here, so `Co(Es(A))` is
/// `Em(A)` and `φ` must in addition be onto.
pub fn co_es_roundtrip(alg: &CondAlg) -> Result<Verdict> {
    let ext = em(alg)?;
    Ok(stone_map_verdict(alg, &ext, "co-es-roundtrip", true))
}

fn stone_map_verdict(alg: &CondAlg, ext: &CondAlg, law: &str, onto: bool) -> Verdict {
    let base = alg.base();
    let image: Vec<u64> = base
        .elements()
        .map(|a| phi(base, a).expect("element of the base").mask())
        .collect();
    let p = |a: Elem| image[a as usize];
    let mut seen = 0u64;
    for a in base.elements() {
        if seen >> p(a) & 1 == 1 {
            return Verdict::fail("phi-injective", vec![Binding::new("a", Value::Elem(a))]);
        }
        seen |= 1 << p(a);
    }
    if onto && ext.base().elements().any(|s| seen >> s & 1 == 0) {
        return Verdict::fail("phi-onto", Vec::new());
    }
    if p(base.zero()) != 0 || p(base.top()) != ext.base().top() {
        return Verdict::fail("phi-boolean", Vec::new());
    }
    for a in base.elements() {
        if p(base.complement(a)) != ext.base().complement(p(a)) {
            return Verdict::fail("phi-boolean", vec![Binding::new("a", Value::Elem(a))]);
        }
        for b in base.elements() {
            if p(a & b) != p(a) & p(b) || p(a | b) != p(a) | p(b) {
                return Verdict::fail("phi-boolean", pair(a, b));
            }
            if p(alg.cond(a, b)) != ext.cond(p(a), p(b)) {
                return Verdict::fail("phi-conditional", pair(a, b));
            }
        }
    }
    Verdict::pass(law)
}

/// `Es(Co(X)) ≅ X` via `ε(x) = {U : x ∈ U}`, the principal ultrafilter of `x`.
pub fn es_co_roundtrip(f: &TFrame) -> Result<Verdict> {
    let space = check_conditional_space(f);
    if !space.holds {
        return Err(Error::contract(format!("es_co_roundtrip needs a conditional space, but {space}")));
    }
    let alg = cm(f);
    let dual = ultrafilter_frame(&alg)?;
    let base = alg.base();
    // ε(x) is the ultrafilter containing the singleton {x}
    let eps: Vec<usize> = (0..f.points())
        .map(|x| {
            base.ultrafilters()
                .find(|u| u.contains(1 << x))
                .expect("singletons are atoms of the powerset")
                .0
        })
        .collect();
    let mut hit = 0u64;
    for &e in &eps {
        hit |= 1 << e;
    }
    if hit.count_ones() as usize != f.points() || dual.points() != f.points() {
        return Ok(Verdict::fail("epsilon-bijective", Vec::new()));
    }
    let image = |z: u64| bits(z).fold(0u64, |acc, x| acc | 1 << eps[x]);
    for x in 0..f.points() {
        for z in f.subsets() {
            for y in 0..f.points() {
                if f.contains(x, z, y) != dual.contains(eps[x], image(z), eps[y]) {
                    return Ok(Verdict::fail(
                        "epsilon-preserves-T",
                        vec![
                            Binding::new("x", Value::Point(x)),
                            Binding::new("Z", Value::Set(z)),
                            Binding::new("y", Value::Point(y)),
                        ],
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass("es-co-roundtrip"))
}

/// A Boolean homomorphism between the bases of two algebras, as a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgHom {
    source: CondAlg,
    target: CondAlg,
    map: Vec<Elem>,
}

impl AlgHom {
    /// Checks that `map` is total, in range, and Boolean.
    pub fn new(source: CondAlg, target: CondAlg, map: Vec<Elem>) -> Result<Self> {
        let (a, b) = (source.base(), target.base());
        if map.len() != a.size() {
            return Err(Error::input(format!("map has {} entries, expected {}", map.len(), a.size())));
        }
        if let Some(&e) = map.iter().find(|&&e| !b.contains(e)) {
            return Err(Error::input(format!("map value {e} is out of range")));
        }
        let h = |x: Elem| map[x as usize];
        let boolean = h(a.zero()) == b.zero()
            && h(a.top()) == b.top()
            && a.elements().all(|x| {
                h(a.complement(x)) == b.complement(h(x))
                    && a.elements().all(|y| h(x & y) == h(x) & h(y) && h(x | y) == h(x) | h(y))
            });
        if !boolean {
            return Err(Error::input("map is not a Boolean homomorphism"));
        }
        Ok(AlgHom { source, target, map })
    }

    /// The Boolean homomorphism dual to a point map `Ul(target) → Ul(source)`:
    /// `h(a) = {j : p(j) ∈ a}`.
    pub fn from_point_map(source: CondAlg, target: CondAlg, points: &[usize]) -> Result<Self> {
        if points.len() != target.atoms() || points.iter().any(|&i| i >= source.atoms()) {
            return Err(Error::input("point map does not fit the two algebras"));
        }
        let map = source
            .base()
            .elements()
            .map(|a| points.iter().enumerate().filter(|(_, &i)| a >> i & 1 == 1).fold(0, |acc, (j, _)| acc | 1 << j))
            .collect();
        AlgHom::new(source, target, map)
    }

    /// Every Boolean homomorphism from `source` to `target`.
    pub fn all(source: &CondAlg, target: &CondAlg) -> Vec<AlgHom> {
        let (n, m) = (source.atoms(), target.atoms());
        if n == 0 && m > 0 {
            return Vec::new();
        }
        let count = n.pow(m as u32);
        (0..count)
            .map(|code| {
                let points: Vec<usize> = (0..m).map(|j| code / n.pow(j as u32) % n).collect();
                AlgHom::from_point_map(source.clone(), target.clone(), &points)
                    .expect("point maps induce Boolean homomorphisms")
            })
            .collect()
    }

    pub fn source(&self) -> &CondAlg {
        &self.source
    }

    pub fn target(&self) -> &CondAlg {
        &self.target
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a as usize]
    }

    /// `h(a ⇀ b) = h(a) ⇀ h(b)`; a failure carries the least `(a, b)`.
    pub fn is_conditional(&self) -> Verdict {
        let s = self.source.base();
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(self.source.cond(a, b)) != self.target.cond(self.apply(a), self.apply(b)) {
                    return Verdict::fail("homomorphism", pair(a, b));
                }
            }
        }
        Verdict::pass("homomorphism")
    }

    /// `f_h(u) = h⁻¹[u]`, as a map from ultrafilter indices of the target to
    /// those of the source.
    pub fn dual_map(&self) -> Vec<usize> {
        let s = self.source.base();
        self.target
            .base()
            .ultrafilters()
            .map(|u| {
                let g = s.elements().filter(|&a| u.contains(self.apply(a))).fold(s.top(), |acc, a| acc & a);
                debug_assert_eq!(g.count_ones(), 1);
                g.trailing_zeros() as usize
            })
            .collect()
    }
}

/// A map between the point sets of two frames.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameMap {
    source: TFrame,
    target: TFrame,
    map: Vec<usize>,
}

impl FrameMap {
    pub fn new(source: TFrame, target: TFrame, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.points() || map.iter().any(|&y| y >= target.points()) {
            return Err(Error::input("frame map is not a total map into the target points"));
        }
        Ok(FrameMap { source, target, map })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `h_f(U) = f⁻¹[U]`.
    pub fn preimage(&self, u: u64) -> u64 {
        (0..self.source.points())
            .filter(|&x| u >> self.map[x] & 1 == 1)
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// (CF): `T₁(x, f⁻¹[U]) ⊆ f⁻¹[V]` iff `T₂(f(x), U) ⊆ V`, for all `x`
    /// and all (clopen, hence all) `U, V`.
    pub fn is_conditional(&self) -> Verdict {
        for x in 0..self.source.points() {
            for u in self.target.subsets() {
                for v in self.target.subsets() {
                    let lhs = self.source.successors(x, self.preimage(u)) & !self.preimage(v) == 0;
                    let rhs = self.target.successors(self.map[x], u) & !v == 0;
                    if lhs != rhs {
                        return Verdict::fail(
                            "CF",
                            vec![
                                Binding::new("x", Value::Point(x)),
                                Binding::new("U", Value::Set(u)),
                                Binding::new("V", Value::Set(v)),
                            ],
                        );
                    }
                }
            }
        }
        Verdict::pass("CF")
    }
}

/// The homomorphism–function correspondence for one Boolean homomorphism.
///
/// Holds iff `h` is conditional exactly when `f_h` satisfies (CF), and, when
/// it is, `h_{f_h}` is conditional between the canonical extensions and
/// agrees with `h` through `φ`.
pub fn hom_duality_check(h: &AlgHom) -> Result<Verdict> {
    let fa = ultrafilter_frame(h.source())?;
    let fb = ultrafilter_frame(h.target())?;
    let fh = FrameMap::new(fb, fa, h.dual_map())?;
    let alg = h.is_conditional();
    let cf = fh.is_conditional();
    if alg.holds != cf.holds {
        let mut v = if alg.holds { cf } else { alg };
        v.law = "homomorphism-iff-CF".into();
        return Ok(v);
    }
    if !alg.holds {
        return Ok(Verdict::pass("hom-duality"));
    }
    let (ea, eb) = (em(h.source())?, em(h.target())?);
    let hf = AlgHom::new(ea.clone(), eb, ea.base().elements().map(|u| fh.preimage(u)).collect())?;
    let lifted = hf.is_conditional();
    if !lifted.holds {
        return Ok(Verdict::fail("lifted-homomorphism", lifted.counterexample.unwrap_or_default()));
    }
    let (sa, sb): (&FinBoolAlg, &FinBoolAlg) = (h.source().base(), h.target().base());
    for a in sa.elements() {
        if hf.apply(phi(sa, a)?.mask()) != phi(sb, h.apply(a))?.mask() {
            return Ok(Verdict::fail("naturality", vec![Binding::new("a", Value::Elem(a))]));
        }
    }
    Ok(Verdict::pass("hom-duality"))
}

/// `T_A(u, φ(F)) = φ(D_u(F))` for every ultrafilter and filter.
pub fn closed_successor_check(alg: &CondAlg) -> Result<Verdict> {
    let frame = ultrafilter_frame(alg)?;
    let base = alg.base();
    for u in base.ultrafilters() {
        for g in base.elements() {
            let f = Filter::principal(g);
            let d = d_filter(alg, u, f)?;
            if frame.successors(u.0, phi_filter(base, f).mask()) != phi_filter(base, d).mask() {
                return Ok(Verdict::fail(
                    "successors-closed",
                    vec![Binding::new("u", Value::Point(u.0)), Binding::new("F", Value::Elem(g))],
                ));
            }
        }
    }
    Ok(Verdict::pass("successors-closed"))
}

/// `a ⇀ b ∈ u` iff `b ∈ D_u(F)` for every filter `F ∋ a`.
pub fn filter_membership_check(alg: &CondAlg) -> Result<Verdict> {
    let base = alg.base();
    for u in base.ultrafilters() {
        for a in base.elements() {
            for b in base.elements() {
                let lhs = u.contains(alg.cond(a, b));
                let mut rhs = true;
                for g in base.elements().filter(|&g| g & a == g) {
                    rhs &= d_filter(alg, u, Filter::principal(g))?.contains(b);
                }
                if lhs != rhs {
                    return Ok(Verdict::fail(
                        "filter-membership",
                        vec![
                            Binding::new("u", Value::Point(u.0)),
                            Binding::new("a", Value::Elem(a)),
                            Binding::new("b", Value::Elem(b)),
                        ],
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass("filter-membership"))
}

//! Subvarieties of conditional algebras, first-order frame conditions, and
//! the correspondence and canonicity checks that tie them together.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::bits;
use crate::conditional::{check_axiom, require_ca, AxiomId, CondAlg};
use crate::duality::ultrafilter_frame;
use crate::error::{Error, Result};
use crate::frame::{check_conditional_space, cm, TFrame};
use crate::verdict::{Binding, Value, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarietyTag {
    CA,
    PSB,
    PsC,
    SIA,
    S2IA,
}

impl VarietyTag {
    pub const ALL: [VarietyTag; 5] = [VarietyTag::CA, VarietyTag::PSB, VarietyTag::PsC, VarietyTag::SIA, VarietyTag::S2IA];

    /// Defining axioms beyond the Boolean ones.
    pub fn axioms(self) -> &'static [AxiomId] {
        use AxiomId::*;
        match self {
            VarietyTag::CA => &[C1, C2, C3],
            VarietyTag::PSB => &[C1, C2, C3, C1star, C3star],
            VarietyTag::PsC => &[C1, C2, C3, C1star, C3star, C5, C6],
            VarietyTag::SIA => &[C1, C2, C3, C1star, C3star, C4, C5, C7, C8],
            VarietyTag::S2IA => &[C1, C2, C3, C1star, C3star, C4, C5, C6, C7],
        }
    }

    /// Immediate covers in the inclusion poset of varieties.
    pub fn parents(self) -> &'static [VarietyTag] {
        match self {
            VarietyTag::CA => &[],
            VarietyTag::PSB => &[VarietyTag::CA],
            VarietyTag::PsC | VarietyTag::SIA => &[VarietyTag::PSB],
            VarietyTag::S2IA => &[VarietyTag::PsC, VarietyTag::SIA],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VarietyTag::CA => "CA",
            VarietyTag::PSB => "PSB",
            VarietyTag::PsC => "PsC",
            VarietyTag::SIA => "SIA",
            VarietyTag::S2IA => "S2IA",
        }
    }
}

impl fmt::Display for VarietyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every variety whose axioms hold.
pub fn classify_variety(alg: &CondAlg) -> BTreeSet<VarietyTag> {
    let holds: BTreeSet<AxiomId> =
        AxiomId::ALL[..10].iter().copied().filter(|&id| check_axiom(alg, id).holds).collect();
    VarietyTag::ALL.into_iter().filter(|t| t.axioms().iter().all(|a| holds.contains(a))).collect()
}

/// Membership in a variety implies membership in every larger one.
pub fn is_upward_closed(tags: &BTreeSet<VarietyTag>) -> bool {
    tags.iter().all(|t| t.parents().iter().all(|p| tags.contains(p)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FrameCondId {
    A4,
    A5,
    A6,
    A7,
    A8,
    PSBwitness,
    NonEmptyMiddle,
    T3star,
    T4,
    T5,
    T6,
    T7,
    T8,
}

impl FrameCondId {
    pub const ALL: [FrameCondId; 13] = [
        FrameCondId::A4,
        FrameCondId::A5,
        FrameCondId::A6,
        FrameCondId::A7,
        FrameCondId::A8,
        FrameCondId::PSBwitness,
        FrameCondId::NonEmptyMiddle,
        FrameCondId::T3star,
        FrameCondId::T4,
        FrameCondId::T5,
        FrameCondId::T6,
        FrameCondId::T7,
        FrameCondId::T8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameCondId::A4 => "A4",
            FrameCondId::A5 => "A5",
            FrameCondId::A6 => "A6",
            FrameCondId::A7 => "A7",
            FrameCondId::A8 => "A8",
            FrameCondId::PSBwitness => "PSBwitness",
            FrameCondId::NonEmptyMiddle => "NonEmptyMiddle",
            FrameCondId::T3star => "T3*",
            FrameCondId::T4 => "T4",
            FrameCondId::T5 => "T5",
            FrameCondId::T6 => "T6",
            FrameCondId::T7 => "T7",
            FrameCondId::T8 => "T8",
        }
    }

    /// Conditions stated for arbitrary conditional spaces.
    pub fn is_space_condition(self) -> bool {
        matches!(
            self,
            FrameCondId::T3star | FrameCondId::T4 | FrameCondId::T5 | FrameCondId::T6 | FrameCondId::T7 | FrameCondId::T8
        )
    }

    /// The equation a canonicity check compares against.
    pub fn equation(self) -> Option<AxiomId> {
        match self {
            FrameCondId::T3star => Some(AxiomId::C3star),
            FrameCondId::T4 | FrameCondId::A4 => Some(AxiomId::C4),
            FrameCondId::T5 | FrameCondId::A5 => Some(AxiomId::C5),
            FrameCondId::T6 | FrameCondId::A6 => Some(AxiomId::C6),
            FrameCondId::T7 | FrameCondId::A7 => Some(AxiomId::C7),
            FrameCondId::T8 | FrameCondId::A8 => Some(AxiomId::C8),
            FrameCondId::NonEmptyMiddle => Some(AxiomId::C1star),
            FrameCondId::PSBwitness => None,
        }
    }
}

impl fmt::Display for FrameCondId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrameCondId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace("STAR", "*");
        FrameCondId::ALL
            .into_iter()
            .find(|id| id.name().to_ascii_uppercase() == norm)
            .ok_or_else(|| Error::input(format!("unknown frame condition '{s}'")))
    }
}

fn pt(name: &str, x: usize) -> Binding {
    Binding::new(name, Value::Point(x))
}

fn set(name: &str, s: u64) -> Binding {
    Binding::new(name, Value::Set(s))
}

/// Evaluates a frame condition literally, quantifying over points and all
/// subset masks (every subset is closed). Points vary slowest, in the order
/// they are quantified, then sets. The A and T forms share this evaluator.
pub fn check_frame_condition(f: &TFrame, id: FrameCondId) -> Result<Verdict> {
    if id.is_space_condition() {
        let v = check_conditional_space(f);
        if !v.holds {
            return Err(Error::contract(format!("{id} is stated for conditional spaces, but {v}")));
        }
    }
    let m = f.points();
    let sets: Vec<u64> = f.subsets().collect();
    let t = |x: usize, z: u64, y: usize| f.contains(x, z, y);
    let name = id.name();
    let fail = |w: Vec<Binding>| Ok(Verdict::fail(name, w));
    use FrameCondId::*;
    match id {
        A4 | T4 => {
            for u in 0..m {
                for v in 0..m {
                    for w in 0..m {
                        for &y in &sets {
                            for &z in &sets {
                                if t(u, y, v) && t(v, z, w) && !t(u, z, w) {
                                    return fail(vec![pt("u", u), pt("v", v), pt("w", w), set("Y", y), set("Z", z)]);
                                }
                            }
                        }
                    }
                }
            }
        }
        A5 | T5 => {
            if let Some(u) = (0..m).find(|&u| !t(u, 1 << u, u)) {
                return fail(vec![pt("u", u)]);
            }
        }
        A6 | T6 => {
            for u in 0..m {
                for v in 0..m {
                    for &y in &sets {
                        if t(u, y, v) && !bits(y).any(|w| t(u, 1 << v, w)) {
                            return fail(vec![pt("u", u), pt("v", v), set("Y", y)]);
                        }
                    }
                }
            }
        }
        A7 | T7 => {
            for u in 0..m {
                for v in 0..m {
                    for w in 0..m {
                        for &y in &sets {
                            for &z in &sets {
                                if t(u, y, v) && t(u, z, w) && !t(v, z, w) {
                                    return fail(vec![pt("u", u), pt("v", v), pt("w", w), set("Y", y), set("Z", z)]);
                                }
                            }
                        }
                    }
                }
            }
        }
        A8 | T8 => {
            for u in 0..m {
                let reach = f.successors(u, f.full());
                for v in 0..m {
                    for &y in &sets {
                        for &z in &sets {
                            if t(u, y, v) && reach & y & !z == 0 && !t(u, z, v) {
                                return fail(vec![pt("u", u), pt("v", v), set("Y", y), set("Z", z)]);
                            }
                        }
                    }
                }
            }
        }
        T3star => {
            for u in 0..m {
                for v in 0..m {
                    for &y in sets.iter().filter(|&&y| y != 0) {
                        if t(u, y, v) && !bits(y).any(|z| t(u, 1 << z, v)) {
                            return fail(vec![pt("u", u), pt("v", v), set("Y", y)]);
                        }
                    }
                }
            }
        }
        PSBwitness => {
            for u in 0..m {
                for v in 0..m {
                    for &y in &sets {
                        if t(u, y, v) && !bits(y).any(|w| t(u, 1 << w, v)) {
                            return fail(vec![pt("u", u), pt("v", v), set("Y", y)]);
                        }
                    }
                }
            }
        }
        NonEmptyMiddle => {
            for u in 0..m {
                if let Some(v) = bits(f.successors(u, 0)).next() {
                    return fail(vec![pt("u", u), pt("v", v)]);
                }
            }
        }
    }
    Ok(Verdict::pass(name))
}

/// Compares an equation verdict with a frame verdict, keeping the witness of
/// whichever side failed when they disagree.
fn equivalence(law: String, eq: Verdict, fr: Verdict) -> Verdict {
    if eq.holds == fr.holds {
        return Verdict::pass(law);
    }
    let witness = if eq.holds { fr.counterexample } else { eq.counterexample };
    Verdict::fail(law, witness.unwrap_or_default())
}

/// The equation holds in `alg` iff the matching condition holds in its
/// ultrafilter frame. C1* pairs with the absence of empty-middle triples;
/// C3* is checked jointly with C1* against the singleton-witness property,
/// and on its own only through the sufficient condition T3*.
pub fn correspondence_check(alg: &CondAlg, id: AxiomId) -> Result<Verdict> {
    use AxiomId::*;
    let frame = ultrafilter_frame(alg)?;
    let law = format!("correspondence({id})");
    let cond = |c| check_frame_condition(&frame, c);
    Ok(match id {
        C4 => equivalence(law, check_axiom(alg, id), cond(FrameCondId::A4)?),
        C5 => equivalence(law, check_axiom(alg, id), cond(FrameCondId::A5)?),
        C6 => equivalence(law, check_axiom(alg, id), cond(FrameCondId::A6)?),
        C7 => equivalence(law, check_axiom(alg, id), cond(FrameCondId::A7)?),
        C8 => equivalence(law, check_axiom(alg, id), cond(FrameCondId::A8)?),
        C1star => equivalence(law, check_axiom(alg, id), cond(FrameCondId::NonEmptyMiddle)?),
        C3star => {
            let c3 = check_axiom(alg, C3star);
            let psb = Verdict::all("C1*+C3*", [check_axiom(alg, C1star), c3.clone()]);
            let joint = equivalence(law.clone(), psb, cond(FrameCondId::PSBwitness)?);
            if !joint.holds {
                return Ok(joint);
            }
            if cond(FrameCondId::T3star)?.holds && !c3.holds {
                return Ok(Verdict::fail(law, c3.counterexample.unwrap_or_default()));
            }
            Verdict::pass(law)
        }
        _ => return Err(Error::input(format!("no frame correspondence for {id}"))),
    })
}

/// On a conditional space, the condition holds iff the matching equation
/// holds in the full complex algebra.
pub fn canonicity_check(f: &TFrame, id: FrameCondId) -> Result<Verdict> {
    if !id.is_space_condition() {
        return Err(Error::input(format!("{id} is not a conditional-space condition")));
    }
    let eq = id.equation().expect("space conditions have an equation");
    let frame_side = check_frame_condition(f, id)?;
    Ok(equivalence(format!("canonicity({id})"), check_axiom(&cm(f), eq), frame_side))
}

/// `S(x, y, z) iff T_A(x, {y}, z)`, checked to recover `T_A` through
/// `T_A(x, K, z) iff ∃y ∈ K, S(x, y, z)`.
pub fn psb_s_relation(alg: &CondAlg) -> Result<Vec<(usize, usize, usize)>> {
    require_ca(alg, "psb_s_relation")?;
    if !classify_variety(alg).contains(&VarietyTag::PSB) {
        return Err(Error::contract("psb_s_relation needs a pseudo-subordination algebra"));
    }
    let frame = ultrafilter_frame(alg)?;
    let m = frame.points();
    let s: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|x| (0..m).flat_map(move |y| (0..m).map(move |z| (x, y, z))))
        .filter(|&(x, y, z)| frame.contains(x, 1 << y, z))
        .collect();
    for x in 0..m {
        for k in frame.subsets() {
            for z in 0..m {
                let via_s = s.iter().any(|&(a, y, c)| a == x && c == z && k >> y & 1 == 1);
                if via_s != frame.contains(x, k, z) {
                    return Err(Error::contract(format!(
                        "S does not recover T_A at x={x}, K={k:#b}, z={z}"
                    )));
                }
            }
        }
    }
    Ok(s)
}

//! The one-shot verification battery.
//!
//! Each criterion runs over a seeded corpus and reports the first failure
//! it meets, in corpus order, so a report is a pure function of the config.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolean::UfSet;
use crate::conditional::{check_axiom, check_ca, AxiomId, CondAlg};
use crate::duality::{co_es_roundtrip, es_co_roundtrip, representation_check, ultrafilter_frame};
use crate::error::Result;
use crate::extensions::{pi_algebra, sigma_algebra, transported};
use crate::frame::TFrame;
use crate::generate::{corpus, frame_corpus, search, GenKind, GenSpec};
use crate::multimodal::{check_mma_axioms, qa_equals_box_phi_check, to_conditional, to_mma};
use crate::structure::{congruence_duality_check, congruence_lattice, subalgebra_duality_check};
use crate::varieties::{canonicity_check, classify_variety, correspondence_check, is_upward_closed};
use crate::varieties::{FrameCondId, VarietyTag};
use crate::verdict::{Binding, Value, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Samples drawn at each of two and three atoms.
    pub samples_per_size: usize,
    /// Upward-closed frames for the roundtrip and canonicity criteria.
    pub frames: usize,
    pub max_frame_points: usize,
    /// Adds a proj2 table with one entry broken so that C2 fails.
    pub mutant: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 2024, samples_per_size: 600, frames: 500, max_frame_points: 4, mutant: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub samples: usize,
    pub elapsed_ms: u128,
    /// The first failing verdict, or a passing summary.
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub criteria: Vec<CriterionReport>,
}

/// The four-element algebra with `a ⇀ b = b`.
pub fn proj2() -> CondAlg {
    CondAlg::projection(2).expect("two atoms are in range")
}

/// The four-element algebra with `a ⇀ b = 1` if `a ≤ b` and `0` otherwise.
pub fn glob2() -> CondAlg {
    CondAlg::global_strict(2).expect("two atoms are in range")
}

/// proj2 with `0 ⇀ {2}` moved from `{2}` to `1`; C1 still holds and C2 fails.
pub fn proj2_mutant() -> CondAlg {
    proj2().with_entry(0, 0b10, 0b11).expect("entry is in range")
}

struct Outcome {
    verdict: Verdict,
    samples: usize,
    notes: Vec<String>,
}

impl Outcome {
    fn new(verdict: Verdict, samples: usize) -> Self {
        Outcome { verdict, samples, notes: Vec::new() }
    }
}

/// First failure over `items` in order, or a pass named `law`.
fn over<T: Sync>(law: &str, items: &[T], check: impl Fn(&T) -> Result<Verdict> + Sync) -> Verdict {
    let verdicts: Vec<Verdict> = items
        .par_iter()
        .enumerate()
        .map(|(i, x)| match check(x) {
            Ok(v) if v.holds => v,
            Ok(v) => tag(v, i),
            Err(e) => Verdict::fail(format!("{law}: {e}"), vec![Binding::new("sample", Value::Point(i))]),
        })
        .collect();
    Verdict::all(law, verdicts)
}

fn tag(mut v: Verdict, i: usize) -> Verdict {
    v.counterexample.get_or_insert_with(Vec::new).insert(0, Binding::new("sample", Value::Point(i)));
    v
}

fn dual_example() -> Outcome {
    let expected: Vec<(usize, u64, usize)> = (0..2).flat_map(|u| (0..4u64).map(move |z| (u, z, u))).collect();
    let v = match ultrafilter_frame(&proj2()) {
        Ok(f) => Verdict::from_bool("dual(proj2)", f.triples().collect::<Vec<_>>() == expected),
        Err(e) => Verdict::fail(format!("dual(proj2): {e}"), Vec::new()),
    };
    Outcome::new(v, 1)
}

/// Scans all sixteen one-atom tables directly against the three laws.
fn naive_one_atom_cas() -> Vec<Vec<u64>> {
    (0u32..16)
        .map(|code| (0..4).map(|i| u64::from(code >> i & 1)).collect::<Vec<_>>())
        .filter(|t| {
            let op = |a: u64, b: u64| t[(2 * a + b) as usize];
            let e = [0u64, 1];
            e.iter().all(|&a| op(a, 1) == 1)
                && e.iter().all(|&a| e.iter().all(|&b| e.iter().all(|&c| op(a, b) & op(a, c) == op(a, b & c))))
                && e.iter().all(|&a| {
                    e.iter().all(|&b| e.iter().all(|&c| op(a | b, c) & !(op(a, c) & op(b, c)) == 0))
                })
        })
        .collect()
}

fn exhaustive_baseline() -> Outcome {
    let spec = GenSpec { kind: GenKind::Exhaustive, atoms: 1, seed: 0 };
    let v = match search(&spec, &[AxiomId::C1, AxiomId::C2, AxiomId::C3], &[], usize::MAX) {
        Ok(found) => {
            let got: Vec<Vec<u64>> = found.iter().map(|a| a.table().to_vec()).collect();
            Verdict::from_bool("exhaustive(n=1)", got.len() == 3 && got == naive_one_atom_cas())
        }
        Err(e) => Verdict::fail(format!("exhaustive(n=1): {e}"), Vec::new()),
    };
    Outcome::new(v, 16)
}

fn extensions(alg: &CondAlg) -> Result<Verdict> {
    let (p, s) = (pi_algebra(alg)?, sigma_algebra(alg)?);
    let base = alg.base();
    for u in base.uf_sets() {
        for v in base.uf_sets() {
            let t = transported(alg, u, v).mask();
            let (pv, sv) = (p.cond(u.mask(), v.mask()), s.cond(u.mask(), v.mask()));
            if pv != t || sv != t || sv & !pv != 0 {
                return Ok(Verdict::fail(
                    "extensions",
                    vec![Binding::new("U", Value::Set(u.mask())), Binding::new("V", Value::Set(v.mask()))],
                ));
            }
        }
    }
    Ok(Verdict::all("extensions", [check_ca(&p), check_ca(&s)]))
}

fn mma(alg: &CondAlg) -> Result<Verdict> {
    let m = to_mma(alg)?;
    let back = Verdict::from_bool("to_conditional(to_mma)", &to_conditional(&m)? == alg);
    Ok(Verdict::all("mma", [back, check_mma_axioms(&m), qa_equals_box_phi_check(alg)?]))
}

const CORRESPONDENCE_AXIOMS: [AxiomId; 6] =
    [AxiomId::C1star, AxiomId::C4, AxiomId::C5, AxiomId::C6, AxiomId::C7, AxiomId::C8];

const MIN_CORRESPONDENCE: usize = 500;

fn correspondence(algs: &[CondAlg]) -> Outcome {
    let mut parts = Vec::new();
    let mut notes = Vec::new();
    for id in CORRESPONDENCE_AXIOMS {
        parts.push(over(&format!("correspondence({id})"), algs, |a| correspondence_check(a, id)));
        let sat = algs.par_iter().filter(|a| check_axiom(a, id).holds).count();
        let viol = algs.len() - sat;
        notes.push(format!("{id}: {sat} satisfying, {viol} violating"));
        let covered = sat > 0 && viol > 0 && algs.len() >= MIN_CORRESPONDENCE;
        parts.push(Verdict::from_bool(format!("coverage({id})"), covered));
    }
    parts.push(Verdict::from_bool("proj2 fails C6", !check_axiom(&proj2(), AxiomId::C6).holds));
    parts.push(Verdict::from_bool(
        "glob2 satisfies all",
        CORRESPONDENCE_AXIOMS.iter().all(|&id| check_axiom(&glob2(), id).holds),
    ));
    Outcome { verdict: Verdict::all("correspondence", parts), samples: algs.len(), notes }
}

const CANONICITY_CONDITIONS: [FrameCondId; 6] =
    [FrameCondId::T3star, FrameCondId::T4, FrameCondId::T5, FrameCondId::T6, FrameCondId::T7, FrameCondId::T8];

fn canonicity(frames: &[TFrame]) -> Outcome {
    let mut parts = Vec::new();
    let mut notes = Vec::new();
    for id in CANONICITY_CONDITIONS {
        parts.push(over(&format!("canonicity({id})"), frames, |f| canonicity_check(f, id)));
        let sat = frames
            .par_iter()
            .filter(|f| crate::varieties::check_frame_condition(f, id).map(|v| v.holds).unwrap_or(false))
            .count();
        notes.push(format!("{id}: {sat} satisfying, {} violating", frames.len() - sat));
    }
    Outcome { verdict: Verdict::all("canonicity", parts), samples: frames.len(), notes }
}

fn structure(algs: &[CondAlg]) -> Outcome {
    let small: Vec<CondAlg> = algs.iter().filter(|a| a.atoms() <= 3).cloned().collect();
    let dual = over("structure", &small, |a| {
        Ok(Verdict::all("structure", [subalgebra_duality_check(a)?, congruence_duality_check(a)?]))
    });
    let lattice = |a: &CondAlg| congruence_lattice(a).map(|l| l.iter().map(|c| c.y).collect::<Vec<UfSet>>());
    let glob = Verdict::from_bool(
        "glob2 congruences",
        lattice(&glob2()).map(|l| l == vec![UfSet(0), UfSet(0b11)]).unwrap_or(false),
    );
    let proj = Verdict::from_bool("proj2 congruences", lattice(&proj2()).map(|l| l.len() == 4).unwrap_or(false));
    Outcome::new(Verdict::all("structure", [dual, glob, proj]), small.len())
}

fn variety_poset(algs: &[CondAlg]) -> Outcome {
    let closed = over("variety upward closure", algs, |a| {
        Ok(Verdict::from_bool("variety upward closure", is_upward_closed(&classify_variety(a))))
    });
    let all: BTreeSet<VarietyTag> = VarietyTag::ALL.into_iter().collect();
    let glob = Verdict::from_bool("glob2 varieties", classify_variety(&glob2()) == all);
    let proj = Verdict::from_bool("proj2 varieties", classify_variety(&proj2()) == BTreeSet::from([VarietyTag::CA]));
    Outcome::new(Verdict::all("variety poset", [closed, glob, proj]), algs.len())
}

/// The least `(a, b, c)` with `(a⇀b) ∧ (a⇀c) ≠ a⇀(b∧c)`.
fn least_c2_violation(alg: &CondAlg) -> Option<(u64, u64, u64)> {
    let base = *alg.base();
    base.elements()
        .flat_map(|a| base.elements().flat_map(move |b| base.elements().map(move |c| (a, b, c))))
        .find(|&(a, b, c)| alg.cond(a, b) & alg.cond(a, c) != alg.cond(a, b & c))
}

fn mutation() -> Outcome {
    let bad = proj2_mutant();
    let v = check_ca(&bad);
    let c1_holds = check_axiom(&bad, AxiomId::C1).holds;
    let caught = match least_c2_violation(&bad) {
        Some((a, b, c)) if c1_holds => {
            !v.holds
                && v.witness("a") == Some(Value::Elem(a))
                && v.witness("b") == Some(Value::Elem(b))
                && v.witness("c") == Some(Value::Elem(c))
        }
        _ => false,
    };
    let mut out = Outcome::new(Verdict::from_bool("mutation", caught), 1);
    out.notes.push(format!("check_CA on the mutant: {v}"));
    out
}

/// Runs every criterion. The corpus is filtered to conditional algebras
/// before the remaining checks; with `mutant` set the broken table joins the
/// corpus and the corpus criterion reports its CA failure.
pub fn verify_suite(config: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let mut raw = corpus(config.seed, config.samples_per_size);
    if config.mutant {
        raw.push(proj2_mutant());
    }
    let frames = frame_corpus(config.seed, config.frames, config.max_frame_points);
    let algs: Vec<CondAlg> = raw.iter().filter(|a| check_ca(a).holds).cloned().collect();

    let mut criteria = Vec::new();
    let mut run = |id: usize, name: &str, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        criteria.push(CriterionReport {
            id,
            name: name.to_string(),
            passed: o.verdict.holds,
            samples: o.samples,
            elapsed_ms: t.elapsed().as_millis(),
            verdict: o.verdict,
            notes: o.notes,
        });
    };

    run(0, "corpus is conditional", &|| Outcome::new(over("CA", &raw, |a| Ok(check_ca(a))), raw.len()));
    run(1, "dual of proj2", &dual_example);
    run(2, "exhaustive baseline", &exhaustive_baseline);
    run(3, "representation", &|| Outcome::new(over("representation", &algs, representation_check), algs.len()));
    run(4, "duality roundtrips", &|| {
        let a = over("co-es-roundtrip", &algs, co_es_roundtrip);
        let f = over("es-co-roundtrip", &frames, es_co_roundtrip);
        Outcome::new(Verdict::all("roundtrips", [a, f]), algs.len() + frames.len())
    });
    run(5, "extensions", &|| Outcome::new(over("extensions", &algs, extensions), algs.len()));
    run(6, "multimodal", &|| Outcome::new(over("mma", &algs, mma), algs.len()));
    run(7, "correspondence", &|| correspondence(&algs));
    run(8, "canonicity", &|| canonicity(&frames));
    run(9, "structure", &|| structure(&algs));
    run(10, "variety poset", &|| variety_poset(&algs));
    run(11, "mutation sensitivity", &mutation);

    SuiteReport {
        seed: config.seed,
        passed: criteria.iter().all(|c| c.passed),
        elapsed_ms: start.elapsed().as_millis(),
        criteria,
    }
}

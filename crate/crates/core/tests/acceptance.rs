//! Acceptance battery: one line per criterion, each checked against the
//! reference implementations in `common` rather than the library alone.
//! Run with `cargo test -p condalg --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use condalg::boolean::UfSet;
use condalg::duality::{co_es_roundtrip, es_co_roundtrip, representation_check, ultrafilter_frame};
use condalg::extensions::{pi_algebra, pi_extend, sigma_algebra, sigma_extend};
use condalg::generate::{corpus, frame_corpus, search, GenKind, GenSpec};
use condalg::multimodal::{check_mma_axioms, q_relation, qa_equals_box_phi_check, to_conditional, to_mma};
use condalg::structure::{congruence_duality_check, congruence_lattice, enumerate_subalgebras, subalgebra_duality_check};
use condalg::varieties::{canonicity_check, check_frame_condition, classify_variety, correspondence_check};
use condalg::{check_ca, AxiomId, CondAlg, FrameCondId, TFrame, Value};

const SEED: u64 = 2024;
const SAMPLES_PER_SIZE: usize = 600;
const FRAMES: usize = 500;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn proj2() -> CondAlg {
    CondAlg::projection(2).unwrap()
}

fn glob2() -> CondAlg {
    CondAlg::global_strict(2).unwrap()
}

fn dual_of_proj2() -> Outcome {
    // T_A lists, for each of the two ultrafilters, the triples through the
    // empty set, both singletons and the whole space, and nothing else
    let expected = vec![
        (0, 0b00, 0),
        (0, 0b01, 0),
        (0, 0b10, 0),
        (0, 0b11, 0),
        (1, 0b00, 1),
        (1, 0b01, 1),
        (1, 0b10, 1),
        (1, 0b11, 1),
    ];
    let f = ultrafilter_frame(&proj2()).map_err(|e| e.to_string())?;
    let got: Vec<_> = f.triples().collect();
    ensure(got == expected, || format!("got {got:?}"))?;
    Ok("8 triples in canonical order".into())
}

fn exhaustive_baseline() -> Outcome {
    let naive: Vec<Vec<u64>> = (0u64..16)
        .map(|code| (0..4).map(|i| code >> i & 1).collect::<Vec<u64>>())
        .filter(|t| is_ca(&Table { n: 1, t: t.clone() }))
        .collect();
    let spec = GenSpec { kind: GenKind::Exhaustive, atoms: 1, seed: 0 };
    let found = search(&spec, &[AxiomId::C1, AxiomId::C2, AxiomId::C3], &[], usize::MAX).map_err(|e| e.to_string())?;
    let got: Vec<Vec<u64>> = found.iter().map(|a| a.table().to_vec()).collect();
    ensure(naive.len() == 3, || format!("naive oracle found {}", naive.len()))?;
    ensure(got == naive, || format!("search gave {got:?}, oracle {naive:?}"))?;
    Ok("3 algebras, equal to the scan of all 16 tables".into())
}

fn representation(algs: &[CondAlg]) -> Outcome {
    for (i, a) in algs.iter().enumerate() {
        let t = Table::of(a);
        ensure(complex(&ultrafilter_rel(&t)) == t, || format!("oracle: sample {i} is not represented"))?;
        let v = representation_check(a).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("sample {i}: {v}"))?;
    }
    Ok(format!("{} algebras", algs.len()))
}

fn roundtrips(algs: &[CondAlg], frames: &[TFrame]) -> Outcome {
    for (i, a) in algs.iter().enumerate() {
        let v = co_es_roundtrip(a).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("algebra {i}: {v}"))?;
    }
    let mut max_points = 0;
    for (i, f) in frames.iter().enumerate() {
        let r = Rel::of(f);
        ensure(r.upward_closed(), || format!("frame {i} is not upward closed"))?;
        ensure(ultrafilter_rel(&complex(&r)) == r, || format!("oracle: frame {i} does not come back"))?;
        let v = es_co_roundtrip(f).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("frame {i}: {v}"))?;
        max_points = max_points.max(f.points());
    }
    ensure(frames.len() >= 500 && max_points == 4, || format!("{} frames up to {max_points} points", frames.len()))?;
    Ok(format!("{} algebras, {} frames up to 4 points", algs.len(), frames.len()))
}

fn extensions(algs: &[CondAlg]) -> Outcome {
    for (i, a) in algs.iter().enumerate() {
        let t = Table::of(a);
        for u in t.elems() {
            for v in t.elems() {
                // Stone images are masks, so the transported operator is the table itself
                let want = t.op(u, v);
                let p = pi_extend(a, UfSet(u), UfSet(v)).map_err(|e| e.to_string())?.mask();
                let s = sigma_extend(a, UfSet(u), UfSet(v)).map_err(|e| e.to_string())?.mask();
                ensure(p == want && s == want && s & !p == 0, || {
                    format!("sample {i} at U={u:#b}, V={v:#b}: pi={p:#b}, sigma={s:#b}, want {want:#b}")
                })?;
            }
        }
        let pa = Table::of(&pi_algebra(a).map_err(|e| e.to_string())?);
        let sa = Table::of(&sigma_algebra(a).map_err(|e| e.to_string())?);
        ensure(is_ca(&pa) && is_ca(&sa), || format!("sample {i}: an extension is not conditional"))?;
    }
    Ok(format!("{} algebras", algs.len()))
}

fn multimodal(algs: &[CondAlg]) -> Outcome {
    for (i, a) in algs.iter().enumerate() {
        let t = Table::of(a);
        let m = to_mma(a).map_err(|e| e.to_string())?;
        ensure(&to_conditional(&m).map_err(|e| e.to_string())? == a, || format!("sample {i}: no roundtrip"))?;
        let top = t.top();
        let bx = |b: u64, x: u64| m.apply(b, x);
        let laws = t.elems().all(|b| {
            bx(b, top) == top
                && t.elems().all(|x| {
                    bx(b, x) == t.op(b, x)
                        && t.elems().all(|y| bx(b, x & y) == bx(b, x) & bx(b, y))
                        && t.elems().all(|b2| bx(b | b2, x) & !(bx(b, x) & bx(b2, x)) == 0)
                })
        });
        ensure(laws && check_mma_axioms(&m).holds, || format!("sample {i}: box laws fail"))?;
        for b in t.elems() {
            let q = q_relation(&m, b).map_err(|e| e.to_string())?;
            for (u, &qu) in q.iter().enumerate() {
                // Q_b(u) is the set of atoms below every x with b ⇀ x in u
                let meet = t.elems().filter(|&x| t.op(b, x) >> u & 1 == 1).fold(top, |acc, x| acc & x);
                ensure(qu == meet, || format!("sample {i}: Q_{b}({u}) = {qu:#b}, want {meet:#b}"))?;
            }
            for v in t.elems() {
                let nec = (0..t.n).filter(|&u| q[u] & !v == 0).fold(0, |acc, u| acc | 1 << u);
                ensure(nec == t.op(b, v), || format!("sample {i}: [Q_{b}]({v:#b}) differs from the box"))?;
            }
        }
        let v = qa_equals_box_phi_check(a).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("sample {i}: {v}"))?;
    }
    Ok(format!("{} algebras", algs.len()))
}

fn a_condition(law: &str) -> FrameCondId {
    match law {
        "C1*" => FrameCondId::NonEmptyMiddle,
        "C4" => FrameCondId::A4,
        "C5" => FrameCondId::A5,
        "C6" => FrameCondId::A6,
        "C7" => FrameCondId::A7,
        _ => FrameCondId::A8,
    }
}

fn correspondence(algs: &[CondAlg]) -> Outcome {
    let mut summary = Vec::new();
    for law in ["C1*", "C4", "C5", "C6", "C7", "C8"] {
        let id: AxiomId = law.parse().unwrap();
        let (mut sat, mut viol) = (0, 0);
        for (i, a) in algs.iter().enumerate() {
            let t = Table::of(a);
            let r = ultrafilter_rel(&t);
            let eq = holds(&t, law);
            let fc = frame_holds(&r, law);
            ensure(eq == fc, || format!("{law}: oracle equivalence fails on sample {i}"))?;
            let frame = ultrafilter_frame(a).map_err(|e| e.to_string())?;
            let lib = check_frame_condition(&frame, a_condition(law)).map_err(|e| e.to_string())?;
            ensure(lib.holds == fc, || format!("{law}: library frame condition disagrees on sample {i}"))?;
            let v = correspondence_check(a, id).map_err(|e| e.to_string())?;
            ensure(v.holds, || format!("sample {i}: {v}"))?;
            if eq {
                sat += 1;
            } else {
                viol += 1;
            }
        }
        ensure(sat > 0 && viol > 0 && algs.len() >= 500, || format!("{law}: {sat} satisfying, {viol} violating"))?;
        summary.push(format!("{law} {sat}/{viol}"));
    }
    let (p, g) = (Table::of(&proj2()), Table::of(&glob2()));
    ensure(!holds(&p, "C6") && !frame_holds(&ultrafilter_rel(&p), "C6"), || "proj2 should fail C6 and A6".into())?;
    ensure(
        ["C1*", "C4", "C5", "C6", "C7", "C8"].iter().all(|l| holds(&g, l) && frame_holds(&ultrafilter_rel(&g), l)),
        || "glob2 should satisfy every axiom and condition".into(),
    )?;
    Ok(format!("{} algebras; satisfying/violating {}", algs.len(), summary.join(", ")))
}

fn canonicity(frames: &[TFrame]) -> Outcome {
    let conds = [
        ("C3*", FrameCondId::T3star),
        ("C4", FrameCondId::T4),
        ("C5", FrameCondId::T5),
        ("C6", FrameCondId::T6),
        ("C7", FrameCondId::T7),
        ("C8", FrameCondId::T8),
    ];
    let mut summary = Vec::new();
    for (law, id) in conds {
        let mut sat = 0;
        for (i, f) in frames.iter().enumerate() {
            let r = Rel::of(f);
            let fc = frame_holds(&r, law);
            let eq = holds(&complex(&r), law);
            ensure(fc == eq, || format!("{id}: oracle equivalence fails on frame {i}"))?;
            let v = canonicity_check(f, id).map_err(|e| e.to_string())?;
            ensure(v.holds, || format!("frame {i}: {v}"))?;
            sat += usize::from(fc);
        }
        summary.push(format!("{id} {sat}/{}", frames.len() - sat));
    }
    ensure(frames.len() >= 200, || "too few frames".into())?;
    Ok(format!("{} frames; satisfying/violating {}", frames.len(), summary.join(", ")))
}

fn structure(algs: &[CondAlg]) -> Outcome {
    let mut subalgebras = 0;
    for (i, a) in algs.iter().enumerate().filter(|(_, a)| a.atoms() <= 3) {
        let t = Table::of(a);
        let r = ultrafilter_rel(&t);
        let mut conditional = BTreeSet::new();
        for s in boolean_subalgebras(t.n) {
            let closed = closed_under_op(&t, s);
            let ceq = is_c_equivalence(&r, &equiv_of(&t, s));
            ensure(closed == ceq, || format!("oracle: sample {i}, subalgebra {s:#b}"))?;
            if closed {
                conditional.insert(s);
            }
        }
        let subs = enumerate_subalgebras(a);
        let all: BTreeSet<u64> = subs.iter().map(|s| s.elements.0).collect();
        let lib: BTreeSet<u64> = subs.iter().filter(|s| s.closed_under(a).holds).map(|s| s.elements.0).collect();
        ensure(all == boolean_subalgebras(t.n).into_iter().collect(), || format!("sample {i}: Boolean subalgebras {all:?}"))?;
        ensure(lib == conditional, || format!("sample {i}: subalgebras {lib:?}, oracle {conditional:?}"))?;
        subalgebras += conditional.len();

        let mut closed_sets = Vec::new();
        for y in 0..(1u64 << t.n) {
            let tc = is_t_closed(&r, y);
            ensure(tc == theta_compatible(&t, y), || format!("oracle: sample {i}, Y={y:#b}"))?;
            if tc {
                closed_sets.push(y);
            }
        }
        let lib: Vec<u64> = congruence_lattice(a).map_err(|e| e.to_string())?.iter().map(|c| c.y.mask()).collect();
        ensure(lib == closed_sets, || format!("sample {i}: T-closed {lib:?}, oracle {closed_sets:?}"))?;

        let v = subalgebra_duality_check(a).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("sample {i}: {v}"))?;
        let v = congruence_duality_check(a).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("sample {i}: {v}"))?;
    }
    let lattice = |a: &CondAlg| -> Vec<u64> { congruence_lattice(a).unwrap().iter().map(|c| c.y.mask()).collect() };
    ensure(lattice(&glob2()) == vec![0, 0b11], || format!("glob2 lattice {:?}", lattice(&glob2())))?;
    ensure(lattice(&proj2()).len() == 4, || format!("proj2 lattice {:?}", lattice(&proj2())))?;
    Ok(format!("{} algebras, {subalgebras} conditional subalgebras", algs.len()))
}

fn variety_poset(algs: &[CondAlg]) -> Outcome {
    for (i, a) in algs.iter().enumerate() {
        let own = classify(&Table::of(a));
        let lib: Vec<String> = classify_variety(a).iter().map(|t| t.to_string()).collect();
        ensure(upward_closed_tags(&own), || format!("sample {i}: {own:?} is not upward closed"))?;
        ensure(lib == own, || format!("sample {i}: library {lib:?}, oracle {own:?}"))?;
    }
    let names = |a: &CondAlg| classify_variety(a).iter().map(|t| t.to_string()).collect::<Vec<_>>();
    ensure(names(&glob2()) == ["CA", "PSB", "PsC", "SIA", "S2IA"], || format!("glob2: {:?}", names(&glob2())))?;
    ensure(names(&proj2()) == ["CA"], || format!("proj2: {:?}", names(&proj2())))?;
    Ok(format!("{} algebras", algs.len()))
}

fn mutation() -> Outcome {
    let bad = proj2().with_entry(0, 0b10, 0b11).map_err(|e| e.to_string())?;
    let (law, vals) = least_ca_violation(&Table::of(&bad)).ok_or("the mutant is still conditional")?;
    let v = check_ca(&bad);
    ensure(!v.holds && v.law == law, || format!("check_CA said {v}, oracle says {law}"))?;
    let vars = ["a", "b", "c"];
    for (var, want) in vars.iter().zip(&vals) {
        ensure(v.witness(var) == Some(Value::Elem(*want)), || format!("check_CA said {v}, oracle {law} at {vals:?}"))?;
    }
    Ok(format!("{v}"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let algs: Vec<CondAlg> = corpus(SEED, SAMPLES_PER_SIZE);
    let frames = frame_corpus(SEED, FRAMES, 4);
    let sizes = algs.iter().filter(|a| a.atoms() >= 2).count() - 2;
    println!("corpus: {} algebras ({sizes} sampled at two and three atoms), {} frames, seed {SEED}", algs.len(), frames.len());
    let bad: Vec<usize> = (0..algs.len()).filter(|&i| !is_ca(&Table::of(&algs[i]))).collect();
    if !bad.is_empty() {
        println!("FAIL  corpus contains non-conditional tables at {bad:?}");
        return ExitCode::FAILURE;
    }

    let criteria: Vec<Criterion> = vec![
        ("dual of proj2", Box::new(dual_of_proj2)),
        ("exhaustive baseline", Box::new(exhaustive_baseline)),
        ("representation", Box::new(|| representation(&algs))),
        ("duality roundtrips", Box::new(|| roundtrips(&algs, &frames))),
        ("extensions", Box::new(|| extensions(&algs))),
        ("multimodal", Box::new(|| multimodal(&algs))),
        ("correspondence", Box::new(|| correspondence(&algs))),
        ("canonicity", Box::new(|| canonicity(&frames))),
        ("structure", Box::new(|| structure(&algs))),
        ("variety poset", Box::new(|| variety_poset(&algs))),
        ("mutation sensitivity", Box::new(mutation)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {} ms", criteria.len() - failed, criteria.len(), start.elapsed().as_millis());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Seeded generators of conditional algebras and frames, and model search.
//!
//! Every random object is a pure function of `(kind, size, seed, index)`:
//! sample `i` draws from a ChaCha8 stream keyed by `seed` with stream
//! number `i`, so results do not depend on how work is scheduled.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolean::{bits, supermasks, Elem, FinBoolAlg, MAX_ATOMS};
use crate::conditional::{check_axiom, AxiomId, CondAlg};
use crate::error::{Error, Result};
use crate::frame::{cm, upward_closure, TFrame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    Exhaustive,
    RandomTable,
    FromFrame,
    StrictImplicationFamily,
    ProjectionFamily,
}

impl GenKind {
    pub const ALL: [GenKind; 5] = [
        GenKind::Exhaustive,
        GenKind::RandomTable,
        GenKind::FromFrame,
        GenKind::StrictImplicationFamily,
        GenKind::ProjectionFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Exhaustive => "exhaustive",
            GenKind::RandomTable => "random-table",
            GenKind::FromFrame => "from-frame",
            GenKind::StrictImplicationFamily => "strict-implication-family",
            GenKind::ProjectionFamily => "projection-family",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::input(format!("unknown generator '{s}'")))
    }
}

/// What to generate: a kind, an atom count, and a seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub atoms: usize,
    pub seed: u64,
}

/// The RNG for sample `index` under `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn check_atoms(n: usize) -> Result<FinBoolAlg> {
    FinBoolAlg::new(n)
}

/// Coatom `i` is the complement of atom `i`.
fn coatom(base: &FinBoolAlg, i: usize) -> Elem {
    base.top() ^ (1 << i)
}

/// The meet-preserving map with `f(1) = 1` taking coatom `i` to `values[i]`:
/// `f(x) = ⋀{values[i] : x ≤ coatom i}`.
fn row_from_coatoms(base: &FinBoolAlg, values: &[Elem]) -> Vec<Elem> {
    base.elements()
        .map(|x| (0..base.atoms()).filter(|&i| x >> i & 1 == 0).fold(base.top(), |acc, i| acc & values[i]))
        .collect()
}

/// All meet-preserving rows with `f(1) = 1`, in lexicographic order.
fn candidate_rows(base: &FinBoolAlg) -> Vec<Vec<Elem>> {
    let n = base.atoms();
    let size = base.size() as u64;
    let mut rows: Vec<Vec<Elem>> = (0..size.pow(n as u32))
        .map(|code| {
            let values: Vec<Elem> = (0..n).map(|i| code / size.pow(i as u32) % size).collect();
            row_from_coatoms(base, &values)
        })
        .collect();
    rows.sort();
    rows
}

/// Every conditional algebra on `n ≤ 2` atoms, in lexicographic table order.
///
/// C1 and C2 restrict each row to the meet-preserving maps fixing 1; C3
/// makes rows antitone in the antecedent. Both are enforced while
/// extending a partial table, and the result is re-checked in full.
pub fn exhaustive(n: usize) -> Result<Vec<CondAlg>> {
    if n > 2 {
        return Err(Error::input(format!("exhaustive enumeration is limited to 2 atoms, got {n}")));
    }
    let base = check_atoms(n)?;
    let cands = candidate_rows(&base);
    let mut out = Vec::new();
    let mut rows: Vec<usize> = Vec::new();
    fn go(base: &FinBoolAlg, cands: &[Vec<Elem>], rows: &mut Vec<usize>, out: &mut Vec<CondAlg>) {
        let a = rows.len() as Elem;
        if rows.len() == base.size() {
            let table = rows.iter().flat_map(|&r| cands[r].iter().copied()).collect();
            let alg = CondAlg::new(*base, table).expect("candidate rows are in range");
            debug_assert!(crate::conditional::check_ca(&alg).holds);
            out.push(alg);
            return;
        }
        for (k, row) in cands.iter().enumerate() {
            // antecedents below `a` were placed earlier and must dominate it
            let fits = (0..a).filter(|&p| p & a == p).all(|p| {
                let prev = &cands[rows[p as usize]];
                row.iter().zip(prev).all(|(x, y)| x & y == *x)
            });
            if fits {
                rows.push(k);
                go(base, cands, rows, out);
                rows.pop();
            }
        }
    }
    go(&base, &cands, &mut rows, &mut out);
    Ok(out)
}

/// A conditional algebra drawn inside the C1/C2/C3-pruned space.
///
/// Rows are built from the top antecedent down. Each coatom value starts at
/// the join of the values already fixed for the antecedent's covers, which
/// keeps rows antitone, and gains random bits with probability `density`.
pub fn random_table(n: usize, rng: &mut impl Rng) -> Result<CondAlg> {
    let base = check_atoms(n)?;
    let density = [0.1, 0.25, 0.5, 0.75][rng.gen_range(0..4)];
    let mut coatoms: Vec<Vec<Elem>> = vec![vec![0; n]; base.size()];
    let mut order: Vec<Elem> = base.elements().collect();
    order.sort_by_key(|a| std::cmp::Reverse(a.count_ones()));
    for a in order {
        let row: Vec<Elem> = (0..n)
            .map(|i| {
                let lower = (0..n)
                    .filter(|&j| a >> j & 1 == 0)
                    .fold(0, |acc, j| acc | coatoms[(a | 1 << j) as usize][i]);
                let noise = (0..n).filter(|_| rng.gen_bool(density)).fold(0, |acc, j| acc | 1 << j);
                lower | noise
            })
            .collect();
        coatoms[a as usize] = row;
    }
    let table = base.elements().flat_map(|a| row_from_coatoms(&base, &coatoms[a as usize])).collect();
    CondAlg::new(base, table)
}

/// `a ⇀ b = {x : R(x) ∩ a ⊆ b}` for successor masks `rel`.
pub fn strict_implication(n: usize, rel: &[u64]) -> Result<CondAlg> {
    if rel.len() != n {
        return Err(Error::input("relation must give one successor mask per point"));
    }
    CondAlg::from_fn(n, |a, b| (0..n).filter(|&x| rel[x] & a & !b == 0).fold(0, |acc, x| acc | 1 << x))
}

/// `a ⇀ b = □_R(b) = {x : R(x) ⊆ b}`, independent of `a`.
pub fn projection_family(n: usize, rel: &[u64]) -> Result<CondAlg> {
    if rel.len() != n {
        return Err(Error::input("relation must give one successor mask per point"));
    }
    CondAlg::from_fn(n, |_, b| (0..n).filter(|&x| rel[x] & !b == 0).fold(0, |acc, x| acc | 1 << x))
}

/// Pointwise meet of two operators on the same base; conditional algebras
/// are closed under it.
pub fn meet(a: &CondAlg, b: &CondAlg) -> Result<CondAlg> {
    if a.atoms() != b.atoms() {
        return Err(Error::input("operators live on different algebras"));
    }
    CondAlg::new(*a.base(), a.table().iter().zip(b.table()).map(|(x, y)| x & y).collect())
}

/// A random relation, closed under a random selection of reflexivity,
/// symmetry, transitivity and euclideanness.
pub fn random_relation(n: usize, rng: &mut impl Rng) -> Vec<u64> {
    let density = [0.15, 0.3, 0.5][rng.gen_range(0..3)];
    let mut rel: Vec<u64> =
        (0..n).map(|_| (0..n).filter(|_| rng.gen_bool(density)).fold(0, |acc, j| acc | 1 << j)).collect();
    let (refl, sym, trans, eucl) = (rng.gen_bool(0.5), rng.gen_bool(0.4), rng.gen_bool(0.4), rng.gen_bool(0.3));
    loop {
        let before = rel.clone();
        for x in 0..n {
            if refl {
                rel[x] |= 1 << x;
            }
            for y in bits(rel[x]) {
                if sym {
                    rel[y] |= 1 << x;
                }
                if trans {
                    rel[x] |= rel[y];
                }
                if eucl {
                    rel[y] |= rel[x];
                }
            }
        }
        if rel == before {
            return rel;
        }
    }
}

/// A random frame with each triple present independently.
pub fn random_frame(points: usize, rng: &mut impl Rng) -> Result<TFrame> {
    let density = [0.02, 0.05, 0.1, 0.2][rng.gen_range(0..4)];
    let mut f = TFrame::empty(points)?;
    for x in 0..points {
        for z in f.subsets() {
            for y in 0..points {
                if rng.gen_bool(density) {
                    f.insert((x, z, y))?;
                }
            }
        }
    }
    Ok(f)
}

/// A random frame closed under supersets in the middle coordinate.
pub fn random_upward_closed_frame(points: usize, rng: &mut impl Rng) -> Result<TFrame> {
    Ok(upward_closure(&random_frame(points, rng)?))
}

/// Draws sample `index` of `spec`. For the exhaustive kind the index picks
/// an algebra from the enumeration, cyclically.
pub fn sample(spec: &GenSpec, index: u64) -> Result<CondAlg> {
    let n = spec.atoms;
    if n > MAX_ATOMS {
        return Err(Error::input(format!("atom count {n} exceeds the supported maximum {MAX_ATOMS}")));
    }
    let mut rng = rng_for(spec.seed, index);
    match spec.kind {
        GenKind::Exhaustive => {
            let all = exhaustive(n)?;
            Ok(all[index as usize % all.len()].clone())
        }
        GenKind::RandomTable => random_table(n, &mut rng),
        GenKind::FromFrame => Ok(cm(&random_frame(n, &mut rng)?)),
        GenKind::StrictImplicationFamily => strict_implication(n, &random_relation(n, &mut rng)),
        GenKind::ProjectionFamily => projection_family(n, &random_relation(n, &mut rng)),
    }
}

fn matches(alg: &CondAlg, require: &[AxiomId], forbid: &[AxiomId]) -> bool {
    require.iter().all(|&id| check_axiom(alg, id).holds) && forbid.iter().all(|&id| !check_axiom(alg, id).holds)
}

/// Random kinds give up after this many samples.
pub const SEARCH_BUDGET: u64 = 200_000;

/// Up to `limit` distinct algebras satisfying every required axiom and
/// violating every forbidden one.
///
/// Exhaustive search scans the enumeration in table order; random kinds
/// scan sample indices in order, in parallel batches, so the output is the
/// same for any number of workers.
pub fn search(spec: &GenSpec, require: &[AxiomId], forbid: &[AxiomId], limit: usize) -> Result<Vec<CondAlg>> {
    if spec.kind == GenKind::Exhaustive {
        return Ok(exhaustive(spec.atoms)?.into_iter().filter(|a| matches(a, require, forbid)).take(limit).collect());
    }
    check_atoms(spec.atoms)?;
    let mut out: Vec<CondAlg> = Vec::new();
    let batch = 1024u64;
    let mut start = 0u64;
    while out.len() < limit && start < SEARCH_BUDGET {
        let found: Vec<Option<CondAlg>> = (start..start + batch)
            .into_par_iter()
            .map(|i| sample(spec, i).map(|a| matches(&a, require, forbid).then_some(a)))
            .collect::<Result<_>>()?;
        for a in found.into_iter().flatten() {
            if out.len() < limit && !out.contains(&a) {
                out.push(a);
            }
        }
        start += batch;
    }
    Ok(out)
}

/// The standard test corpus: exhaustive at `n ≤ 1`, the two four-element
/// examples, and `per_size` samples at each of `n = 2` and `n = 3` spread
/// over the structured generators and pointwise meets of them.
pub fn corpus(seed: u64, per_size: usize) -> Vec<CondAlg> {
    let mut out = vec![CondAlg::degenerate()];
    out.extend(exhaustive(1).expect("one atom is in range"));
    out.push(CondAlg::projection(2).expect("two atoms are in range"));
    out.push(CondAlg::global_strict(2).expect("two atoms are in range"));
    for n in [2usize, 3] {
        let drawn: Vec<CondAlg> = (0..per_size as u64)
            .into_par_iter()
            .map(|i| corpus_sample(n, seed, i))
            .collect();
        out.extend(drawn);
    }
    out
}

fn corpus_sample(n: usize, seed: u64, i: u64) -> CondAlg {
    let kinds = [
        GenKind::RandomTable,
        GenKind::FromFrame,
        GenKind::StrictImplicationFamily,
        GenKind::ProjectionFamily,
    ];
    let seed = seed ^ (n as u64) << 32;
    let pick = (i % 5) as usize;
    let draw = |k: GenKind, j: u64| sample(&GenSpec { kind: k, atoms: n, seed }, j).expect("sizes are in range");
    if pick < kinds.len() {
        draw(kinds[pick], i)
    } else {
        let a = draw(GenKind::StrictImplicationFamily, i);
        let b = draw(GenKind::RandomTable, i);
        meet(&a, &b).expect("same base")
    }
}

/// Upward-closed frames on `1..=max_points` points: even indices are random
/// closures, odd ones are ultrafilter frames of strict implications, which
/// satisfy many of the frame conditions.
pub fn frame_corpus(seed: u64, count: usize, max_points: usize) -> Vec<TFrame> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let m = rng.gen_range(1..=max_points);
            if i % 2 == 0 {
                random_upward_closed_frame(m, &mut rng).expect("sizes are in range")
            } else {
                let alg = strict_implication(m, &random_relation(m, &mut rng)).expect("sizes are in range");
                crate::duality::ultrafilter_frame(&alg).expect("strict implications are conditional algebras")
            }
        })
        .collect()
}

/// Coatom values for each row, the compact form of a C1/C2 table.
pub fn coatom_values(alg: &CondAlg) -> Vec<Vec<Elem>> {
    let base = alg.base();
    base.elements().map(|a| (0..base.atoms()).map(|i| alg.cond(a, coatom(base, i))).collect()).collect()
}

/// All supersets of `a` inside the algebra, for callers enumerating antecedents.
pub fn above(base: &FinBoolAlg, a: Elem) -> impl Iterator<Item = Elem> {
    supermasks(a, base.top())
}

//! Conditional operators as full tables, the equational axiom checker, and
//! the consequent operator `D`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::{Elem, ElemSet, FinBoolAlg, Filter, Ultrafilter};
use crate::error::{Error, Result};
use crate::verdict::{Binding, Value, Verdict};

/// A Boolean algebra with a binary operator `⇀` stored as a table.
///
/// Membership in the variety is not enforced here; use [`check_ca`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CondAlg {
    base: FinBoolAlg,
    table: Vec<Elem>,
}

impl CondAlg {
    /// Builds an algebra from a row-major table, `table[a * 2^n + b] = a ⇀ b`.
    pub fn new(base: FinBoolAlg, table: Vec<Elem>) -> Result<Self> {
        let size = base.size();
        if table.len() != size * size {
            return Err(Error::input(format!(
                "operator table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if let Some((i, &e)) = table.iter().enumerate().find(|(_, &e)| !base.contains(e)) {
            return Err(Error::input(format!(
                "table entry [{}][{}] = {e} is out of range",
                i / size,
                i % size
            )));
        }
        Ok(CondAlg { base, table })
    }

    pub fn from_fn(atoms: usize, f: impl Fn(Elem, Elem) -> Elem) -> Result<Self> {
        let base = FinBoolAlg::new(atoms)?;
        let table = base
            .elements()
            .flat_map(|a| base.elements().map(move |b| (a, b)))
            .map(|(a, b)| f(a, b))
            .collect();
        CondAlg::new(base, table)
    }

    pub fn from_rows(atoms: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let base = FinBoolAlg::new(atoms)?;
        if rows.len() != base.size() {
            return Err(Error::input(format!(
                "operator table has {} rows, expected {}",
                rows.len(),
                base.size()
            )));
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != base.size()) {
            return Err(Error::input(format!(
                "row {i} has {} entries, expected {}",
                r.len(),
                base.size()
            )));
        }
        CondAlg::new(base, rows.concat())
    }

    /// `a ⇀ b := b`.
    pub fn projection(atoms: usize) -> Result<Self> {
        CondAlg::from_fn(atoms, |_, b| b)
    }

    /// Global strict implication: `a ⇀ b := 1` if `a ≤ b`, else `0`.
    pub fn global_strict(atoms: usize) -> Result<Self> {
        let top = FinBoolAlg::new(atoms)?.top();
        CondAlg::from_fn(atoms, |a, b| if a & b == a { top } else { 0 })
    }

    /// The one-element algebra.
    pub fn degenerate() -> Self {
        CondAlg { base: FinBoolAlg::degenerate(), table: vec![0] }
    }

    pub fn base(&self) -> &FinBoolAlg {
        &self.base
    }

    pub fn atoms(&self) -> usize {
        self.base.atoms()
    }

    #[inline]
    pub fn cond(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.base.size() + b as usize]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.table.chunks(self.base.size())
    }

    /// Returns a copy with one table entry replaced.
    pub fn with_entry(&self, a: Elem, b: Elem, value: Elem) -> Result<Self> {
        self.base.check(a)?;
        self.base.check(b)?;
        self.base.check(value)?;
        let mut table = self.table.clone();
        table[a as usize * self.base.size() + b as usize] = value;
        CondAlg::new(self.base, table)
    }
}

/// The equations and inequalities checked by [`check_axiom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AxiomId {
    C1,
    C2,
    C3,
    C1star,
    C3star,
    C4,
    C5,
    C6,
    C7,
    C8,
    M1,
    M2,
    M3,
}

impl AxiomId {
    pub const ALL: [AxiomId; 13] = [
        AxiomId::C1,
        AxiomId::C2,
        AxiomId::C3,
        AxiomId::C1star,
        AxiomId::C3star,
        AxiomId::C4,
        AxiomId::C5,
        AxiomId::C6,
        AxiomId::C7,
        AxiomId::C8,
        AxiomId::M1,
        AxiomId::M2,
        AxiomId::M3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::C1 => "C1",
            AxiomId::C2 => "C2",
            AxiomId::C3 => "C3",
            AxiomId::C1star => "C1*",
            AxiomId::C3star => "C3*",
            AxiomId::C4 => "C4",
            AxiomId::C5 => "C5",
            AxiomId::C6 => "C6",
            AxiomId::C7 => "C7",
            AxiomId::C8 => "C8",
            AxiomId::M1 => "M1",
            AxiomId::M2 => "M2",
            AxiomId::M3 => "M3",
        }
    }

    /// Variable names in lexicographic significance order.
    pub fn vars(self) -> &'static [&'static str] {
        match self {
            AxiomId::C1 | AxiomId::C1star => &["a"],
            AxiomId::C5 | AxiomId::C6 => &["a", "b"],
            AxiomId::M1 => &["b"],
            AxiomId::M2 => &["b", "a", "c"],
            AxiomId::M3 => &["b1", "b2", "a"],
            _ => &["a", "b", "c"],
        }
    }

    /// Positions of variables that range over a box index set.
    pub(crate) fn index_vars(self) -> &'static [usize] {
        match self {
            AxiomId::M1 | AxiomId::M2 => &[0],
            AxiomId::M3 => &[0, 1],
            _ => &[],
        }
    }

    /// Evaluates the law at one assignment. `op(a, b)` is `a ⇀ b`, read as
    /// `□_a(b)` for the M-axioms. Inequalities `s ≤ t` are tested as `s & t == s`.
    pub fn eval(self, base: &FinBoolAlg, op: impl Fn(Elem, Elem) -> Elem, v: &[Elem]) -> bool {
        let top = base.top();
        let neg = |x: Elem| x ^ top;
        let le = |s: Elem, t: Elem| s & t == s;
        match self {
            AxiomId::C1 => op(v[0], top) == top,
            AxiomId::C2 => op(v[0], v[1]) & op(v[0], v[2]) == op(v[0], v[1] & v[2]),
            AxiomId::C3 => le(op(v[0] | v[1], v[2]), op(v[0], v[2]) & op(v[1], v[2])),
            AxiomId::C1star => op(0, v[0]) == top,
            AxiomId::C3star => le(op(v[0], v[2]) & op(v[1], v[2]), op(v[0] | v[1], v[2])),
            AxiomId::C4 => {
                let ab = op(v[0], v[1]);
                le(ab, op(v[2], ab))
            }
            AxiomId::C5 => le(v[0] & op(v[0], v[1]), v[1]),
            AxiomId::C6 => le(op(v[0], v[1]), op(neg(v[1]), neg(v[0]))),
            AxiomId::C7 => {
                let nab = neg(op(v[0], v[1]));
                le(nab, op(v[2], nab))
            }
            AxiomId::C8 => le(op(top, neg(v[0]) | v[1]) & op(v[1], v[2]), op(v[0], v[2])),
            AxiomId::M1 => op(v[0], top) == top,
            AxiomId::M2 => op(v[0], v[1] & v[2]) == op(v[0], v[1]) & op(v[0], v[2]),
            AxiomId::M3 => le(op(v[0] | v[1], v[2]), op(v[0], v[2]) & op(v[1], v[2])),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace("STAR", "*");
        AxiomId::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| Error::input(format!("unknown axiom id '{s}'")))
    }
}

/// Iterates all assignments of `domains` in lexicographic order (first variable
/// most significant) and returns the first at which `holds` is false.
pub(crate) fn first_violation(
    domains: &[Vec<Elem>],
    mut holds: impl FnMut(&[Elem]) -> bool,
) -> Option<Vec<Elem>> {
    if domains.iter().any(|d| d.is_empty()) {
        return None;
    }
    let k = domains.len();
    let mut idx = vec![0usize; k];
    let mut vals: Vec<Elem> = domains.iter().map(|d| d[0]).collect();
    loop {
        if !holds(&vals) {
            return Some(vals);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < domains[pos].len() {
                vals[pos] = domains[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            vals[pos] = domains[pos][0];
        }
    }
}

/// Checks `id` for an operator over `base`, with box-index variables ranging
/// over `index` and all others over the whole algebra.
pub(crate) fn check_law(
    id: AxiomId,
    base: &FinBoolAlg,
    op: impl Fn(Elem, Elem) -> Elem,
    index: ElemSet,
) -> Verdict {
    let all: Vec<Elem> = base.elements().collect();
    let idx: Vec<Elem> = index.iter().collect();
    let domains: Vec<Vec<Elem>> = (0..id.vars().len())
        .map(|i| if id.index_vars().contains(&i) { idx.clone() } else { all.clone() })
        .collect();
    match first_violation(&domains, |v| id.eval(base, &op, v)) {
        None => Verdict::pass(id.name()),
        Some(v) => Verdict::fail(
            id.name(),
            id.vars().iter().zip(v).map(|(n, e)| Binding::new(*n, Value::Elem(e))).collect(),
        ),
    }
}

/// Checks one axiom by exhaustive evaluation; a failure carries the
/// lexicographically least violating assignment. M-axioms are read through
/// the induced boxes `□_a(b) := a ⇀ b` over the whole algebra.
pub fn check_axiom(alg: &CondAlg, id: AxiomId) -> Verdict {
    check_law(id, alg.base(), |a, b| alg.cond(a, b), alg.base().all_elements())
}

/// C1, C2 and C3 in that order.
pub fn check_ca(alg: &CondAlg) -> Verdict {
    Verdict::all(
        "CA",
        [AxiomId::C1, AxiomId::C2, AxiomId::C3].into_iter().map(|id| check_axiom(alg, id)),
    )
}

pub(crate) fn require_ca(alg: &CondAlg, what: &str) -> Result<()> {
    let v = check_ca(alg);
    if v.holds {
        Ok(())
    } else {
        Err(Error::contract(format!("{what} needs a conditional algebra, but {v}")))
    }
}

/// Isotone in the consequent, antitone in the antecedent, and
/// `(a⇀b) ∧ (x⇀y) ≤ (a∧x) ⇀ (b∧y)`.
pub fn monotonicity_report(alg: &CondAlg) -> Result<Verdict> {
    require_ca(alg, "monotonicity_report")?;
    let base = alg.base();
    let all: Vec<Elem> = base.elements().collect();
    let op = |a, b| alg.cond(a, b);
    let named = |law: &str, names: &[&str], found: Option<Vec<Elem>>| match found {
        None => Verdict::pass(law),
        Some(v) => Verdict::fail(
            law,
            names.iter().zip(v).map(|(n, e)| Binding::new(*n, Value::Elem(e))).collect(),
        ),
    };
    let three = vec![all.clone(), all.clone(), all.clone()];
    let four = vec![all.clone(), all.clone(), all.clone(), all];
    let isotone = first_violation(&three, |v| {
        let (a, b, x) = (v[0], v[1], v[2]);
        !base.le(a, b) || base.le(op(x, a), op(x, b))
    });
    let antitone = first_violation(&three, |v| {
        let (a, b, x) = (v[0], v[1], v[2]);
        !base.le(a, b) || base.le(op(b, x), op(a, x))
    });
    let conj = first_violation(&four, |v| {
        let (a, b, x, y) = (v[0], v[1], v[2], v[3]);
        base.le(op(a, b) & op(x, y), op(a & x, b & y))
    });
    Ok(Verdict::all(
        "monotonicity",
        [
            named("isotone-consequent", &["a", "b", "x"], isotone),
            named("antitone-antecedent", &["a", "b", "x"], antitone),
            named("conjunction", &["a", "b", "x", "y"], conj),
        ],
    ))
}

/// `D_X(Y) = {b : ∃a ∈ Y, a ⇀ b ∈ X}`.
pub fn d_set(alg: &CondAlg, x: ElemSet, y: ElemSet) -> ElemSet {
    let base = alg.base();
    ElemSet::from_elems(
        base.elements()
            .filter(|&b| y.iter().any(|a| x.contains(alg.cond(a, b)))),
    )
}

/// `D_H(F)` for a filter `H` given as a member set, checked to be a filter and
/// returned by generator.
pub fn d_filter_of(alg: &CondAlg, h: ElemSet, f: Filter) -> Result<Filter> {
    let base = alg.base();
    let d = d_set(alg, h, f.members(base));
    let upward = d.iter().all(|a| base.elements().filter(|&b| base.le(a, b)).all(|b| d.contains(b)));
    let meets = d.iter().all(|a| d.iter().all(|b| d.contains(a & b)));
    if d.is_empty() || !upward || !meets {
        return Err(Error::contract(format!(
            "D(F) for F = ↑{:#b} is not a filter; the algebra is outside CA",
            f.generator
        )));
    }
    Ok(Filter::principal(d.meet_all(base)))
}

/// `D_u(F)`, the consequents in `u` of conditionals with antecedent in `F`.
pub fn d_filter(alg: &CondAlg, u: Ultrafilter, f: Filter) -> Result<Filter> {
    d_filter_of(alg, ultrafilter_members(alg.base(), u), f)
}

/// `{b : g ⇀ b ∈ u}` by generator; equals `D_u(↑g)` when C3 holds.
pub fn d_filter_fast(alg: &CondAlg, u: Ultrafilter, f: Filter) -> Filter {
    let base = alg.base();
    Filter::principal(
        base.elements()
            .filter(|&b| u.contains(alg.cond(f.generator, b)))
            .fold(base.top(), |acc, b| acc & b),
    )
}

/// `□_a⁻¹[X] = {b : a ⇀ b ∈ X}`.
pub fn box_preimage(alg: &CondAlg, a: Elem, x: ElemSet) -> ElemSet {
    ElemSet::from_elems(alg.base().elements().filter(|&b| x.contains(alg.cond(a, b))))
}

pub fn ultrafilter_members(base: &FinBoolAlg, u: Ultrafilter) -> ElemSet {
    ElemSet::from_elems(base.elements().filter(|&x| u.contains(x)))
}

//! Ternary hybrid frames: a point set with a relation `T ⊆ X × P(X) × X`.
//!
//! Frames are finite, so the family of admissible middle sets is all of
//! `P(X)`. The Stone topology on a finite set is discrete: closed, open and
//! clopen all mean "any subset", and every quantifier over closed or clopen
//! sets below ranges over all subset masks.

use serde::{Deserialize, Serialize};

use crate::boolean::{bits, submasks, supermasks, FinBoolAlg, MAX_ATOMS};
use crate::conditional::CondAlg;
use crate::error::{Error, Result};
use crate::verdict::{Binding, Value, Verdict};

/// A triple `(x, Z, y)` with `Z` as a point bitmask.
pub type Triple = (usize, u64, usize);

/// A finite t-frame.
///
/// Stored as a successor table: `succ[x * 2^m + Z]` is the mask of all `y`
/// with `T(x, Z, y)`. Triples iterate in canonical `(x, Z, y)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TFrame {
    points: usize,
    succ: Vec<u64>,
}

impl TFrame {
    /// The frame on `points` points with no triples.
    pub fn empty(points: usize) -> Result<Self> {
        if points > MAX_ATOMS {
            return Err(Error::input(format!(
                "point count {points} exceeds the supported maximum {MAX_ATOMS}"
            )));
        }
        Ok(TFrame { points, succ: vec![0; points << points] })
    }

    pub fn from_triples(points: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut f = TFrame::empty(points)?;
        for t in triples {
            f.insert(t)?;
        }
        Ok(f)
    }

    pub fn insert(&mut self, (x, z, y): Triple) -> Result<()> {
        if x >= self.points || y >= self.points || z > self.full() {
            return Err(Error::input(format!(
                "triple ({x}, {z:#b}, {y}) is out of range for {} points",
                self.points
            )));
        }
        let i = self.slot(x, z);
        self.succ[i] |= 1 << y;
        Ok(())
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// Mask of all points.
    pub fn full(&self) -> u64 {
        (1u64 << self.points) - 1
    }

    fn slot(&self, x: usize, z: u64) -> usize {
        (x << self.points) | z as usize
    }

    pub fn contains(&self, x: usize, z: u64, y: usize) -> bool {
        self.successors(x, z) >> y & 1 == 1
    }

    /// `T(x, Z) = {y : T(x, Z, y)}`.
    pub fn successors(&self, x: usize, z: u64) -> u64 {
        self.succ[self.slot(x, z)]
    }

    pub fn subsets(&self) -> impl Iterator<Item = u64> + Clone {
        0..=self.full()
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        (0..self.points).flat_map(move |x| {
            self.subsets()
                .flat_map(move |z| bits(self.successors(x, z)).map(move |y| (x, z, y)))
        })
    }

    pub fn len(&self) -> usize {
        self.succ.iter().map(|s| s.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.iter().all(|&s| s == 0)
    }

    /// The powerset algebra the complex algebra lives on.
    pub fn powerset(&self) -> FinBoolAlg {
        FinBoolAlg::new(self.points).expect("point count checked at construction")
    }
}

/// `T̄(x, U, y) iff ∃Z ⊆ U, T(x, Z, y)`.
pub fn upward_closure(f: &TFrame) -> TFrame {
    let mut out = f.clone();
    for x in 0..f.points {
        for u in f.subsets() {
            let ys = submasks(u).fold(0, |acc, z| acc | f.successors(x, z));
            let i = out.slot(x, u);
            out.succ[i] = ys;
        }
    }
    out
}

pub fn is_upward_closed(f: &TFrame) -> bool {
    upward_closure_violation(f).is_none()
}

/// Least `(x, Z, y, U)` with `T(x, Z, y)`, `Z ⊆ U` and not `T(x, U, y)`.
fn upward_closure_violation(f: &TFrame) -> Option<(usize, u64, usize, u64)> {
    for (x, z, y) in f.triples() {
        if let Some(u) = supermasks(z, f.full()).find(|&u| !f.contains(x, u, y)) {
            return Some((x, z, y, u));
        }
    }
    None
}

/// The full complex algebra: `U ⇀ V = {x : ∀Z ⊆ U, T(x, Z) ⊆ V}`.
pub fn cm(f: &TFrame) -> CondAlg {
    // reach[x][U] = ⋃_{Z ⊆ U} T(x, Z)
    let reach: Vec<Vec<u64>> = (0..f.points)
        .map(|x| {
            f.subsets()
                .map(|u| submasks(u).fold(0, |acc, z| acc | f.successors(x, z)))
                .collect()
        })
        .collect();
    let alg = CondAlg::from_fn(f.points, |u, v| {
        (0..f.points)
            .filter(|&x| reach[x][u as usize] & !v == 0)
            .fold(0, |acc, x| acc | 1 << x)
    })
    .expect("point count checked at construction");
    if is_upward_closed(f) {
        debug_assert_eq!(alg, cm_upward_closed(f));
    }
    alg
}

/// `U ⇀ V = {x : T(x, U) ⊆ V}`, valid when `T` is upward closed.
fn cm_upward_closed(f: &TFrame) -> CondAlg {
    CondAlg::from_fn(f.points, |u, v| {
        (0..f.points)
            .filter(|&x| f.successors(x, u) & !v == 0)
            .fold(0, |acc, x| acc | 1 << x)
    })
    .expect("point count checked at construction")
}

/// Conditional-space conditions on a finite discrete space. T1 and T2 hold
/// outright; T3 amounts to upward closure of `T`.
pub fn check_conditional_space(f: &TFrame) -> Verdict {
    match upward_closure_violation(f) {
        None => Verdict::pass("conditional-space"),
        Some((x, z, y, u)) => Verdict::fail(
            "T3",
            vec![
                Binding::new("x", Value::Point(x)),
                Binding::new("Z", Value::Set(z)),
                Binding::new("y", Value::Point(y)),
                Binding::new("U", Value::Set(u)),
            ],
        ),
    }
}

/// T3 as written: `T(x, Y, y)` iff `T(x, U, y)` for every clopen `U ⊇ Y`.
pub fn t3_literal(f: &TFrame) -> Verdict {
    for x in 0..f.points {
        for yset in f.subsets() {
            for y in 0..f.points {
                let lhs = f.contains(x, yset, y);
                let rhs = supermasks(yset, f.full()).all(|u| f.contains(x, u, y));
                if lhs != rhs {
                    return Verdict::fail(
                        "T3",
                        vec![
                            Binding::new("x", Value::Point(x)),
                            Binding::new("Y", Value::Set(yset)),
                            Binding::new("y", Value::Point(y)),
                        ],
                    );
                }
            }
        }
    }
    Verdict::pass("T3")
}

/// `T'_A(u, Z, v) iff ∀a ∈ ⋂Z ∀b (a ⇀ b ∈ u ⟹ b ∈ v)`, over the ultrafilters
/// of `alg`. `⋂Z` for a set `Z` of ultrafilters is `{a : Z ⊆ φ(a)}`.
pub fn t_prime(alg: &CondAlg, u: usize, z: u64, v: usize) -> bool {
    let base = alg.base();
    base.elements()
        .filter(|&a| a & z == z)
        .all(|a| base.elements().all(|b| alg.cond(a, b) >> u & 1 == 0 || b >> v & 1 == 1))
}

/// Embedding of a frame into the ultrafilter frame of its complex algebra.
///
/// With `A = Cm(T̄)` and `e(x)` the principal ultrafilter of `x` (atom `x`),
/// checks that `T̄'_A(e x, e[Z], e y)` iff `T̄(x, Z, y)`, that `T ⊆ T̄` is carried
/// along, that `T̄'_A` agrees with the ultrafilter-frame relation of `A`, and
/// that `Cm(T) = Cm(T̄)`.
pub fn frame_representation_check(f: &TFrame) -> Verdict {
    let closed = upward_closure(f);
    let alg = cm(f);
    if alg != cm(&closed) {
        return Verdict::fail("same-complex-algebra", Vec::new());
    }
    let uf = crate::duality::ultrafilter_frame(&alg).expect("complex algebras are conditional algebras");
    let witness = |x: usize, z: u64, y: usize| {
        vec![
            Binding::new("x", Value::Point(x)),
            Binding::new("Z", Value::Set(z)),
            Binding::new("y", Value::Point(y)),
        ]
    };
    for x in 0..f.points {
        for z in f.subsets() {
            for y in 0..f.points {
                let tp = t_prime(&alg, x, z, y);
                if tp != closed.contains(x, z, y) {
                    return Verdict::fail("embedding", witness(x, z, y));
                }
                if f.contains(x, z, y) && !tp {
                    return Verdict::fail("embedding-of-T", witness(x, z, y));
                }
                if tp != uf.contains(x, z, y) {
                    return Verdict::fail("restriction-is-T_A", witness(x, z, y));
                }
            }
        }
    }
    Verdict::pass("frame-representation")
}

//! Independent reference implementations used by the integration tests.
//! Nothing here calls the library's checkers: tables are read through
//! `CondAlg::cond` and frames through `TFrame::contains` only.

#![allow(dead_code)]

use condalg::{CondAlg, TFrame};

/// A conditional operator as a plain table over `n` atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub n: usize,
    pub t: Vec<u64>,
}

impl Table {
    pub fn of(alg: &CondAlg) -> Table {
        let n = alg.atoms();
        let size = 1u64 << n;
        let t = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).map(|(a, b)| alg.cond(a, b)).collect();
        Table { n, t }
    }

    pub fn top(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn size(&self) -> u64 {
        1u64 << self.n
    }

    pub fn op(&self, a: u64, b: u64) -> u64 {
        self.t[(a * self.size() + b) as usize]
    }

    pub fn elems(&self) -> std::ops::Range<u64> {
        0..self.size()
    }
}

fn le(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Equations by name, evaluated over all assignments.
pub fn holds(t: &Table, law: &str) -> bool {
    let top = t.top();
    let n = |x: u64| x ^ top;
    let e: Vec<u64> = t.elems().collect();
    let all1 = |f: &dyn Fn(u64) -> bool| e.iter().all(|&a| f(a));
    let all2 = |f: &dyn Fn(u64, u64) -> bool| e.iter().all(|&a| e.iter().all(|&b| f(a, b)));
    let all3 = |f: &dyn Fn(u64, u64, u64) -> bool| {
        e.iter().all(|&a| e.iter().all(|&b| e.iter().all(|&c| f(a, b, c))))
    };
    let op = |a, b| t.op(a, b);
    match law {
        "C1" => all1(&|a| op(a, top) == top),
        "C2" => all3(&|a, b, c| op(a, b) & op(a, c) == op(a, b & c)),
        "C3" => all3(&|a, b, c| le(op(a | b, c), op(a, c) & op(b, c))),
        "C1*" => all1(&|a| op(0, a) == top),
        "C3*" => all3(&|a, b, c| le(op(a, c) & op(b, c), op(a | b, c))),
        "C4" => all3(&|a, b, c| le(op(a, b), op(c, op(a, b)))),
        "C5" => all2(&|a, b| le(a & op(a, b), b)),
        "C6" => all2(&|a, b| le(op(a, b), op(n(b), n(a)))),
        "C7" => all3(&|a, b, c| le(n(op(a, b)), op(c, n(op(a, b))))),
        "C8" => all3(&|a, b, c| le(op(top, n(a) | b) & op(b, c), op(a, c))),
        other => panic!("unknown law {other}"),
    }
}

pub fn is_ca(t: &Table) -> bool {
    holds(t, "C1") && holds(t, "C2") && holds(t, "C3")
}

/// Membership in a hybrid relation over `m` points, as a dense cube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rel {
    pub m: usize,
    pub r: Vec<bool>,
}

impl Rel {
    pub fn new(m: usize) -> Rel {
        Rel { m, r: vec![false; m * (1 << m) * m] }
    }

    fn idx(&self, x: usize, z: u64, y: usize) -> usize {
        (x * (1 << self.m) + z as usize) * self.m + y
    }

    pub fn get(&self, x: usize, z: u64, y: usize) -> bool {
        self.r[self.idx(x, z, y)]
    }

    pub fn set(&mut self, x: usize, z: u64, y: usize) {
        let i = self.idx(x, z, y);
        self.r[i] = true;
    }

    pub fn of(f: &TFrame) -> Rel {
        let mut r = Rel::new(f.points());
        for x in 0..r.m {
            for z in 0..(1u64 << r.m) {
                for y in 0..r.m {
                    if f.contains(x, z, y) {
                        r.set(x, z, y);
                    }
                }
            }
        }
        r
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn sets(&self) -> std::ops::Range<u64> {
        0..(1u64 << self.m)
    }

    /// `T(x, Z)` as a mask.
    pub fn image(&self, x: usize, z: u64) -> u64 {
        (0..self.m).filter(|&y| self.get(x, z, y)).fold(0, |acc, y| acc | 1 << y)
    }

    pub fn upward_closed(&self) -> bool {
        (0..self.m).all(|x| {
            (0..self.m).all(|y| {
                self.sets().all(|z| !self.get(x, z, y) || self.sets().filter(|w| w & z == z).all(|w| self.get(x, w, y)))
            })
        })
    }
}

/// The ultrafilter frame straight from the definition: with ultrafilters
/// indexed by atoms, `T(u, Z, v)` iff every `b` with `a ⇀ b ∈ u` for some
/// `a` above the join of `Z` lies in `v`.
pub fn ultrafilter_rel(t: &Table) -> Rel {
    let mut r = Rel::new(t.n);
    for u in 0..t.n {
        for z in r.sets() {
            for v in 0..t.n {
                let ok = t.elems().filter(|a| a & z == z).all(|a| {
                    t.elems().all(|b| t.op(a, b) >> u & 1 == 0 || b >> v & 1 == 1)
                });
                if ok {
                    r.set(u, z, v);
                }
            }
        }
    }
    r
}

/// The complex algebra, general form: `x ∈ U ⇀ V` iff `T(x, Z) ⊆ V` for
/// every `Z ⊆ U`.
pub fn complex(r: &Rel) -> Table {
    let m = r.m;
    let size = 1u64 << m;
    let mut t = Vec::with_capacity((size * size) as usize);
    for u in 0..size {
        for v in 0..size {
            let x = (0..m)
                .filter(|&x| (0..size).filter(|z| z & u == *z).all(|z| le(r.image(x, z), v)))
                .fold(0, |acc, x| acc | 1 << x);
            t.push(x);
        }
    }
    Table { n: m, t }
}

fn singleton(x: usize) -> u64 {
    1 << x
}

fn members(s: u64, m: usize) -> impl Iterator<Item = usize> {
    (0..m).filter(move |&i| s >> i & 1 == 1)
}

/// Frame conditions by name. The A and T forms read the same on finite
/// discrete frames, where every subset is closed.
pub fn frame_holds(r: &Rel, cond: &str) -> bool {
    let m = r.m;
    let pts = 0..m;
    let t = |x, z, y| r.get(x, z, y);
    match cond {
        "C4" => pts.clone().all(|u| {
            pts.clone().all(|v| {
                pts.clone().all(|w| {
                    r.sets().all(|y| !t(u, y, v) || r.sets().all(|z| !t(v, z, w) || t(u, z, w)))
                })
            })
        }),
        "C5" => pts.clone().all(|u| t(u, singleton(u), u)),
        "C6" => pts.clone().all(|u| {
            pts.clone().all(|v| {
                r.sets().all(|y| !t(u, y, v) || members(y, m).any(|w| t(u, singleton(v), w)))
            })
        }),
        "C7" => pts.clone().all(|u| {
            pts.clone().all(|v| {
                pts.clone().all(|w| {
                    r.sets().all(|y| !t(u, y, v) || r.sets().all(|z| !t(u, z, w) || t(v, z, w)))
                })
            })
        }),
        "C8" => pts.clone().all(|u| {
            pts.clone().all(|v| {
                r.sets().all(|y| {
                    !t(u, y, v)
                        || r.sets().all(|z| !le(r.image(u, r.full()) & y, z) || t(u, z, v))
                })
            })
        }),
        "C3*" => pts.clone().all(|x| {
            pts.clone().all(|y| {
                r.sets().filter(|&s| s != 0).all(|s| !t(x, s, y) || members(s, m).any(|z| t(x, singleton(z), y)))
            })
        }),
        // no triple with an empty middle set
        "C1*" => pts.clone().all(|x| pts.clone().all(|y| !t(x, 0, y))),
        other => panic!("unknown condition {other}"),
    }
}

/// Boolean subalgebras of the powerset of `n` atoms, as element bitsets.
pub fn boolean_subalgebras(n: usize) -> Vec<u64> {
    let size = 1u64 << n;
    let top = size - 1;
    // a finite Boolean subalgebra is generated by a partition of the atoms
    let mut out: Vec<u64> = partitions(n)
        .into_iter()
        .map(|blocks| {
            (0..(1u64 << blocks.len())).fold(0u64, |acc, pick| {
                let e = members(pick, blocks.len()).fold(0, |x, i| x | blocks[i]);
                acc | 1 << e
            })
        })
        .collect();
    out.sort_unstable();
    debug_assert!(out.iter().all(|s| s >> top & 1 == 1 && s & 1 == 1));
    out
}

/// Set partitions of `0..n`, blocks as masks.
pub fn partitions(n: usize) -> Vec<Vec<u64>> {
    fn go(i: usize, n: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..cur.len() {
            cur[k] |= 1 << i;
            go(i + 1, n, cur, out);
            cur[k] &= !(1 << i);
        }
        cur.push(1 << i);
        go(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Closure of an element set under the operator.
pub fn closed_under_op(t: &Table, set: u64) -> bool {
    t.elems()
        .filter(|a| set >> a & 1 == 1)
        .all(|a| t.elems().filter(|b| set >> b & 1 == 1).all(|b| set >> t.op(a, b) & 1 == 1))
}

/// `u ~ v` iff no member of the subalgebra separates atoms `u` and `v`.
pub fn equiv_of(t: &Table, set: u64) -> Vec<Vec<bool>> {
    let elems: Vec<u64> = t.elems().filter(|a| set >> a & 1 == 1).collect();
    (0..t.n)
        .map(|u| (0..t.n).map(|v| elems.iter().all(|e| (e >> u & 1) == (e >> v & 1))).collect())
        .collect()
}

/// The C-equivalence condition, read literally.
pub fn is_c_equivalence(r: &Rel, e: &[Vec<bool>]) -> bool {
    let m = r.m;
    // C ⪯_E Y: every point of C is E-related to a point of Y
    let below = |c: u64, y: u64| members(c, m).all(|p| members(y, m).any(|q| e[p][q]));
    (0..m).all(|x| {
        (0..m).all(|y| {
            !e[x][y]
                || r.sets().all(|yy| {
                    (0..m).all(|x2| {
                        !r.get(x, yy, x2)
                            || (0..m).any(|y2| e[x2][y2] && r.sets().any(|c| r.get(y, c, y2) && below(c, yy)))
                    })
                })
        })
    })
}

/// T-closed: from a point of `y`, every minimal witness set stays inside
/// `y` and so does its target.
pub fn is_t_closed(r: &Rel, y: u64) -> bool {
    let m = r.m;
    members(y, m).all(|x| {
        (0..m).all(|to| {
            let witnesses: Vec<u64> = r.sets().filter(|&z| r.get(x, z, to)).collect();
            witnesses
                .iter()
                .filter(|&&z| !witnesses.iter().any(|&w| w != z && w & z == w))
                .all(|&z| z & !y == 0 && y >> to & 1 == 1)
        })
    })
}

/// `θ(Y)` is compatible with the operator.
pub fn theta_compatible(t: &Table, y: u64) -> bool {
    let rel = |a: u64, b: u64| a & y == b & y;
    t.elems().all(|a| {
        t.elems().all(|a2| {
            !rel(a, a2) || t.elems().all(|b| rel(t.op(a, b), t.op(a2, b)) && rel(t.op(b, a), t.op(b, a2)))
        })
    })
}

pub const VARIETIES: [(&str, &[&str], &[&str]); 5] = [
    ("CA", &["C1", "C2", "C3"], &[]),
    ("PSB", &["C1", "C2", "C3", "C1*", "C3*"], &["CA"]),
    ("PsC", &["C1", "C2", "C3", "C1*", "C3*", "C5", "C6"], &["PSB"]),
    ("SIA", &["C1", "C2", "C3", "C1*", "C3*", "C4", "C5", "C7", "C8"], &["PSB"]),
    ("S2IA", &["C1", "C2", "C3", "C1*", "C3*", "C4", "C5", "C6", "C7"], &["PsC", "SIA"]),
];

pub fn classify(t: &Table) -> Vec<&'static str> {
    VARIETIES.iter().filter(|(_, laws, _)| laws.iter().all(|l| holds(t, l))).map(|(n, _, _)| *n).collect()
}

pub fn upward_closed_tags(tags: &[&str]) -> bool {
    VARIETIES
        .iter()
        .filter(|(n, _, _)| tags.contains(n))
        .all(|(_, _, parents)| parents.iter().all(|p| tags.contains(p)))
}

/// The lexicographically least failure of C1, then C2, then C3.
pub fn least_ca_violation(t: &Table) -> Option<(&'static str, Vec<u64>)> {
    let top = t.top();
    for a in t.elems() {
        if t.op(a, top) != top {
            return Some(("C1", vec![a]));
        }
    }
    for a in t.elems() {
        for b in t.elems() {
            for c in t.elems() {
                if t.op(a, b) & t.op(a, c) != t.op(a, b & c) {
                    return Some(("C2", vec![a, b, c]));
                }
            }
        }
    }
    for a in t.elems() {
        for b in t.elems() {
            for c in t.elems() {
                if !le(t.op(a | b, c), t.op(a, c) & t.op(b, c)) {
                    return Some(("C3", vec![a, b, c]));
                }
            }
        }
    }
    None
}

//! Finite Boolean algebras over atom bitmasks.
//!
//! The algebra with `n` atoms is the powerset of `{0, .., n-1}`. An element is
//! the bitmask of the atoms below it, so meet is `&`, join is `|` and
//! complement is xor with the top mask. Ultrafilter `k` is `↑atom_k`, which
//! makes the Stone map the identity on masks: a set of ultrafilters is stored
//! with the same bit layout as an element.
//!
//! On a finite algebra every filter is principal, so filters and ideals are
//! stored by generator. The Stone space is discrete, hence every set of
//! ultrafilters is closed, open and clopen at once.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of a [`FinBoolAlg`], encoded as its atom bitmask.
pub type Elem = u64;

/// Largest supported atom count. Operator tables have `4^n` entries.
pub const MAX_ATOMS: usize = 6;

/// The finite Boolean algebra with `atoms` atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinBoolAlg {
    atoms: usize,
}

impl FinBoolAlg {
    pub fn new(atoms: usize) -> Result<Self> {
        if atoms > MAX_ATOMS {
            return Err(Error::input(format!(
                "atom count {atoms} exceeds the supported maximum {MAX_ATOMS}"
            )));
        }
        Ok(FinBoolAlg { atoms })
    }

    /// The one-element algebra, where `0 = 1`.
    pub fn degenerate() -> Self {
        FinBoolAlg { atoms: 0 }
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    /// Number of elements, `2^n`.
    pub fn size(&self) -> usize {
        1 << self.atoms
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        (1u64 << self.atoms) - 1
    }

    pub fn atom(&self, k: usize) -> Elem {
        debug_assert!(k < self.atoms);
        1 << k
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.size() as Elem
    }

    pub fn contains(&self, a: Elem) -> bool {
        a < self.size() as Elem
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::input(format!(
                "element {a} is out of range for an algebra with {} atoms",
                self.atoms
            )))
        }
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        a & b
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        a | b
    }

    pub fn complement(&self, a: Elem) -> Elem {
        a ^ self.top()
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        a & b == a
    }

    pub fn ultrafilters(&self) -> impl Iterator<Item = Ultrafilter> + Clone {
        (0..self.atoms).map(Ultrafilter)
    }

    /// All filters, one per generator, starting with the improper filter `↑0`.
    pub fn filters(&self) -> impl Iterator<Item = Filter> + Clone {
        self.elements().map(Filter::principal)
    }

    pub fn ideals(&self) -> impl Iterator<Item = Ideal> + Clone {
        self.elements().map(Ideal::principal)
    }

    /// All sets of ultrafilters.
    pub fn uf_sets(&self) -> impl Iterator<Item = UfSet> + Clone {
        self.elements().map(UfSet)
    }

    pub fn full_uf_set(&self) -> UfSet {
        UfSet(self.top())
    }

    /// The full set of elements as an [`ElemSet`].
    pub fn all_elements(&self) -> ElemSet {
        ElemSet::full(self.size())
    }
}

/// The ultrafilter `↑atom_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ultrafilter(pub usize);

impl Ultrafilter {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn contains(self, a: Elem) -> bool {
        a >> self.0 & 1 == 1
    }
}

/// A set of ultrafilters, by index bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct UfSet(pub u64);

impl UfSet {
    pub const EMPTY: UfSet = UfSet(0);

    pub fn singleton(u: Ultrafilter) -> Self {
        UfSet(1 << u.0)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, u: Ultrafilter) -> bool {
        self.0 >> u.0 & 1 == 1
    }

    pub fn is_subset(self, other: UfSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: UfSet) -> UfSet {
        UfSet(self.0 & other.0)
    }

    pub fn union(self, other: UfSet) -> UfSet {
        UfSet(self.0 | other.0)
    }

    pub fn complement_in(self, alg: &FinBoolAlg) -> UfSet {
        UfSet(self.0 ^ alg.top())
    }

    pub fn members(self) -> impl Iterator<Item = Ultrafilter> {
        bits(self.0).map(Ultrafilter)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
}

/// The principal filter `↑generator`. `↑0` is the improper filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Filter {
    pub generator: Elem,
}

impl Filter {
    pub fn principal(generator: Elem) -> Self {
        Filter { generator }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.generator & x == self.generator
    }

    pub fn is_proper(&self) -> bool {
        self.generator != 0
    }

    pub fn members(&self, alg: &FinBoolAlg) -> ElemSet {
        ElemSet::up(alg, self.generator)
    }
}

/// The principal ideal `↓generator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ideal {
    pub generator: Elem,
}

impl Ideal {
    pub fn principal(generator: Elem) -> Self {
        Ideal { generator }
    }

    pub fn contains(&self, x: Elem) -> bool {
        x & !self.generator == 0
    }

    pub fn members(&self, alg: &FinBoolAlg) -> ElemSet {
        ElemSet::down(alg, self.generator)
    }
}

/// A set of elements of an algebra with at most 64 elements, as a bitset
/// indexed by element value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(size: usize) -> Self {
        if size >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << size) - 1)
        }
    }

    pub fn from_elems(elems: impl IntoIterator<Item = Elem>) -> Self {
        ElemSet(elems.into_iter().fold(0, |acc, e| acc | 1 << e))
    }

    pub fn up(alg: &FinBoolAlg, g: Elem) -> Self {
        Self::from_elems(alg.elements().filter(|&x| g & x == g))
    }

    pub fn down(alg: &FinBoolAlg, g: Elem) -> Self {
        Self::from_elems(alg.elements().filter(|&x| x & !g == 0))
    }

    pub fn contains(self, e: Elem) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: Elem) {
        self.0 |= 1 << e;
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        bits(self.0).map(|b| b as Elem)
    }

    /// Meet of all members; the top element for the empty set.
    pub fn meet_all(self, alg: &FinBoolAlg) -> Elem {
        self.iter().fold(alg.top(), |acc, e| acc & e)
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All submasks of `mask`, in increasing numeric order.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(((cur | !mask).wrapping_add(1)) & mask)
        };
        Some(cur)
    })
}

/// All supersets of `mask` inside `full`, in increasing numeric order.
pub fn supermasks(mask: u64, full: u64) -> impl Iterator<Item = u64> {
    let free = full & !mask;
    submasks(free).map(move |s| s | mask)
}

/// The Stone map `φ(a) = {u : a ∈ u}`.
pub fn phi(alg: &FinBoolAlg, a: Elem) -> Result<UfSet> {
    alg.check(a)?;
    Ok(UfSet(
        alg.ultrafilters()
            .filter(|u| u.contains(a))
            .fold(0, |acc, u| acc | 1 << u.0),
    ))
}

/// `φ(F)`, the ultrafilters extending `F`.
pub fn phi_filter(alg: &FinBoolAlg, f: Filter) -> UfSet {
    UfSet(
        alg.ultrafilters()
            .filter(|&u| u.contains(f.generator))
            .fold(0, |acc, u| acc | 1 << u.0),
    )
}

/// `F_Y = {a : Y ⊆ φ(a)}`, generated by the join of the atoms in `Y`.
pub fn filter_of_set(alg: &FinBoolAlg, y: UfSet) -> Filter {
    Filter::principal(y.members().fold(alg.zero(), |acc, u| acc | alg.atom(u.0)))
}

/// `I_O = {b : φ(b) ⊆ O}`, the ideal whose Stone image covers the open set `O`.
pub fn ideal_of_open(alg: &FinBoolAlg, o: UfSet) -> Ideal {
    Ideal::principal(o.members().fold(alg.zero(), |acc, u| acc | alg.atom(u.0)))
}

/// The element whose Stone image is `set`.
pub fn element_of(alg: &FinBoolAlg, set: UfSet) -> Elem {
    filter_of_set(alg, set).generator
}

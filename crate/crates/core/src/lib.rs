//! Finite conditional algebras, their ultrafilter frames, and the dualities
//! between them.
//!
//! Elements of a Boolean algebra with `n ≤ 6` atoms are bitmasks over the
//! atoms. Ultrafilters are indexed by atom, so a set of ultrafilters has the
//! same layout as an element and the Stone map is the identity on masks.

pub mod boolean;
pub mod conditional;
pub mod duality;
pub mod error;
pub mod extensions;
pub mod frame;
pub mod generate;
pub mod io;
pub mod multimodal;
pub mod structure;
pub mod suite;
pub mod varieties;
pub mod verdict;

pub use boolean::{Elem, ElemSet, Filter, FinBoolAlg, Ideal, UfSet, Ultrafilter, MAX_ATOMS};
pub use conditional::{check_axiom, check_ca, AxiomId, CondAlg};
pub use error::{Error, Result};
pub use frame::{cm, TFrame};
pub use varieties::{FrameCondId, VarietyTag};
pub use verdict::{Binding, Value, Verdict};

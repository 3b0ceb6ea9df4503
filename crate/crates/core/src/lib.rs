//! Closedness classification of commutative semigroups.
//!
//! Finite semigroups are handled as operation tables ([`CayleyTable`]) with
//! exact algorithms for idempotents, H-classes, the idempotent-power map,
//! ideals, congruences, quotients and the power semigroup. Infinite
//! commutative semigroups are described symbolically ([`Descriptor`]) and
//! classified as C-closed, ideally C-closed and projectively C-closed from
//! their structural predicates.

mod analysis;
pub mod classify;
pub mod descriptor;
mod error;
pub mod harness;
pub mod power;
pub mod quotient;
mod search;
mod subset;
mod table;
pub mod text;

pub use analysis::MonogenicData;
pub use classify::{classify, classify_group, classify_semilattice, explain, ClosednessVerdict};
pub use descriptor::{cardinality, evaluate, truncate, Descriptor, PredicateProfile};
pub use error::{Error, Result};
pub use quotient::{Congruence, Ideal, Quotient};
pub use subset::Subset;
pub use table::{CayleyTable, ValidationReport};

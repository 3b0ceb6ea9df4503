//! Exhaustive small-order enumeration and the structural property suite run
//! over it.

mod enumerate;
mod scan;
mod suite;

pub use enumerate::{canonical_form, enumerate_commutative, MAX_ENUMERATION_ORDER};
pub use scan::singleton_square_scan;
pub use suite::{lemma_suite, suite_over_corpus, CorpusReport, PropertyResult, SuiteReport};

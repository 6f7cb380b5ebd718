//! Finite rings as dense operation tables.
//!
//! A [`FiniteRing`] stores its addition and multiplication as `n × n` index
//! tables. On top of that the crate builds standard constructions (matrix,
//! triangular and skew polynomial rings, extensions by bimodules), computes
//! radicals and ideal lattices by exhaustive search, and decides ring-class
//! predicates with reproducible counterexamples.
//!
//! ```
//! use ringlab::constructions::{matrix_ring, zmod};
//! use ringlab::properties::is_nj_symmetric;
//!
//! let m = matrix_ring(&zmod(2)?, 2)?;
//! let verdict = is_nj_symmetric(&m)?;
//! assert!(!verdict.holds);
//! # Ok::<(), ringlab::Error>(())
//! ```

pub mod constructions;
pub mod context;
pub mod error;
pub mod expr;
pub mod harness;
pub mod invariants;
pub mod mask;
pub mod properties;
pub mod ring;

pub use context::RingContext;
pub use error::{Error, Result};
pub use mask::SubsetMask;
pub use ring::{
    check_order, max_order, set_max_order, verify_axioms, verify_axioms_with, Axiom, AxiomReport,
    ElementId, FiniteRing, Fingerprint, TripleCheck, DEFAULT_MAX_ORDER,
};

// The guide's code blocks run as doc-tests so the book cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/radicals.md")]
    mod radicals {}
    #[doc = include_str!("../../../book/src/predicates.md")]
    mod predicates {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

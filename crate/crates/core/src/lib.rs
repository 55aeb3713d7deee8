//! Word problems and canonical forms for partial braids and for
//! mapping classes of a punctured sphere.
//!
//! The crate decides equality of generator words in several related
//! structures — braid groups of the disc and the sphere, their
//! partial-strand (inverse monoid) extensions, the mapping class group
//! of a punctured sphere and its partial extension, and the symmetric
//! inverse monoid — and computes canonical representatives where a
//! normal form exists.
//!
//! Module map:
//! * [`words`] — letters, parsing/printing, macro words, relation lists;
//! * [`pinj`] — partial injections and the strand-tracking homomorphism;
//! * [`free_rep`] — free-group actions deciding disc equality, and the
//!   sphere-quotient action with a bounded conjugacy verifier;
//! * [`sphere`] — pure-strand combing and the sphere normal form;
//! * [`tower`] — partial elements at every rank: normalization,
//!   multiplication, factorization, centers, abelianization;
//! * [`small_cases`] — exhaustive small-rank tables, isomorphism
//!   checking, and the rank-one torus monoid built from 2x2 matrices;
//! * [`sampling`] — seed-stable randomness for checks.

pub mod error;
pub mod free_rep;
pub mod pinj;
pub mod sampling;
pub mod small_cases;
pub mod sphere;
pub mod tower;
pub mod words;

pub use error::{Error, Result};
pub use pinj::{tau_of_letter, tau_of_word, PartialInjection};
pub use words::{parse_word, Letter, Word};

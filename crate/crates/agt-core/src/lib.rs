//! Computations on automaton (semi)groups given by letter-to-letter transducers.
//!
//! The central type is [`Mealy`], a complete deterministic transducer with a
//! common input/output alphabet. On top of it the crate provides:
//!
//! * the operator algebra on machines: [`algebra::dual`], [`algebra::inverse`],
//!   [`algebra::enrich`], [`algebra::enriched_dual`], [`algebra::product`],
//!   [`algebra::power`], [`algebra::disjoint_union`], [`algebra::reduction`];
//! * free-group word combinatorics over the state alphabet: [`words`];
//! * the coupled actions, the word problem, Schreier/orbital graph
//!   exploration at finite levels and at ultimately periodic boundary
//!   points, the orbit growth function, and relation search: [`dynamics`];
//! * constructors for the machine zoo (sink machines, `S_Q`, dual-embedding
//!   sums, Cayley-type machines over finite group tables): [`constructions`].
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `agt` crate. All values are immutable after construction and
//! every operation is a pure function, so everything can be shared freely
//! across threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod constructions;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod machine;
pub mod words;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use graph::LabeledGraph;
pub use machine::{ClassFlags, Mealy, SignedState};
pub use words::GroupWord;

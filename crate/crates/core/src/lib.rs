//! Exact power indices for simple games, with and without a priori unions.
//!
//! The crate models monotone simple games by their minimal winning
//! coalitions or by weighted voting rules, and computes the Felsenthal
//! index (built on least-size winning coalitions) and its extension to
//! games with a partition of the players into unions, the Felsenthal-Owen
//! index. All arithmetic is exact rational arithmetic.
//!
//! Two backends produce identical values: direct enumeration of coalition
//! families, and a counting backend for weighted games that scales to
//! hundreds of players by dynamic programming over (size, weight) pairs.
//!
//! The `axioms` module turns the axiomatic characterizations of these
//! indices into executable checks: each axiom is a predicate on concrete
//! games, and a bundled family of deviant indices demonstrates the
//! independence of the axioms from one another.

pub mod axioms;
pub mod coalition;
pub mod counting;
pub mod error;
pub mod exhaustive;
pub mod game;
pub mod indices;
pub mod partition;
pub mod unions;

pub use axioms::{check, Applicability, Axiom, CoalitionalIndex, Instance};
pub use coalition::{Coalition, PlayerId};
pub use counting::{count_least_size, felsenthal_owen_weighted, felsenthal_weighted, CountingConfig};
pub use error::{Error, Result};
pub use game::{
    CombineMode, ExplicitGame, LeastSizeSummary, PlayerRole, SimpleGame, WeightedGame,
};
pub use indices::{felsenthal, felsenthal_owen, Backend, IndexKind, PowerVector};
pub use partition::{Partition, UnionId};
pub use unions::{essential_families, quotient_game, GameWithUnions};

//! Combinatorics of Richardson orbital variety closures in `sl_n`.
//!
//! Orbital varieties in `sl_n` are labelled by standard Young tableaux, and
//! the closure of the Richardson orbital variety attached to a subset `I` of
//! simple roots is the union of the varieties whose τ-invariant contains `I`.
//! This crate implements the tableau calculus behind that picture:
//!
//! - [`words`]: permutation words, inversion sets, the Duflo order, and the
//!   Dynkin-diagram involution ψ at the word level;
//! - [`tableaux`]: standard Young tableaux, Robinson–Schensted insertion,
//!   reading words, concatenations, and entry-interval projections;
//! - [`partitions`]: integer partitions, the closure order on nilpotent
//!   orbits, and orbit dimension arithmetic;
//! - [`richardson`]: chain forms, the tableaux `T_I` and words `w_I`, tail
//!   moves, the geometric descendants of `T_I`, and ψ at the tableau level;
//! - [`oracle`]: brute-force enumeration of symmetric groups and
//!   Robinson–Schensted cells, plus the verification suites that replay
//!   every closed-form statement against exhaustive search at small rank.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the command
//! line live in the companion `orbk` crate.
//!
//! ```
//! use orbk_core::richardson::{descendants, richardson_tableau, SimpleRootSubset};
//!
//! let subset = SimpleRootSubset::new(10, [1, 3, 4, 5, 7, 8])?;
//! let minimal = richardson_tableau(&subset);
//! assert_eq!(&minimal.tau()?, subset.indices());
//! assert_eq!(descendants(&subset).len(), 3);
//! # Ok::<(), orbk_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod oracle;
pub mod partitions;
pub mod richardson;
pub mod tableaux;
pub mod words;

pub use oracle::{CellIndex, CheckReport};
pub use partitions::Partition;
pub use richardson::{ChainForm, ChainStats, SimpleRootSubset};
pub use tableaux::StandardTableau;
pub use words::{InversionSet, RootPair, Word};

use alloc::string::String;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word entries must be positive")]
    ZeroEntry,
    #[error("duplicate entry {entry} in word or tableau")]
    DuplicateEntry { entry: u32 },
    #[error("invalid root pair ({i}, {j}): need 1 <= i < j")]
    InvalidRootPair { i: u32, j: u32 },
    #[error("operation requires a permutation of {{1..n}}")]
    NotPermutation,
    #[error("rank {n} exceeds the inversion-set limit {max}", max = words::MAX_RANK)]
    RankTooLarge { n: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("ground sets overlap at entry {entry}")]
    OverlappingEntries { entry: u32 },
    #[error("entry {entry} exceeds ambient rank {n}")]
    EntryOutOfRange { entry: u32, n: usize },
    #[error("malformed tableau: {0}")]
    MalformedTableau(&'static str),
    #[error("entry {entry} absent from tableau")]
    AbsentEntry { entry: u32 },
    #[error("tableau entries are not a contiguous range {{1..n}}")]
    NonContiguousEntries,
    #[error("entry sets are interleaved; left operand must lie below right")]
    InterleavedEntries,
    #[error("malformed partition: {0}")]
    MalformedPartition(&'static str),
    #[error("partitions of different weights: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("simple-root index {index} out of range for rank {n}")]
    InvalidRootIndex { index: u32, n: usize },
    #[error("invalid tail move: {0}")]
    InvalidTailMove(&'static str),
    #[error("tableau does not lie in the requested closure")]
    NotInClosure,
    #[error("tableau equals the Richardson tableau itself")]
    IsRichardsonTableau,
    #[error("requested tail-move tableau is empty")]
    EmptyTailMove,
    #[error("rank {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("tableau is not indexed by this cell table: {0}")]
    NotIndexed(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

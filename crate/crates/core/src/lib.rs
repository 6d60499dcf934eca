//! Exact enumeration and verification toolkit for flip-sort.
//!
//! The flip `T` reverses every maximal descending block of a permutation;
//! iterating it sorts any permutation of size `n` in at most `n - 1` passes.
//! This crate implements the transformation itself, the characterization of
//! its image ("pop-stacked" permutations), the run-word automata and their
//! rational generating functions, a polynomial-time counting recurrence,
//! the 2-pop-stack-sortable / coloured Dyck walk bijection, and the
//! shadow/bandwidth machinery describing worst cases.
//!
//! Everything is exact: counts are arbitrary-precision integers and all
//! generating functions live over arbitrary-precision rationals.
//!
//! Data-parallel inner loops (exhaustive sweeps over `S_n`, recurrence
//! cells, transfer-matrix rows) run on rayon when the `parallel` feature is
//! enabled and fall back to sequential iteration otherwise; see [`par`].

pub mod automaton;
pub mod enumeration;
pub mod error;
pub mod oracle;
pub mod par;
pub mod perm;
pub mod popstacked;
pub mod series;
pub mod sortable;
pub mod verify;
pub mod worstcase;

pub use error::{Error, Result};
pub use par::Exec;
pub use perm::Permutation;

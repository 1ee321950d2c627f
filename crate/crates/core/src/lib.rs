//! Finite skew left braces.
//!
//! A skew left brace is a set with two group structures `(A, +)` and
//! `(A, ∘)` tied together by `a ∘ (b + c) = a ∘ b − a + a ∘ c`. This crate
//! builds them from tables, groups, cocycles and products; computes their
//! ideals, socle and nilpotency series; derives the associated set-theoretic
//! Yang–Baxter solutions; and sweeps enumerated corpora with a battery of
//! structural laws.
//!
//! All elements are indices `0..n` and both identities sit at index 0.

pub mod brace;
pub mod catalog;
pub mod constructions;
pub mod groups;
pub mod io;
pub mod laws;
pub mod par;
pub mod series;
pub mod substructure;
pub mod ybe;

pub use brace::{BraceError, SkewBrace};
pub use groups::{ElementSet, FiniteGroup, GroupError, Permutation};
pub use par::Exec;
pub use series::SeriesReport;
pub use ybe::Solution;

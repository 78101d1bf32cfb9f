//! Gelfand-Tsetlin patterns, their crystal structure, Demazure products and
//! Kostant-Kumar crystals for `sl_n`.
//!
//! Group products follow one convention throughout: `u.compose(v)` applies
//! `v` first. A word `[i1, ..., ik]` evaluates to `s_{i1} ... s_{ik}`, so
//! right multiplication by `s_i` swaps positions `i` and `i+1` of the one-line
//! notation.

pub mod charpoly;
pub mod crystal;
pub mod error;
pub mod gt;
pub mod kk;
pub mod kogan;
pub mod perm;
pub mod reading;
pub mod verify;

pub use charpoly::CharPoly;
pub use crystal::{Component, PairSpace, TensorConvention, TensorElement};
pub use error::{Error, Result};
pub use gt::{GtPattern, Inequality, Partition, Weight};
pub use kk::KkCrystal;
pub use kogan::{BiFace, FaceSpec};
pub use perm::{ParabolicSet, Permutation, Word};
pub use reading::PairReading;
pub use verify::{run_verify, run_verify_with, VerifyReport};

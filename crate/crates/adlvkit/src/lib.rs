//! Exact combinatorics of affine Deligne–Lusztig varieties in affine
//! Grassmannians for minuscule coweights and basic `b`.
//!
//! Modules, bottom up: [`linalg`] (integer and rational matrices, Smith form,
//! lattice quotients), [`rootdata`], [`affine`] (extended affine Weyl group and
//! the twisted calculus `λ_γ`, `λ♮`, `ε_λ`), [`isocrystal`] (Newton and
//! Kottwitz points, best integral approximation), [`crystal`] (Littelmann
//! paths), [`adlv`] (strata, top coweights, class counting, superbasic tables),
//! [`appendixb`] (minimal Levi subsets), [`suite`] and [`cli`].
//!
//! Runnable examples: `classify`, `count`, `crystal`, `tensor`, `restrict`,
//! `superbasic`, `appendixb`, `isocrystal`, `orbits`
//! (`cargo run --example count`).

#![allow(clippy::needless_range_loop)]

pub mod linalg;
pub mod rootdata;
pub mod affine;
pub mod isocrystal;
pub mod crystal;
pub mod adlv;
pub mod appendixb;
pub mod suite;
pub mod cli;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid sigma: {0}")]
    InvalidSigma(String),
    #[error("invalid datum: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

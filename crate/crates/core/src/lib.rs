//! Exact-arithmetic engine for the bidiagonal/4-diagonal canonical forms of
//! skew-symmetric matrices over characteristic-0 fields, and for the
//! varieties of normalized nilpotent bidiagonal matrices attached to them.
//!
//! Everything is computed over exact scalar rings (arbitrary-precision
//! rationals, Q(i), and a canonical ring of quadratic radicals); no floating
//! point appears outside test oracles, so every identity the crate checks is
//! checked with literal equality.

pub mod blocks;
pub mod combinatorics;
pub mod error;
pub mod io;
pub mod jordan;
pub mod matrix;
pub mod normal_form;
pub mod poly;
pub mod polysolve;
pub mod ring;
pub mod scalar;
pub mod variety;

pub use error::{Error, Result};

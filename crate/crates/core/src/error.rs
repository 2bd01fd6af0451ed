//! Error taxonomy shared by all modules.
//!
//! `NonCoprime` is mathematical, not a malformed input: no finite-dimensional
//! module exists unless gcd(m, n) = 1, and the CLI reports it as such.
//! `Indivisible` signals that a division the theory asserts to be exact
//! failed, which always means a bug somewhere; the verification suite treats
//! it as a test failure rather than a user error.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input.
    #[error("domain error: {0}")]
    Domain(String),

    /// No finite-dimensional module exists: gcd(m, n) must be 1.
    #[error("gcd({m}, {n}) != 1: a finite-dimensional module exists if and only if m and n are coprime")]
    NonCoprime { m: u32, n: u32 },

    /// The parameter m must be a positive integer.
    #[error("m must be positive, got {0}")]
    NonpositiveM(i64),

    /// A division that should have been exact left a remainder.
    #[error("inexact division: {0}")]
    Indivisible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

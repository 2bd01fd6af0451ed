//! Exact computer algebra for graded characters of quantized Gieseker varieties.
//!
//! Everything here is computed in exact arithmetic: big rationals for
//! coefficients, Laurent polynomials in a formal variable `q` with exact
//! rational exponents, and canonically reduced rational functions of `q`.
//! On top of that kernel sit
//!
//! - [`partitions`]: Young diagrams, hooks, contents, conjugation and
//!   conjugacy-class sizes;
//! - [`symfunc`]: Schur/power-sum coordinates, symmetric-group characters via
//!   Murnaghan-Nakayama, Hall pairing, plethysm and principal specializations;
//! - [`chars`]: the graded character and dimension formulas for the
//!   finite-dimensional and minimally supported modules, the generating
//!   function `D(z)` and the q-Catalan family `C^d`;
//! - [`parking`]: rational Dyck paths, semistandard parking functions and the
//!   combinatorial forms of the same characters.
//!
//! Every formula has an independent cross-check (combinatorial enumeration,
//! series expansion, or a second algebraic route); the `verify` subcommand of
//! the CLI runs them all over a parameter sweep.

pub mod chars;
pub mod exactalg;
pub mod parking;
pub mod partitions;
pub mod series;
pub mod symfunc;

mod error;

pub use error::{Error, Result};
pub use exactalg::{Exp, QExpPoly, QRatFun, Rat};
pub use partitions::Partition;

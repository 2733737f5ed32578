//! Exact arithmetic for Coxeter frieze patterns and Y-frieze patterns.
//!
//! A Y-frieze pattern is an infinite array of rationals laid out in staggered
//! rows: a zeroth row of 0s, then rows of entries where every diamond
//!
//! ```text
//!       N
//!     W   E
//!       S
//! ```
//!
//! satisfies `W * E = (1 + N)(1 + S)`. A pattern is *closed of width n* when a
//! row of 0s reappears as row `n + 1` (the next row is then identically -1 and
//! is left implicit). Coxeter friezes are the classical cousins: rows of 1s on
//! the boundary and the diamond rule `W * E = 1 + N * S`.
//!
//! The crate provides:
//!
//! * [`Rational`]: arbitrary-precision exact scalars; no floats anywhere.
//! * [`PatternGrid`]: one fundamental period of a closed pattern, cyclic with
//!   period `n + 3`, addressable in paper coordinates `(i, j)`.
//! * [`yfrieze`]: vertical and horizontal knitting, verification, and the
//!   glide-symmetry check for Y-friezes.
//! * [`frieze`]: triangulation-backed enumeration of Coxeter friezes.
//! * [`ensemble`]: the second-row map from friezes to Y-friezes, equivalence
//!   classes, and surjectivity experiments.
//! * [`enumerate`]: pruned exhaustive search for arithmetic Y-friezes.
//! * [`render`]: byte-stable ASCII layout of patterns.
//! * [`json`]: the interchange schema shared with the CLI.

pub mod enumerate;
pub mod ensemble;
mod error;
pub mod frieze;
mod grid;
pub mod json;
mod rational;
pub mod render;
mod verify;
pub mod yfrieze;

pub use error::{Error, Result};
pub use grid::{Direction, PatternGrid, PatternKind, ZigZag};
pub use rational::Rational;
pub use verify::{DiamondViolation, VerifyReport};

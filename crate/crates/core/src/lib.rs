//! Numerical verification lab for the zeta-difference operator on analytic
//! functions in the unit disc.
//!
//! The operator `d_zeta f(z) = (f * h_zeta)(z) / z` is built as a Hadamard
//! product on truncated power series ([`series`], [`qcalc`]). Grid samplers
//! ([`classes`]) turn inequalities about starlike and convex functions into
//! margin reports, a catalog of named functions ([`catalog`]) feeds them, and
//! [`theorems`] checks each sharp inequality, counterexample and open question
//! the operator raises. [`cli`] drives everything from the command line.

pub mod catalog;
pub mod classes;
pub mod cli;
pub mod error;
pub mod format;
pub mod function;
pub mod qcalc;
pub mod series;
pub mod theorems;

pub use error::{QdiscError, Result};
pub use function::{DiscFunction, TailErrors, TruncatedSeries};
pub use series::{tail_estimate, ComplexScalar, PowerSeries, TailBound, TailKind};

//! Exact q-series engine for integer partition statistics.
//!
//! Everything here is formal power series arithmetic in one variable `q`,
//! truncated at a chosen order, with arbitrary-precision integer
//! coefficients. No floating point is used anywhere.
//!
//! The crate is organised as:
//! - [`series`]: the truncated power series ring ([`Series`])
//! - [`qkernels`]: q-Pochhammer products, Gaussian binomials, theta series,
//!   Lambert sums
//! - [`enumerate`]: brute-force partition enumeration and counting oracles
//! - [`statistics`]: partition statistic tables (p, Q, b, s, S, e, M_k, MP_k)
//!   computed through generating functions
//! - [`verify`]: executable checkers for the identities relating those
//!   statistics, and counterexample scanners for the open conjectures
//! - [`qexpr`]: a small expression language for writing q-series identities
//!   as text

pub mod enumerate;
pub mod qexpr;
pub mod qkernels;
pub mod series;
pub mod statistics;
pub mod verify;

pub use series::{Series, SeriesError};

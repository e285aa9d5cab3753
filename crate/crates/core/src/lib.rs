//! Exact combinatorial polynomial algebra: partition sets in multiplicity
//! form, partial and complete Bell polynomials (exponential and ordinary),
//! Adomian polynomials, a family of verified identities, and a decomposition
//! solver for first-order initial value problems.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. Results of the different construction routes are
//! canonical polynomials, so route equality is plain `==`.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`]: scalar arithmetic and combinatorial helpers,
//! * [`poly`]: sparse multivariate polynomials with a canonical term order,
//! * [`partitions`]: multiplicity vectors and their recurrences,
//! * [`bell`]: Bell polynomials through direct and recursive routes,
//! * [`adomian`]: Adomian polynomials and their evaluation,
//! * [`identities`]: the verified identity family,
//! * [`adm`]: the decomposition solver and closed-form series,
//! * [`suite`]: bulk cross-checks over index ranges, optionally in parallel.

pub mod adm;
pub mod adomian;
pub mod bell;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod suite;

pub use error::{Error, Result};
pub use poly::{MultiPoly, Var};
pub use rational::Rational;

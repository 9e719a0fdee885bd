//! Exact and high-precision verification of generating-function identities
//! for squares of Legendre polynomials.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: big rationals, quadratic surds `a + b√d`, and a decimal
//!   floating-point real with `exp`, `ln`, `sqrt` and `π`.
//! - [`sequences`]: Legendre polynomials, the Clausen inner sum, the
//!   Apéry-like sequence `u_n` and the auxiliary families.
//! - [`series`]: truncated power series over exact fields, Laurent series,
//!   hypergeometric series and a monitored numeric summation.
//! - [`identities`]: one verification routine per identity, each returning
//!   a [`VerifyReport`].
//! - [`modular`]: Dedekind eta, `E₂`, the level-7 hauptmodul `w(τ)` and the
//!   numeric checks built on them.
//! - [`table1`]: the embedded table of parameter choices.

mod clock;
pub mod error;
pub mod exact;
pub mod identities;
pub mod modular;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod sequences;
pub mod series;
pub mod table1;

pub use error::{Error, Result};
pub use exact::{binomial, Exact, FixedReal, QuadExt, Rational};
pub use poly::PolyQ;
pub use report::{CheckKind, IdentityId, VerifyReport};
pub use scalar::Scalar;
pub use series::{LaurentQ, Series};

//! Exact construction and verification of the logarithmic derivation basis of
//! the extended Catalan arrangement `Cat(B2, m)`.
//!
//! * [`rational`]: exact rationals, falling factorials, binomials, half-integer Beta values.
//! * [`poly`]: sparse polynomials in `x, y`, univariate polynomials and rational
//!   functions, hyperplane forms, canonical text/JSON serialization.
//! * [`catalan`]: the polynomial families, their deformations, and every identity
//!   check, each returning a [`catalan::CheckReport`].
//! * [`sweep`]: parameter sweeps over the checks with deterministic reporting,
//!   used by the `catb2` binary.

pub mod catalan;
pub mod error;
pub mod poly;
pub mod rational;
pub mod sweep;

pub use error::{Error, Result};
pub use poly::{BiPoly, LinearForm, UniPoly, UniRatFunc, Var};
pub use rational::{FamilyIndex, Rat};

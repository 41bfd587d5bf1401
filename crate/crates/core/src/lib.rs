//! Exact Hirzebruch χ_y computations for elliptic fibrations.
//!
//! The engine works with weight-truncated series in `L`, `H` and the
//! formal Chern classes `ci` of a base, with a truncated polynomial
//! direction in `y`. On top of that sit characteristic-class builders,
//! a projective-bundle pushforward, the D5/E6/E7/E8 catalog and the
//! generating series `χ(t, y)` together with numeric evaluation over
//! concrete bases.

pub mod checks;
pub mod classes;
pub mod error;
pub mod fibrations;
pub mod genseries;
pub mod poly;
pub mod pushforward;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
pub use poly::UniPoly;
pub use rational::Rational;
pub use series::{Monomial, Var, WSeries};

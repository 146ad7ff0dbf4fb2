//! Exact arithmetic for Jack polynomials, shifted Jack polynomials, the
//! binomial formula, θ-dimensions of skew diagrams, multivariate Bessel
//! series and the integral representation of Jack polynomials.

pub mod bessel;
pub mod binomial;
pub mod cli;
pub mod error;
pub mod integral;
pub mod jack;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod shifted;
pub mod suite;
pub mod thetadim;

pub use error::{Error, Result};
pub use jack::JackParams;
pub use partitions::Partition;
pub use poly::{MultiPoly, SymExpansion};
pub use rational::Rational;

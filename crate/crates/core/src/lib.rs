//! Fibonacci cubes, Lucas cubes and their maximal induced hypercubes.
//!
//! The Fibonacci cube of order `n` is the subgraph of the hypercube `Q_n`
//! induced by binary strings without two consecutive 1s; the Lucas cube drops
//! the strings that both start and end with 1. This crate builds both
//! families, enumerates their maximal induced hypercubes from a top-vertex
//! characterization, and cross-checks the result against a brute-force
//! search, closed-form counts, recurrences and generating-function expansions.
//!
//! Counting code is generic over the coefficient type (see [`Coefficient`]);
//! the aliases below fix it to `u64` for everyday use and to
//! [`num_bigint::BigUint`] when counts outgrow 64 bits.

pub mod bitstring;
pub mod combinatorics;
pub mod error;
pub mod graph;
pub mod hypercube;
pub mod maximal;
pub mod poly;
pub mod scalar;

pub use bitstring::{BitString, Family, OneBlockDecomposition, ZeroBlockDecomposition};
pub use error::{Error, Result};
pub use graph::CubeGraph;
pub use hypercube::{InducedHypercube, DEFAULT_ORACLE_CAP};
pub use maximal::TopVertexPattern;
pub use scalar::Coefficient;

/// Counting polynomial with machine-word coefficients.
pub type Polynomial = poly::CountingPolynomial<u64>;
/// Counting polynomial with arbitrary-precision coefficients.
pub type BigPolynomial = poly::CountingPolynomial<num_bigint::BigUint>;
/// Generating-function expansion with machine-word coefficients.
pub type Series = poly::SeriesTable<u64>;
/// Generating-function expansion with arbitrary-precision coefficients.
pub type BigSeries = poly::SeriesTable<num_bigint::BigUint>;

//! Exact graph polynomials and the Connes–Kreimer renormalization combinatorics.
//!
//! Everything is computed over the rationals. The polynomial ring and the
//! matrix routines are generic over the coefficient type; the graph-level
//! entry points use [`Rational`] coefficients through the [`Poly`] alias.

pub mod checks;
pub mod error;
pub mod fixtures;
pub mod graph_poly;
pub mod graphs;
pub mod hopf;
pub mod linalg;
pub mod parametric;
pub mod poly;
pub mod random;

pub use error::{Error, Result};
pub use graphs::{Dart, EdgeSubset, Graph, LegDir, RibbonGraph};
pub use poly::{Coefficient, Monomial, MultiPoly, Var};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Polynomial with arbitrary-precision rational coefficients.
pub type Poly = MultiPoly<Rational>;

/// Small-integer polynomial, handy for fast checks that cannot overflow.
pub type Poly64 = MultiPoly<num_rational::Rational64>;

/// Square matrix of rational polynomials.
pub type Matrix = linalg::PolyMatrix<Rational>;

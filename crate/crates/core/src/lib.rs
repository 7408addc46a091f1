//! Exact computer algebra for noncommutative principal bundles.
//!
//! The crate builds Hopf–Galois extensions from finite presentations over
//! the cyclotomic rational-function field Q(zeta_N)(t_1, ..., t_k), forms
//! their gauge bialgebroids, and machine-checks the structural identities:
//! translation-map properties, bialgebroid and Hopf-algebroid axioms,
//! gauge-group/bisection isomorphisms and crossed-module laws.
//!
//! All core algebra is generic over an exact [`field::Field`]; the session
//! scalar type is pinned by the aliases below.

pub mod catalog;
pub mod crossed;
pub mod cyclotomic;
pub mod error;
pub mod esbrd;
pub mod expr;
pub mod field;
pub mod fileformat;
pub mod gauge;
pub mod hgext;
pub mod hopf;
pub mod kernel;
pub mod linalg;
pub mod poly;
pub mod ratfn;
pub mod report;
pub mod session;
pub mod suites;
pub mod tensor;

#[cfg(test)]
pub mod test_support;

/// The session scalar: an element of Q(zeta_N)(t_1, ..., t_k).
pub type Scalar = ratfn::RatFn;

/// An element of a presented algebra over the session scalar.
pub type Element = kernel::AlgebraElement<Scalar>;

/// A tensor-power element over the session scalar.
pub type Tensor = tensor::TensorElement<Scalar>;

pub use error::Error;
pub use session::Session;

//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("the session field Q(zeta_{order}) does not contain all {wanted}-th roots of unity")]
    RootsNotInField { wanted: u32, order: u32 },

    #[error("degree bound {bound} exceeded by element of total degree {got}")]
    DegreeBound { bound: usize, got: usize },

    #[error("relation not preserved by morphism: {0}")]
    RelationViolated(String),

    #[error("not convolution invertible: {0}")]
    NotInvertible(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("load error for `{entry}`: {detail}")]
    Load { entry: String, detail: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

//! Exact-arithmetic Lichnerowicz-Poisson cohomology for the singular bivector
//! models arising from broken Lefschetz fibrations on 4-manifolds, together
//! with the closed-form coboundary operators of Jacobian Poisson structures in
//! four variables.

pub mod calc4;
pub mod coboundary;
pub mod cohomology;
pub mod models;
pub mod mvfield;
pub mod polyalg;
pub mod report;
pub mod sampling;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("model error: {0}")]
    Model(String),
}

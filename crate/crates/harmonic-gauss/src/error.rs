use thiserror::Error;

use crate::bivariate::BivariatePolynomial;
use crate::rational::Rational;

/// Errors shared across the crate.
///
/// Geometric preconditions are reported as dedicated variants so callers can
/// distinguish a surface branch point (tangent cross product vanishes) from a
/// degenerate Gauss map (the normal's derivative cross product vanishes while
/// the surface itself is fine).
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("polynomial is not harmonic; Laplacian residual: {residual}")]
    NotHarmonic { residual: BivariatePolynomial },
    #[error("point ({x}, {y}) lies outside the surface domain")]
    OutOfDomain { x: Rational, y: Rational },
    #[error("branch point at ({x}, {y}): tangent cross product vanishes")]
    BranchPoint { x: Rational, y: Rational },
    #[error("Gauss map degenerate at ({x}, {y}): normal derivatives are linearly dependent")]
    GaussDegenerate { x: Rational, y: Rational },
    #[error("stereographic projection undefined at the north pole")]
    NorthPole,
    #[error("surface is not graph-normalized: first coordinate must be x")]
    NotNormalized,
    #[error("surface is degenerate: tangent cross product vanishes identically")]
    DegenerateSurface,
    #[error("squared distortion {value} is below 1")]
    InvalidDistortion { value: Rational },
    #[error("phi triple violates the null identity phi1^2 + phi2^2 + phi3^2 = 0")]
    NullViolation,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

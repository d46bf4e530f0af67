//! Exact-arithmetic toolkit for harmonic parametric surfaces in R³.
//!
//! A *harmonic surface* is a parametric surface whose three coordinate
//! functions are planar harmonic polynomials, stored here as real parts of
//! analytic polynomials with complex-rational coefficients. Everything the
//! crate computes from such a surface (tangent frames, squared distortion,
//! Gauss-map distortion, curvature sign, planarity) is an exact rational
//! quantity. Floating point appears only at two deliberate bridges: the unit
//! normal / stereographic projection, and the dilatation (Beltrami modulus)
//! conversion.
//!
//! The central fact exercised by the verification suites is that the
//! distortion of the Gauss map of a harmonic surface equals the distortion of
//! the surface itself wherever the Gauss map is regular, and that a harmonic
//! surface has a nowhere-regular Gauss map precisely when it is planar. Both
//! are checked as identities of reduced rationals, never approximately.
//!
//! Modules:
//! - [`rational`]: exact scalar types and `"num/den"` rendering.
//! - [`bivariate`]: sparse polynomials in (x, y) over the rationals.
//! - [`analytic`]: polynomials in z with complex-rational coefficients.
//! - [`harmonic`]: harmonic functions as real parts of analytic polynomials.
//! - [`surface`]: harmonic surfaces, tangent data, distortion, K-quasiconformality.
//! - [`gauss`]: unit normal, stereographic/complex Gauss map, second-order
//!   jet quantities, Gauss-map distortion, curvature sign, planarity.
//! - [`weierstrass`]: minimal-surface generation from data pairs (p, q).
//! - [`verify`]: randomized exact identity suites and finite-difference
//!   cross-checks, with reproducible JSON reports.
//! - [`json`], [`sweep`], [`mesh`]: file formats used by the `hgauss` CLI.

// error variants carry the exact rationals of the offending point
#![allow(clippy::result_large_err)]

pub mod analytic;
pub mod bivariate;
pub mod error;
pub mod gauss;
pub mod harmonic;
pub mod json;
pub mod mesh;
pub mod rational;
pub mod samples;
pub mod surface;
pub mod sweep;
pub mod verify;
pub mod weierstrass;

pub use analytic::AnalyticPolynomial;
pub use bivariate::BivariatePolynomial;
pub use error::{Error, Result};
pub use harmonic::{harmonic_residual, to_analytic, HarmonicFunction};
pub use rational::{ComplexRational, Rational};
pub use surface::{dilatation_from_distortion, Domain, HarmonicSurface, TangentData, Vec3};

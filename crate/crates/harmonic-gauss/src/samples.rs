//! Ready-made surfaces used by CLI defaults, verification suites, and tests.

use crate::bivariate::BivariatePolynomial;
use crate::harmonic::{to_analytic, HarmonicFunction};
use crate::rational::{rat, rat_int};
use crate::surface::{Domain, HarmonicSurface};

/// The graph (x, y, xy) over [-1, 1]²: the simplest non-planar harmonic
/// surface, with distortion 9/8 at (1, 0).
pub fn saddle() -> HarmonicSurface {
    let c = to_analytic(&BivariatePolynomial::from_terms([((1, 1), rat_int(1))]))
        .expect("xy is harmonic");
    HarmonicSurface::new(
        HarmonicFunction::coordinate_x(),
        HarmonicFunction::coordinate_x().conjugate(),
        c,
        Domain::unit_square(),
    )
}

/// The surface (x, -x³/3 + x(1/2 + y)², 1 - x² + y + y²) over [-1, 1]².
///
/// Its quantity M expands to 16(y + 1/2)⁴, so the Gauss map degenerates on
/// the whole line y = -1/2 rather than at isolated points; the tangent cross
/// product also vanishes identically on that line.
pub fn gauss_branch_line() -> HarmonicSurface {
    let b = to_analytic(&BivariatePolynomial::from_terms([
        ((3, 0), rat(-1, 3)),
        ((1, 0), rat(1, 4)),
        ((1, 1), rat_int(1)),
        ((1, 2), rat_int(1)),
    ]))
    .expect("harmonic by construction");
    let c = to_analytic(&BivariatePolynomial::from_terms([
        ((0, 0), rat_int(1)),
        ((2, 0), rat_int(-1)),
        ((0, 1), rat_int(1)),
        ((0, 2), rat_int(1)),
    ]))
    .expect("harmonic by construction");
    HarmonicSurface::new(HarmonicFunction::coordinate_x(), b, c, Domain::unit_square())
}

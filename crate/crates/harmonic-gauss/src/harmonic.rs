//! Harmonic polynomial functions of two variables.
//!
//! A harmonic function is stored as the real part of an analytic polynomial:
//! h(x, y) = Re F(x + iy). This makes the Laplace equation hold by
//! construction and keeps the class closed under partial differentiation
//! (h_x = Re F', h_y = Re(iF')), while the harmonic conjugate is just
//! Re(-iF). The imaginary part of F's constant term carries no information
//! about h, so it is normalized to zero.

use num_complex::Complex;
use num_traits::Zero;

use crate::analytic::AnalyticPolynomial;
use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::rational::{c_i, crat, rat, rat_int, ComplexRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicFunction {
    analytic: AnalyticPolynomial,
}

impl HarmonicFunction {
    /// Wraps an analytic polynomial, zeroing the imaginary part of its
    /// constant term.
    pub fn from_analytic(f: AnalyticPolynomial) -> Self {
        let mut coeffs: Vec<ComplexRational> = f.coeffs().to_vec();
        if let Some(c0) = coeffs.first_mut() {
            c0.im = Rational::zero();
        }
        Self { analytic: AnalyticPolynomial::new(coeffs) }
    }

    pub fn zero() -> Self {
        Self { analytic: AnalyticPolynomial::zero() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_analytic(AnalyticPolynomial::constant(ComplexRational::from(c)))
    }

    /// h(x, y) = x, i.e. F = z.
    pub fn coordinate_x() -> Self {
        Self::from_analytic(AnalyticPolynomial::monomial(1, ComplexRational::from(rat_int(1))))
    }

    pub fn analytic(&self) -> &AnalyticPolynomial {
        &self.analytic
    }

    pub fn is_constant(&self) -> bool {
        self.analytic.degree().is_none_or(|d| d == 0)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.analytic.eval(&crat(x.clone(), y.clone())).re
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.analytic.eval_f64(Complex::new(x, y)).re
    }

    /// ∂h/∂x, again harmonic: Re F'.
    pub fn partial_x(&self) -> Self {
        Self::from_analytic(self.analytic.derivative())
    }

    /// ∂h/∂y = Re(iF').
    pub fn partial_y(&self) -> Self {
        Self::from_analytic(self.analytic.derivative().scale(&c_i()))
    }

    /// Harmonic conjugate h̃ with h + i h̃ analytic; h̃ = Re(-iF), with the
    /// free constant fixed by the constant-term normalization.
    pub fn conjugate(&self) -> Self {
        Self::from_analytic(self.analytic.scale(&-c_i()))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_analytic(self.analytic.add(rhs.analytic()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_analytic(self.analytic.scale(&ComplexRational::from(k.clone())))
    }

    /// Expansion of h as a polynomial in (x, y).
    pub fn to_bivariate(&self) -> BivariatePolynomial {
        self.analytic.real_part()
    }
}

/// Laplacian p_xx + p_yy; the zero polynomial exactly when p is harmonic.
pub fn harmonic_residual(p: &BivariatePolynomial) -> BivariatePolynomial {
    p.laplacian()
}

/// Converts a harmonic bivariate polynomial to its analytic completion via
/// F(z) = 2 p(z/2, -iz/2) - p(0, 0), so that Re F(x + iy) = p(x, y).
///
/// Rejects non-harmonic input, returning the Laplacian residual.
pub fn to_analytic(p: &BivariatePolynomial) -> Result<HarmonicFunction> {
    let residual = harmonic_residual(p);
    if !residual.is_zero() {
        return Err(Error::NotHarmonic { residual });
    }
    let half = ComplexRational::from(rat(1, 2));
    let minus_i_half = crat(Rational::zero(), rat(-1, 2));
    let mut f = AnalyticPolynomial::zero();
    for ((i, j), c) in p.terms() {
        // c x^i y^j -> c (1/2)^i (-i/2)^j z^(i+j)
        let mut factor = ComplexRational::from(c.clone());
        for _ in 0..*i {
            factor *= &half;
        }
        for _ in 0..*j {
            factor *= &minus_i_half;
        }
        f = f.add(&AnalyticPolynomial::monomial((i + j) as usize, factor));
    }
    f = f.scale(&ComplexRational::from(rat_int(2)));
    f = f.sub(&AnalyticPolynomial::constant(ComplexRational::from(p.coeff(0, 0))));
    Ok(HarmonicFunction::from_analytic(f))
}

//! Polynomials in one complex variable with complex-rational coefficients.
//!
//! These carry the analytic completions of harmonic functions and the
//! Weierstrass data pairs. Coefficients are stored in ascending degree with
//! the invariant that the last stored coefficient is nonzero (the zero
//! polynomial stores nothing).

use num_complex::Complex;
use num_traits::Zero;

use crate::bivariate::BivariatePolynomial;
use crate::rational::{rat_int, rational_to_f64, ComplexRational};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnalyticPolynomial {
    coeffs: Vec<ComplexRational>,
}

impl AnalyticPolynomial {
    /// Builds from ascending-degree coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<ComplexRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ComplexRational) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^degree`.
    pub fn monomial(degree: usize, c: ComplexRational) -> Self {
        let mut coeffs = vec![ComplexRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ComplexRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ComplexRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ComplexRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &ComplexRational) -> ComplexRational {
        let mut acc = ComplexRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn eval_f64(&self, z: Complex<f64>) -> Complex<f64> {
        let mut acc = Complex::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex::new(rational_to_f64(&c.re), rational_to_f64(&c.im));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * ComplexRational::from(rat_int(k as i64)))
            .collect();
        Self::new(coeffs)
    }

    /// Antiderivative with integration constant zero.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![ComplexRational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / ComplexRational::from(rat_int(k as i64 + 1))),
        );
        Self::new(coeffs)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![ComplexRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, k: &ComplexRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Expands Re F(x + iy) as a bivariate polynomial in (x, y).
    pub fn real_part(&self) -> BivariatePolynomial {
        // maintain (re, im) of (x + iy)^k and accumulate Re(c_k (x + iy)^k)
        let mut acc = BivariatePolynomial::zero();
        let mut pow_re = BivariatePolynomial::constant(rat_int(1));
        let mut pow_im = BivariatePolynomial::zero();
        let x = BivariatePolynomial::from_terms([((1, 0), rat_int(1))]);
        let y = BivariatePolynomial::from_terms([((0, 1), rat_int(1))]);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let next_re = pow_re.mul(&x).sub(&pow_im.mul(&y));
                let next_im = pow_re.mul(&y).add(&pow_im.mul(&x));
                pow_re = next_re;
                pow_im = next_im;
            }
            acc = acc.add(&pow_re.scale(&c.re)).sub(&pow_im.scale(&c.im));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{c_i, crat_int, rat};

    fn z_squared() -> AnalyticPolynomial {
        AnalyticPolynomial::monomial(2, crat_int(1, 0))
    }

    #[test]
    fn eval_horner() {
        // (1+2i) + 3z^2 at z = 1/2 + i: z^2 = -3/4 + i, value = (1+2i) + (-9/4 + 3i)
        let p = AnalyticPolynomial::new(vec![
            crat_int(1, 2),
            ComplexRational::zero(),
            crat_int(3, 0),
        ]);
        let z = ComplexRational::new(rat(1, 2), rat_int(1));
        let v = p.eval(&z);
        assert_eq!(v.re, rat(-5, 4));
        assert_eq!(v.im, rat_int(5));
    }

    #[test]
    fn derivative_and_antiderivative_invert() {
        let p = AnalyticPolynomial::new(vec![crat_int(0, 3), crat_int(2, 0), crat_int(0, 1)]);
        // antiderivative pins the constant to zero
        let without_const = p.sub(&AnalyticPolynomial::constant(p.coeff(0)));
        assert_eq!(p.derivative().antiderivative(), without_const);
        assert_eq!(
            z_squared().derivative(),
            AnalyticPolynomial::new(vec![crat_int(0, 0), crat_int(2, 0)])
        );
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = AnalyticPolynomial::new(vec![crat_int(1, 0), ComplexRational::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert!(AnalyticPolynomial::new(vec![ComplexRational::zero()]).is_zero());
    }

    #[test]
    fn real_part_expansions() {
        // Re z^2 = x^2 - y^2
        let p = z_squared().real_part();
        assert_eq!(p.coeff(2, 0), rat_int(1));
        assert_eq!(p.coeff(0, 2), rat_int(-1));
        // Re(-i z^2) = 2xy
        let q = z_squared().scale(&-c_i()).real_part();
        assert_eq!(q.coeff(1, 1), rat_int(2));
        assert_eq!(q.terms().count(), 1);
    }

    #[test]
    fn mul_matches_expansion() {
        // (1 - z^2)(1 + z^2) = 1 - z^4
        let a = AnalyticPolynomial::new(vec![crat_int(1, 0), ComplexRational::zero(), crat_int(-1, 0)]);
        let b = AnalyticPolynomial::new(vec![crat_int(1, 0), ComplexRational::zero(), crat_int(1, 0)]);
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), crat_int(1, 0));
        assert_eq!(prod.coeff(2), crat_int(0, 0));
        assert_eq!(prod.coeff(4), crat_int(-1, 0));
    }
}

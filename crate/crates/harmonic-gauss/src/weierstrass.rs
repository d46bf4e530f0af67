//! Minimal-surface generation from data pairs (p, q).
//!
//! A polynomial pair (p, q) produces the triple
//! φ₁ = p(1 − q²), φ₂ = ip(1 + q²), φ₃ = 2pq, which satisfies the null
//! identity φ₁² + φ₂² + φ₃² = 0 by construction; integrating the real parts
//! of the antiderivatives yields a harmonic surface that is isothermal
//! (hence minimal, distortion exactly 1) at every regular point. All of this
//! is exact polynomial arithmetic.
//!
//! The relation between the generated surface's complex Gauss map and q is
//! deliberately *reported, not asserted*: [`gauss_vs_q`] measures the
//! stereographically projected normal against both the candidate q(ζ) and
//! the candidate −i/q′(ζ) and records the deviations, leaving the
//! interpretation to the caller.

use num_traits::{One, Signed, Zero};

use crate::analytic::AnalyticPolynomial;
use crate::error::{Error, Result};
use crate::gauss::{complex_gauss, normal};
use crate::harmonic::HarmonicFunction;
use crate::rational::{c_i, rational_to_f64, ComplexRational, Rational};
use crate::surface::{Domain, HarmonicSurface};

/// Generating pair: analytic polynomials p (not identically zero) and q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassData {
    p: AnalyticPolynomial,
    q: AnalyticPolynomial,
}

impl WeierstrassData {
    pub fn new(p: AnalyticPolynomial, q: AnalyticPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidInput("p must not be identically zero".into()));
        }
        Ok(Self { p, q })
    }

    /// p = 1, q = ζ: the classical Enneper data.
    pub fn enneper() -> Self {
        Self {
            p: AnalyticPolynomial::constant(ComplexRational::one()),
            q: AnalyticPolynomial::monomial(1, ComplexRational::one()),
        }
    }

    pub fn p(&self) -> &AnalyticPolynomial {
        &self.p
    }

    pub fn q(&self) -> &AnalyticPolynomial {
        &self.q
    }
}

/// Analytic triple with φ₁² + φ₂² + φ₃² = 0 as an exact polynomial identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTriple {
    pub phi1: AnalyticPolynomial,
    pub phi2: AnalyticPolynomial,
    pub phi3: AnalyticPolynomial,
}

impl PhiTriple {
    pub fn new(phi1: AnalyticPolynomial, phi2: AnalyticPolynomial, phi3: AnalyticPolynomial) -> Self {
        Self { phi1, phi2, phi3 }
    }
}

/// φ₁ = p(1 − q²), φ₂ = ip(1 + q²), φ₃ = 2pq.
pub fn phi_from_pq(d: &WeierstrassData) -> PhiTriple {
    let one = AnalyticPolynomial::constant(ComplexRational::one());
    let q_sq = d.q.mul(&d.q);
    let phi1 = d.p.mul(&one.sub(&q_sq));
    let phi2 = d.p.mul(&one.add(&q_sq)).scale(&c_i());
    let phi3 = d.p.mul(&d.q).scale(&ComplexRational::from(Rational::from_integer(2.into())));
    let t = PhiTriple::new(phi1, phi2, phi3);
    debug_assert!(null_check(&t));
    t
}

/// True iff φ₁² + φ₂² + φ₃² is the zero polynomial, coefficient-exact.
pub fn null_check(t: &PhiTriple) -> bool {
    t.phi1
        .mul(&t.phi1)
        .add(&t.phi2.mul(&t.phi2))
        .add(&t.phi3.mul(&t.phi3))
        .is_zero()
}

/// Integrates the triple into a harmonic surface: each coordinate is
/// Re of the antiderivative of φ_k, with integration constant 0 at ζ = 0.
pub fn integrate(t: &PhiTriple, domain: Domain) -> Result<HarmonicSurface> {
    if !null_check(t) {
        return Err(Error::NullViolation);
    }
    let coord = |phi: &AnalyticPolynomial| HarmonicFunction::from_analytic(phi.antiderivative());
    Ok(HarmonicSurface::new(
        coord(&t.phi1),
        coord(&t.phi2),
        coord(&t.phi3),
        domain,
    ))
}

/// Per-point record of the minimality verification.
#[derive(Debug, Clone)]
pub struct MinimalityEntry {
    pub point: (Rational, Rational),
    pub regular: bool,
    pub isothermal: Option<bool>,
    pub distortion_sq: Option<Rational>,
    /// Sign of the z-component of Y_x × Y_y (orientation indicator).
    pub normal_z_sign: Option<i8>,
    pub pass: bool,
}

#[derive(Debug, Clone, Default)]
pub struct MinimalityReport {
    pub entries: Vec<MinimalityEntry>,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl MinimalityReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Checks, at each sampled regular point, that the surface is exactly
/// isothermal with squared distortion exactly 1. Branch points are recorded
/// as skipped, never as failures.
pub fn verify_minimal(s: &HarmonicSurface, pts: &[(Rational, Rational)]) -> MinimalityReport {
    let mut report = MinimalityReport::default();
    for pt in pts {
        let t = s.tangents_unchecked(pt);
        if t.g_sq.is_zero() {
            report.skipped += 1;
            report.entries.push(MinimalityEntry {
                point: pt.clone(),
                regular: false,
                isothermal: None,
                distortion_sq: None,
                normal_z_sign: None,
                pass: false,
            });
            continue;
        }
        let iso = t.y_x.norm_sq() == t.y_y.norm_sq() && t.y_x.dot(&t.y_y).is_zero();
        let dist = &t.energy * &t.energy / (Rational::from_integer(4.into()) * &t.g_sq);
        let sign = if t.v.z.is_zero() {
            0
        } else if t.v.z.is_positive() {
            1
        } else {
            -1
        };
        let pass = iso && dist.is_one();
        if pass {
            report.passed += 1;
        } else {
            report.failed += 1;
        }
        report.entries.push(MinimalityEntry {
            point: pt.clone(),
            regular: true,
            isothermal: Some(iso),
            distortion_sq: Some(dist),
            normal_z_sign: Some(sign),
            pass,
        });
    }
    report
}

/// Candidate comparison for the complex Gauss map of a generated surface.
#[derive(Debug, Clone)]
pub struct GaussCandidateEntry {
    pub zeta: (Rational, Rational),
    /// f ∘ n at the point, absent at branch points or the projection pole.
    pub gauss: Option<(f64, f64)>,
    pub skip_reason: Option<String>,
    /// q(ζ).
    pub q_value: (f64, f64),
    /// −i/q′(ζ), absent where q′(ζ) = 0 (decided exactly).
    pub inv_q_prime: Option<(f64, f64)>,
    pub dev_q: Option<f64>,
    pub dev_inv_q_prime: Option<f64>,
}

#[derive(Debug, Clone, Default)]
pub struct GaussCandidateReport {
    pub entries: Vec<GaussCandidateEntry>,
}

/// Compares the floating complex Gauss map of the surface generated from
/// `d` against the two candidates q(ζ) and −i/q′(ζ) at each point,
/// reporting values and absolute deviations without asserting either.
pub fn gauss_vs_q(d: &WeierstrassData, pts: &[(Rational, Rational)]) -> Result<GaussCandidateReport> {
    let surface = integrate(&phi_from_pq(d), domain_covering(pts))?;
    let q_prime = d.q.derivative();
    let mut report = GaussCandidateReport::default();
    for pt in pts {
        let zeta = ComplexRational::new(pt.0.clone(), pt.1.clone());
        let qv = d.q.eval(&zeta);
        let q_value = (rational_to_f64(&qv.re), rational_to_f64(&qv.im));
        let qp = q_prime.eval(&zeta);
        let inv_q_prime = if qp.is_zero() {
            None
        } else {
            let w = -c_i() * qp.inv();
            Some((rational_to_f64(&w.re), rational_to_f64(&w.im)))
        };
        let (gauss, skip_reason) = match complex_gauss(&surface, pt) {
            Ok(g) => (Some(g), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let dev = |cand: (f64, f64)| {
            gauss.map(|g| ((g.0 - cand.0).powi(2) + (g.1 - cand.1).powi(2)).sqrt())
        };
        report.entries.push(GaussCandidateEntry {
            zeta: pt.clone(),
            gauss,
            skip_reason,
            q_value,
            inv_q_prime,
            dev_q: dev(q_value),
            dev_inv_q_prime: inv_q_prime.and_then(dev),
        });
    }
    Ok(report)
}

/// Smallest rectangle containing the unit square and all given points.
fn domain_covering(pts: &[(Rational, Rational)]) -> Domain {
    let unit = Domain::unit_square();
    let (x_lo0, x_hi0, y_lo0, y_hi0) = unit.bounds();
    let mut x_lo = x_lo0.clone();
    let mut x_hi = x_hi0.clone();
    let mut y_lo = y_lo0.clone();
    let mut y_hi = y_hi0.clone();
    for (x, y) in pts {
        if x < &x_lo {
            x_lo = x.clone();
        }
        if x > &x_hi {
            x_hi = x.clone();
        }
        if y < &y_lo {
            y_lo = y.clone();
        }
        if y > &y_hi {
            y_hi = y.clone();
        }
    }
    Domain::new(x_lo, x_hi, y_lo, y_hi).expect("covering domain is non-degenerate")
}

/// Floating value of the unit normal, exposed for candidate comparisons.
pub fn normal_f64(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<[f64; 3]> {
    Ok(normal(s, pt)?.as_array())
}

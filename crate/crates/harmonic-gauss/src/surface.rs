//! Harmonic parametric surfaces: tangent frames, distortion, and
//! quasiconformality tests.
//!
//! All geometric quantities that can be rational are kept rational. In
//! particular distortion is handled squared, 𝔇² = (‖Y_x‖² + ‖Y_y‖²)² /
//! (4‖Y_x × Y_y‖²), so that the identity checks downstream compare reduced
//! rationals instead of floats. Square roots appear only in the floating
//! dilatation bridge at the end of this module.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::harmonic::HarmonicFunction;
use crate::rational::{rat_int, rational_to_f64, Rational};

/// Closed rectangle [x_lo, x_hi] × [y_lo, y_hi] with positive side lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    x_lo: Rational,
    x_hi: Rational,
    y_lo: Rational,
    y_hi: Rational,
}

impl Domain {
    pub fn new(x_lo: Rational, x_hi: Rational, y_lo: Rational, y_hi: Rational) -> Result<Self> {
        if x_lo >= x_hi || y_lo >= y_hi {
            return Err(Error::InvalidInput(
                "domain bounds must satisfy x_lo < x_hi and y_lo < y_hi".into(),
            ));
        }
        Ok(Self { x_lo, x_hi, y_lo, y_hi })
    }

    /// [-1, 1] × [-1, 1].
    pub fn unit_square() -> Self {
        Self {
            x_lo: rat_int(-1),
            x_hi: rat_int(1),
            y_lo: rat_int(-1),
            y_hi: rat_int(1),
        }
    }

    pub fn bounds(&self) -> (&Rational, &Rational, &Rational, &Rational) {
        (&self.x_lo, &self.x_hi, &self.y_lo, &self.y_hi)
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        *x >= self.x_lo && *x <= self.x_hi && *y >= self.y_lo && *y <= self.y_hi
    }

    /// Evenly spaced rational grid, row-major with x varying fastest.
    /// Requires nx, ny >= 2; endpoints are included.
    pub fn grid(&self, nx: u32, ny: u32) -> Result<Vec<(Rational, Rational)>> {
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidInput("grid resolution must be at least 2 per axis".into()));
        }
        let dx = (&self.x_hi - &self.x_lo) / rat_int(i64::from(nx) - 1);
        let dy = (&self.y_hi - &self.y_lo) / rat_int(i64::from(ny) - 1);
        let mut pts = Vec::with_capacity(nx as usize * ny as usize);
        for iy in 0..ny {
            let y = &self.y_lo + &dy * rat_int(i64::from(iy));
            for ix in 0..nx {
                let x = &self.x_lo + &dx * rat_int(i64::from(ix));
                pts.push((x, y.clone()));
            }
        }
        Ok(pts)
    }

    /// `count` evenly spaced interior values on the x side (never touching
    /// the boundary), used by the deterministic reference-point searches.
    pub(crate) fn interior_x_values(&self, count: u32) -> Vec<Rational> {
        let step = (&self.x_hi - &self.x_lo) / rat_int(i64::from(count) + 1);
        (1..=count).map(|k| &self.x_lo + &step * rat_int(i64::from(k))).collect()
    }

    pub(crate) fn interior_y_values(&self, count: u32) -> Vec<Rational> {
        let step = (&self.y_hi - &self.y_lo) / rat_int(i64::from(count) + 1);
        (1..=count).map(|k| &self.y_lo + &step * rat_int(i64::from(k))).collect()
    }
}

/// Vector in R³ with exact rational components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vec3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn dot(&self, rhs: &Self) -> Rational {
        &self.x * &rhs.x + &self.y * &rhs.y + &self.z * &rhs.z
    }

    pub fn cross(&self, rhs: &Self) -> Self {
        Self::new(
            &self.y * &rhs.z - &self.z * &rhs.y,
            &self.z * &rhs.x - &self.x * &rhs.z,
            &self.x * &rhs.y - &self.y * &rhs.x,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn to_f64_array(&self) -> [f64; 3] {
        [rational_to_f64(&self.x), rational_to_f64(&self.y), rational_to_f64(&self.z)]
    }
}

/// First-order data of a surface at a point: tangents, their cross product,
/// its squared norm, and the Dirichlet energy density ‖Y_x‖² + ‖Y_y‖².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentData {
    pub y_x: Vec3,
    pub y_y: Vec3,
    pub v: Vec3,
    pub g_sq: Rational,
    pub energy: Rational,
}

impl TangentData {
    fn new(y_x: Vec3, y_y: Vec3) -> Self {
        let v = y_x.cross(&y_y);
        let g_sq = v.norm_sq();
        let energy = y_x.norm_sq() + y_y.norm_sq();
        debug_assert!(&energy * &energy >= rat_int(4) * &g_sq);
        Self { y_x, y_y, v, g_sq, energy }
    }
}

/// Parametric surface (a, b, c) : domain → R³ with harmonic coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicSurface {
    a: HarmonicFunction,
    b: HarmonicFunction,
    c: HarmonicFunction,
    domain: Domain,
}

impl HarmonicSurface {
    pub fn new(a: HarmonicFunction, b: HarmonicFunction, c: HarmonicFunction, domain: Domain) -> Self {
        Self { a, b, c, domain }
    }

    pub fn a(&self) -> &HarmonicFunction {
        &self.a
    }

    pub fn b(&self) -> &HarmonicFunction {
        &self.b
    }

    pub fn c(&self) -> &HarmonicFunction {
        &self.c
    }

    pub fn coords(&self) -> [&HarmonicFunction; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn with_domain(&self, domain: Domain) -> Self {
        Self { a: self.a.clone(), b: self.b.clone(), c: self.c.clone(), domain }
    }

    /// True when the first coordinate is the parameter x itself (up to an
    /// additive constant): ∂a/∂x ≡ 1 and ∂a/∂y ≡ 0.
    pub fn is_graph_normalized(&self) -> bool {
        let d = self.a.analytic().derivative();
        d.degree() == Some(0) && d.coeff(0).re.is_one() && d.coeff(0).im.is_zero()
    }

    fn check_domain(&self, pt: &(Rational, Rational)) -> Result<()> {
        if self.domain.contains(&pt.0, &pt.1) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { x: pt.0.clone(), y: pt.1.clone() })
        }
    }

    /// Exact tangent data at a domain point.
    pub fn tangents(&self, pt: &(Rational, Rational)) -> Result<TangentData> {
        self.check_domain(pt)?;
        Ok(self.tangents_unchecked(pt))
    }

    /// Tangent data without the domain check; the coordinate polynomials are
    /// defined on all of R², which the finite-difference probes rely on.
    pub(crate) fn tangents_unchecked(&self, pt: &(Rational, Rational)) -> TangentData {
        let (x, y) = pt;
        let y_x = Vec3::new(
            self.a.partial_x().eval(x, y),
            self.b.partial_x().eval(x, y),
            self.c.partial_x().eval(x, y),
        );
        let y_y = Vec3::new(
            self.a.partial_y().eval(x, y),
            self.b.partial_y().eval(x, y),
            self.c.partial_y().eval(x, y),
        );
        TangentData::new(y_x, y_y)
    }

    /// Second-order vectors (Y_xx, Y_xy, Y_yy), evaluated exactly.
    pub(crate) fn hessian_vectors(&self, pt: &(Rational, Rational)) -> (Vec3, Vec3, Vec3) {
        let (x, y) = pt;
        let comp = |f: &HarmonicFunction| {
            let fx = f.partial_x();
            (fx.partial_x(), fx.partial_y(), f.partial_y().partial_y())
        };
        let (axx, axy, ayy) = comp(&self.a);
        let (bxx, bxy, byy) = comp(&self.b);
        let (cxx, cxy, cyy) = comp(&self.c);
        (
            Vec3::new(axx.eval(x, y), bxx.eval(x, y), cxx.eval(x, y)),
            Vec3::new(axy.eval(x, y), bxy.eval(x, y), cxy.eval(x, y)),
            Vec3::new(ayy.eval(x, y), byy.eval(x, y), cyy.eval(x, y)),
        )
    }

    /// True iff the tangents are linearly dependent (cross product vanishes).
    pub fn is_branch_point(&self, pt: &(Rational, Rational)) -> Result<bool> {
        Ok(self.tangents(pt)?.g_sq.is_zero())
    }

    /// Squared distortion (‖Y_x‖² + ‖Y_y‖²)² / (4‖Y_x × Y_y‖²); always >= 1
    /// at regular points, with equality exactly at isothermal points.
    pub fn distortion_sq(&self, pt: &(Rational, Rational)) -> Result<Rational> {
        let t = self.tangents(pt)?;
        if t.g_sq.is_zero() {
            return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
        }
        Ok(&t.energy * &t.energy / (rat_int(4) * &t.g_sq))
    }

    /// Squared distortion by the gradient/minor route:
    /// (|∇a|² + |∇b|² + |∇c|²)² over 4·(sum of squared 2×2 Jacobian minors).
    /// Agrees with [`Self::distortion_sq`] everywhere; the two are computed
    /// along independent code paths so the agreement is testable.
    pub fn distortion_general(&self, pt: &(Rational, Rational)) -> Result<Rational> {
        self.check_domain(pt)?;
        let (x, y) = pt;
        let mut grad_sum = Rational::zero();
        let mut grads = Vec::with_capacity(3);
        for f in self.coords() {
            let fx = f.partial_x().eval(x, y);
            let fy = f.partial_y().eval(x, y);
            grad_sum += &fx * &fx + &fy * &fy;
            grads.push((fx, fy));
        }
        let (ax, ay) = &grads[0];
        let (bx, by) = &grads[1];
        let (cx, cy) = &grads[2];
        let m1 = by * ax - ay * bx;
        let m2 = -(cy * ax) + ay * cx;
        let m3 = cy * bx - by * cx;
        let minors = &m1 * &m1 + &m2 * &m2 + &m3 * &m3;
        if minors.is_zero() {
            return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
        }
        Ok(&grad_sum * &grad_sum / (rat_int(4) * minors))
    }

    /// Exact isothermal test: ‖Y_x‖² = ‖Y_y‖² and ⟨Y_x, Y_y⟩ = 0.
    pub fn is_isothermal(&self, pt: &(Rational, Rational)) -> Result<bool> {
        let t = self.tangents(pt)?;
        Ok(t.y_x.norm_sq() == t.y_y.norm_sq() && t.y_x.dot(&t.y_y).is_zero())
    }

    /// Tests ‖Y_x‖² + ‖Y_y‖² <= (K + 1/K)·‖Y_x × Y_y‖ at every grid point, in
    /// the squared form energy² <= (K + 1/K)²·g². Reports the first branch
    /// point encountered as an error.
    pub fn is_k_quasiconformal(
        &self,
        grid: &[(Rational, Rational)],
        k_bound: &Rational,
    ) -> Result<bool> {
        if k_bound < &Rational::one() {
            return Err(Error::InvalidInput(format!("K bound must be >= 1, got {k_bound}")));
        }
        let coeff = k_bound + Rational::one() / k_bound;
        let coeff_sq = &coeff * &coeff;
        for pt in grid {
            let t = self.tangents(pt)?;
            if t.g_sq.is_zero() {
                return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
            }
            if &t.energy * &t.energy > &coeff_sq * &t.g_sq {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Converts squared distortion 𝔇² (a rational >= 1) to the dilatation
/// d = (K - 1)/(K + 1) ∈ [0, 1), where K = 𝔇 + sqrt(𝔇² - 1).
///
/// The only floating step of the distortion pipeline. Computed via
/// K - 1 = (𝔇² - 1)/(𝔇 + 1) + sqrt(𝔇² - 1) to stay cancellation-free for
/// 𝔇 near 1; relative error is a few ulp.
pub fn dilatation_from_distortion(d_sq: &Rational) -> Result<f64> {
    let one = Rational::one();
    if d_sq < &one {
        return Err(Error::InvalidDistortion { value: d_sq.clone() });
    }
    if d_sq == &one {
        return Ok(0.0);
    }
    let excess = rational_to_f64(&(d_sq - &one));
    let dist = rational_to_f64(d_sq).sqrt();
    let k_minus_1 = excess / (dist + 1.0) + excess.sqrt();
    Ok(k_minus_1 / (k_minus_1 + 2.0))
}

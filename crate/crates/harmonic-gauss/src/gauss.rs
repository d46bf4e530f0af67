//! The Gauss map of a harmonic surface and its exact second-order data.
//!
//! Two independent computation routes are kept deliberately separate:
//!
//! 1. A quotient-rule route for the squared norms of the normal's partial
//!    derivatives, valid for *any* harmonic surface. With V = Y_x × Y_y and
//!    g = |V|²,
//!    |n_x|² = (|V_x|²g − ⟨V,V_x⟩²)/g², and
//!    n_x × n_y = (V_x×V_y·g² − V_x×V·⟨V,V_y⟩·g − V×V_y·⟨V,V_x⟩·g)/g³,
//!    all exact rationals.
//!
//! 2. For graph-normalized surfaces (a = x), the closed-form quantities
//!    A, B, C, δ, γ, M, N in the ten first/second partials of b and c.
//!
//! That the two routes agree, and that the Gauss map's distortion equals the
//! surface's, is *never assumed* here; the verification suites check the
//! equalities as identities of reduced rationals.

use num_traits::Zero;

use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::rational::{rat_int, rational_to_f64, Rational};
use crate::surface::{HarmonicSurface, Vec3};

/// Unit vector in R³, floating components normalized to 1 within 1e-12.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitVector3 {
    /// Normalizes an exact vector, rounding each component once; `g_sq` must
    /// be the exact squared norm of `v`.
    pub fn from_exact(v: &Vec3, g_sq: &Rational) -> Self {
        let norm = rational_to_f64(g_sq).sqrt();
        let [x, y, z] = v.to_f64_array();
        let u = Self { x: x / norm, y: y / norm, z: z / norm };
        debug_assert!((u.x * u.x + u.y * u.y + u.z * u.z - 1.0).abs() <= 1e-12);
        u
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// All first and second partial derivatives of the coordinates b, c of a
/// graph-normalized surface (x, b, c) at a point. Harmonicity makes
/// b_xx + b_yy = 0 and c_xx + c_yy = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussJet {
    pub b_x: Rational,
    pub b_y: Rational,
    pub c_x: Rational,
    pub c_y: Rational,
    pub b_xx: Rational,
    pub b_xy: Rational,
    pub b_yy: Rational,
    pub c_xx: Rational,
    pub c_xy: Rational,
    pub c_yy: Rational,
}

impl GaussJet {
    pub fn is_harmonic(&self) -> bool {
        (&self.b_xx + &self.b_yy).is_zero() && (&self.c_xx + &self.c_yy).is_zero()
    }
}

/// The second-order scalar quantities of a graph-normalized surface:
/// A = b_xy² − b_yy b_xx, B = b_xy c_xy + b_xx c_xx, C = c_xy² − c_yy c_xx,
/// δ = 1 + b_x² + c_x², γ = 1 + b_x² + b_y² + c_x² + c_y²,
/// M = c_y²A − 2b_y c_y B + b_y²C (computed from the unreduced expansion),
/// G² = b_y² + c_y² + (c_y b_x − b_y c_x)².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MNQuantities {
    pub a_q: Rational,
    pub b_q: Rational,
    pub c_q: Rational,
    pub delta: Rational,
    pub gamma: Rational,
    pub m: Rational,
    pub g_sq: Rational,
}

/// Squared norms of the normal's partial derivatives and of their cross
/// product, computed exactly along the quotient-rule route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalDerivatives {
    pub p_sq: Rational,
    pub q_sq: Rational,
    pub cross_sq: Rational,
}

/// Outcome of the exact planarity decision.
#[derive(Debug, Clone, PartialEq)]
pub enum Planarity {
    /// The normal direction is constant; `direction` is an exact vector
    /// spanning it and `normal` its floating normalization.
    Planar { direction: Vec3, normal: UnitVector3 },
    /// A point where the normal direction provably differs from the
    /// reference direction.
    NonPlanar { witness: (Rational, Rational) },
}

/// Orientation-preserving unit normal V/|V| at a regular point.
pub fn normal(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<UnitVector3> {
    let t = s.tangents(pt)?;
    if t.g_sq.is_zero() {
        return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
    }
    Ok(UnitVector3::from_exact(&t.v, &t.g_sq))
}

/// Stereographic projection from the north pole:
/// (x1, x2, x3) ↦ (x1/(1−x3), x2/(1−x3)).
pub fn stereographic(n: &UnitVector3) -> Result<(f64, f64)> {
    let denom = 1.0 - n.z;
    if denom.abs() <= 1e-12 {
        return Err(Error::NorthPole);
    }
    Ok((n.x / denom, n.y / denom))
}

/// Complex Gauss map: stereographic projection of the unit normal.
pub fn complex_gauss(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<(f64, f64)> {
    stereographic(&normal(s, pt)?)
}

/// Exact first/second partials of b and c at a point of a graph-normalized
/// surface.
pub fn jet(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<GaussJet> {
    if !s.is_graph_normalized() {
        return Err(Error::NotNormalized);
    }
    if !s.domain().contains(&pt.0, &pt.1) {
        return Err(Error::OutOfDomain { x: pt.0.clone(), y: pt.1.clone() });
    }
    let (x, y) = pt;
    let bx = s.b().partial_x();
    let by = s.b().partial_y();
    let cx = s.c().partial_x();
    let cy = s.c().partial_y();
    Ok(GaussJet {
        b_x: bx.eval(x, y),
        b_y: by.eval(x, y),
        c_x: cx.eval(x, y),
        c_y: cy.eval(x, y),
        b_xx: bx.partial_x().eval(x, y),
        b_xy: bx.partial_y().eval(x, y),
        b_yy: by.partial_y().eval(x, y),
        c_xx: cx.partial_x().eval(x, y),
        c_xy: cx.partial_y().eval(x, y),
        c_yy: cy.partial_y().eval(x, y),
    })
}

/// The scalar quantities A, B, C, δ, γ, M, G² of a jet. M is evaluated from
/// its unreduced expansion
/// c_y²(b_xy² − b_yy b_xx) + b_y c_y(−2b_xy c_xy + c_yy b_xx + b_yy c_xx) + b_y²(c_xy² − c_yy c_xx);
/// that this collapses to c_y²A − 2b_y c_y B + b_y²C under harmonicity is one
/// of the tested identities, not an assumption.
pub fn mn_quantities(j: &GaussJet) -> MNQuantities {
    let GaussJet { b_x, b_y, c_x, c_y, b_xx, b_xy, b_yy, c_xx, c_xy, c_yy } = j;
    let one = rat_int(1);
    let a_q = b_xy * b_xy - b_yy * b_xx;
    let b_q = b_xy * c_xy + b_xx * c_xx;
    let c_q = c_xy * c_xy - c_yy * c_xx;
    let delta = &one + b_x * b_x + c_x * c_x;
    let gamma = &one + b_x * b_x + b_y * b_y + c_x * c_x + c_y * c_y;
    let m = c_y * c_y * (b_xy * b_xy - b_yy * b_xx)
        + b_y * c_y * (rat_int(-2) * b_xy * c_xy + c_yy * b_xx + b_yy * c_xx)
        + b_y * b_y * (c_xy * c_xy - c_yy * c_xx);
    let minor = c_y * b_x - b_y * c_x;
    let g_sq = b_y * b_y + c_y * c_y + &minor * &minor;
    MNQuantities { a_q, b_q, c_q, delta, gamma, m, g_sq }
}

/// The numerator N of |n_x|² + |n_y|² = N/G⁴ for a graph-normalized surface,
/// evaluated term for term from its fully expanded form (not from the
/// reduction N = γM, which is a tested identity).
pub fn n_explicit(j: &GaussJet) -> Rational {
    let GaussJet { b_x, b_y, c_x, c_y, b_xx, b_xy, b_yy, c_xx, c_xy, c_yy } = j;
    let one = rat_int(1);
    let two = rat_int(2);
    let delta = &one + b_x * b_x + c_x * c_x;
    let delta_by = &one + b_y * b_y + b_x * b_x + c_x * c_x;

    let cy2 = c_y * c_y;
    let cy3 = &cy2 * c_y;
    let cy4 = &cy2 * &cy2;
    let by2 = b_y * b_y;

    let term1 = &cy4 * (b_xy * b_xy + b_xx * b_xx);

    let term2 = &by2
        * (c_yy * c_yy * &delta - &two * b_y * c_yy * b_x * c_xy
            + &delta_by * c_xy * c_xy
            - &two * b_y * b_x * c_xy * c_xx
            + &by2 * c_xx * c_xx);

    let term3 = -(&two * &cy3)
        * (b_yy * c_x * b_xy + c_x * b_xy * b_xx + b_y * (b_xy * c_xy + b_xx * c_xx));

    let term4 = -(&two * b_y * c_y)
        * (&delta * b_xy * c_xy
            + b_yy * (c_yy * &delta - b_y * b_x * c_xy)
            + &by2 * (b_xy * c_xy + b_xx * c_xx)
            - b_y
                * (c_yy * (b_x * b_xy - c_x * c_xy) - c_x * c_xy * c_xx
                    + b_x * (c_xy * b_xx + b_xy * c_xx)));

    let term5 = &cy2
        * (b_yy * b_yy * &delta
            + &delta * b_xy * b_xy
            + &two * b_y * b_yy * (-(b_x * b_xy) + c_x * c_xy)
            + &by2 * (b_xy * b_xy + c_xy * c_xy + b_xx * b_xx + c_xx * c_xx)
            + &two
                * b_y
                * (c_yy * c_x * b_xy - b_x * b_xy * b_xx + c_x * (c_xy * b_xx + b_xy * c_xx)));

    term1 + term2 + term3 + term4 + term5
}

/// Whether the Gauss map is regular (M ≠ 0) at a regular point of a
/// graph-normalized surface.
pub fn gauss_regular(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<bool> {
    if !s.is_graph_normalized() {
        return Err(Error::NotNormalized);
    }
    let t = s.tangents(pt)?;
    if t.g_sq.is_zero() {
        return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
    }
    Ok(!mn_quantities(&jet(s, pt)?).m.is_zero())
}

/// Exact squared norms |n_x|², |n_y|², |n_x × n_y|² along the quotient-rule
/// route. Defined for any harmonic surface at a regular point.
pub fn normal_derivatives(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<NormalDerivatives> {
    let t = s.tangents(pt)?;
    if t.g_sq.is_zero() {
        return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
    }
    let (y_xx, y_xy, y_yy) = s.hessian_vectors(pt);
    let v = &t.v;
    let v_x = y_xx.cross(&t.y_y).add(&t.y_x.cross(&y_xy));
    let v_y = y_xy.cross(&t.y_y).add(&t.y_x.cross(&y_yy));
    let g = &t.g_sq;
    let g2 = g * g;
    let vvx = v.dot(&v_x);
    let vvy = v.dot(&v_y);
    let p_sq = (v_x.norm_sq() * g - &vvx * &vvx) / &g2;
    let q_sq = (v_y.norm_sq() * g - &vvy * &vvy) / &g2;
    let w = v_x
        .cross(&v_y)
        .scale(&g2)
        .sub(&v_x.cross(v).scale(&(&vvy * g)))
        .sub(&v.cross(&v_y).scale(&(&vvx * g)));
    let g6 = &g2 * &g2 * &g2;
    let cross_sq = w.norm_sq() / g6;
    Ok(NormalDerivatives { p_sq, q_sq, cross_sq })
}

/// Squared distortion of the Gauss map,
/// (|n_x|² + |n_y|²)² / (4|n_x × n_y|²), exact.
///
/// Requires the point to be regular and the Gauss map non-degenerate there.
pub fn gauss_distortion_sq(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<Rational> {
    let nd = normal_derivatives(s, pt)?;
    if nd.cross_sq.is_zero() {
        return Err(Error::GaussDegenerate { x: pt.0.clone(), y: pt.1.clone() });
    }
    let sum = &nd.p_sq + &nd.q_sq;
    Ok(&sum * &sum / (rat_int(4) * &nd.cross_sq))
}

/// Sign proxy for the Gauss curvature at a regular point:
/// ⟨Y_xx, V⟩⟨Y_yy, V⟩ − ⟨Y_xy, V⟩², which has the same sign as the curvature.
/// Harmonicity forces Y_yy = −Y_xx, so the value is −⟨Y_xx,V⟩² − ⟨Y_xy,V⟩² ≤ 0.
pub fn curvature_sign(s: &HarmonicSurface, pt: &(Rational, Rational)) -> Result<Rational> {
    let t = s.tangents(pt)?;
    if t.g_sq.is_zero() {
        return Err(Error::BranchPoint { x: pt.0.clone(), y: pt.1.clone() });
    }
    let (y_xx, y_xy, y_yy) = s.hessian_vectors(pt);
    let l = y_xx.dot(&t.v);
    let n = y_yy.dot(&t.v);
    let m = y_xy.dot(&t.v);
    Ok(&l * &n - &m * &m)
}

/// The quantity M = c_y²A − 2b_y c_y B + b_y²C expanded symbolically as a
/// polynomial in (x, y), for a graph-normalized surface.
pub fn m_polynomial(s: &HarmonicSurface) -> Result<BivariatePolynomial> {
    if !s.is_graph_normalized() {
        return Err(Error::NotNormalized);
    }
    let b = s.b();
    let c = s.c();
    let b_y = b.partial_y().to_bivariate();
    let c_y = c.partial_y().to_bivariate();
    let b_xx = b.partial_x().partial_x().to_bivariate();
    let b_xy = b.partial_x().partial_y().to_bivariate();
    let b_yy = b.partial_y().partial_y().to_bivariate();
    let c_xx = c.partial_x().partial_x().to_bivariate();
    let c_xy = c.partial_x().partial_y().to_bivariate();
    let c_yy = c.partial_y().partial_y().to_bivariate();

    let term1 = c_y.mul(&c_y).mul(&b_xy.mul(&b_xy).sub(&b_yy.mul(&b_xx)));
    let mixed = b_xy
        .mul(&c_xy)
        .scale(&rat_int(-2))
        .add(&c_yy.mul(&b_xx))
        .add(&b_yy.mul(&c_xx));
    let term2 = b_y.mul(&c_y).mul(&mixed);
    let term3 = b_y.mul(&b_y).mul(&c_xy.mul(&c_xy).sub(&c_yy.mul(&c_xx)));
    Ok(term1.add(&term2).add(&term3))
}

/// Decides planarity exactly: the surface is planar iff the polynomial
/// identity V(x, y) × V(x₀, y₀) ≡ 0 holds coefficient-wise, where V is the
/// tangent cross product expanded in (x, y) and (x₀, y₀) is a reference
/// point with V ≠ 0 found on a grid dense enough for the degrees involved.
pub fn planarity_classify(s: &HarmonicSurface) -> Result<Planarity> {
    let ax = s.a().partial_x().to_bivariate();
    let ay = s.a().partial_y().to_bivariate();
    let bx = s.b().partial_x().to_bivariate();
    let by = s.b().partial_y().to_bivariate();
    let cx = s.c().partial_x().to_bivariate();
    let cy = s.c().partial_y().to_bivariate();
    let v1 = bx.mul(&cy).sub(&cx.mul(&by));
    let v2 = cx.mul(&ay).sub(&ax.mul(&cy));
    let v3 = ax.mul(&by).sub(&bx.mul(&ay));
    if v1.is_zero() && v2.is_zero() && v3.is_zero() {
        return Err(Error::DegenerateSurface);
    }
    let (mut dx, mut dy) = (0, 0);
    for p in [&v1, &v2, &v3] {
        let (px, py) = p.max_degrees();
        dx = dx.max(px);
        dy = dy.max(py);
    }
    // a nonzero polynomial of degree <= d per variable cannot vanish on a
    // grid with d+1 distinct values per axis
    let xs = s.domain().interior_x_values(dx + 1);
    let ys = s.domain().interior_y_values(dy + 1);
    let mut v0 = None;
    'search: for yv in &ys {
        for xv in &xs {
            let w = Vec3::new(v1.eval(xv, yv), v2.eval(xv, yv), v3.eval(xv, yv));
            if !w.is_zero() {
                v0 = Some(w);
                break 'search;
            }
        }
    }
    let v0 = v0.expect("nonzero cross-product polynomial vanished on the search grid");

    let c1 = v2.scale(&v0.z).sub(&v3.scale(&v0.y));
    let c2 = v3.scale(&v0.x).sub(&v1.scale(&v0.z));
    let c3 = v1.scale(&v0.y).sub(&v2.scale(&v0.x));
    if c1.is_zero() && c2.is_zero() && c3.is_zero() {
        let g_sq = v0.norm_sq();
        let normal = UnitVector3::from_exact(&v0, &g_sq);
        return Ok(Planarity::Planar { direction: v0, normal });
    }
    for yv in &ys {
        for xv in &xs {
            if !c1.eval(xv, yv).is_zero()
                || !c2.eval(xv, yv).is_zero()
                || !c3.eval(xv, yv).is_zero()
            {
                return Ok(Planarity::NonPlanar { witness: (xv.clone(), yv.clone()) });
            }
        }
    }
    unreachable!("nonzero cross polynomial must attain a nonzero value on the search grid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivariate::BivariatePolynomial;
    use crate::harmonic::{to_analytic, HarmonicFunction};
    use crate::rational::rat;
    use crate::surface::Domain;

    fn plane_xy() -> HarmonicSurface {
        HarmonicSurface::new(
            HarmonicFunction::coordinate_x(),
            HarmonicFunction::coordinate_x().conjugate(),
            HarmonicFunction::zero(),
            Domain::unit_square(),
        )
    }

    fn saddle_xy() -> HarmonicSurface {
        let c = to_analytic(&BivariatePolynomial::from_terms([((1, 1), rat_int(1))])).unwrap();
        HarmonicSurface::new(
            HarmonicFunction::coordinate_x(),
            HarmonicFunction::coordinate_x().conjugate(),
            c,
            Domain::unit_square(),
        )
    }

    /// (x, -x^3/3 + x(1/2+y)^2, 1 - x^2 + y + y^2): harmonic, with
    /// M = 16(y + 1/2)^4 vanishing on a whole line.
    fn branch_line_surface() -> HarmonicSurface {
        let b = to_analytic(&BivariatePolynomial::from_terms([
            ((3, 0), rat(-1, 3)),
            ((1, 0), rat(1, 4)),
            ((1, 1), rat_int(1)),
            ((1, 2), rat_int(1)),
        ]))
        .unwrap();
        let c = to_analytic(&BivariatePolynomial::from_terms([
            ((0, 0), rat_int(1)),
            ((2, 0), rat_int(-1)),
            ((0, 1), rat_int(1)),
            ((0, 2), rat_int(1)),
        ]))
        .unwrap();
        HarmonicSurface::new(HarmonicFunction::coordinate_x(), b, c, Domain::unit_square())
    }

    fn p(x: i64, y: i64) -> (Rational, Rational) {
        (rat_int(x), rat_int(y))
    }

    #[test]
    fn normal_values() {
        let n = normal(&plane_xy(), &p(0, 0)).unwrap();
        assert_eq!(n.as_array(), [0.0, 0.0, 1.0]);
        let n = normal(&saddle_xy(), &p(1, 0)).unwrap();
        let r = 1.0 / 2f64.sqrt();
        assert!((n.x - 0.0).abs() < 1e-15);
        assert!((n.y + r).abs() < 1e-15);
        assert!((n.z - r).abs() < 1e-15);
    }

    #[test]
    fn normal_of_planar_family_is_constant() {
        // (x, c + x, c) with c = Re z^2: normal (1, -1, 1)/sqrt(3) where c_y > 0
        let c = to_analytic(&BivariatePolynomial::from_terms([
            ((2, 0), rat_int(1)),
            ((0, 2), rat_int(-1)),
        ]))
        .unwrap();
        let b = c.add(&HarmonicFunction::coordinate_x());
        let s = HarmonicSurface::new(HarmonicFunction::coordinate_x(), b, c, Domain::unit_square());
        let n = normal(&s, &(rat(1, 3), rat(-1, 2))).unwrap();
        let r = 1.0 / 3f64.sqrt();
        for (got, want) in n.as_array().iter().zip([r, -r, r]) {
            assert!((got - want).abs() < 1e-13);
        }
    }

    #[test]
    fn stereographic_values() {
        let south = UnitVector3 { x: 0.0, y: 0.0, z: -1.0 };
        assert_eq!(stereographic(&south).unwrap(), (0.0, 0.0));
        let equator = UnitVector3 { x: 1.0, y: 0.0, z: 0.0 };
        assert_eq!(stereographic(&equator).unwrap(), (1.0, 0.0));
        let north = UnitVector3 { x: 0.0, y: 0.0, z: 1.0 };
        assert!(matches!(stereographic(&north), Err(Error::NorthPole)));
    }

    #[test]
    fn complex_gauss_values() {
        assert!(matches!(complex_gauss(&plane_xy(), &p(0, 0)), Err(Error::NorthPole)));
        let (gx, gy) = complex_gauss(&saddle_xy(), &p(1, 0)).unwrap();
        assert!(gx.abs() < 1e-15);
        let want = -1.0 / (2f64.sqrt() - 1.0);
        assert!((gy - want).abs() < 1e-12, "{gy} vs {want}");
    }

    #[test]
    fn jet_values() {
        let j = jet(&saddle_xy(), &p(1, 0)).unwrap();
        assert_eq!(j.b_y, rat_int(1));
        assert_eq!(j.c_x, rat_int(0));
        assert_eq!(j.c_y, rat_int(1));
        assert_eq!(j.c_xy, rat_int(1));
        for z in [&j.b_x, &j.b_xx, &j.b_xy, &j.b_yy, &j.c_xx, &j.c_yy] {
            assert!(z.is_zero());
        }
        assert!(j.is_harmonic());

        // on the critical line of the branch-line surface
        let j = jet(&branch_line_surface(), &(rat(1, 3), rat(-1, 2))).unwrap();
        assert_eq!(j.b_xy, rat_int(0));
        assert_eq!(j.b_xx, rat(-2, 3));
        assert_eq!(j.c_xx, rat_int(-2));
        assert_eq!(j.c_xy, rat_int(0));
        assert_eq!(j.c_y, rat_int(0));

        let j = jet(&plane_xy(), &p(0, 0)).unwrap();
        for z in [&j.b_xx, &j.b_xy, &j.b_yy, &j.c_xx, &j.c_xy, &j.c_yy] {
            assert!(z.is_zero());
        }
    }

    #[test]
    fn jet_requires_normalization() {
        let tilted = HarmonicSurface::new(
            HarmonicFunction::coordinate_x().conjugate(),
            HarmonicFunction::coordinate_x(),
            HarmonicFunction::zero(),
            Domain::unit_square(),
        );
        assert!(matches!(jet(&tilted, &p(0, 0)), Err(Error::NotNormalized)));
    }

    #[test]
    fn mn_quantities_values() {
        let q = mn_quantities(&jet(&saddle_xy(), &p(1, 0)).unwrap());
        assert_eq!(q.a_q, rat_int(0));
        assert_eq!(q.b_q, rat_int(0));
        assert_eq!(q.c_q, rat_int(1));
        assert_eq!(q.delta, rat_int(1));
        assert_eq!(q.gamma, rat_int(3));
        assert_eq!(q.m, rat_int(1));
        assert_eq!(q.g_sq, rat_int(2));

        // on the critical line M vanishes
        let q = mn_quantities(&jet(&branch_line_surface(), &(rat(1, 3), rat(-1, 2))).unwrap());
        assert!(q.m.is_zero());

        // zero second derivatives: a plane
        let q = mn_quantities(&jet(&plane_xy(), &p(0, 0)).unwrap());
        assert!(q.a_q.is_zero() && q.b_q.is_zero() && q.c_q.is_zero() && q.m.is_zero());
    }

    #[test]
    fn n_explicit_values() {
        let j = jet(&saddle_xy(), &p(1, 0)).unwrap();
        assert_eq!(n_explicit(&j), rat_int(3));
        let j = jet(&plane_xy(), &p(0, 0)).unwrap();
        assert_eq!(n_explicit(&j), rat_int(0));
    }

    #[test]
    fn gauss_regularity() {
        assert!(gauss_regular(&saddle_xy(), &p(1, 0)).unwrap());
        let s = branch_line_surface();
        // surface branch points on the critical line: the normal is undefined
        assert!(matches!(
            gauss_regular(&s, &(rat(1, 3), rat(-1, 2))),
            Err(Error::BranchPoint { .. })
        ));
        // off the line: M = 16(y+1/2)^4 = 1 at y = 0
        assert!(gauss_regular(&s, &(rat(1, 3), rat_int(0))).unwrap());
        assert_eq!(
            mn_quantities(&jet(&s, &(rat(1, 3), rat_int(0))).unwrap()).m,
            rat_int(1)
        );
    }

    #[test]
    fn gauss_distortion_matches_surface_distortion() {
        let s = saddle_xy();
        let pt = p(1, 0);
        assert_eq!(gauss_distortion_sq(&s, &pt).unwrap(), rat(9, 8));
        assert_eq!(gauss_distortion_sq(&s, &pt).unwrap(), s.distortion_sq(&pt).unwrap());
    }

    #[test]
    fn branch_line_surface_is_branched_on_line() {
        // V vanishes identically on y = -1/2, so both the surface and its
        // Gauss map degenerate there
        let s = branch_line_surface();
        let on_line = (rat(1, 3), rat(-1, 2));
        assert!(s.is_branch_point(&on_line).unwrap());
        assert!(matches!(
            gauss_distortion_sq(&s, &on_line),
            Err(Error::BranchPoint { .. })
        ));
        // off the line everything is fine and the two distortions agree
        let off = (rat(1, 3), rat(1, 4));
        assert_eq!(
            gauss_distortion_sq(&s, &off).unwrap(),
            s.distortion_sq(&off).unwrap()
        );
    }

    #[test]
    fn curvature_sign_values() {
        assert_eq!(curvature_sign(&plane_xy(), &p(0, 0)).unwrap(), rat_int(0));
        assert_eq!(curvature_sign(&saddle_xy(), &p(1, 0)).unwrap(), rat_int(-1));
    }

    #[test]
    fn planarity_examples() {
        match planarity_classify(&plane_xy()).unwrap() {
            Planarity::Planar { direction, normal } => {
                assert_eq!(direction, Vec3::new(rat_int(0), rat_int(0), rat_int(1)));
                assert_eq!(normal.as_array(), [0.0, 0.0, 1.0]);
            }
            other => panic!("expected planar, got {other:?}"),
        }

        // (x, c + 2x, c), c = Re z^2: direction proportional to (2, -1, 1)
        let c = to_analytic(&BivariatePolynomial::from_terms([
            ((2, 0), rat_int(1)),
            ((0, 2), rat_int(-1)),
        ]))
        .unwrap();
        let b = c.add(&HarmonicFunction::coordinate_x().scale(&rat_int(2)));
        let s = HarmonicSurface::new(HarmonicFunction::coordinate_x(), b, c, Domain::unit_square());
        match planarity_classify(&s).unwrap() {
            Planarity::Planar { direction, .. } => {
                let target = Vec3::new(rat_int(2), rat_int(-1), rat_int(1));
                assert!(direction.cross(&target).is_zero());
                assert!(!direction.is_zero());
            }
            other => panic!("expected planar, got {other:?}"),
        }

        match planarity_classify(&saddle_xy()).unwrap() {
            Planarity::NonPlanar { witness } => {
                assert!(!mn_quantities(&jet(&saddle_xy(), &witness).unwrap()).m.is_zero());
            }
            other => panic!("expected non-planar, got {other:?}"),
        }

        // (x, x, 0) has V identically zero
        let degenerate = HarmonicSurface::new(
            HarmonicFunction::coordinate_x(),
            HarmonicFunction::coordinate_x(),
            HarmonicFunction::zero(),
            Domain::unit_square(),
        );
        assert!(matches!(planarity_classify(&degenerate), Err(Error::DegenerateSurface)));
    }

    #[test]
    fn m_polynomial_of_branch_line_surface() {
        // M = 16(y + 1/2)^4 = 16y^4 + 32y^3 + 24y^2 + 8y + 1
        let m = m_polynomial(&branch_line_surface()).unwrap();
        let expected = BivariatePolynomial::from_terms([
            ((0, 4), rat_int(16)),
            ((0, 3), rat_int(32)),
            ((0, 2), rat_int(24)),
            ((0, 1), rat_int(8)),
            ((0, 0), rat_int(1)),
        ]);
        assert_eq!(m, expected);
    }
}

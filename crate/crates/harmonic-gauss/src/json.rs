//! JSON encodings for polynomials, surfaces, and generator data.
//!
//! Rationals are strings `"num/den"`. A polynomial is either
//! - a bivariate term list `[{"i": 2, "j": 0, "c": "1/1"}, ...]`, or
//! - an analytic coefficient list `[{"re": "0/1", "im": "1/2"}, ...]` in
//!   ascending degree.
//!
//! Both are accepted anywhere a polynomial is expected; bivariate input is
//! gated through the exact harmonicity check. Surfaces are
//! `{"a": <poly>, "b": <poly>, "c": <poly>, "domain": {"x": ["lo","hi"], "y": ["lo","hi"]}}`
//! (the domain defaults to [-1,1]²), and generator data is either
//! `{"p": <analytic>, "q": <analytic>}` or `{"phi1": ..., "phi2": ..., "phi3": ...}`.

use serde_json::{json, Map, Value};

use crate::analytic::AnalyticPolynomial;
use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::harmonic::{to_analytic, HarmonicFunction};
use crate::rational::{format_rational, parse_rational, ComplexRational, Rational};
use crate::surface::{Domain, HarmonicSurface};
use crate::weierstrass::{PhiTriple, WeierstrassData};

/// A polynomial as read from a file, before harmonicity has been checked.
#[derive(Debug, Clone)]
pub enum PolyInput {
    Analytic(AnalyticPolynomial),
    Bivariate(BivariatePolynomial),
}

impl PolyInput {
    /// Converts to a harmonic function; bivariate input must pass the exact
    /// harmonicity gate.
    pub fn to_harmonic(&self) -> Result<HarmonicFunction> {
        match self {
            PolyInput::Analytic(f) => Ok(HarmonicFunction::from_analytic(f.clone())),
            PolyInput::Bivariate(p) => to_analytic(p),
        }
    }

    /// Laplacian residual of the input as written (zero for analytic input).
    pub fn residual(&self) -> BivariatePolynomial {
        match self {
            PolyInput::Analytic(_) => BivariatePolynomial::zero(),
            PolyInput::Bivariate(p) => crate::harmonic::harmonic_residual(p),
        }
    }
}

/// A parsed surface file.
#[derive(Debug, Clone)]
pub struct SurfaceInput {
    pub a: PolyInput,
    pub b: PolyInput,
    pub c: PolyInput,
    pub domain: Option<Domain>,
}

impl SurfaceInput {
    pub fn to_surface(&self) -> Result<HarmonicSurface> {
        Ok(HarmonicSurface::new(
            self.a.to_harmonic()?,
            self.b.to_harmonic()?,
            self.c.to_harmonic()?,
            self.domain.clone().unwrap_or_else(Domain::unit_square),
        ))
    }
}

fn rational_from_value(v: &Value, ctx: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                Err(Error::Parse(format!("{ctx}: non-integer numbers must be rational strings")))
            }
        }
        _ => Err(Error::Parse(format!("{ctx}: expected a rational string"))),
    }
}

fn object<'v>(v: &'v Value, ctx: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::Parse(format!("{ctx}: expected an object")))
}

fn field<'v>(m: &'v Map<String, Value>, key: &str, ctx: &str) -> Result<&'v Value> {
    m.get(key).ok_or_else(|| Error::Parse(format!("{ctx}: missing field `{key}`")))
}

pub fn poly_from_value(v: &Value, ctx: &str) -> Result<PolyInput> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{ctx}: expected a polynomial array")))?;
    let Some(first) = arr.first() else {
        return Ok(PolyInput::Analytic(AnalyticPolynomial::zero()));
    };
    let first_obj = object(first, ctx)?;
    if first_obj.contains_key("re") || first_obj.contains_key("im") {
        let mut coeffs = Vec::with_capacity(arr.len());
        for (k, item) in arr.iter().enumerate() {
            let o = object(item, ctx)?;
            let re = rational_from_value(field(o, "re", ctx)?, &format!("{ctx}[{k}].re"))?;
            let im = rational_from_value(field(o, "im", ctx)?, &format!("{ctx}[{k}].im"))?;
            coeffs.push(ComplexRational::new(re, im));
        }
        Ok(PolyInput::Analytic(AnalyticPolynomial::new(coeffs)))
    } else if first_obj.contains_key("i") || first_obj.contains_key("c") {
        let mut p = BivariatePolynomial::zero();
        for (k, item) in arr.iter().enumerate() {
            let o = object(item, ctx)?;
            let i = field(o, "i", ctx)?
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("{ctx}[{k}].i: expected a non-negative integer")))?;
            let j = field(o, "j", ctx)?
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("{ctx}[{k}].j: expected a non-negative integer")))?;
            let c = rational_from_value(field(o, "c", ctx)?, &format!("{ctx}[{k}].c"))?;
            if i > u32::MAX as u64 || j > u32::MAX as u64 {
                return Err(Error::Parse(format!("{ctx}[{k}]: exponent out of range")));
            }
            p.add_term(i as u32, j as u32, c);
        }
        Ok(PolyInput::Bivariate(p))
    } else {
        Err(Error::Parse(format!(
            "{ctx}: polynomial terms need either re/im or i/j/c fields"
        )))
    }
}

pub fn domain_from_value(v: &Value) -> Result<Domain> {
    let o = object(v, "domain")?;
    let axis = |key: &str| -> Result<(Rational, Rational)> {
        let arr = field(o, key, "domain")?
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("domain.{key}: expected [lo, hi]")))?;
        Ok((
            rational_from_value(&arr[0], &format!("domain.{key}[0]"))?,
            rational_from_value(&arr[1], &format!("domain.{key}[1]"))?,
        ))
    };
    let (x_lo, x_hi) = axis("x")?;
    let (y_lo, y_hi) = axis("y")?;
    Domain::new(x_lo, x_hi, y_lo, y_hi)
}

pub fn parse_surface(text: &str) -> Result<SurfaceInput> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let o = object(&v, "surface")?;
    let a = poly_from_value(field(o, "a", "surface")?, "surface.a")?;
    let b = poly_from_value(field(o, "b", "surface")?, "surface.b")?;
    let c = poly_from_value(field(o, "c", "surface")?, "surface.c")?;
    let domain = match o.get("domain") {
        Some(d) => Some(domain_from_value(d)?),
        None => None,
    };
    Ok(SurfaceInput { a, b, c, domain })
}

pub fn analytic_to_value(f: &AnalyticPolynomial) -> Value {
    Value::Array(
        f.coeffs()
            .iter()
            .map(|c| {
                json!({
                    "re": format_rational(&c.re),
                    "im": format_rational(&c.im),
                })
            })
            .collect(),
    )
}

pub fn bivariate_to_value(p: &BivariatePolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|((i, j), c)| json!({"i": i, "j": j, "c": format_rational(c)}))
            .collect(),
    )
}

pub fn domain_to_value(d: &Domain) -> Value {
    let (x_lo, x_hi, y_lo, y_hi) = d.bounds();
    json!({
        "x": [format_rational(x_lo), format_rational(x_hi)],
        "y": [format_rational(y_lo), format_rational(y_hi)],
    })
}

/// Canonical surface encoding: analytic coefficient lists plus the domain.
pub fn surface_to_value(s: &HarmonicSurface) -> Value {
    json!({
        "a": analytic_to_value(s.a().analytic()),
        "b": analytic_to_value(s.b().analytic()),
        "c": analytic_to_value(s.c().analytic()),
        "domain": domain_to_value(s.domain()),
    })
}

pub fn surface_to_json_string(s: &HarmonicSurface) -> String {
    let mut out = serde_json::to_string_pretty(&surface_to_value(s)).expect("serializes");
    out.push('\n');
    out
}

/// A parsed generator file: either a data pair (p, q) or a raw φ triple.
#[derive(Debug, Clone)]
pub enum WeierstrassInput {
    Data(WeierstrassData),
    Phi(PhiTriple),
}

pub fn parse_weierstrass(text: &str) -> Result<WeierstrassInput> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let o = object(&v, "weierstrass")?;
    let analytic = |key: &str| -> Result<AnalyticPolynomial> {
        match poly_from_value(field(o, key, "weierstrass")?, key)? {
            PolyInput::Analytic(f) => Ok(f),
            PolyInput::Bivariate(_) => Err(Error::Parse(format!(
                "{key}: expected an analytic coefficient list (re/im terms)"
            ))),
        }
    };
    if o.contains_key("p") && o.contains_key("q") {
        Ok(WeierstrassInput::Data(WeierstrassData::new(analytic("p")?, analytic("q")?)?))
    } else if o.contains_key("phi1") {
        Ok(WeierstrassInput::Phi(PhiTriple::new(
            analytic("phi1")?,
            analytic("phi2")?,
            analytic("phi3")?,
        )))
    } else {
        Err(Error::Parse("expected fields p and q, or phi1/phi2/phi3".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn parse_bivariate_surface() {
        let text = r#"{
            "a": [{"i": 1, "j": 0, "c": "1"}],
            "b": [{"i": 0, "j": 1, "c": "1/1"}],
            "c": [{"i": 1, "j": 1, "c": "1"}],
            "domain": {"x": ["0", "1"], "y": ["0", "1"]}
        }"#;
        let input = parse_surface(text).unwrap();
        let s = input.to_surface().unwrap();
        assert_eq!(s.distortion_sq(&(rat_int(1), rat_int(0))).unwrap(), rat(9, 8));
        let (x_lo, _, _, y_hi) = s.domain().bounds();
        assert_eq!(*x_lo, rat_int(0));
        assert_eq!(*y_hi, rat_int(1));
    }

    #[test]
    fn parse_rejects_non_harmonic() {
        let text = r#"{
            "a": [{"i": 1, "j": 0, "c": "1"}],
            "b": [{"i": 0, "j": 1, "c": "1"}],
            "c": [{"i": 2, "j": 0, "c": "1"}, {"i": 0, "j": 2, "c": "1"}]
        }"#;
        let input = parse_surface(text).unwrap();
        match input.to_surface() {
            Err(Error::NotHarmonic { residual }) => {
                assert_eq!(residual, BivariatePolynomial::constant(rat_int(4)));
            }
            other => panic!("expected NotHarmonic, got {other:?}"),
        }
    }

    #[test]
    fn surface_round_trips_through_json() {
        let s = crate::samples::saddle();
        let text = surface_to_json_string(&s);
        let parsed = parse_surface(&text).unwrap().to_surface().unwrap();
        assert_eq!(parsed, s);
    }

    #[test]
    fn parse_weierstrass_pair_and_triple() {
        let pair = r#"{
            "p": [{"re": "1", "im": "0"}],
            "q": [{"re": "0", "im": "0"}, {"re": "1", "im": "0"}]
        }"#;
        match parse_weierstrass(pair).unwrap() {
            WeierstrassInput::Data(d) => {
                assert_eq!(d, WeierstrassData::enneper());
            }
            other => panic!("expected data pair, got {other:?}"),
        }
        let triple = r#"{
            "phi1": [{"re": "1", "im": "0"}],
            "phi2": [{"re": "0", "im": "1"}],
            "phi3": []
        }"#;
        match parse_weierstrass(triple).unwrap() {
            WeierstrassInput::Phi(t) => assert!(crate::weierstrass::null_check(&t)),
            other => panic!("expected phi triple, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_are_parse_variants() {
        assert!(matches!(parse_surface("not json"), Err(Error::Parse(_))));
        assert!(matches!(parse_surface(r#"{"a": []}"#), Err(Error::Parse(_))));
        assert!(matches!(
            parse_surface(r#"{"a": [{"bogus": 1}], "b": [], "c": []}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_weierstrass(r#"{"p": [{"re": "1", "im": "0"}]}"#),
            Err(Error::Parse(_))
        ));
    }
}

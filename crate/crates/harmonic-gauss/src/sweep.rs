//! Field sweeps: exact per-node surface and Gauss-map quantities over a grid.
//!
//! Branch and Gauss-degenerate nodes are flagged in place (empty cells /
//! nulls), never dropped, so degenerate lines remain visible in the output.
//! Rows are emitted in row-major order with x varying fastest; rendering is
//! exact `"num/den"` by default, 17-significant-digit decimals with the
//! float option.

use rayon::prelude::*;
use serde_json::{json, Value};

use num_traits::Zero;

use crate::error::Result;
use crate::gauss::{jet, mn_quantities, normal_derivatives};
use crate::rational::{format_f64_17, format_rational, rat_int, rational_to_f64, Rational};
use crate::surface::{Domain, HarmonicSurface};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub nx: u32,
    pub ny: u32,
    /// Overrides the surface domain when set.
    pub domain: Option<Domain>,
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub x: Rational,
    pub y: Rational,
    pub regular: bool,
    /// For graph-normalized surfaces this is the exact test M ≠ 0 (defined at
    /// every node); otherwise it needs the normal and is absent at branch
    /// nodes.
    pub gauss_regular: Option<bool>,
    pub dist_sq_surface: Option<Rational>,
    pub dist_sq_gauss: Option<Rational>,
    /// The quantity M, present only for graph-normalized surfaces.
    pub m_value: Option<Rational>,
    pub curvature_sign: Option<Rational>,
}

pub const SWEEP_COLUMNS: [&str; 8] = [
    "x",
    "y",
    "regular",
    "gauss_regular",
    "dist_sq_surface",
    "dist_sq_gauss",
    "m_value",
    "curvature_sign",
];

pub fn field_sweep(s: &HarmonicSurface, cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    let scoped;
    let surface = match &cfg.domain {
        Some(d) => {
            scoped = s.with_domain(d.clone());
            &scoped
        }
        None => s,
    };
    let pts = surface.domain().grid(cfg.nx, cfg.ny)?;
    let normalized = surface.is_graph_normalized();
    let rows: Result<Vec<SweepRow>> = pts
        .par_iter()
        .map(|pt| -> Result<SweepRow> {
            let t = surface.tangents(pt)?;
            let regular = !t.g_sq.is_zero();
            let m_value = if normalized {
                Some(mn_quantities(&jet(surface, pt)?).m)
            } else {
                None
            };
            let nd = if regular { Some(normal_derivatives(surface, pt)?) } else { None };
            let gauss_regular = match (&m_value, &nd) {
                (Some(m), _) => Some(!m.is_zero()),
                (None, Some(nd)) => Some(!nd.cross_sq.is_zero()),
                (None, None) => None,
            };
            let dist_sq_surface = regular
                .then(|| &t.energy * &t.energy / (rat_int(4) * &t.g_sq));
            let dist_sq_gauss = nd.as_ref().and_then(|nd| {
                if nd.cross_sq.is_zero() {
                    None
                } else {
                    let sum = &nd.p_sq + &nd.q_sq;
                    Some(&sum * &sum / (rat_int(4) * &nd.cross_sq))
                }
            });
            let curvature_sign = if regular {
                Some(crate::gauss::curvature_sign(surface, pt)?)
            } else {
                None
            };
            Ok(SweepRow {
                x: pt.0.clone(),
                y: pt.1.clone(),
                regular,
                gauss_regular,
                dist_sq_surface,
                dist_sq_gauss,
                m_value,
                curvature_sign,
            })
        })
        .collect();
    rows
}

fn render_rational(r: &Rational, float: bool) -> String {
    if float {
        format_f64_17(rational_to_f64(r))
    } else {
        format_rational(r)
    }
}

fn render_opt(r: &Option<Rational>, float: bool) -> String {
    r.as_ref().map(|v| render_rational(v, float)).unwrap_or_default()
}

fn render_opt_bool(b: &Option<bool>) -> String {
    b.map(|v| v.to_string()).unwrap_or_default()
}

pub fn sweep_to_csv(rows: &[SweepRow], float: bool) -> String {
    let mut out = SWEEP_COLUMNS.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            render_rational(&r.x, float),
            render_rational(&r.y, float),
            r.regular,
            render_opt_bool(&r.gauss_regular),
            render_opt(&r.dist_sq_surface, float),
            render_opt(&r.dist_sq_gauss, float),
            render_opt(&r.m_value, float),
            render_opt(&r.curvature_sign, float),
        ));
    }
    out
}

fn value_rational(r: &Rational, float: bool) -> Value {
    if float {
        serde_json::Number::from_f64(rational_to_f64(r)).map_or(Value::Null, Value::Number)
    } else {
        Value::String(format_rational(r))
    }
}

fn value_opt(r: &Option<Rational>, float: bool) -> Value {
    r.as_ref().map_or(Value::Null, |v| value_rational(v, float))
}

pub fn sweep_to_json(s: &HarmonicSurface, cfg: &SweepConfig, rows: &[SweepRow], float: bool) -> String {
    let rows_json: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "x": value_rational(&r.x, float),
                "y": value_rational(&r.y, float),
                "regular": r.regular,
                "gauss_regular": r.gauss_regular.map_or(Value::Null, Value::Bool),
                "dist_sq_surface": value_opt(&r.dist_sq_surface, float),
                "dist_sq_gauss": value_opt(&r.dist_sq_gauss, float),
                "m_value": value_opt(&r.m_value, float),
                "curvature_sign": value_opt(&r.curvature_sign, float),
            })
        })
        .collect();
    let doc = json!({
        "surface": crate::json::surface_to_value(s),
        "grid": {"nx": cfg.nx, "ny": cfg.ny},
        "rows": rows_json,
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializes");
    out.push('\n');
    out
}

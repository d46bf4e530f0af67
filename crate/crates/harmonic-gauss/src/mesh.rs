//! Triangle-mesh export of a surface over its grid.
//!
//! Plain text format: one `v x y z` line per vertex (17 significant digits),
//! then `f i j k` lines with 1-based indices. Vertices are emitted in
//! row-major grid order (x fastest); each grid quad is split along the fixed
//! diagonal from its lower-left corner.

use crate::error::Result;
use crate::rational::{format_f64_17, rational_to_f64};
use crate::surface::{Domain, HarmonicSurface};

#[derive(Debug, Clone)]
pub struct MeshConfig {
    pub nx: u32,
    pub ny: u32,
    /// Overrides the surface domain when set.
    pub domain: Option<Domain>,
}

pub fn mesh_text(s: &HarmonicSurface, cfg: &MeshConfig) -> Result<String> {
    let scoped;
    let surface = match &cfg.domain {
        Some(d) => {
            scoped = s.with_domain(d.clone());
            &scoped
        }
        None => s,
    };
    let pts = surface.domain().grid(cfg.nx, cfg.ny)?;
    let mut out = String::new();
    for (x, y) in &pts {
        let vx = rational_to_f64(&surface.a().eval(x, y));
        let vy = rational_to_f64(&surface.b().eval(x, y));
        let vz = rational_to_f64(&surface.c().eval(x, y));
        out.push_str(&format!(
            "v {} {} {}\n",
            format_f64_17(vx),
            format_f64_17(vy),
            format_f64_17(vz)
        ));
    }
    let nx = cfg.nx as usize;
    for iy in 0..(cfg.ny as usize - 1) {
        for ix in 0..(nx - 1) {
            let v00 = iy * nx + ix + 1;
            let v10 = v00 + 1;
            let v01 = v00 + nx;
            let v11 = v01 + 1;
            out.push_str(&format!("f {v00} {v10} {v11}\n"));
            out.push_str(&format!("f {v00} {v11} {v01}\n"));
        }
    }
    Ok(out)
}

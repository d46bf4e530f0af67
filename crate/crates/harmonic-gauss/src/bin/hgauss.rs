//! Command-line front end: surface checks, field sweeps, verification
//! suites, minimal-surface generation, and mesh export.
//!
//! Exit codes: 0 success (and zero suite failures), 1 non-harmonic input,
//! null-identity violation, geometric error, or suite failures, 2 file or
//! JSON parse error, 3 unknown verification suite.

#![allow(clippy::result_large_err)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use harmonic_gauss::error::{Error, Result};
use harmonic_gauss::gauss::{planarity_classify, Planarity};
use harmonic_gauss::json::{
    parse_surface, parse_weierstrass, surface_to_json_string, WeierstrassInput,
};
use harmonic_gauss::mesh::{mesh_text, MeshConfig};
use harmonic_gauss::rational::{format_rational, parse_rational, Rational};
use harmonic_gauss::surface::{Domain, HarmonicSurface};
use harmonic_gauss::sweep::{field_sweep, sweep_to_csv, sweep_to_json, SweepConfig};
use harmonic_gauss::verify::{run_suite, SuiteParams};
use harmonic_gauss::weierstrass::{integrate, phi_from_pq};

#[derive(Parser)]
#[command(
    name = "hgauss",
    version,
    about = "Exact tools for harmonic surfaces and their Gauss maps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the primary output to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where both are supported.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Render exact rationals as 17-significant-digit decimals.
    #[arg(long, global = true)]
    float: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a surface file: harmonicity per coordinate, planarity,
    /// and graph normalization (a = x).
    Check {
        /// Surface JSON file.
        surface: PathBuf,
    },
    /// Evaluate exact surface and Gauss-map quantities on a grid.
    Sweep {
        /// Surface JSON file.
        surface: PathBuf,
        /// Grid resolution, e.g. 9x9.
        #[arg(long, default_value = "9x9")]
        grid: String,
        /// Override domain as xlo,xhi,ylo,yhi (rationals).
        #[arg(long, allow_hyphen_values = true)]
        domain: Option<String>,
    },
    /// Run a verification suite: thm1-exact | thm1-numeric | dilatation |
    /// remark14 | thm3. Prints a JSON report; exits 0 iff zero failures.
    Verify {
        suite: String,
        /// Number of random surfaces (thm1-exact) or random non-planar
        /// surfaces (thm3).
        #[arg(long)]
        count: Option<u32>,
        /// Degree bound for random surfaces.
        #[arg(long)]
        degree: Option<u32>,
        /// Coefficient height bound for random surfaces.
        #[arg(long)]
        height: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Random points per surface (thm1-exact).
        #[arg(long)]
        pts: Option<u32>,
        /// Finite-difference step (numeric suites).
        #[arg(long)]
        fd_step: Option<f64>,
        /// Tolerance (numeric suites).
        #[arg(long)]
        tol: Option<f64>,
        /// Grid resolution for thm1-numeric, e.g. 9x9.
        #[arg(long)]
        grid: Option<String>,
        /// Override the suite surface domain as xlo,xhi,ylo,yhi.
        #[arg(long, allow_hyphen_values = true)]
        domain: Option<String>,
        /// Generate graph-normalized surfaces (a = x).
        #[arg(long)]
        normalized: bool,
        /// Surface file for the numeric suites (defaults to (x, y, xy)).
        #[arg(long)]
        surface: Option<PathBuf>,
    },
    /// Generate a minimal surface from data {"p": ..., "q": ...} or a raw
    /// phi triple, emitting the surface JSON (and optionally a mesh).
    Weierstrass {
        /// Generator JSON file.
        pq: PathBuf,
        /// Domain as xlo,xhi,ylo,yhi (defaults to -1,1,-1,1).
        #[arg(long, allow_hyphen_values = true)]
        domain: Option<String>,
        /// Also write a triangle mesh here.
        #[arg(long)]
        mesh_out: Option<PathBuf>,
        /// Mesh grid resolution, e.g. 33x33.
        #[arg(long, default_value = "33x33")]
        grid: String,
    },
    /// Export a triangle mesh of a surface.
    Mesh {
        /// Surface JSON file.
        surface: PathBuf,
        /// Grid resolution, e.g. 33x33.
        #[arg(long, default_value = "33x33")]
        grid: String,
        /// Override domain as xlo,xhi,ylo,yhi (rationals).
        #[arg(long, allow_hyphen_values = true)]
        domain: Option<String>,
    },
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Parse(_) => 2,
                Error::UnknownSuite(_) => 3,
                _ => 1,
            })
        }
    }
}

/// HG_THREADS caps the rayon worker count for sweeps.
fn init_thread_pool() {
    if let Ok(value) = std::env::var("HG_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring invalid HG_THREADS value `{value}`"),
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.cmd {
        Cmd::Check { surface } => cmd_check(surface, cli),
        Cmd::Sweep { surface, grid, domain } => cmd_sweep(surface, grid, domain.as_deref(), cli),
        Cmd::Verify {
            suite,
            count,
            degree,
            height,
            seed,
            pts,
            fd_step,
            tol,
            grid,
            domain,
            normalized,
            surface,
        } => {
            let mut params = SuiteParams {
                count: count.unwrap_or(if suite == "thm3" { 50 } else { 100 }),
                seed: seed.unwrap_or(if suite == "thm3" { 7 } else { 1 }),
                normalized: *normalized,
                ..SuiteParams::default()
            };
            if let Some(d) = degree {
                params.degree = *d;
            }
            if let Some(h) = height {
                params.height = *h;
            }
            if let Some(p) = pts {
                params.pts = *p;
            }
            if let Some(f) = fd_step {
                params.fd_step = *f;
            }
            if let Some(t) = tol {
                params.tol = *t;
            }
            if let Some(g) = grid {
                let (nx, ny) = parse_grid(g)?;
                params.nx = nx;
                params.ny = ny;
            }
            if let Some(d) = domain {
                params.domain = Some(parse_domain(d)?);
            }
            if let Some(path) = surface {
                params.surface = Some(load_surface(path)?);
            }
            let report = run_suite(suite, &params)?;
            write_output(&report.to_json_pretty(), &cli.out)?;
            Ok(if report.failures() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Weierstrass { pq, domain, mesh_out, grid } => {
            cmd_weierstrass(pq, domain.as_deref(), mesh_out.as_deref(), grid, cli)
        }
        Cmd::Mesh { surface, grid, domain } => cmd_mesh(surface, grid, domain.as_deref(), cli),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_surface(path: &Path) -> Result<HarmonicSurface> {
    parse_surface(&read_file(path)?)?.to_surface()
}

fn write_output(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_grid(text: &str) -> Result<(u32, u32)> {
    let err = || Error::Parse(format!("invalid grid `{text}`; expected NXxNY, e.g. 9x9"));
    let (nx, ny) = text.split_once(['x', 'X']).ok_or_else(err)?;
    let nx: u32 = nx.trim().parse().map_err(|_| err())?;
    let ny: u32 = ny.trim().parse().map_err(|_| err())?;
    Ok((nx, ny))
}

fn parse_domain(text: &str) -> Result<Domain> {
    let parts: Vec<Rational> = text.split(',').map(parse_rational).collect::<Result<_>>()?;
    let [x_lo, x_hi, y_lo, y_hi] = <[Rational; 4]>::try_from(parts)
        .map_err(|_| Error::Parse(format!("invalid domain `{text}`; expected xlo,xhi,ylo,yhi")))?;
    Domain::new(x_lo, x_hi, y_lo, y_hi)
}

fn cmd_check(path: &Path, cli: &Cli) -> Result<ExitCode> {
    let input = parse_surface(&read_file(path)?)?;
    let coords = [("a", &input.a), ("b", &input.b), ("c", &input.c)];
    let mut harmonic = BTreeMap::new();
    let mut residuals = BTreeMap::new();
    let mut all_harmonic = true;
    for (name, poly) in &coords {
        let residual = poly.residual();
        let ok = residual.is_zero();
        all_harmonic &= ok;
        harmonic.insert((*name).to_string(), ok);
        if !ok {
            residuals.insert((*name).to_string(), residual.to_string());
        }
    }

    let analysis = if all_harmonic {
        let s = input.to_surface()?;
        let planarity = match planarity_classify(&s) {
            Ok(p) => Some(p),
            Err(Error::DegenerateSurface) => None,
            Err(e) => return Err(e),
        };
        Some((s.is_graph_normalized(), planarity))
    } else {
        None
    };

    let text = match cli.format {
        Format::Json => {
            let planarity_json = match &analysis {
                None => serde_json::Value::Null,
                Some((_, None)) => serde_json::json!({"degenerate": true}),
                Some((_, Some(Planarity::Planar { direction, normal }))) => serde_json::json!({
                    "planar": true,
                    "direction": [
                        format_rational(&direction.x),
                        format_rational(&direction.y),
                        format_rational(&direction.z),
                    ],
                    "normal": normal.as_array(),
                }),
                Some((_, Some(Planarity::NonPlanar { witness }))) => serde_json::json!({
                    "planar": false,
                    "witness": [format_rational(&witness.0), format_rational(&witness.1)],
                }),
            };
            let doc = serde_json::json!({
                "harmonic": harmonic,
                "residuals": residuals,
                "planarity": planarity_json,
                "normalized": analysis.as_ref().map(|(n, _)| *n),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut lines = String::new();
            for (name, _) in &coords {
                if harmonic[*name] {
                    lines.push_str(&format!("coordinate {name}: harmonic\n"));
                } else {
                    lines.push_str(&format!(
                        "coordinate {name}: NOT harmonic, residual = {}\n",
                        residuals[*name]
                    ));
                }
            }
            match &analysis {
                None => lines.push_str("planarity: skipped (non-harmonic input)\n"),
                Some((normalized, planarity)) => {
                    match planarity {
                        None => lines.push_str(
                            "planarity: degenerate (tangent cross product vanishes identically)\n",
                        ),
                        Some(Planarity::Planar { direction, normal }) => {
                            let [nx, ny, nz] = normal.as_array();
                            lines.push_str(&format!(
                                "planarity: planar, direction = [{}, {}, {}], normal = [{nx}, {ny}, {nz}]\n",
                                format_rational(&direction.x),
                                format_rational(&direction.y),
                                format_rational(&direction.z),
                            ));
                        }
                        Some(Planarity::NonPlanar { witness }) => {
                            lines.push_str(&format!(
                                "planarity: non-planar (witness ({}, {}))\n",
                                format_rational(&witness.0),
                                format_rational(&witness.1)
                            ));
                        }
                    }
                    lines.push_str(&format!(
                        "normalized (a = x): {}\n",
                        if *normalized { "yes" } else { "no" }
                    ));
                }
            }
            lines
        }
    };
    write_output(&text, &cli.out)?;
    Ok(if all_harmonic { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_sweep(path: &Path, grid: &str, domain: Option<&str>, cli: &Cli) -> Result<ExitCode> {
    let s = load_surface(path)?;
    let (nx, ny) = parse_grid(grid)?;
    let cfg = SweepConfig { nx, ny, domain: domain.map(parse_domain).transpose()? };
    let rows = field_sweep(&s, &cfg)?;
    let text = match cli.format {
        Format::Csv => sweep_to_csv(&rows, cli.float),
        Format::Json => sweep_to_json(&s, &cfg, &rows, cli.float),
    };
    write_output(&text, &cli.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_weierstrass(
    pq: &Path,
    domain: Option<&str>,
    mesh_out: Option<&Path>,
    grid: &str,
    cli: &Cli,
) -> Result<ExitCode> {
    let input = parse_weierstrass(&read_file(pq)?)?;
    let triple = match input {
        WeierstrassInput::Data(d) => phi_from_pq(&d),
        WeierstrassInput::Phi(t) => t,
    };
    let dom = domain.map(parse_domain).transpose()?.unwrap_or_else(Domain::unit_square);
    let surface = integrate(&triple, dom)?;
    write_output(&surface_to_json_string(&surface), &cli.out)?;
    if let Some(mesh_path) = mesh_out {
        let (nx, ny) = parse_grid(grid)?;
        let text = mesh_text(&surface, &MeshConfig { nx, ny, domain: None })?;
        fs::write(mesh_path, text).map_err(|e| {
            Error::InvalidInput(format!("cannot write {}: {e}", mesh_path.display()))
        })?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_mesh(path: &Path, grid: &str, domain: Option<&str>, cli: &Cli) -> Result<ExitCode> {
    let s = load_surface(path)?;
    let (nx, ny) = parse_grid(grid)?;
    let cfg = MeshConfig { nx, ny, domain: domain.map(parse_domain).transpose()? };
    let text = mesh_text(&s, &cfg)?;
    write_output(&text, &cli.out)?;
    Ok(ExitCode::SUCCESS)
}

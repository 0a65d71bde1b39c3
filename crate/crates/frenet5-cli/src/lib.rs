//! Command-line front end for the `frenet5` intersection-curve library.
//!
//! Three commands over a JSON scene file:
//!
//! - `check`: validate point agreement, surface regularity, transversality.
//! - `analyze`: print the Frenet apparatus and per-surface Darboux data at
//!   the scene's start point (`--format text|json`).
//! - `trace`: march along the intersection curve and write a CSV.
//!
//! Exit codes: 0 success, 1 input error, 2 mathematical degeneracy or
//! failed check, 3 numerical failure.

pub mod fmt;
pub mod report;
pub mod scene;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use frenet5::curve::{analyze, FrenetStatus, IntersectionPoint, TRANSVERSALITY_TOL};
use frenet5::darboux::{geodesics, DarbouxFrame, GeodesicData};
use frenet5::linalg::{quad_product, Vec5};
use frenet5::surface::{jet, unit_normal};
use frenet5::tracer::{trace, trace_centered, TraceConfig};
use frenet5::Error;

use fmt::sig6;
use report::{analyze_json, analyze_text, profile_cells, DarbouxBlock, PROFILE_COLUMNS};
use scene::{load_scene, Scene};

#[derive(Parser)]
#[command(
    name = "frenet5",
    version,
    about = "Differential geometry of four-hypersurface intersection curves in R^5"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a scene: point agreement, regularity, transversality.
    Check {
        /// Scene JSON file.
        scene: PathBuf,
    },
    /// Print the Frenet apparatus and Darboux data at the scene point.
    Analyze {
        /// Scene JSON file.
        scene: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// March along the intersection curve and write a CSV of the points.
    Trace {
        /// Scene JSON file.
        scene: PathBuf,
        /// Number of steps to march (with --centered: half backward, half
        /// forward).
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Step length.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Output CSV path.
        #[arg(long, default_value = "trace.csv")]
        out: PathBuf,
        /// Append curvature columns k1..k4, kn1..kn4, k1g1..k1g4.
        #[arg(long)]
        profile: bool,
        /// March steps/2 backward and steps/2 forward from the start.
        #[arg(long)]
        centered: bool,
    },
}

/// Exit code for a library error: 1 input, 2 degeneracy, 3 numerical.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Domain { .. } | Error::OrderExceeded { .. } => 1,
        Error::NotRegular { .. }
        | Error::NonTransversal { .. }
        | Error::PointMismatch { .. }
        | Error::DegenerateFrenet { .. }
        | Error::RankDeficient { .. } => 2,
        Error::SingularSystem { .. }
        | Error::NewtonDivergence { .. }
        | Error::InsufficientTrace { .. } => 3,
    }
}

/// Command outcome: stdout text plus exit code, or error text plus exit code.
type Outcome = Result<(String, i32), (String, i32)>;

fn lib_err(e: Error) -> (String, i32) {
    (e.to_string(), exit_code(&e))
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.cmd {
        Cmd::Check { scene } => load(&scene).and_then(|s| cmd_check(&s)),
        Cmd::Analyze { scene, format } => load(&scene).and_then(|s| cmd_analyze(&s, format)),
        Cmd::Trace { scene, steps, step, out, profile, centered } => {
            load(&scene).and_then(|s| cmd_trace(&s, steps, step, &out, profile, centered))
        }
    };
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn load(path: &Path) -> Result<Scene, (String, i32)> {
    load_scene(path).map_err(lib_err)
}

fn geodesic_block(scene: &Scene, analysis: &frenet5::curve::CurveAnalysis) -> Result<DarbouxBlock, (String, i32)> {
    let geo: Vec<(DarbouxFrame, GeodesicData)> =
        geodesics(&scene.surfaces, analysis).map_err(lib_err)?;
    geo.try_into()
        .map_err(|_| ("geodesic data missing for some surface".to_string(), 3))
}

fn cmd_check(scene: &Scene) -> Outcome {
    let mut out = String::new();
    let mut failure: Option<String> = None;

    let mut positions = [Vec5::ZERO; 4];
    for (p, (s, q)) in positions.iter_mut().zip(scene.surfaces.iter().zip(&scene.start)) {
        *p = s.position(q).map_err(lib_err)?;
    }
    let mut residual = 0.0f64;
    for i in 0..4 {
        for j in i + 1..4 {
            residual = residual.max((positions[i] - positions[j]).norm());
        }
    }
    out.push_str(&format!("agreement residual: {}\n", sig6(residual)));
    if residual > scene.tolerances.point {
        failure = Some(format!("point agreement (residual {})", sig6(residual)));
    }

    let mut normals = Vec::with_capacity(4);
    for (s, q) in scene.surfaces.iter().zip(&scene.start) {
        match jet(s, q, 1) {
            Ok(j) => {
                let p = [
                    j.partial(&[1]).map_err(lib_err)?,
                    j.partial(&[2]).map_err(lib_err)?,
                    j.partial(&[3]).map_err(lib_err)?,
                    j.partial(&[4]).map_err(lib_err)?,
                ];
                let denom: f64 = p.iter().map(Vec5::norm).product();
                let margin = quad_product(&p[0], &p[1], &p[2], &p[3]).norm() / denom;
                out.push_str(&format!("regularity margin {}: {}\n", s.name(), sig6(margin)));
                normals.push(unit_normal(&j).map_err(lib_err)?);
            }
            Err(Error::NotRegular { surface, margin }) => {
                out.push_str(&format!("regularity margin {surface}: {}\n", sig6(margin)));
                failure.get_or_insert(format!(
                    "surface regularity ({surface}, margin {})",
                    sig6(margin)
                ));
            }
            Err(e) => return Err(lib_err(e)),
        }
    }

    if normals.len() == 4 {
        let norm = quad_product(&normals[0], &normals[1], &normals[2], &normals[3]).norm();
        out.push_str(&format!("transversality norm: {}\n", sig6(norm)));
        if failure.is_none() && norm <= TRANSVERSALITY_TOL {
            failure = Some(format!("transversality (norm {})", sig6(norm)));
        }
    }

    match failure {
        Some(which) => {
            out.push_str(&format!("check failed: {which}\n"));
            Ok((out, 2))
        }
        None => {
            out.push_str("check passed\n");
            Ok((out, 0))
        }
    }
}

fn cmd_analyze(scene: &Scene, format: Format) -> Outcome {
    let point = IntersectionPoint::new(&scene.surfaces, scene.start, scene.tolerances.point)
        .map_err(lib_err)?;
    let analysis = analyze(&scene.surfaces, &point).map_err(lib_err)?;
    let darboux = geodesic_block(scene, &analysis)?;
    let names = scene.surface_names();
    let text = match format {
        Format::Text => analyze_text(&names, &analysis, &darboux),
        Format::Json => analyze_json(&names, &analysis, &darboux),
    };
    let code = match analysis.status {
        FrenetStatus::Full => 0,
        FrenetStatus::Degenerate { .. } => 2,
    };
    Ok((text, code))
}

fn cmd_trace(
    scene: &Scene,
    steps: usize,
    step: f64,
    out_path: &Path,
    profile: bool,
    centered: bool,
) -> Outcome {
    let start = IntersectionPoint::new(&scene.surfaces, scene.start, scene.tolerances.point)
        .map_err(lib_err)?;
    let config = TraceConfig {
        step,
        steps: if centered { steps / 2 } else { steps },
        tol: scene.tolerances.corrector,
        max_iter: scene.tolerances.max_iter,
        min_step: scene.tolerances.min_step,
    };
    let result = if centered {
        trace_centered(&scene.surfaces, &start, &config, &scene.domains)
    } else {
        trace(&scene.surfaces, &start, &config, &scene.domains)
    };
    let tr = result.map_err(|e| (e.to_string(), exit_code(&e.source)))?;

    let mut csv = String::from("s,x1,x2,x3,x4,x5");
    if profile {
        csv.push_str(PROFILE_COLUMNS);
    }
    csv.push('\n');
    for (s, p) in &tr.points {
        let mut cells = vec![fmt::json_num(*s)];
        cells.extend(p.ambient.iter().map(|&x| fmt::json_num(x)));
        csv.push_str(&cells.join(","));
        if profile {
            let analysis = analyze(&scene.surfaces, p).map_err(lib_err)?;
            let geo = geodesic_block(scene, &analysis)?;
            csv.push(',');
            csv.push_str(&profile_cells(&analysis, &geo));
        }
        csv.push('\n');
    }
    std::fs::write(out_path, csv)
        .map_err(|e| (format!("cannot write {}: {e}", out_path.display()), 1))?;
    Ok((
        format!("wrote {} points to {}\n", tr.points.len(), out_path.display()),
        0,
    ))
}

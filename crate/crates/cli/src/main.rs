//! `su2pf`: command-line verification harness.
//!
//! Exit status is 0 when every check passes, 1 when any check fails and 2 on
//! a usage or configuration error.

mod complex;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;
use su2_pfaffian::battery::{run_battery, BatteryConfig};
use su2_pfaffian::curvature::{curvature_at_point, gauss_curvature, weyl_frame_component};
use su2_pfaffian::gauge::{bracket_table, components, field_strength, GaugeCase, GaugeVariant};
use su2_pfaffian::manifold::Sampler;
use su2_pfaffian::nurowski::{
    case_surface_metric, lambda, nurowski_metric_gtilde, w2424, w2424_closed_form, Case, Sign,
};
use su2_pfaffian::pfaffian::{
    check_structure_equations_at, growth_vector, OmegaCoframe, SystemParams, DEFAULT_SEED, RANK_TOL, STRUCTURE_TOL,
};
use su2_pfaffian::profile::Profile;
use su2_pfaffian::{c64, GeometryError, C64};

use complex::{deserialize_complex, parse_complex};
use report::{pair, status, Entry, Report};

#[derive(Parser)]
#[command(
    name = "su2pf",
    version,
    about = "Verify SU(2)-symmetric rank-3 Pfaffian systems and their conformal geometry"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification battery
    VerifyAll {
        /// Cap on every check's tolerance (default: each check's own tolerance)
        #[arg(long)]
        tol: Option<f64>,
        /// Sample count for every check (default: each check's own count)
        #[arg(long)]
        points: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Record wall-clock time per check (makes the report non-deterministic)
        #[arg(long)]
        timings: bool,
    },
    /// W₂₄₂₄ and Weyl flatness of the metric of the system with b₁ = k = 1
    Weyl {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a2: C64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        c2: C64,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Gauss curvature of the two-dimensional block of a real case metric
    Gauss {
        #[arg(long)]
        case: Case,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Field strength and bracket table of an SU(2) connection at r
    Gauge {
        #[arg(long)]
        case: Case,
        #[arg(long, default_value = "minus")]
        sign: Sign,
        #[arg(long, default_value = "complex")]
        variant: GaugeVariant,
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Bracket-generation test of the system in a JSON parameter file
    Structure {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, default_value_t = STRUCTURE_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 10)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Errors that end the run with status 2.
#[derive(Debug)]
struct ConfigError(String);

impl From<GeometryError> for ConfigError {
    fn from(e: GeometryError) -> Self {
        ConfigError(e.to_string())
    }
}

fn check_tol(tol: f64) -> Result<(), ConfigError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(ConfigError(format!("tolerance must be positive, got {tol}")))
    }
}

fn check_points(points: usize) -> Result<(), ConfigError> {
    if points >= 1 {
        Ok(())
    } else {
        Err(ConfigError("points must be at least 1".into()))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(ConfigError(msg)) => {
            eprintln!("su2pf: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Markdown => report.to_markdown(),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("su2pf: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<Report, ConfigError> {
    match command {
        Command::VerifyAll {
            tol,
            points,
            seed,
            timings,
        } => {
            if let Some(t) = tol {
                check_tol(t)?;
            }
            if let Some(n) = points {
                check_points(n)?;
            }
            let cfg = BatteryConfig {
                tol,
                points,
                seed,
                timings,
            };
            let checks = run_battery(&cfg).into_iter().map(Entry::from).collect();
            Ok(Report::new(
                "verify-all",
                json!({ "tol": tol, "points": points, "seed": seed }),
                checks,
            ))
        }
        Command::Weyl {
            a2,
            c2,
            tol,
            points,
            seed,
        } => {
            check_tol(tol)?;
            check_points(points)?;
            cmd_weyl(a2, c2, tol, points, seed)
        }
        Command::Gauss {
            case,
            tol,
            points,
            seed,
        } => {
            check_tol(tol)?;
            check_points(points)?;
            cmd_gauss(case, tol, points, seed)
        }
        Command::Gauge {
            case,
            sign,
            variant,
            r,
            tol,
        } => {
            check_tol(tol)?;
            cmd_gauge(GaugeCase::new(case, sign, variant), r, tol)
        }
        Command::Structure {
            params,
            tol,
            points,
            seed,
        } => {
            check_tol(tol)?;
            check_points(points)?;
            cmd_structure(&params, tol, points, seed)
        }
    }
}

fn cmd_weyl(a2: C64, c2: C64, tol: f64, points: usize, seed: u64) -> Result<Report, ConfigError> {
    let params = SystemParams::simplified(a2, c2, c64(1.0, 0.0))?;
    let gt = nurowski_metric_gtilde(&params)?;
    let pts = Sampler::new(seed).points(points);
    let mut max_weyl = 0.0f64;
    for p in &pts {
        max_weyl = max_weyl.max(curvature_at_point(&gt, p)?.max_weyl());
    }
    let flat = max_weyl < tol;
    let (a, c) = (a2 * a2, c2 * c2);
    let loci = (9.0 * a + c) * (a + 9.0 * c);
    let predicted_flat = loci.norm() < 1e-12 * (a.norm() + c.norm()).powi(2);
    let closed = w2424_closed_form(a2, c2);
    let config = json!({ "a2": pair(a2), "c2": pair(c2), "tol": tol, "points": points, "seed": seed });

    let mut checks = vec![Entry {
        name: "weyl_flatness".into(),
        anchor: "g̃ is conformally flat iff (9a₂²+c₂²)(a₂²+9c₂²) = 0".into(),
        status: status(flat == predicted_flat),
        max_residual: max_weyl,
        expected: format!("flat = {predicted_flat}"),
        observed: format!("flat = {flat}, max |C| = {max_weyl:.3e} over {points} points"),
        runtime_ms: None,
        details: Some(json!({ "flat": flat, "max_weyl": max_weyl })),
    }];

    let real_path = a2.im == 0.0 && c2.im == 0.0 && a2.re > 0.0;
    if real_path {
        let p = &pts[0];
        let theta = w2424(&params, p)?;
        let g = su2_pfaffian::nurowski::nurowski_metric_g(&params)?;
        let omega = weyl_frame_component(&g, &OmegaCoframe::new(params), (1, 3, 1, 3), p)?;
        let rel = (theta.norm() - closed.norm()).abs() / closed.norm();
        let l = lambda(a2, c2);
        checks.push(Entry {
            name: "weyl_w2424".into(),
            anchor: "W₂₄₂₄ = −(1/300)(9a₂²+c₂²)(a₂²+9c₂²)/(a₂^{8/3}(a₂²+c₂²)^{2/3})".into(),
            status: status(rel < 1e-6),
            max_residual: rel,
            expected: format!("|W2424| = {:.12} within 1e-6 relative", closed.norm()),
            observed: format!(
                "θ coframe {:.12}, ω coframe {:.12}, relative magnitude error {rel:.3e}",
                theta.re, omega.re
            ),
            runtime_ms: None,
            details: Some(json!({
                "w2424": pair(theta),
                "w2424_omega_frame": pair(omega),
                "w2424_closed_form": pair(closed),
                "lambda": pair(l),
                "sign": (theta / closed).re.signum(),
            })),
        });
    } else if let Some(first) = checks.first_mut() {
        first.details = Some(json!({ "flat": flat, "max_weyl": max_weyl, "w2424_closed_form": pair(closed) }));
    }
    Ok(Report::new("weyl", config, checks))
}

fn cmd_gauss(case: Case, tol: f64, points: usize, seed: u64) -> Result<Report, ConfigError> {
    let (freq, want) = match case {
        Case::A => (1.0 / 3.0, 1.0 / 9.0),
        Case::B => (3.0, 9.0),
    };
    let s = case_surface_metric(case);
    let mut sampler = Sampler::new(seed);
    let mut err = 0.0f64;
    let mut first = None;
    let mut n = 0;
    while n < points {
        let r = sampler.uniform(-1.0, 1.0);
        if (freq * r).cos().abs() < 1e-3 {
            continue;
        }
        let k = gauss_curvature(&s, r, 0.0)?;
        first.get_or_insert(k);
        err = err.max((k - c64(want, 0.0)).norm());
        n += 1;
    }
    let k = first.unwrap_or(c64(f64::NAN, 0.0));
    let entry = Entry {
        name: format!("gauss_{case}").to_lowercase(),
        anchor: "ω₄ω₄ + ω₅ω₅ has constant Gauss curvature 1/9 (A) and 9 (B)".into(),
        status: status(err < tol),
        max_residual: err,
        expected: format!("K = {want:.12} within {tol:.1e}"),
        observed: format!("K = {:.12}, max deviation {err:.3e} over {points} values of r", k.re),
        runtime_ms: None,
        details: Some(json!({ "gauss_curvature": pair(k), "expected": want })),
    };
    Ok(Report::new(
        "gauss",
        json!({ "case": case.to_string(), "tol": tol, "points": points, "seed": seed }),
        vec![entry],
    ))
}

fn cmd_gauge(gc: GaugeCase, r: f64, tol: f64) -> Result<Report, ConfigError> {
    let f = field_strength(&gc, r)?;
    let table = bracket_table(&gc, r)?;
    let residual = table.max_residual();
    let brackets: Vec<_> = table
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "computed": components(&e.computed).map(pair),
                "expected": components(&e.expected).map(pair),
                "residual": e.residual,
            })
        })
        .collect();
    let fc = components(&f);
    let entry = Entry {
        name: format!("gauge_{}", gc.label().replace('/', "_")).to_lowercase(),
        anchor: "field strength and bracket table of the SU(2) connection".into(),
        status: status(residual < tol),
        max_residual: residual,
        expected: format!("every bracket within {tol:.1e} of its closed form"),
        observed: format!(
            "F = ({})E¹ + ({})E² + ({})E³, max residual {residual:.3e}",
            show(fc[0]),
            show(fc[1]),
            show(fc[2])
        ),
        runtime_ms: None,
        details: Some(json!({ "field_strength": fc.map(pair), "brackets": brackets })),
    };
    Ok(Report::new(
        "gauge",
        json!({
            "case": gc.case.to_string(),
            "sign": gc.sign.to_string(),
            "variant": gc.variant.to_string(),
            "r": r,
            "tol": tol,
        }),
        vec![entry],
    ))
}

fn show(z: C64) -> String {
    format!("{:.12}{:+.12}i", z.re + 0.0, z.im + 0.0)
}

/// `{a1, b1, c1, a2, b2, c2, k}` and an optional profile `f = amp·e^{rate·r}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    #[serde(deserialize_with = "deserialize_complex")]
    a1: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    b1: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    c1: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    a2: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    b2: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    c2: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    k: C64,
    #[serde(default)]
    f: Option<ExpProfile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpProfile {
    #[serde(deserialize_with = "deserialize_complex")]
    amp: C64,
    #[serde(deserialize_with = "deserialize_complex")]
    rate: C64,
}

fn load_params(path: &Path) -> Result<SystemParams, ConfigError> {
    let text = fs::read_to_string(path).map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    let p: ParamsFile = serde_json::from_str(&text)
        .map_err(|e| ConfigError(format!("malformed params file {}: {e}", path.display())))?;
    let params = match p.f {
        Some(f) => SystemParams::with_profile(p.a1, p.b1, p.c1, p.a2, p.b2, p.c2, p.k, Profile::exp(f.amp, f.rate))?,
        None => SystemParams::new(p.a1, p.b1, p.c1, p.a2, p.b2, p.c2, p.k)?,
    };
    Ok(params)
}

fn cmd_structure(path: &Path, tol: f64, points: usize, seed: u64) -> Result<Report, ConfigError> {
    let params = load_params(path)?;
    let pts = Sampler::new(seed).points(points);
    let report = check_structure_equations_at(&params, &pts, tol);
    let worst = report.residuals.values().copied().fold(0.0, f64::max);
    let mut growth = Vec::new();
    for p in &pts {
        growth.push(growth_vector(&params, p, RANK_TOL)?);
    }
    let bad = growth.iter().filter(|g| **g != (2, 3, 5)).count();
    let structure = Entry {
        name: "structure_equations".into(),
        anchor: "bracket generating iff a₁ = c₁ = b₂ = 0 and f solves its ODE".into(),
        status: status(report.pass),
        max_residual: worst,
        expected: format!("forbidden coefficients below {tol:.1e}, leading coefficients non-zero"),
        observed: format!(
            "max forbidden coefficient {worst:.3e}, min leading coefficient {:.3e}, H = {}",
            report.min_leading,
            show(report.h)
        ),
        runtime_ms: None,
        details: Some(json!({
            "residuals": report.residuals,
            "min_leading": report.min_leading,
            "h": pair(report.h),
        })),
    };
    let growth_entry = Entry {
        name: "structure_growth_vector".into(),
        anchor: "the null distribution has growth vector (2, 3, 5)".into(),
        status: status(bad == 0),
        max_residual: bad as f64,
        expected: "(2, 3, 5) at every point".into(),
        observed: format!("{} of {points} points with (2, 3, 5)", points - bad),
        runtime_ms: None,
        details: Some(json!({ "growth": growth.iter().map(|g| [g.0, g.1, g.2]).collect::<Vec<_>>() })),
    };
    Ok(Report::new(
        "structure",
        json!({ "params": path.display().to_string(), "tol": tol, "points": points, "seed": seed }),
        vec![structure, growth_entry],
    ))
}

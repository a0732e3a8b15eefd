//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 on configuration or usage errors, 3 on
//! numeric guard violations (memory guard, vanishing regularity constant,
//! non-integrable kernels).

use std::fs;
use std::io::BufReader;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::{BigRational, Ratio};

use exponent_geometry::{
    certificate_report, check_admissible, check_extreme_conditions, enumerate_vertices,
    format_rational, hull_membership, interpolation_split, vertex_report, ReciprocalExponents,
    SmoothnessProfile,
};
use fourier_core::{
    apply_multiplier, read_grid_function, regularity_constant_a, scale_norm, write_grid_function,
    GridSpec, Partition, SymbolGrid,
};
use hardy_tools::{cz_decompose, make_atom, DyadicCube};

use crate::config::ProbeConfig;
use crate::error::CliError;
use crate::probe::ratio_probe;
use crate::sweep::sharpness_sweep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(

    name = "probe-cli",
    about = "Probes for multilinear multiplier boundedness on periodic grids",
    version
)]
pub struct Cli {
    /// Master seed for all randomized draws.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,

    /// Grid points per axis (power of two).
    #[arg(long = "grid-N", global = true, default_value_t = 64)]
    pub grid_n: usize,

    /// Period length of the torus.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub period: f64,

    /// Write the primary output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices, membership certificates, and interpolation paths of the
    /// admissibility region.
    Region {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        /// Smoothness orders, comma-separated fractions, e.g. 1,3/2.
        #[arg(long)]
        s: String,
        /// Optional query point of reciprocals 1/p_i, e.g. 1/2,0.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// The regularity constant A of a preset symbol.
    Norm {
        #[arg(long)]
        preset: String,
        /// Flat numeric preset parameters, comma-separated.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Smoothness orders, comma-separated fractions.
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        jmin: i32,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        jmax: i32,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Apply a preset multiplier to inputs stored in binary containers.
    Apply {
        #[arg(long)]
        preset: String,
        #[arg(long, default_value = "")]
        params: String,
        /// Comma-separated input container paths, one per slot.
        #[arg(long)]
        inputs: String,
    },
    /// Ratio probe from a config file.
    Probe {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Sharpness sweep from a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Calderon-Zygmund decomposition of a stored grid function.
    Cz {
        #[arg(long)]
        height: f64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Construct an atom and verify its invariants.
    Atom {
        /// Exponent p in (0, 1], as a fraction.
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 2)]
        moments: usize,
        #[arg(long, default_value_t = 2)]
        level: u32,
        /// Cube coordinates, comma-separated integers, one per axis.
        #[arg(long, default_value = "0")]
        coords: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

fn parse_rational_list(text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            BigRational::from_str(t.trim())
                .map_err(|_| CliError::Config(format!("bad rational `{t}`")))
        })
        .collect()
}

fn parse_f64_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad number `{t}`")))
        })
        .collect()
}

/// Runs the parsed command and returns the primary textual output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Region { m, n, s, point, emit } => region(*m, *n, s, point.as_deref(), *emit),
        Command::Norm {
            preset,
            params,
            m,
            n,
            s,
            jmin,
            jmax,
            emit,
        } => norm(cli, preset, params, *m, *n, s, *jmin, *jmax, *emit),
        Command::Apply {
            preset,
            params,
            inputs,
        } => apply(cli, preset, params, inputs),
        Command::Probe { config, emit } => {
            let config = load_config(cli, config)?;
            let report = ratio_probe(&config)?;
            Ok(match emit {
                Emit::Csv => report.to_csv(),
                _ => report.to_json(),
            })
        }
        Command::Sweep { config, emit } => {
            let config = load_config(cli, config)?;
            let report = sharpness_sweep(&config)?;
            Ok(match emit {
                Emit::Csv => report.to_csv(),
                _ => report.to_json(),
            })
        }
        Command::Cz {
            height,
            input,
            emit,
        } => cz(*height, input, *emit),
        Command::Atom {
            p,
            moments,
            level,
            coords,
            n,
        } => atom(cli, p, *moments, *level, coords, *n),
    }
}

fn load_config(cli: &Cli, path: &PathBuf) -> Result<ProbeConfig, CliError> {
    let text = fs::read_to_string(path)?;
    let mut config = ProbeConfig::parse(&text)?;
    // Explicit global flags override the file.
    if cli.seed != 7 {
        config.seed = cli.seed;
    }
    if cli.grid_n != 64 {
        config.grid_points = cli.grid_n;
    }
    if cli.period != 1.0 {
        config.period = cli.period;
    }
    Ok(config)
}

fn region(
    m: usize,
    n: u32,
    s_text: &str,
    point: Option<&str>,
    emit: Emit,
) -> Result<String, CliError> {
    let s = parse_rational_list(s_text)?;
    if s.len() != m {
        return Err(CliError::Config(format!(
            "expected {m} smoothness orders, got {}",
            s.len()
        )));
    }
    let profile = SmoothnessProfile::new(n, s)?;
    let vertices = enumerate_vertices(&profile);

    let queried = match point {
        Some(text) => {
            let coords = parse_rational_list(text)?;
            Some(ReciprocalExponents::new(coords)?)
        }
        None => None,
    };

    match emit {
        Emit::Text => {
            let mut out = vertex_report(&vertices);
            if let Some(r) = &queried {
                let cert = hull_membership(&vertices, &r.clone())?;
                out.push_str(&format!("point {} -> {}\n", r.display(), certificate_report(&cert)));
                out.push_str(&format!(
                    "closed admissibility: {}\n",
                    check_admissible(&profile, r, false)?
                ));
                if check_extreme_conditions(r, &profile).is_ok() {
                    let path = interpolation_split(r, &profile)?;
                    out.push_str(&format!(
                        "interpolation path: depth {}, {} leaves\n",
                        path.depth(),
                        path.leaves().len()
                    ));
                    for leaf in path.leaves() {
                        out.push_str(&format!("  leaf {}\n", leaf.exponents().display()));
                    }
                }
            }
            Ok(out)
        }
        Emit::Csv => {
            let mut out = String::from("vertex\n");
            for v in vertices.vertices() {
                let row: Vec<String> = v.coords().iter().map(format_rational).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Emit::Json => {
            let verts: Vec<Vec<String>> = vertices
                .vertices()
                .iter()
                .map(|v| v.coords().iter().map(format_rational).collect())
                .collect();
            let mut doc = serde_json::json!({
                "m": m,
                "n": n,
                "s": s_text.split(',').collect::<Vec<_>>(),
                "vertex_count": vertices.len(),
                "vertices": verts,
            });
            if let Some(r) = &queried {
                let cert = hull_membership(&vertices, r)?;
                doc["point"] = serde_json::json!(
                    r.coords().iter().map(format_rational).collect::<Vec<_>>()
                );
                match cert {
                    exponent_geometry::MembershipCertificate::Inside { weights } => {
                        doc["verdict"] = "inside".into();
                        doc["weights"] = serde_json::json!(
                            weights.iter().map(format_rational).collect::<Vec<_>>()
                        );
                    }
                    exponent_geometry::MembershipCertificate::Outside { violated, margin } => {
                        doc["verdict"] = "outside".into();
                        doc["violated"] = violated.describe().into();
                        doc["margin"] = format_rational(&margin).into();
                    }
                }
            }
            Ok(serde_json::to_string_pretty(&doc).expect("json serializes"))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn norm(
    cli: &Cli,
    preset: &str,
    params: &str,
    m: usize,
    n: usize,
    s_text: &str,
    jmin: i32,
    jmax: i32,
    emit: Emit,
) -> Result<String, CliError> {
    if jmin >= jmax {
        return Err(CliError::Config(format!(
            "jmin = {jmin} must be below jmax = {jmax}"
        )));
    }
    let s = parse_rational_list(s_text)?;
    let profile = SmoothnessProfile::new(n as u32, s)?;
    let spec = GridSpec::new(n, cli.grid_n, cli.period)?;
    let sigma = SymbolGrid::make_symbol(spec, m, preset, &parse_f64_list(params)?)?;
    let partition = Partition::new(jmin, jmax);
    let a = regularity_constant_a(&sigma, &profile, &partition)?;
    match emit {
        Emit::Json => Ok(serde_json::to_string_pretty(&serde_json::json!({
            "preset": preset,
            "jmin": jmin,
            "jmax": jmax,
            "a_constant": a,
        }))
        .expect("json serializes")),
        _ => {
            let mut out = format!("A = {a}\n");
            for j in partition.scales() {
                out.push_str(&format!("  scale {j}: {}\n", scale_norm(&sigma, &profile, j)?));
            }
            Ok(out)
        }
    }
}

fn apply(cli: &Cli, preset: &str, params: &str, inputs: &str) -> Result<String, CliError> {
    let paths: Vec<&str> = inputs.split(',').filter(|t| !t.is_empty()).collect();
    if paths.is_empty() {
        return Err(CliError::Config("no input files given".into()));
    }
    let mut functions = Vec::with_capacity(paths.len());
    for path in &paths {
        let file = fs::File::open(path)?;
        functions.push(read_grid_function(&mut BufReader::new(file))?);
    }
    let spec = functions[0].spec().clone();
    let sigma = SymbolGrid::make_symbol(spec, paths.len(), preset, &parse_f64_list(params)?)?;
    let out = apply_multiplier(&sigma, &functions)?;
    let target = cli
        .out
        .clone()
        .ok_or_else(|| CliError::Config("apply needs --out for the result container".into()))?;
    let mut file = fs::File::create(&target)?;
    write_grid_function(&mut file, &out)?;
    Ok(format!(
        "wrote {} samples to {}\n",
        out.samples().len(),
        target.display()
    ))
}

fn cz(height: f64, input: &PathBuf, emit: Emit) -> Result<String, CliError> {
    let file = fs::File::open(input)?;
    let f = read_grid_function(&mut BufReader::new(file))?;
    let decomposition = cz_decompose(&f, height)?;
    let report = decomposition.check_invariants(&f);
    match emit {
        Emit::Json => {
            let cubes: Vec<serde_json::Value> = decomposition
                .bad()
                .iter()
                .map(|(cube, _)| {
                    serde_json::json!({
                        "level": cube.level(),
                        "coords": cube.coords(),
                    })
                })
                .collect();
            Ok(serde_json::to_string_pretty(&serde_json::json!({
                "height": height,
                "selected_cubes": cubes,
                "invariants": {
                    "cubes_disjoint": report.cubes_disjoint,
                    "reconstruction_exact": report.reconstruction_exact,
                    "max_mean_residual": report.max_mean_residual,
                    "averages_in_sandwich": report.averages_in_sandwich,
                    "off_cube_bound_holds": report.off_cube_bound_holds,
                    "measure_bound_holds": report.measure_bound_holds,
                    "all_hold": report.all_hold(),
                },
            }))
            .expect("json serializes"))
        }
        _ => {
            let mut out = format!(
                "height {height}: {} selected cubes\n",
                decomposition.bad().len()
            );
            for (cube, _) in decomposition.bad() {
                out.push_str(&format!("  {}\n", cube.describe()));
            }
            out.push_str(&format!("  cubes disjoint:        {}\n", report.cubes_disjoint));
            out.push_str(&format!(
                "  reconstruction exact:  {} (bitwise; guaranteed for dyadic-valued input)\n",
                report.reconstruction_exact
            ));
            out.push_str(&format!(
                "  max mean residual:     {}\n",
                report.max_mean_residual
            ));
            out.push_str(&format!(
                "  average sandwich:      {}\n",
                report.averages_in_sandwich
            ));
            out.push_str(&format!(
                "  off-cube bound:        {}\n",
                report.off_cube_bound_holds
            ));
            out.push_str(&format!(
                "  measure bound:         {}\n",
                report.measure_bound_holds
            ));
            out.push_str(&format!("invariants hold: {}\n", report.all_hold()));
            Ok(out)
        }
    }
}

fn atom(
    cli: &Cli,
    p_text: &str,
    moments: usize,
    level: u32,
    coords_text: &str,
    n: usize,
) -> Result<String, CliError> {
    let p_big = BigRational::from_str(p_text.trim())
        .map_err(|_| CliError::Config(format!("bad fraction `{p_text}`")))?;
    let p = Ratio::new(
        num_traits::ToPrimitive::to_i64(p_big.numer())
            .ok_or_else(|| CliError::Config("p numerator too large".into()))?,
        num_traits::ToPrimitive::to_i64(p_big.denom())
            .ok_or_else(|| CliError::Config("p denominator too large".into()))?,
    );
    let coords: Vec<u32> = coords_text
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Config(format!("bad coordinate `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    if coords.len() != n {
        return Err(CliError::Config(format!(
            "expected {n} cube coordinates, got {}",
            coords.len()
        )));
    }
    let spec = GridSpec::new(n, cli.grid_n, cli.period)?;
    let cube = DyadicCube::new(level, coords)?;
    let atom = make_atom(&spec, &cube, p, moments, cli.seed)?;

    let mut out = format!(
        "atom on {} with p = {p}, {moments} vanishing moment orders\n",
        cube.describe()
    );
    out.push_str(&format!("  sup = {}\n", atom.samples().sup_norm()));
    out.push_str(&format!("  size bound |Q|^(-1/p) = {}\n", atom.size_bound()));
    out.push_str(&format!(
        "  max moment residual = {}\n",
        atom.max_moment_residual()
    ));
    out.push_str(&format!("  support exact: {}\n", atom.support_is_exact()));

    if let Some(target) = &cli.out {
        let mut file = fs::File::create(target)?;
        write_grid_function(&mut file, atom.samples())?;
        out.push_str(&format!("  wrote samples to {}\n", target.display()));
    }
    Ok(out)
}

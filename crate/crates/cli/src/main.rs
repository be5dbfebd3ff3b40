use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use spherical_sec::cloud::{entropy_seed, seeded_rng, shuffle};
use spherical_sec::geodata::{
    read_cloud, write_cloud_csv, write_result, CloudFormat, OutputFormat, ResultRecord,
};
use spherical_sec::synth::Rectangle;
use spherical_sec::timing::{self, BenchConfig};
use spherical_sec::{solve, GeoCoordinate, SolveOptions, SolveOutcome};

const EXIT_INPUT: u8 = 1;
const EXIT_FULL_SPHERE: u8 = 2;

/// Smallest enclosing circles of point clouds on the sphere.
#[derive(Debug, Parser)]
#[command(name = "spherical-sec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one cloud. Exit status 0: enclosed, 2: not in a hemisphere, 1: bad input.
    Solve(SolveArgs),
    /// Print a random lon,lat cloud sampled uniformly in a rectangle.
    Gen(GenArgs),
    /// Time solves on rectangle clouds of several sizes; prints n,run_index,seconds.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// CSV or GeoJSON file; `-` or nothing reads CSV from standard input.
    input: Option<PathBuf>,
    /// Overrides format detection from the file extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    #[arg(long)]
    seed: Option<u64>,
    /// Skip the full-sphere scan; only valid if the cloud fits in a hemisphere.
    #[arg(long)]
    assume_hemisphere: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also report the radius in km on a sphere of this radius.
    #[arg(long, num_args = 0..=1, default_missing_value = "6371.0088", value_name = "KM")]
    sphere_radius_km: Option<f64>,
}

#[derive(Debug, Clone, Args)]
struct RectangleArgs {
    #[arg(long, default_value_t = 90.0)]
    lon_span: f64,
    #[arg(long, default_value_t = 60.0)]
    lat_span: f64,
    /// Rectangle center as `lon,lat` in degrees.
    #[arg(long, default_value = "0,0", value_parser = parse_center, allow_hyphen_values = true)]
    center: GeoCoordinate,
}

impl RectangleArgs {
    fn rectangle(&self) -> Rectangle {
        Rectangle {
            center: self.center,
            lon_span: self.lon_span,
            lat_span: self.lat_span,
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    rectangle: RectangleArgs,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "100000,200000,500000,1000000"
    )]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = timing::DEFAULT_REPEATS)]
    repeats: usize,
    #[command(flatten)]
    rectangle: RectangleArgs,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    assume_hemisphere: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Csv,
    Geojson,
}

fn parse_center(s: &str) -> Result<GeoCoordinate, String> {
    let (lon, lat) = s
        .split_once(',')
        .ok_or_else(|| format!("expected lon,lat, got {s:?}"))?;
    let lon: f64 = lon.trim().parse().map_err(|e| format!("longitude: {e}"))?;
    let lat: f64 = lat.trim().parse().map_err(|e| format!("latitude: {e}"))?;
    GeoCoordinate::new(lon, lat).map_err(|e| e.to_string())
}

fn effective_seed(seed: Option<u64>) -> u64 {
    let seed = seed.unwrap_or_else(entropy_seed);
    eprintln!("seed: {seed}");
    seed
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Gen(args) => cmd_gen(args).map(|()| ExitCode::SUCCESS),
        Command::Bench(args) => cmd_bench(args).map(|()| ExitCode::SUCCESS),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(EXIT_INPUT)
    })
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    let from_stdin = args.input.as_ref().is_none_or(|p| p.as_os_str() == "-");
    let format = match (args.input_format, &args.input) {
        (Some(InputFormat::Csv), _) => CloudFormat::Csv,
        (Some(InputFormat::Geojson), _) => CloudFormat::GeoJson,
        (None, Some(path)) if !from_stdin => CloudFormat::from_path(path),
        (None, _) => CloudFormat::Csv,
    };
    let mut points = if from_stdin {
        if format != CloudFormat::Csv {
            bail!("standard input accepts CSV only");
        }
        read_cloud(io::stdin().lock(), format).context("reading standard input")?
    } else {
        let path = args.input.as_ref().expect("path given");
        let file =
            std::fs::File::open(path).with_context(|| format!("opening {}", path.display()))?;
        read_cloud(io::BufReader::new(file), format)
            .with_context(|| format!("reading {}", path.display()))?
    };
    if let Some(km) = args.sphere_radius_km {
        if !(km.is_finite() && km > 0.0) {
            bail!("sphere radius must be positive, got {km}");
        }
    }

    let seed = effective_seed(args.seed);
    shuffle(&mut points, seed);
    let options = SolveOptions {
        hemisphere_known: args.assume_hemisphere,
    };
    let outcome = solve(&points, options)?;
    let record = ResultRecord::from_outcome(&outcome, points.len(), seed, args.sphere_radius_km);
    let output = write_result(
        &record,
        match args.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        },
    );
    io::stdout().write_all(output.as_bytes())?;

    match outcome {
        SolveOutcome::Enclosed(_) => Ok(ExitCode::SUCCESS),
        SolveOutcome::NotInHemisphere(verdict) => {
            eprintln!("not contained in a hemisphere (state {})", verdict.state);
            for w in &verdict.witnesses {
                let g = w.to_geo();
                eprintln!("witness: {},{}", g.lon, g.lat);
            }
            Ok(ExitCode::from(EXIT_FULL_SPHERE))
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    if args.n == 0 {
        bail!("--n must be at least 1");
    }
    let rectangle = args.rectangle.rectangle();
    rectangle.validate()?;
    let seed = effective_seed(args.seed);
    let points = rectangle.sample(&mut seeded_rng(seed), args.n)?;
    io::stdout().write_all(write_cloud_csv(&points).as_bytes())?;
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    if args.sizes.is_empty() || args.sizes.contains(&0) {
        bail!("--sizes must list positive cloud sizes");
    }
    let rectangle = args.rectangle.rectangle();
    rectangle.validate()?;
    let config = BenchConfig {
        sizes: args.sizes,
        repeats: args.repeats,
        rectangle,
        seed: effective_seed(args.seed),
        options: SolveOptions {
            hemisphere_known: args.assume_hemisphere,
        },
    };
    let rows = timing::run_bench(&config)?;
    io::stdout().write_all(timing::rows_to_csv(&rows).as_bytes())?;
    for (n, t) in timing::median_times(&rows) {
        eprintln!("median n={n}: {t:.6} s");
    }
    if let Some(slope) = timing::loglog_slope(&rows) {
        eprintln!("log-log slope: {slope:.3}");
    }
    Ok(())
}

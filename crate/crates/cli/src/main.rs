use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use wavemult::msf_dimension::{symmetric_window, uniform_midpoints};
use wavemult::report::{
    write_agreement_csv, write_step_csv, AgreementJson, CatalogEntryJson, CoreEquivalenceJson,
    MultiplicityJson, SigmaJson, StepFunctionJson, WaveletSetReportJson,
};
use wavemult::{
    catalog, core_equivalent_exact, dimension_step_function, dimension_sum, gram_schmidt, is_wavelet_set,
    parse_scalar, parse_set, verify_m_equals_d, Error, IntervalSet, Result, SigmaMap, SpectralProfile64,
    WaveletSet, CATALOG_NAMES,
};

/// Exact wavelet-set analysis and numerical multiplicity checks.
///
/// Set arguments take either a catalog name (see `catalog`) or an expression
/// such as `[-1/4pi,-1/8pi),[15/8pi,15/4pi)`.
#[derive(Parser, Debug)]
#[command(name = "wavemult", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check translation and dilation congruence of a set.
    VerifySet {
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        name: Option<String>,
        #[arg(long)]
        set: Option<String>,
    },
    /// Dimension function: exact step function (`--set`) or numerical grid (`--wavelet`).
    Dimfn(DimfnArgs),
    /// Multiplicity at one point, with the Gram-Schmidt norms `h_j`.
    Multiplicity {
        #[command(flatten)]
        numeric: NumericArgs,
        /// Point in [-pi, pi), e.g. `1/5pi`.
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// The bijection `W1 -> W2` effected by 2pi translations, optionally its power.
    Sigma {
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(long)]
        power: Option<u32>,
    },
    /// Compare exact dimension functions of two wavelet sets on a window.
    CoreEquiv {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// List the built-in wavelet sets.
    Catalog,
}

#[derive(Args, Debug)]
struct NumericArgs {
    /// `msf:NAME`, `msf:EXPR` or `meyer`.
    #[arg(long)]
    wavelet: String,
    /// Number of dilation scales.
    #[arg(long = "J", default_value_t = 16)]
    scales: u32,
    /// Fiber truncation radius.
    #[arg(long = "K", default_value_t = 8)]
    radius: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug)]
struct DimfnArgs {
    #[arg(long, conflicts_with = "wavelet", required_unless_present = "wavelet")]
    set: Option<String>,
    #[arg(long)]
    wavelet: Option<String>,
    /// Defaults to [pi/64, pi) and [-pi, -pi/64).
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
    #[arg(long, default_value_t = 64)]
    grid: usize,
    #[arg(long = "J", default_value_t = 16)]
    scales: u32,
    #[arg(long = "K", default_value_t = 8)]
    radius: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Also write the result as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    detail: String,
}

fn fail(kind: &str, detail: String, code: u8) -> ExitCode {
    let body = ErrorJson { error: kind, detail };
    eprintln!("{}", serde_json::to_string(&body).expect("serializable"));
    ExitCode::from(code)
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Output(e.to_string()))?;
    print_out(&text)?;
    Ok(())
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn print_out(text: &str) -> Result<()> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Catalog name or set expression.
fn resolve_set(text: &str) -> Result<IntervalSet> {
    if CATALOG_NAMES.contains(&text.trim()) {
        catalog(text.trim())
    } else {
        parse_set(text)
    }
}

fn resolve_wavelet_set(text: &str) -> Result<WaveletSet> {
    WaveletSet::new(resolve_set(text)?)
}

fn resolve_profile(text: &str) -> Result<SpectralProfile64> {
    match text.trim() {
        "meyer" => Ok(SpectralProfile64::meyer()),
        other => match other.strip_prefix("msf:") {
            Some(set) => Ok(SpectralProfile64::msf(&resolve_wavelet_set(set)?)),
            None => Err(Error::InvalidArgument(format!(
                "unknown wavelet `{other}`; expected msf:NAME, msf:EXPR or meyer"
            ))),
        },
    }
}

fn resolve_window(text: Option<&str>) -> Result<IntervalSet> {
    match text {
        Some(t) => parse_set(t),
        None => Ok(symmetric_window(6)),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::VerifySet { name, set } => {
            let w = match (name, set) {
                (Some(n), _) => catalog(&n)?,
                (None, Some(s)) => resolve_set(&s)?,
                (None, None) => unreachable!("clap requires one of --name/--set"),
            };
            let report = is_wavelet_set(&w)?;
            emit(&WaveletSetReportJson::from(&report))?;
            Ok(verdict(report.accepted()))
        }
        Command::Dimfn(args) => dimfn(args),
        Command::Multiplicity { numeric, xi } => {
            let profile = resolve_profile(&numeric.wavelet)?;
            let xi = parse_scalar(&xi)?;
            let x = xi.to_f64();
            let state = gram_schmidt(&profile, x, numeric.scales, numeric.radius, numeric.tol);
            let sum = dimension_sum(&profile, x, numeric.scales, numeric.radius);
            emit(&MultiplicityJson::new(
                &xi,
                &state,
                sum.value,
                sum.truncation_exact,
            ))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma { w1, w2, power } => {
            let sigma = SigmaMap::build(&resolve_wavelet_set(&w1)?, &resolve_wavelet_set(&w2)?);
            match power {
                None => {
                    emit(&SigmaJson::new(&sigma, None))?;
                    Ok(ExitCode::SUCCESS)
                }
                Some(p) => {
                    let v = sigma.power_in_local_commutant(p)?;
                    emit(&SigmaJson::new(&sigma, Some(&v)))?;
                    Ok(verdict(v.holds))
                }
            }
        }
        Command::CoreEquiv { a, b, window } => {
            let c = core_equivalent_exact(
                &resolve_wavelet_set(&a)?,
                &resolve_wavelet_set(&b)?,
                &parse_set(&window)?,
            )?;
            emit(&CoreEquivalenceJson::from(&c))?;
            Ok(verdict(c.equivalent))
        }
        Command::Catalog => {
            let entries: Vec<CatalogEntryJson> = CATALOG_NAMES
                .iter()
                .map(|n| {
                    catalog(n).map(|s| CatalogEntryJson {
                        name: n.to_string(),
                        set: s.to_string(),
                    })
                })
                .collect::<Result<_>>()?;
            emit(&entries)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn dimfn(args: DimfnArgs) -> Result<ExitCode> {
    let window = resolve_window(args.window.as_deref())?;
    if let Some(set) = &args.set {
        let f = dimension_step_function(&resolve_wavelet_set(set)?, &window)?;
        if let Some(path) = &args.csv {
            write_step_csv(&f, File::create(path)?)?;
        }
        emit(&StepFunctionJson::from(&f))?;
        return Ok(ExitCode::SUCCESS);
    }
    let profile = resolve_profile(args.wavelet.as_deref().expect("clap requires --set or --wavelet"))?;
    if args.grid == 0 {
        return Err(Error::InvalidArgument("--grid must be positive".into()));
    }
    let grid = uniform_midpoints(&window, args.grid);
    let report = verify_m_equals_d(&profile, &grid, args.scales, args.radius, args.tol)?;
    let json = AgreementJson::from(&report);
    if let Some(path) = &args.csv {
        write_agreement_csv(&json, File::create(path)?)?;
    }
    emit(&json)?;
    Ok(verdict(json.all_agree))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = print_out(e.render().to_string().trim_end());
                    ExitCode::SUCCESS
                }
                _ => fail("usage", e.render().to_string().trim().to_string(), 2),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => fail(e.kind(), e.to_string(), if e.is_usage() { 2 } else { 3 }),
    }
}

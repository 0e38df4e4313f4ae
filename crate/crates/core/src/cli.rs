//! Command-line front end: `prob`, `figures` and `verify`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::{figure_curves, Figure, Table, DEFAULT_GRID};
use crate::formats::{parse_json, PrepJson, StatesFile, UnitaryJson};
use crate::scattering::{
    output_distribution, output_probability, raw_probability, InputSpec, Interferometer,
    ModeOccupation,
};
use crate::states::DensityMatrix;
use crate::verify::{run_suite, Suite, SuiteReport, DEFAULT_SEED, SEED_ENV};

/// Significant digits of every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "mpi-sim", version, about = "Multiphoton interference of photons with mixed internal states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Output probabilities for single photons entering the first modes.
    Prob(ProbArgs),
    /// Write figure curves as CSV files.
    Figures(FiguresArgs),
    /// Run the seeded consistency suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    /// `tritter`, `bs`, or a JSON file `{"matrix": [[[re, im], ...], ...]}`.
    #[arg(long)]
    pub unitary: Option<String>,
    /// Named preparation of three photons: `flower:THETA` or `mixed:P`.
    #[arg(long, conflicts_with = "states")]
    pub prep: Option<String>,
    /// JSON file with explicit states or a named preparation.
    #[arg(long)]
    pub states: Option<PathBuf>,
    /// Output occupation such as `1,1,1`; omit for the full distribution.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON scenario file; command-line flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    /// Figure to generate (repeatable); all figures when omitted.
    #[arg(long = "id")]
    pub ids: Vec<String>,
    /// Samples per curve.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Seed for all suites; defaults to `$MPI_SIM_SEED`, then a fixed value.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Trials per randomized suite instead of each suite's default.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Suite to run (repeatable); all suites when omitted.
    #[arg(long = "suite")]
    pub suites: Vec<String>,
}

/// Contents of a `--config` file.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub unitary: Option<UnitarySpec>,
    pub states: Option<StatesFile>,
    pub pattern: Option<Vec<usize>>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UnitarySpec {
    Named(String),
    Explicit(UnitaryJson),
}

/// Process exit status for an error.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Consistency(_) => 3,
        Error::Write { .. } => 4,
        _ => 2,
    }
}

/// Rounds to [`SIGNIFICANT_DIGITS`] and prints the shortest decimal that
/// reads back as the rounded value; `-0` prints as `0`.
pub fn format_number(x: f64) -> String {
    let r = round_significant(x);
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

fn round_significant(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// CSV text of a table: header row, then one line per row, LF endings.
pub fn table_to_csv(table: &Table) -> String {
    let mut s = table.columns.join(",");
    s.push('\n');
    for row in &table.rows {
        s.push_str(&row.iter().map(|&x| format_number(x)).collect::<Vec<_>>().join(","));
        s.push('\n');
    }
    s
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        what: path.display().to_string(),
        reason: e.to_string(),
    })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Write {
        path: path.display().to_string(),
        source,
    })
}

fn parse_named_unitary(name: &str) -> Result<Interferometer> {
    match name {
        "tritter" => Ok(Interferometer::tritter()),
        "bs" => Ok(Interferometer::beam_splitter()),
        path => parse_json::<UnitaryJson>(path, &read_file(Path::new(path))?)?.to_interferometer(),
    }
}

/// Parses `flower:THETA` or `mixed:P`.
pub fn parse_prep(spec: &str) -> Result<PrepJson> {
    let bad = |reason: &str| Error::Parse {
        what: format!("preparation `{spec}`"),
        reason: reason.into(),
    };
    let (kind, value) = spec.split_once(':').ok_or_else(|| bad("expected KIND:VALUE"))?;
    let value: f64 = value.trim().parse().map_err(|_| bad("value is not a number"))?;
    match kind.trim() {
        "flower" => Ok(PrepJson::Flower { theta: value }),
        "mixed" => Ok(PrepJson::Mixed { p: value }),
        _ => Err(bad("kind must be `flower` or `mixed`")),
    }
}

/// Parses a comma-separated occupation such as `1,1,0`.
pub fn parse_pattern(spec: &str) -> Result<Vec<usize>> {
    spec.split(',')
        .map(|c| {
            c.trim().parse::<i64>().map_err(|_| Error::Parse {
                what: format!("pattern `{spec}`"),
                reason: format!("`{c}` is not an integer"),
            })
        })
        .collect::<Result<Vec<i64>>>()
        .and_then(|v| ModeOccupation::from_signed(&v))
        .map(|o| o.counts().to_vec())
}

#[derive(Serialize)]
struct PatternRecord {
    pattern: Vec<usize>,
    probability: f64,
}

#[derive(Serialize)]
struct SingleRecord {
    pattern: Vec<usize>,
    probability: f64,
    raw: [f64; 2],
}

#[derive(Serialize)]
struct DistributionRecord {
    modes: usize,
    photons: usize,
    distribution: Vec<PatternRecord>,
    total: f64,
}

/// Resolved `prob` scenario.
struct ProbScenario {
    u: Interferometer,
    states: Vec<DensityMatrix>,
    pattern: Option<Vec<usize>>,
    format: Format,
    out: Option<PathBuf>,
}

fn resolve_prob(args: &ProbArgs) -> Result<ProbScenario> {
    let config = match &args.config {
        Some(p) => parse_json::<ScenarioConfig>(&p.display().to_string(), &read_file(p)?)?,
        None => ScenarioConfig::default(),
    };
    let u = match (&args.unitary, config.unitary) {
        (Some(name), _) => parse_named_unitary(name)?,
        (None, Some(UnitarySpec::Named(name))) => parse_named_unitary(&name)?,
        (None, Some(UnitarySpec::Explicit(m))) => m.to_interferometer()?,
        (None, None) => Interferometer::tritter(),
    };
    let states = if let Some(prep) = &args.prep {
        parse_prep(prep)?.to_states()?
    } else if let Some(path) = &args.states {
        parse_json::<StatesFile>(&path.display().to_string(), &read_file(path)?)?.to_states()?
    } else if let Some(s) = config.states {
        s.to_states()?
    } else {
        return Err(Error::Validation("give --prep or --states".into()));
    };
    let pattern = match &args.pattern {
        Some(p) => Some(parse_pattern(p)?),
        None => config.pattern,
    };
    Ok(ProbScenario {
        u,
        states,
        pattern,
        format: args.format.or(config.format).unwrap_or(Format::Csv),
        out: args.out.clone().or(config.out),
    })
}

/// Runs `prob` and returns the emitted text.
pub fn prob_output(args: &ProbArgs) -> Result<(String, Option<PathBuf>)> {
    let sc = resolve_prob(args)?;
    let m = sc.u.modes();
    let input = InputSpec::first_modes(m, sc.states)?;
    let header = |extra: &str| {
        let mut cols: Vec<String> = (1..=m).map(|k| format!("n{k}")).collect();
        cols.push(extra.into());
        cols.join(",") + "\n"
    };
    let row = |counts: &[usize], p: f64| {
        let mut cells: Vec<String> = counts.iter().map(usize::to_string).collect();
        cells.push(format_number(p));
        cells.join(",") + "\n"
    };
    let text = match sc.pattern {
        Some(pattern) => {
            let occ = ModeOccupation::new(pattern);
            let p = output_probability(&sc.u, &input, &occ)?;
            match sc.format {
                Format::Csv => header("probability") + &row(occ.counts(), p),
                Format::Json => {
                    let raw = raw_probability(&sc.u, &input, &occ)?;
                    to_json(&SingleRecord {
                        pattern: occ.counts().to_vec(),
                        probability: round_significant(p),
                        raw: [round_significant(raw.re), round_significant(raw.im)],
                    })
                }
            }
        }
        None => {
            let dist = output_distribution(&sc.u, &input)?;
            match sc.format {
                Format::Csv => {
                    let mut s = header("probability");
                    for (occ, p) in dist.outcomes() {
                        s.push_str(&row(occ.counts(), *p));
                    }
                    s
                }
                Format::Json => to_json(&DistributionRecord {
                    modes: m,
                    photons: input.photons(),
                    distribution: dist
                        .outcomes()
                        .iter()
                        .map(|(o, p)| PatternRecord {
                            pattern: o.counts().to_vec(),
                            probability: round_significant(*p),
                        })
                        .collect(),
                    total: round_significant(dist.total()),
                }),
            }
        }
    };
    Ok((text, sc.out))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize") + "\n"
}

/// Writes one CSV per requested figure and returns the paths.
pub fn write_figures(args: &FiguresArgs) -> Result<Vec<PathBuf>> {
    let figures = if args.ids.is_empty() {
        Figure::ALL.to_vec()
    } else {
        args.ids.iter().map(|s| s.parse()).collect::<Result<Vec<Figure>>>()?
    };
    let tables = figures
        .iter()
        .map(|&f| Ok((f, figure_curves(f, args.grid)?)))
        .collect::<Result<Vec<_>>>()?;
    if !args.out_dir.is_dir() {
        fs::create_dir_all(&args.out_dir).map_err(|source| Error::Write {
            path: args.out_dir.display().to_string(),
            source,
        })?;
    }
    tables
        .iter()
        .map(|(f, t)| {
            let path = args.out_dir.join(format!("{}.csv", f.id()));
            write_file(&path, &table_to_csv(t))?;
            Ok(path)
        })
        .collect()
}

/// Seed from the flag, then the environment, then the default.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse {
            what: SEED_ENV.into(),
            reason: format!("`{v}` is not an unsigned integer"),
        }),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

pub fn run_verify(args: &VerifyArgs) -> Result<Vec<SuiteReport>> {
    let seed = resolve_seed(args.seed)?;
    if args.trials == Some(0) {
        return Err(Error::Validation("--trials must be positive".into()));
    }
    let suites = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites.iter().map(|s| s.parse()).collect::<Result<Vec<Suite>>>()?
    };
    suites.into_iter().map(|s| run_suite(s, seed, args.trials)).collect()
}

/// Executes a parsed command line, writing normal output to `stdout`.
/// Returns the process exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<u8> {
    let emit = |stdout: &mut dyn Write, text: &str| {
        stdout.write_all(text.as_bytes()).map_err(|source| Error::Write {
            path: "<stdout>".into(),
            source,
        })
    };
    match &cli.command {
        Command::Prob(args) => {
            let (text, out) = prob_output(args)?;
            match out {
                Some(path) => write_file(&path, &text)?,
                None => emit(stdout, &text)?,
            }
            Ok(0)
        }
        Command::Figures(args) => {
            for path in write_figures(args)? {
                emit(stdout, &format!("wrote {}\n", path.display()))?;
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let reports = run_verify(args)?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            for r in &reports {
                emit(stdout, &format!("{r}\n"))?;
            }
            if failed == 0 {
                emit(stdout, &format!("passed: {} of {}\n", reports.len(), reports.len()))?;
                Ok(0)
            } else {
                emit(stdout, &format!("failed: {failed} of {}\n", reports.len()))?;
                Ok(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(-1e-30), "-0.000000000000000000000000000001");
        assert_eq!(format_number(2.0 / 9.0), "0.222222222222");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(1.0), "1");
    }

    #[test]
    fn prep_and_pattern_parsing() {
        assert!(matches!(parse_prep("flower:0.684").unwrap(), PrepJson::Flower { theta } if theta == 0.684));
        assert!(matches!(parse_prep("mixed: 0.8").unwrap(), PrepJson::Mixed { p } if p == 0.8));
        assert!(parse_prep("flower").is_err());
        assert!(parse_prep("leaf:1").is_err());
        assert_eq!(parse_pattern("1, 2,0").unwrap(), vec![1, 2, 0]);
        assert!(parse_pattern("1,-1").is_err());
        assert!(parse_pattern("1,a").is_err());
    }

    #[test]
    fn csv_layout() {
        let t = Table {
            columns: vec!["x".into(), "y".into()],
            rows: vec![vec![0.0, 0.25], vec![1.0, -0.0]],
        };
        assert_eq!(table_to_csv(&t), "x,y\n0,0.25\n1,0\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Validation("x".into())), 2);
        assert_eq!(exit_code(&Error::NotUnitary(0.1)), 2);
        assert_eq!(exit_code(&Error::Consistency("x".into())), 3);
        let io = std::io::Error::other("x");
        assert_eq!(exit_code(&Error::Write { path: "p".into(), source: io }), 4);
    }
}

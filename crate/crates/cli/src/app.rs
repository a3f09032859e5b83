//! Command-line interface.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use confed_elo::filter::check_excluded_playoffs;
use confed_elo::scenario::{diff_sweeps, run_pipeline, split_last_round, SweepGrid};
use confed_elo::{Match, Policy, SeedingName, SeedingScheme};

use crate::config::{CliConfig, FileConfig, Overrides};
use crate::error::AppError;
use crate::export;
use crate::ingest;
use crate::parallel::run_sweep_par;
use crate::report;

#[derive(Parser, Debug)]
#[command(name = "confed-elo", version, about = "Rate football confederations from World Cup results and allocate slots")]
pub struct Cli {
    /// Match CSV to use instead of the bundled dataset
    #[arg(long, global = true, value_name = "PATH")]
    pub dataset: Option<PathBuf>,
    /// JSON configuration file
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub policy: Option<PolicyArg>,
    #[arg(long, global = true, value_enum)]
    pub seeding: Option<SeedingArg>,
    /// Last edition in the sample
    #[arg(long, global = true, value_name = "YEAR")]
    pub end: Option<u16>,
    /// Keep matches from the last round of the first group stage
    #[arg(long, global = true)]
    pub include_last_round: bool,
    /// Leave slots above a cap unallocated
    #[arg(long, global = true)]
    pub no_redistribute_cap_excess: bool,
    /// Directory for export files
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the dataset and reconcile its counts
    Validate,
    /// Print the rating timeline
    Rate,
    /// Print the slot allocation
    Allocate,
    /// Allocate over a grid of scenarios
    Sweep(GridArgs),
    /// Quota changes from including the last group round, or between two sweep files
    Diff(DiffArgs),
}

#[derive(Args, Debug, Default)]
pub struct GridArgs {
    /// Comma-separated end editions
    #[arg(long, value_delimiter = ',', value_name = "YEARS")]
    pub ends: Option<Vec<u16>>,
    #[arg(long, value_delimiter = ',', value_enum)]
    pub policies: Option<Vec<PolicyArg>>,
    #[arg(long, value_delimiter = ',', value_enum)]
    pub seedings: Option<Vec<SeedingArg>>,
    #[arg(long, value_enum)]
    pub last_round: Option<LastRoundArg>,
}

#[derive(Args, Debug)]
pub struct DiffArgs {
    /// Sweep CSV used as the baseline
    #[arg(long, requires = "variant", value_name = "PATH")]
    pub baseline: Option<PathBuf>,
    /// Sweep CSV compared against the baseline
    #[arg(long, requires = "baseline", value_name = "PATH")]
    pub variant: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', value_name = "YEARS")]
    pub ends: Option<Vec<u16>>,
    #[arg(long, value_delimiter = ',', value_enum)]
    pub policies: Option<Vec<PolicyArg>>,
    #[arg(long, value_delimiter = ',', value_enum)]
    pub seedings: Option<Vec<SeedingArg>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Round,
    Stage,
    #[value(name = "4year")]
    FourYear,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Policy {
        match p {
            PolicyArg::Round => Policy::Round,
            PolicyArg::Stage => Policy::Stage,
            PolicyArg::FourYear => Policy::FourYear,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeedingArg {
    S0,
    S1,
    S2,
}

impl From<SeedingArg> for SeedingName {
    fn from(s: SeedingArg) -> SeedingName {
        match s {
            SeedingArg::S0 => SeedingName::S0,
            SeedingArg::S1 => SeedingName::S1,
            SeedingArg::S2 => SeedingName::S2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LastRoundArg {
    Exclude,
    Include,
    Both,
}

impl Cli {
    pub fn resolve(&self) -> Result<CliConfig, AppError> {
        let file = match &self.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        CliConfig::resolve(
            file,
            Overrides {
                dataset: self.dataset.clone(),
                out: self.out.clone(),
                policy: self.policy.map(Into::into),
                seeding: self.seeding.map(Into::into),
                end: self.end,
                include_last_round: self.include_last_round,
                no_redistribute_cap_excess: self.no_redistribute_cap_excess,
            },
        )
    }
}

pub fn load_dataset(path: Option<&Path>) -> Result<Vec<Match>, AppError> {
    match path {
        None => Ok(ingest::parse_matches(ingest::BUNDLED_CSV.as_bytes())?),
        Some(p) if !p.exists() => Err(AppError::DatasetNotFound(p.to_path_buf())),
        Some(p) => {
            let f = std::fs::File::open(p).map_err(|source| AppError::Io {
                path: p.to_path_buf(),
                source,
            })?;
            Ok(ingest::parse_matches(std::io::BufReader::new(f))?)
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> AppError + '_ {
    move |source| AppError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Write `content` to `<out>/<name>`.
fn write_export(dir: &Path, name: &str, content: &str) -> Result<PathBuf, AppError> {
    std::fs::create_dir_all(dir).map_err(io_err(dir))?;
    let path = dir.join(name);
    std::fs::write(&path, content).map_err(io_err(&path))?;
    Ok(path)
}

fn emit(w: &mut dyn Write, s: &str) -> Result<(), AppError> {
    w.write_all(s.as_bytes()).map_err(io_err(Path::new("<stdout>")))
}

fn seedings(args: &Option<Vec<SeedingArg>>, flag: Option<SeedingArg>) -> Vec<SeedingScheme> {
    match (args, flag) {
        (Some(v), _) => v.iter().filter_map(|&s| SeedingScheme::named(s.into())).collect(),
        (None, Some(s)) => SeedingScheme::named(s.into()).into_iter().collect(),
        (None, None) => vec![SeedingScheme::s0(), SeedingScheme::s1(), SeedingScheme::s2()],
    }
}

fn policies(args: &Option<Vec<PolicyArg>>, flag: Option<PolicyArg>) -> Vec<Policy> {
    match (args, flag) {
        (Some(v), _) => v.iter().map(|&p| p.into()).collect(),
        (None, Some(p)) => vec![p.into()],
        (None, None) => Policy::ALL.to_vec(),
    }
}

fn check_grid(grid: &SweepGrid) -> Result<(), AppError> {
    grid.validate().map_err(|e| AppError::Usage(e.to_string()))
}

/// Run a parsed command line. Normal output goes to `out`, notes to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), AppError> {
    let cfg = cli.resolve()?;
    let matches = load_dataset(cfg.dataset.as_deref())?;
    let sc = &cfg.scenario;
    match &cli.command {
        Command::Validate => {
            check_excluded_playoffs(&matches)?;
            let base = report::Baseline::new(&matches);
            let rec = report::reconcile(&base);
            let text = report::validate_text(&base, &rec, matches.len());
            if let Some(dir) = &cfg.out {
                write_export(dir, "reconciliation.txt", &text)?;
                write_export(dir, "reconciliation.md", &report::reconciliation_markdown(&base, &rec))?;
            }
            emit(out, &text)
        }
        Command::Rate => {
            let (timeline, _) = run_pipeline(&matches, sc)?;
            let csv = export::timeline_csv(&timeline);
            let ratings = report::ratings_text(timeline.last());
            match &cfg.out {
                Some(dir) => {
                    write_export(dir, "timeline.csv", &csv)?;
                    emit(out, &ratings)
                }
                None => {
                    emit(out, &csv)?;
                    emit(err, &ratings)
                }
            }
        }
        Command::Allocate => {
            let (_, alloc) = run_pipeline(&matches, sc)?;
            let json = serde_json::to_string_pretty(&export::allocation_json(&alloc)).expect("json value") + "\n";
            let table = report::allocation_text(&alloc);
            match &cfg.out {
                Some(dir) => {
                    write_export(dir, "allocation.json", &json)?;
                    emit(out, &table)
                }
                None => {
                    emit(out, &json)?;
                    emit(err, &table)
                }
            }
        }
        Command::Sweep(args) => {
            let last_round = match args.last_round {
                Some(LastRoundArg::Exclude) => vec![false],
                Some(LastRoundArg::Include) => vec![true],
                Some(LastRoundArg::Both) => vec![false, true],
                None => vec![sc.include_last_group_round],
            };
            let grid = SweepGrid {
                end_editions: args.ends.clone().unwrap_or_else(|| SweepGrid::figures().end_editions),
                policies: policies(&args.policies, cli.policy),
                seedings: seedings(&args.seedings, cli.seeding),
                last_round,
            };
            check_grid(&grid)?;
            let result = run_sweep_par(&matches, &grid, sc)?;
            let csv = export::sweep_csv(&result);
            match &cfg.out {
                Some(dir) => {
                    write_export(dir, "sweep.csv", &csv)?;
                    write_export(dir, "figure.csv", &export::figure_csv(&result))?;
                    emit(out, &format!("{} allocations written to {}\n", result.len(), dir.display()))
                }
                None => emit(out, &csv),
            }
        }
        Command::Diff(args) => {
            let (a, b) = match (&args.baseline, &args.variant) {
                (Some(pa), Some(pb)) => {
                    let read = |p: &PathBuf| -> Result<_, AppError> {
                        let f = std::fs::File::open(p).map_err(io_err(p))?;
                        export::read_sweep_csv(f)
                    };
                    (read(pa)?, read(pb)?)
                }
                _ => {
                    let grid = SweepGrid {
                        end_editions: args.ends.clone().unwrap_or_else(|| vec![sc.end_edition]),
                        policies: policies(&args.policies, cli.policy),
                        seedings: seedings(&args.seedings, cli.seeding),
                        last_round: vec![false, true],
                    };
                    check_grid(&grid)?;
                    split_last_round(&run_sweep_par(&matches, &grid, sc)?)
                }
            };
            let d = diff_sweeps(&a, &b)?;
            let csv = export::diff_csv(&d);
            match &cfg.out {
                Some(dir) => {
                    write_export(dir, "diff.csv", &csv)?;
                    let mut table = String::new();
                    for (k, m) in &d {
                        let _ = write!(table, "{:<6}{:<7}{:<4}", k.end_edition, k.policy.to_string(), k.seeding.to_string());
                        for (c, x) in m {
                            let _ = write!(table, "  {c} {x:+.2}");
                        }
                        table.push('\n');
                    }
                    emit(out, &table)
                }
                None => emit(out, &csv),
            }
        }
    }
}

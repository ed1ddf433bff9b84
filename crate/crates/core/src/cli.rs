//! The `fundcomp` command line.
//!
//! Exit codes: 0 on success, 1 for invalid input or an undefined result,
//! 2 when reading input or writing output fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{
    fund_report, FeeReport, FeeScenario, ProjectionReport, WealthProxyScenario, WealthReport,
};
use crate::compounding::RateSchedule;
use crate::error::{Error, Result};
use crate::ingestion::{builtin, load_series, write_report, ReportFormat, SeriesDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_IO: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fundcomp",
    version,
    about = "Naive vs size-profit compounded returns for funds with discontinuous sizes"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    pub format: ReportFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Yearly net returns, naive and size-profit compounding, accrual breakdown.
    Report(ReportArgs),
    /// Annualized growth between two wealth figures.
    #[command(allow_negative_numbers = true)]
    Wealth {
        initial: f64,
        #[arg(value_name = "FINAL")]
        final_wealth: f64,
        years: u32,
        #[arg(long, default_value = "wealth proxy")]
        label: String,
    },
    /// Manager return after performance-fee redistribution.
    #[command(allow_negative_numbers = true)]
    Fees {
        stake: f64,
        size: f64,
        profit_rate: f64,
        fee: f64,
        insider_equity: f64,
    },
    /// Grow a value at a fixed annual rate (values in millions).
    #[command(allow_negative_numbers = true)]
    Project { value: f64, rate: f64, years: u32 },
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ReportArgs {
    /// CSV file with `year,fund_size,trading_profit` columns.
    #[arg(long, conflicts_with = "builtin")]
    pub input: Option<PathBuf>,
    /// Bundled dataset; `medallion` is used when no input is given.
    #[arg(long)]
    pub builtin: Option<String>,
    #[arg(long, default_value_t = 0.0)]
    pub financing_rate: f64,
    #[arg(long, default_value_t = 0.0)]
    pub deposit_rate: f64,
    /// First calendar year of the window.
    #[arg(long = "from")]
    pub from_year: Option<i32>,
    /// Last calendar year of the window.
    #[arg(long = "to")]
    pub to_year: Option<i32>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputSource {
    Path(PathBuf),
    Builtin(String),
}

/// Validated settings for the `report` subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub input: InputSource,
    pub financing_rate: f64,
    pub deposit_rate: f64,
    pub from_year: Option<i32>,
    pub to_year: Option<i32>,
    pub format: ReportFormat,
}

impl CliConfig {
    pub fn from_args(args: &ReportArgs, format: ReportFormat) -> Result<Self> {
        for (name, rate) in [
            ("financing", args.financing_rate),
            ("deposit", args.deposit_rate),
        ] {
            if rate.is_nan() || rate <= -1.0 || rate.is_infinite() {
                return Err(Error::InvalidRate {
                    schedule: name,
                    year_no: 1,
                    value: rate,
                });
            }
        }
        if let (Some(from), Some(to)) = (args.from_year, args.to_year) {
            if from > to {
                return Err(Error::InvertedYears { from, to });
            }
        }
        let input = match (&args.input, &args.builtin) {
            (Some(path), _) => InputSource::Path(path.clone()),
            (None, Some(name)) => InputSource::Builtin(name.clone()),
            (None, None) => InputSource::Builtin("medallion".to_string()),
        };
        Ok(Self {
            input,
            financing_rate: args.financing_rate,
            deposit_rate: args.deposit_rate,
            from_year: args.from_year,
            to_year: args.to_year,
            format,
        })
    }

    pub fn load(&self) -> Result<SeriesDocument> {
        match &self.input {
            InputSource::Path(path) => load_series(path),
            InputSource::Builtin(name) => builtin(name),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_io() {
        EXIT_IO
    } else {
        EXIT_INVALID
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code(&err)
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Report(args) => cmd_report(&CliConfig::from_args(args, cli.format)?, out),
        Command::Wealth {
            initial,
            final_wealth,
            years,
            label,
        } => cmd_wealth(
            &WealthProxyScenario::new(label.clone(), *initial, *final_wealth, *years),
            cli.format,
            out,
        ),
        Command::Fees {
            stake,
            size,
            profit_rate,
            fee,
            insider_equity,
        } => cmd_fees(
            FeeScenario {
                manager_stake: *stake,
                fund_size: *size,
                gross_profit_rate: *profit_rate,
                performance_fee: *fee,
                insider_equity: *insider_equity,
            },
            cli.format,
            out,
        ),
        Command::Project { value, rate, years } => {
            cmd_project(*value, *rate, *years, cli.format, out)
        }
    }
}

pub fn cmd_report(config: &CliConfig, out: &mut dyn Write) -> Result<()> {
    let doc = config.load()?;
    let series = &doc.series;
    let from = match config.from_year {
        Some(year) => series.year_no_of(year)?,
        None => 1,
    };
    let to = match config.to_year {
        Some(year) => series.year_no_of(year)?,
        None => series.len() as u32,
    };
    let rates = RateSchedule::flat_split(config.deposit_rate, config.financing_rate, series.len())?;
    let report = fund_report(&doc.source, &doc.unit_label, series, from, to, &rates)?;
    write_report(&report, config.format, out)
}

pub fn cmd_wealth(
    scenario: &WealthProxyScenario,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<()> {
    write_report(&WealthReport::evaluate(scenario)?, format, out)
}

pub fn cmd_fees(scenario: FeeScenario, format: ReportFormat, out: &mut dyn Write) -> Result<()> {
    write_report(&FeeReport::evaluate(scenario)?, format, out)
}

pub fn cmd_project(
    value: f64,
    rate: f64,
    years: u32,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<()> {
    write_report(
        &ProjectionReport::evaluate(value, rate, years)?,
        format,
        out,
    )
}

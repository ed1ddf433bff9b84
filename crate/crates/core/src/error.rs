use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building series, compounding them,
/// or moving them in and out of files.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{}", non_positive_size_message(*.year_no, *.size))]
    NonPositiveSize { year_no: Option<u32>, size: f64 },

    #[error("year {year_no}: {field} must be finite, got {value}")]
    NonFinite {
        year_no: u32,
        field: &'static str,
        value: f64,
    },

    #[error("fund series must contain at least one year")]
    EmptySeries,

    #[error("year numbers must run 1..N contiguously; found {found} at position {position}")]
    NonContiguousYearNo { position: usize, found: u32 },

    #[error("{sizes} fund sizes but {profits} trading profits")]
    ColumnLengthMismatch { sizes: usize, profits: usize },

    #[error("return sequence is empty")]
    EmptyReturns,

    #[error("return {value} at position {index} is at or below -100%")]
    ReturnBelowTotalLoss { index: usize, value: f64 },

    #[error("{schedule} rate {value} for year {year_no} must exceed -1")]
    InvalidRate {
        schedule: &'static str,
        year_no: u32,
        value: f64,
    },

    #[error(
        "rate schedule covers {deposit} deposit and {financing} financing years, series has {expected}"
    )]
    ScheduleLengthMismatch {
        expected: usize,
        deposit: usize,
        financing: usize,
    },

    #[error(
        "wiped-out fund: final value {final_value} is not positive, no annual growth rate exists"
    )]
    WipedOut { final_value: f64 },

    #[error("{what} must be positive, got {value}")]
    NonPositiveValue { what: &'static str, value: f64 },

    #[error("{what} must be finite, got {value}")]
    NonFiniteValue { what: &'static str, value: f64 },

    #[error("number of years must be at least 1")]
    ZeroYears,

    #[error("growth rate {rate} must exceed -1")]
    RateBelowTotalLoss { rate: f64 },

    #[error("window {from}..{to} is outside 1..{len} or inverted")]
    InvalidWindow { from: u32, to: u32, len: usize },

    #[error("window {from}-{to} starts after it ends")]
    InvertedYears { from: i32, to: i32 },

    #[error("calendar year {year} is outside the series range {first}..{last}")]
    YearOutOfRange { year: i32, first: i32, last: i32 },

    #[error("manager stake is zero; return on zero capital is undefined")]
    ZeroStake,

    #[error("{field} = {value} is outside {range}")]
    FractionOutOfRange {
        field: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("expected header `year,fund_size,trading_profit`, found columns [{}]", .found.join(", "))]
    Schema { found: Vec<String> },

    #[error("line {line}: column `{column}` holds `{value}`, which is not a valid {expected}")]
    Parse {
        line: u64,
        column: &'static str,
        value: String,
        expected: &'static str,
    },

    #[error("line {line}: fund_size for {year} must be positive, got {size}")]
    NonPositiveSizeAt { line: u64, year: i32, size: f64 },

    #[error("line {line}: year {year} appears more than once")]
    DuplicateYear { line: u64, year: i32 },

    #[error("line {line}: years are not contiguous, missing {}", join_years(.missing))]
    YearGap { line: u64, missing: Vec<i32> },

    #[error("line {line}: {message}")]
    Malformed { line: u64, message: String },

    #[error("document has a header but no data rows")]
    NoRows,

    #[error("unknown builtin dataset `{0}` (available: medallion)")]
    UnknownBuiltin(String),

    #[error("unknown report format `{0}` (expected text, csv or json)")]
    UnknownFormat(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the outside world rather than of the inputs.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io(_))
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Io(err.into())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        let line = err.position().map(|p| p.line());
        match err.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => Error::Malformed {
                line: line.unwrap_or(0),
                message: format!("{other:?}"),
            },
        }
    }
}

fn non_positive_size_message(year_no: Option<u32>, size: f64) -> String {
    match year_no {
        Some(year_no) => format!("year {year_no}: fund size must be positive, got {size}"),
        None => format!("fund size must be positive, got {size}"),
    }
}

fn join_years(years: &[i32]) -> String {
    years
        .iter()
        .map(i32::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

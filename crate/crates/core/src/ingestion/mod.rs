//! Getting fund series in and reports out: the CSV schema, the bundled
//! Medallion table, and text/CSV/JSON report writers.

mod csv_io;
mod medallion;
mod report;

pub use csv_io::{
    load_series, parse_series, parse_series_from, serialize_series, SeriesDocument, DEFAULT_UNIT,
    HEADER,
};
pub use medallion::{builtin_medallion, MEDALLION_BASE_YEAR, MEDALLION_SOURCE, MEDALLION_TABLE};
pub use report::{money, percent, scale_label, write_report, CsvTable, Report, ReportFormat};

use crate::error::{Error, Result};

/// Resolves a `--builtin` name.
pub fn builtin(name: &str) -> Result<SeriesDocument> {
    match name.to_ascii_lowercase().as_str() {
        "medallion" => Ok(builtin_medallion()),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

use std::fmt::Write as _;
use std::path::Path;

use csv::{ReaderBuilder, StringRecord, Trim};
use serde::{Deserialize, Serialize};

use crate::compounding::FundSeries;
use crate::error::{Error, Result};

pub const HEADER: [&str; 3] = ["year", "fund_size", "trading_profit"];
pub const DEFAULT_UNIT: &str = "millions";

/// A fund series plus where it came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesDocument {
    pub source: String,
    pub series: FundSeries,
    pub unit_label: String,
}

struct Row {
    line: u64,
    year: i32,
    fund_size: f64,
    trading_profit: f64,
}

/// Parses a `year,fund_size,trading_profit` document.
///
/// Rows may arrive in any order; after sorting, years must be contiguous.
/// Errors carry the 1-based line of the first offending row.
pub fn parse_series(text: &str) -> Result<SeriesDocument> {
    parse_series_from(text, "inline")
}

pub fn parse_series_from(text: &str, source: &str) -> Result<SeriesDocument> {
    let mut reader = ReaderBuilder::new()
        .has_headers(true)
        .trim(Trim::All)
        .from_reader(text.as_bytes());

    let columns = column_order(reader.headers()?)?;

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let cell = |name: &'static str| -> &str { &record[columns[index_of(name)]] };

        let year: i32 = cell("year").parse().map_err(|_| Error::Parse {
            line,
            column: "year",
            value: cell("year").to_string(),
            expected: "integer year",
        })?;
        let fund_size = parse_number(line, "fund_size", cell("fund_size"))?;
        let trading_profit = parse_number(line, "trading_profit", cell("trading_profit"))?;
        if fund_size <= 0.0 {
            return Err(Error::NonPositiveSizeAt {
                line,
                year,
                size: fund_size,
            });
        }
        rows.push(Row {
            line,
            year,
            fund_size,
            trading_profit,
        });
    }
    if rows.is_empty() {
        return Err(Error::NoRows);
    }

    rows.sort_by_key(|r| r.year);
    for pair in rows.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        if next.year == prev.year {
            return Err(Error::DuplicateYear {
                line: next.line.max(prev.line),
                year: next.year,
            });
        }
        if next.year != prev.year + 1 {
            return Err(Error::YearGap {
                line: next.line,
                missing: (prev.year + 1..next.year).collect(),
            });
        }
    }

    let base_year = rows[0].year;
    let series = FundSeries::new(
        base_year,
        rows.iter().map(|r| (r.fund_size, r.trading_profit)),
    )?;
    Ok(SeriesDocument {
        source: source.to_string(),
        series,
        unit_label: DEFAULT_UNIT.to_string(),
    })
}

pub fn load_series(path: impl AsRef<Path>) -> Result<SeriesDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_series_from(&text, &path.display().to_string())
}

/// Writes a series back out in the ingestion schema. Numbers use the
/// shortest decimal form that parses back to the same value.
pub fn serialize_series(series: &FundSeries) -> String {
    let mut out = HEADER.join(",");
    out.push('\n');
    for rec in series.records() {
        let _ = writeln!(
            out,
            "{},{},{}",
            series.calendar_year(rec.year_no),
            rec.fund_size,
            rec.trading_profit
        );
    }
    out
}

fn column_order(headers: &StringRecord) -> Result<[usize; 3]> {
    let found: Vec<String> = headers.iter().map(str::to_string).collect();
    let schema_error = || Error::Schema {
        found: found.clone(),
    };
    if found.len() != HEADER.len() {
        return Err(schema_error());
    }
    let mut order = [usize::MAX; 3];
    for (pos, name) in found.iter().enumerate() {
        let slot = HEADER
            .iter()
            .position(|h| h == name)
            .ok_or_else(schema_error)?;
        if order[slot] != usize::MAX {
            return Err(schema_error());
        }
        order[slot] = pos;
    }
    Ok(order)
}

fn index_of(name: &str) -> usize {
    HEADER
        .iter()
        .position(|h| *h == name)
        .expect("known column")
}

fn parse_number(line: u64, column: &'static str, raw: &str) -> Result<f64> {
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Parse {
            line,
            column,
            value: raw.to_string(),
            expected: "finite number",
        }),
    }
}

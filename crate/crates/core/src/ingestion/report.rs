use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{FeeReport, FundReport, ProjectionReport, SubperiodReport, WealthReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Text => "text",
            Self::Csv => "csv",
            Self::Json => "json",
        })
    }
}

/// A header plus rows of already-formatted cells.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    fn single(fields: Vec<(&'static str, String)>) -> Self {
        let (header, row) = fields.into_iter().unzip();
        Self {
            header,
            rows: vec![row],
        }
    }
}

/// Anything the CLI can print in all three formats.
pub trait Report: Serialize {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()>;

    /// One table per field group; written separated by blank lines.
    fn csv_tables(&self) -> Vec<CsvTable>;
}

pub fn write_report<R, W>(report: &R, format: ReportFormat, sink: &mut W) -> Result<()>
where
    R: Report + ?Sized,
    W: Write + ?Sized,
{
    match format {
        ReportFormat::Text => report.write_text(&mut SinkRef(sink))?,
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut SinkRef(&mut *sink), report)?;
            sink.write_all(b"\n")?;
        }
        ReportFormat::Csv => {
            for (i, table) in report.csv_tables().iter().enumerate() {
                if i > 0 {
                    sink.write_all(b"\n")?;
                }
                let mut writer = csv::Writer::from_writer(SinkRef(&mut *sink));
                writer.write_record(&table.header)?;
                for row in &table.rows {
                    writer.write_record(row)?;
                }
                writer.flush()?;
            }
        }
    }
    sink.flush()?;
    Ok(())
}

struct SinkRef<'a, W: Write + ?Sized>(&'a mut W);

impl<W: Write + ?Sized> Write for SinkRef<'_, W> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        self.0.write(buf)
    }

    fn flush(&mut self) -> std::io::Result<()> {
        self.0.flush()
    }
}

/// Fraction as a one-decimal percentage, e.g. `0.318 -> "31.8%"`.
pub fn percent(fraction: f64) -> String {
    let s = format!("{:.1}", fraction * 100.0);
    if s == "-0.0" {
        "0.0%".to_string()
    } else {
        format!("{s}%")
    }
}

/// Currency with thousands separators; whole numbers print without decimals.
pub fn money(value: f64) -> String {
    let raw = if value.fract() == 0.0 && value.abs() < 1e15 {
        format!("{value:.0}")
    } else {
        format!("{value:.3}")
    };
    let (sign, rest) = match raw.strip_prefix('-') {
        Some(r) => ("-", r),
        None => ("", raw.as_str()),
    };
    let (int, frac) = match rest.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (rest, None),
    };
    let mut grouped = String::new();
    for (i, ch) in int.chars().enumerate() {
        if i > 0 && (int.len() - i) % 3 == 0 {
            grouped.push(',');
        }
        grouped.push(ch);
    }
    match frac {
        Some(f) => format!("{sign}{grouped}.{f}"),
        None => format!("{sign}{grouped}"),
    }
}

/// Trillion/billion label for values given in millions.
pub fn scale_label(millions: f64) -> Option<String> {
    let abs = millions.abs();
    if abs >= 1e6 {
        Some(format!("{:.1} trillion", millions / 1e6))
    } else if abs >= 1e3 {
        Some(format!("{:.1} billion", millions / 1e3))
    } else {
        None
    }
}

fn full(v: f64) -> String {
    v.to_string()
}

fn line(out: &mut dyn Write, label: &str, value: &str) -> std::io::Result<()> {
    writeln!(out, "  {label:<32}{value:>16}")
}

fn period_fields(p: &SubperiodReport) -> Vec<(&'static str, String)> {
    vec![
        ("from_year", p.from_year.to_string()),
        ("to_year", p.to_year.to_string()),
        ("from_year_no", p.from_year_no.to_string()),
        ("to_year_no", p.to_year_no.to_string()),
        ("years", p.years.to_string()),
        ("initial_value", full(p.initial_value)),
        ("final_fund_size", full(p.final_fund_size)),
        ("total_inflow", full(p.total_inflow)),
        ("total_profit", full(p.total_profit)),
        ("accrued_inflow", full(p.accrued_inflow)),
        ("accrued_profit", full(p.accrued_profit)),
        ("final_value", full(p.final_value)),
        ("compounded_return", full(p.compounded_return)),
        ("naive_return", full(p.naive_return)),
    ]
}

fn write_period_text(out: &mut dyn Write, p: &SubperiodReport) -> std::io::Result<()> {
    line(out, "Number of years", &p.years.to_string())?;
    line(out, "Initial size or value", &money(p.initial_value))?;
    line(out, "Final fund size", &money(p.final_fund_size))?;
    line(out, "Total cash inflow", &money(p.total_inflow))?;
    line(out, "Total trading profit", &money(p.total_profit))?;
    line(out, "Accrued cash inflow", &money(p.accrued_inflow))?;
    line(out, "Accrued trading profit", &money(p.accrued_profit))?;
    line(out, "Final value", &money(p.final_value))?;
    line(out, "Compounded return", &percent(p.compounded_return))?;
    line(out, "Naive compounded return", &percent(p.naive_return))
}

impl Report for SubperiodReport {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(
            out,
            "Period {}-{} (years {}-{})",
            self.from_year, self.to_year, self.from_year_no, self.to_year_no
        )?;
        write_period_text(out, self)
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        vec![CsvTable::single(period_fields(self))]
    }
}

/// Several periods side by side, one column each.
impl Report for [SubperiodReport] {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        type Cell = fn(&SubperiodReport) -> String;
        let rows: [(&str, Cell); 10] = [
            ("Period", |p| format!("{}-{}", p.from_year, p.to_year)),
            ("Number of years", |p| p.years.to_string()),
            ("Initial size or value", |p| money(p.initial_value)),
            ("Final fund size", |p| money(p.final_fund_size)),
            ("Total cash inflow", |p| money(p.total_inflow)),
            ("Total trading profit", |p| money(p.total_profit)),
            ("Accrued cash inflow", |p| money(p.accrued_inflow)),
            ("Accrued trading profit", |p| money(p.accrued_profit)),
            ("Final value", |p| money(p.final_value)),
            ("Compounded return (%)", |p| {
                percent(p.compounded_return)
                    .trim_end_matches('%')
                    .to_string()
            }),
        ];
        for (label, cell) in rows {
            write!(out, "{label:<24}")?;
            for p in self {
                write!(out, "{:>14}", cell(p))?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        let mut table = CsvTable::single(period_fields(&self[0]));
        table.rows = self
            .iter()
            .map(|p| period_fields(p).into_iter().map(|(_, v)| v).collect())
            .collect();
        vec![table]
    }
}

impl Report for Vec<SubperiodReport> {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        self.as_slice().write_text(out)
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        if self.is_empty() {
            return Vec::new();
        }
        self.as_slice().csv_tables()
    }
}

impl Report for FundReport {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let p = &self.period;
        let d = &self.divergence;
        writeln!(
            out,
            "Source: {} (values in {})",
            self.source, self.unit_label
        )?;
        writeln!(
            out,
            "Period: {}-{} (years {}-{}, N = {})",
            p.from_year, p.to_year, p.from_year_no, p.to_year_no, p.years
        )?;
        match (self.deposit_rate, self.financing_rate) {
            (Some(dep), Some(fin)) => writeln!(
                out,
                "Rates: deposit {}, financing {}",
                percent(dep),
                percent(fin)
            )?,
            _ => writeln!(out, "Rates: per-year schedule")?,
        }
        writeln!(out)?;
        writeln!(
            out,
            "  {:>6}{:>5}{:>16}{:>16}{:>12}",
            "Year", "No.", "Fund size", "Trading profit", "Net return"
        )?;
        for row in &self.rows {
            writeln!(
                out,
                "  {:>6}{:>5}{:>16}{:>16}{:>12}",
                row.year,
                row.year_no,
                money(row.fund_size),
                money(row.trading_profit),
                percent(row.net_return)
            )?;
        }
        writeln!(out)?;
        writeln!(out, "Returns")?;
        line(out, "Naive compounded return", &percent(p.naive_return))?;
        line(
            out,
            "Arithmetic mean return",
            &percent(self.arithmetic_mean_return),
        )?;
        line(
            out,
            "Size-profit compounded return",
            &percent(p.compounded_return),
        )?;
        writeln!(out)?;
        writeln!(out, "Accrual")?;
        write_period_text(out, p)?;
        writeln!(out)?;
        writeln!(out, "Divergence")?;
        line(out, "Naive return", &percent(d.naive))?;
        line(out, "Size-profit return", &percent(d.size_profit))?;
        line(out, "Gap (naive - size-profit)", &percent(d.gap))?;
        line(
            out,
            "Naive projection of initial",
            &money(d.naive_projection),
        )?;
        line(out, "Actual final value", &money(d.actual_final_value))
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        let rows = CsvTable {
            header: vec![
                "year",
                "year_no",
                "fund_size",
                "trading_profit",
                "net_return",
            ],
            rows: self
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.year.to_string(),
                        r.year_no.to_string(),
                        full(r.fund_size),
                        full(r.trading_profit),
                        full(r.net_return),
                    ]
                })
                .collect(),
        };
        let mut summary = vec![
            ("source", self.source.clone()),
            ("unit_label", self.unit_label.clone()),
            (
                "deposit_rate",
                self.deposit_rate.map(full).unwrap_or_default(),
            ),
            (
                "financing_rate",
                self.financing_rate.map(full).unwrap_or_default(),
            ),
            ("arithmetic_mean_return", full(self.arithmetic_mean_return)),
        ];
        summary.extend(period_fields(&self.period));
        let d = &self.divergence;
        let divergence = vec![
            ("naive", full(d.naive)),
            ("size_profit", full(d.size_profit)),
            ("gap", full(d.gap)),
            ("naive_projection", full(d.naive_projection)),
            ("actual_final_value", full(d.actual_final_value)),
        ];
        vec![
            rows,
            CsvTable::single(summary),
            CsvTable::single(divergence),
        ]
    }
}

impl Report for WealthReport {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "Wealth proxy: {}", self.label)?;
        line(out, "Initial wealth", &money(self.initial_wealth))?;
        line(out, "Final wealth", &money(self.final_wealth))?;
        line(out, "Years", &self.years.to_string())?;
        line(out, "Compounded growth", &percent(self.compounded_return))
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        vec![CsvTable::single(vec![
            ("label", self.label.clone()),
            ("initial_wealth", full(self.initial_wealth)),
            ("final_wealth", full(self.final_wealth)),
            ("years", self.years.to_string()),
            ("compounded_return", full(self.compounded_return)),
        ])]
    }
}

impl Report for FeeReport {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let s = &self.scenario;
        let o = &self.outcome;
        writeln!(out, "Performance-fee redistribution")?;
        line(out, "Manager stake", &percent(s.manager_stake))?;
        line(out, "Fund size", &money(s.fund_size))?;
        line(out, "Gross profit rate", &percent(s.gross_profit_rate))?;
        line(out, "Performance fee", &percent(s.performance_fee))?;
        line(out, "Insider equity", &percent(s.insider_equity))?;
        line(out, "Gross profit", &money(o.gross_profit))?;
        line(out, "Investor pool", &money(o.investor_pool))?;
        line(out, "Fee pool", &money(o.fee_pool))?;
        line(out, "Manager capital", &money(o.manager_capital))?;
        line(
            out,
            "Manager share of investor pool",
            &money(o.manager_investor_share),
        )?;
        line(
            out,
            "Manager share of fee pool",
            &money(o.manager_fee_share),
        )?;
        line(out, "Manager profit", &money(o.manager_profit))?;
        line(out, "Manager return", &percent(o.manager_return))
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        let s = &self.scenario;
        let o = &self.outcome;
        vec![
            CsvTable::single(vec![
                ("manager_stake", full(s.manager_stake)),
                ("fund_size", full(s.fund_size)),
                ("gross_profit_rate", full(s.gross_profit_rate)),
                ("performance_fee", full(s.performance_fee)),
                ("insider_equity", full(s.insider_equity)),
            ]),
            CsvTable::single(vec![
                ("gross_profit", full(o.gross_profit)),
                ("investor_pool", full(o.investor_pool)),
                ("fee_pool", full(o.fee_pool)),
                ("manager_capital", full(o.manager_capital)),
                ("manager_investor_share", full(o.manager_investor_share)),
                ("manager_fee_share", full(o.manager_fee_share)),
                ("manager_profit", full(o.manager_profit)),
                ("manager_return", full(o.manager_return)),
            ]),
        ]
    }
}

impl Report for ProjectionReport {
    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "Projection (values in millions)")?;
        line(out, "Initial value", &money(self.initial_value))?;
        line(out, "Annual rate", &percent(self.rate))?;
        line(out, "Years", &self.years.to_string())?;
        let projected = match scale_label(self.projected_value) {
            Some(label) => format!("{} (~{label})", money(self.projected_value)),
            None => money(self.projected_value),
        };
        line(out, "Projected value", &projected)
    }

    fn csv_tables(&self) -> Vec<CsvTable> {
        vec![CsvTable::single(vec![
            ("initial_value", full(self.initial_value)),
            ("rate", full(self.rate)),
            ("years", self.years.to_string()),
            ("projected_value", full(self.projected_value)),
        ])]
    }
}

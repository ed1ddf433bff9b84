use serde::{Deserialize, Serialize};

use crate::compounding::{arithmetic_mean_return, grow_projection, FundSeries, RateSchedule};
use crate::error::Result;

use super::divergence::{divergence_report, DivergenceReport};
use super::fees::{FeeOutcome, FeeScenario};
use super::subperiod::{subperiod_report, SubperiodReport};
use super::wealth::{wealth_growth, WealthProxyScenario};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct YearRow {
    pub year: i32,
    pub year_no: u32,
    pub fund_size: f64,
    pub trading_profit: f64,
    pub net_return: f64,
}

/// Everything known about one (possibly windowed) fund series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FundReport {
    pub source: String,
    pub unit_label: String,
    /// Present only when the schedule is the same every year.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub deposit_rate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub financing_rate: Option<f64>,
    pub rows: Vec<YearRow>,
    pub arithmetic_mean_return: f64,
    pub period: SubperiodReport,
    pub divergence: DivergenceReport,
}

/// Builds a [`FundReport`] over years `from_year_no..=to_year_no`.
pub fn fund_report(
    source: &str,
    unit_label: &str,
    series: &FundSeries,
    from_year_no: u32,
    to_year_no: u32,
    rates: &RateSchedule,
) -> Result<FundReport> {
    let period = subperiod_report(series, from_year_no, to_year_no, rates)?;
    let window = series.window(from_year_no, to_year_no)?;
    let window_rates = rates.window(from_year_no, to_year_no)?;
    let divergence = divergence_report(&window, &window_rates)?;
    let rows = window
        .records()
        .iter()
        .map(|r| YearRow {
            year: window.calendar_year(r.year_no),
            year_no: r.year_no + from_year_no - 1,
            fund_size: r.fund_size,
            trading_profit: r.trading_profit,
            net_return: r.net_return(),
        })
        .collect();
    let flat = rates.as_flat();
    Ok(FundReport {
        source: source.to_string(),
        unit_label: unit_label.to_string(),
        deposit_rate: flat.map(|(d, _)| d),
        financing_rate: flat.map(|(_, f)| f),
        rows,
        arithmetic_mean_return: arithmetic_mean_return(&window.net_returns())?,
        period,
        divergence,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WealthReport {
    pub label: String,
    pub initial_wealth: f64,
    pub final_wealth: f64,
    pub years: u32,
    pub compounded_return: f64,
}

impl WealthReport {
    pub fn evaluate(scenario: &WealthProxyScenario) -> Result<Self> {
        let growth = wealth_growth(scenario)?;
        Ok(Self {
            label: scenario.label.clone(),
            initial_wealth: scenario.initial_wealth,
            final_wealth: scenario.final_wealth,
            years: scenario.years,
            compounded_return: growth.rate,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeeReport {
    pub scenario: FeeScenario,
    pub outcome: FeeOutcome,
}

impl FeeReport {
    pub fn evaluate(scenario: FeeScenario) -> Result<Self> {
        Ok(Self {
            outcome: scenario.outcome()?,
            scenario,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub initial_value: f64,
    pub rate: f64,
    pub years: u32,
    pub projected_value: f64,
}

impl ProjectionReport {
    pub fn evaluate(initial_value: f64, rate: f64, years: u32) -> Result<Self> {
        Ok(Self {
            initial_value,
            rate,
            years,
            projected_value: grow_projection(initial_value, rate, years)?,
        })
    }
}

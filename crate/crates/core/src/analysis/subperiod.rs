use serde::{Deserialize, Serialize};

use crate::compounding::{
    compound_breakdown, final_value, naive_compound, FundSeries, RateSchedule,
};
use crate::error::Result;

/// Compounding summary for one window of a series, evaluated as if the
/// window were a fund of its own.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubperiodReport {
    pub from_year_no: u32,
    pub to_year_no: u32,
    pub from_year: i32,
    pub to_year: i32,
    pub years: u32,
    pub initial_value: f64,
    pub final_fund_size: f64,
    /// Raw sum of inflows inside the window, V_to - V_from.
    pub total_inflow: f64,
    /// Raw sum of trading profits inside the window.
    pub total_profit: f64,
    pub accrued_inflow: f64,
    pub accrued_profit: f64,
    pub final_value: f64,
    pub compounded_return: f64,
    pub naive_return: f64,
}

/// Re-bases years `from_year_no..=to_year_no` and compounds them.
///
/// `rates` spans the whole series; the matching slice is used. An inflow
/// into the window's first year is not counted, the window simply starts at
/// that year's size.
pub fn subperiod_report(
    series: &FundSeries,
    from_year_no: u32,
    to_year_no: u32,
    rates: &RateSchedule,
) -> Result<SubperiodReport> {
    let window = series.window(from_year_no, to_year_no)?;
    rates.ensure_len(series.len())?;
    let window_rates = rates.window(from_year_no, to_year_no)?;

    let breakdown = final_value(&window, &window_rates)?;
    let compounded = compound_breakdown(&window, &breakdown)?;
    let naive = naive_compound(&window.net_returns())?;

    Ok(SubperiodReport {
        from_year_no,
        to_year_no,
        from_year: window.base_year(),
        to_year: window.last_year(),
        years: window.len() as u32,
        initial_value: window.initial_size(),
        final_fund_size: window.final_size(),
        total_inflow: window.final_size() - window.initial_size(),
        total_profit: window.total_profit(),
        accrued_inflow: breakdown.accrued_inflow,
        accrued_profit: breakdown.accrued_profit,
        final_value: breakdown.final_value,
        compounded_return: compounded.rate,
        naive_return: naive,
    })
}

/// Same as [`subperiod_report`] with calendar years for bounds.
pub fn subperiod_report_by_year(
    series: &FundSeries,
    from_year: i32,
    to_year: i32,
    rates: &RateSchedule,
) -> Result<SubperiodReport> {
    let from = series.year_no_of(from_year)?;
    let to = series.year_no_of(to_year)?;
    subperiod_report(series, from, to, rates)
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::rates::RateSchedule;
use super::returns::{annualized_growth, CompoundedReturn};
use super::series::FundSeries;

/// The pieces that make up a fund's end-of-horizon value once cash flows are
/// carried forward.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccrualBreakdown {
    /// Profits grown at the deposit rate from the year after they were earned.
    pub accrued_profit: f64,
    /// External inflows grown at the financing rate from the year they arrived.
    pub accrued_inflow: f64,
    /// V_N, the size at the start of the last year.
    pub final_fund_size: f64,
    pub final_value: f64,
}

/// `V_t - V_{t-1}` for t = 2..N. Empty for a one-year series.
pub fn cash_flows(series: &FundSeries) -> Vec<f64> {
    series
        .records()
        .windows(2)
        .map(|pair| pair[1].fund_size - pair[0].fund_size)
        .collect()
}

/// Carries every profit and inflow forward to the end of the horizon.
///
/// Profit earned in year t starts accruing in year t+1, so the last year's
/// profit is taken at face value. An inflow arriving at the start of year t
/// accrues from year t itself. Outflows are negative inflows and are credited
/// back at the financing rate.
pub fn final_value(series: &FundSeries, rates: &RateSchedule) -> Result<AccrualBreakdown> {
    rates.ensure_len(series.len())?;
    let deposit = rates.deposit_rates();
    let financing = rates.financing_rates();
    let records = series.records();

    let mut accrued_profit = records[0].trading_profit;
    let mut accrued_inflow = 0.0;
    for t in 1..records.len() {
        accrued_profit = accrued_profit * (1.0 + deposit[t]) + records[t].trading_profit;
        let inflow = records[t].fund_size - records[t - 1].fund_size;
        accrued_inflow = (accrued_inflow + inflow) * (1.0 + financing[t]);
    }

    let final_fund_size = series.final_size();
    Ok(AccrualBreakdown {
        accrued_profit,
        accrued_inflow,
        final_fund_size,
        final_value: accrued_profit - accrued_inflow + final_fund_size,
    })
}

/// Annualized return implied by growing V_1 into the accrued final value.
pub fn size_profit_compound(series: &FundSeries, rates: &RateSchedule) -> Result<CompoundedReturn> {
    let breakdown = final_value(series, rates)?;
    compound_breakdown(series, &breakdown)
}

pub(crate) fn compound_breakdown(
    series: &FundSeries,
    breakdown: &AccrualBreakdown,
) -> Result<CompoundedReturn> {
    if breakdown.final_value.is_nan() || breakdown.final_value <= 0.0 {
        return Err(Error::WipedOut {
            final_value: breakdown.final_value,
        });
    }
    let years = series.len() as u32;
    let initial_value = series.initial_size();
    Ok(CompoundedReturn {
        rate: annualized_growth(initial_value, breakdown.final_value, years)?,
        years,
        initial_value,
        final_value: breakdown.final_value,
    })
}

use serde::{Deserialize, Serialize};

use crate::compounding::{
    compound_breakdown, final_value, grow_projection, naive_compound, FundSeries, RateSchedule,
};
use crate::error::Result;

/// How far chaining yearly returns overstates the growth a fund delivered.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DivergenceReport {
    pub naive: f64,
    pub size_profit: f64,
    pub gap: f64,
    /// V_1 grown at the naive rate for N years.
    pub naive_projection: f64,
    pub actual_final_value: f64,
}

pub fn divergence_report(series: &FundSeries, rates: &RateSchedule) -> Result<DivergenceReport> {
    let naive = naive_compound(&series.net_returns())?;
    let breakdown = final_value(series, rates)?;
    let compounded = compound_breakdown(series, &breakdown)?;
    let naive_projection = grow_projection(series.initial_size(), naive, series.len() as u32)?;
    Ok(DivergenceReport {
        naive,
        size_profit: compounded.rate,
        gap: naive - compounded.rate,
        naive_projection,
        actual_final_value: breakdown.final_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capped_constant_series() {
        // Hand evaluation: naive (1.5^10)^(1/10) - 1 = 0.5, projection
        // 100 * 1.5^10 = 5766.50390625; final value 100 + 10 * 50 = 600,
        // size-profit 6^(1/10) - 1.
        let s = FundSeries::new(2000, [(100.0, 50.0); 10]).unwrap();
        let d = divergence_report(&s, &RateSchedule::zero(10)).unwrap();
        assert!((d.naive - 0.5).abs() < 1e-12);
        assert!((d.size_profit - (6f64.powf(0.1) - 1.0)).abs() < 1e-12);
        assert!((d.naive_projection - 5_766.503_906_25).abs() < 1e-6);
        assert_eq!(d.actual_final_value, 600.0);
        assert!(d.gap > 0.3);
    }

    #[test]
    fn self_financing_series_has_no_gap() {
        let s = FundSeries::new(2000, [(100.0, 10.0), (110.0, -22.0), (88.0, 44.0)]).unwrap();
        let d = divergence_report(&s, &RateSchedule::zero(3)).unwrap();
        assert!(d.gap.abs() < 1e-12);
        assert!((d.actual_final_value - 132.0).abs() < 1e-12);
    }
}

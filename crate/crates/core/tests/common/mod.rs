#![allow(dead_code)]

//! Test-only reference implementations, written straight from the
//! definitions with explicit products rather than running recurrences.

/// Return column of the Medallion table, in percent with two decimals.
pub const MEDALLION_RETURN_PCT: [f64; 31] = [
    15.00, 0.00, 76.67, 54.76, 47.30, 54.10, 93.48, 52.81, 44.43, 31.48, 57.09, 35.65, 128.11,
    56.55, 51.07, 44.11, 49.46, 57.67, 84.12, 136.62, 152.13, 74.63, 57.50, 71.07, 56.79, 88.75,
    75.00, 69.28, 68.57, 85.36, 76.43,
];

/// Values frozen from an independent evaluation of the explicit product
/// formula on the Medallion table at a flat 3% deposit and financing rate.
pub const MEDALLION_3PCT_ACCRUED_PROFIT: f64 = 131_654.429_572_826;
pub const MEDALLION_3PCT_ACCRUED_INFLOW: f64 = 15_328.638_468_420_457;
pub const MEDALLION_3PCT_FINAL_VALUE: f64 = 126_325.791_104_405_54;
pub const MEDALLION_3PCT_RETURN: f64 = 0.326_158_854_663_311_85;

pub struct OracleBreakdown {
    pub accrued_profit: f64,
    pub accrued_inflow: f64,
    pub final_value: f64,
}

/// `sum_t P_t prod_{s=t+1..N}(1+d_s) - sum_{t>=2} (V_t - V_{t-1}) prod_{s=t..N}(1+f_s) + V_N`,
/// all indices 1-based.
pub fn oracle_final_value(
    sizes: &[f64],
    profits: &[f64],
    deposit: &[f64],
    financing: &[f64],
) -> OracleBreakdown {
    let n = sizes.len();
    let mut accrued_profit = 0.0;
    for t in 1..=n {
        let mut factor = 1.0;
        for s in t + 1..=n {
            factor *= 1.0 + deposit[s - 1];
        }
        accrued_profit += profits[t - 1] * factor;
    }
    let mut accrued_inflow = 0.0;
    for t in 2..=n {
        let mut factor = 1.0;
        for s in t..=n {
            factor *= 1.0 + financing[s - 1];
        }
        accrued_inflow += (sizes[t - 1] - sizes[t - 2]) * factor;
    }
    OracleBreakdown {
        accrued_profit,
        accrued_inflow,
        final_value: accrued_profit - accrued_inflow + sizes[n - 1],
    }
}

pub fn oracle_naive(returns: &[f64]) -> f64 {
    let product: f64 = returns.iter().map(|r| 1.0 + r).product();
    product.powf(1.0 / returns.len() as f64) - 1.0
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

pub mod props;

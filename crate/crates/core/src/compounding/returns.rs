use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An annual rate together with the start and end values it connects.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompoundedReturn {
    pub rate: f64,
    pub years: u32,
    pub initial_value: f64,
    pub final_value: f64,
}

impl CompoundedReturn {
    /// The annual rate that carries `initial_value` to `final_value` in `years`.
    pub fn between(initial_value: f64, final_value: f64, years: u32) -> Result<Self> {
        let rate = annualized_growth(initial_value, final_value, years)?;
        Ok(Self {
            rate,
            years,
            initial_value,
            final_value,
        })
    }
}

/// Single-year return: profit over beginning-of-year size.
pub fn net_return(profit: f64, size: f64) -> Result<f64> {
    if size.is_nan() || size <= 0.0 {
        return Err(Error::NonPositiveSize {
            year_no: None,
            size,
        });
    }
    Ok(profit / size)
}

/// Geometric annualization of a run of yearly returns.
///
/// The product is accumulated in log space so long runs of large returns
/// neither overflow nor lose precision near zero.
pub fn naive_compound(returns: &[f64]) -> Result<f64> {
    if returns.is_empty() {
        return Err(Error::EmptyReturns);
    }
    let mut log_growth = 0.0;
    for (index, &value) in returns.iter().enumerate() {
        if value.is_nan() || value <= -1.0 {
            return Err(Error::ReturnBelowTotalLoss { index, value });
        }
        log_growth += value.ln_1p();
    }
    Ok((log_growth / returns.len() as f64).exp_m1())
}

pub fn arithmetic_mean_return(returns: &[f64]) -> Result<f64> {
    if returns.is_empty() {
        return Err(Error::EmptyReturns);
    }
    Ok(returns.iter().sum::<f64>() / returns.len() as f64)
}

/// `(final / initial)^(1/years) - 1`.
pub fn annualized_growth(initial: f64, final_value: f64, years: u32) -> Result<f64> {
    positive("initial value", initial)?;
    positive("final value", final_value)?;
    if years == 0 {
        return Err(Error::ZeroYears);
    }
    Ok(((final_value / initial).ln() / years as f64).exp_m1())
}

/// `initial * (1 + rate)^years`; the inverse of [`annualized_growth`].
pub fn grow_projection(initial: f64, rate: f64, years: u32) -> Result<f64> {
    positive("initial value", initial)?;
    if rate.is_nan() || rate <= -1.0 || rate.is_infinite() {
        return Err(Error::RateBelowTotalLoss { rate });
    }
    if years == 0 {
        return Err(Error::ZeroYears);
    }
    Ok(initial * (1.0 + rate).powi(years as i32))
}

fn positive(what: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFiniteValue { what, value });
    }
    if value <= 0.0 {
        return Err(Error::NonPositiveValue { what, value });
    }
    Ok(())
}

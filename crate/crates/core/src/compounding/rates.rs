use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::series::check_window;

/// Per-year deposit and financing rates, one entry per series year.
///
/// The deposit rate grows profits once they leave the fund; the financing
/// rate is charged on capital injected into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateSchedule {
    deposit_rates: Vec<f64>,
    financing_rates: Vec<f64>,
}

impl RateSchedule {
    pub fn new(deposit_rates: Vec<f64>, financing_rates: Vec<f64>) -> Result<Self> {
        if deposit_rates.len() != financing_rates.len() {
            return Err(Error::ScheduleLengthMismatch {
                expected: deposit_rates.len().max(financing_rates.len()),
                deposit: deposit_rates.len(),
                financing: financing_rates.len(),
            });
        }
        check_rates("deposit", &deposit_rates)?;
        check_rates("financing", &financing_rates)?;
        Ok(Self {
            deposit_rates,
            financing_rates,
        })
    }

    /// One rate applied to both columns for `years` years.
    pub fn flat(rate: f64, years: usize) -> Result<Self> {
        Self::flat_split(rate, rate, years)
    }

    pub fn flat_split(deposit: f64, financing: f64, years: usize) -> Result<Self> {
        Self::new(vec![deposit; years], vec![financing; years])
    }

    pub fn zero(years: usize) -> Self {
        Self {
            deposit_rates: vec![0.0; years],
            financing_rates: vec![0.0; years],
        }
    }

    pub fn len(&self) -> usize {
        self.deposit_rates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deposit_rates.is_empty()
    }

    pub fn deposit_rates(&self) -> &[f64] {
        &self.deposit_rates
    }

    pub fn financing_rates(&self) -> &[f64] {
        &self.financing_rates
    }

    /// `Some((deposit, financing))` when every year carries the same pair.
    pub fn as_flat(&self) -> Option<(f64, f64)> {
        let d = *self.deposit_rates.first()?;
        let f = *self.financing_rates.first()?;
        let flat = self.deposit_rates.iter().all(|&r| r == d)
            && self.financing_rates.iter().all(|&r| r == f);
        flat.then_some((d, f))
    }

    pub(crate) fn ensure_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::ScheduleLengthMismatch {
                expected,
                deposit: self.deposit_rates.len(),
                financing: self.financing_rates.len(),
            });
        }
        Ok(())
    }

    /// Years `from..=to` of the schedule, re-based at index 1.
    pub fn window(&self, from: u32, to: u32) -> Result<RateSchedule> {
        check_window(from, to, self.len())?;
        let range = from as usize - 1..to as usize;
        Ok(Self {
            deposit_rates: self.deposit_rates[range.clone()].to_vec(),
            financing_rates: self.financing_rates[range].to_vec(),
        })
    }
}

fn check_rates(schedule: &'static str, rates: &[f64]) -> Result<()> {
    for (i, &value) in rates.iter().enumerate() {
        if value.is_nan() || value <= -1.0 || value.is_infinite() {
            return Err(Error::InvalidRate {
                schedule,
                year_no: i as u32 + 1,
                value,
            });
        }
    }
    Ok(())
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One year of a fund whose manager is both an investor and a recipient of
/// the performance fee.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeeScenario {
    /// Manager's share of the fund's capital, in (0, 1].
    pub manager_stake: f64,
    pub fund_size: f64,
    /// Gross trading profit as a fraction of fund size.
    pub gross_profit_rate: f64,
    /// Fraction of gross profit diverted to the management side, in [0, 1).
    pub performance_fee: f64,
    /// Manager's share of the fee pool among current employees, in (0, 1].
    pub insider_equity: f64,
}

/// Where a year's gross profit ends up.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeeOutcome {
    pub gross_profit: f64,
    pub investor_pool: f64,
    pub fee_pool: f64,
    pub manager_capital: f64,
    pub manager_investor_share: f64,
    pub manager_fee_share: f64,
    pub manager_profit: f64,
    pub manager_return: f64,
}

impl FeeScenario {
    pub fn validate(&self) -> Result<()> {
        if self.manager_stake == 0.0 {
            return Err(Error::ZeroStake);
        }
        in_range("manager_stake", self.manager_stake, 0.0, false, 1.0, true)?;
        in_range(
            "performance_fee",
            self.performance_fee,
            0.0,
            true,
            1.0,
            false,
        )?;
        in_range("insider_equity", self.insider_equity, 0.0, false, 1.0, true)?;
        if !self.fund_size.is_finite() {
            return Err(Error::NonFiniteValue {
                what: "fund size",
                value: self.fund_size,
            });
        }
        if self.fund_size <= 0.0 {
            return Err(Error::NonPositiveValue {
                what: "fund size",
                value: self.fund_size,
            });
        }
        if !self.gross_profit_rate.is_finite() {
            return Err(Error::NonFiniteValue {
                what: "gross profit rate",
                value: self.gross_profit_rate,
            });
        }
        Ok(())
    }

    pub fn outcome(&self) -> Result<FeeOutcome> {
        self.validate()?;
        let gross_profit = self.fund_size * self.gross_profit_rate;
        let investor_pool = (1.0 - self.performance_fee) * gross_profit;
        let fee_pool = self.performance_fee * gross_profit;
        let manager_capital = self.manager_stake * self.fund_size;
        let manager_investor_share = self.manager_stake * investor_pool;
        let manager_fee_share = self.insider_equity * fee_pool;
        let manager_profit = manager_investor_share + manager_fee_share;
        Ok(FeeOutcome {
            gross_profit,
            investor_pool,
            fee_pool,
            manager_capital,
            manager_investor_share,
            manager_fee_share,
            manager_profit,
            manager_return: manager_profit / manager_capital,
        })
    }
}

/// Manager's return on their own capital once the performance fee is paid
/// partly back to them.
pub fn fee_adjusted_manager_return(scenario: &FeeScenario) -> Result<f64> {
    scenario.outcome().map(|o| o.manager_return)
}

fn in_range(
    field: &'static str,
    value: f64,
    lo: f64,
    lo_inclusive: bool,
    hi: f64,
    hi_inclusive: bool,
) -> Result<()> {
    let above = if lo_inclusive {
        value >= lo
    } else {
        value > lo
    };
    let below = if hi_inclusive {
        value <= hi
    } else {
        value < hi
    };
    if above && below {
        return Ok(());
    }
    let range = match (lo_inclusive, hi_inclusive) {
        (false, true) => "(0, 1]",
        (true, false) => "[0, 1)",
        (true, true) => "[0, 1]",
        (false, false) => "(0, 1)",
    };
    Err(Error::FractionOutOfRange {
        field,
        value,
        range,
    })
}

//! Yearly compounding arithmetic.
//!
//! Two ways of annualizing a fund's record live here. [`naive_compound`]
//! chains the yearly net returns together, which is only right when every
//! year's ending value becomes the next year's starting value.
//! [`size_profit_compound`] instead builds a final value out of the trading
//! profits, the external cash flows implied by jumps in fund size, and the
//! last fund size, carrying each forward at deposit or financing rates, and
//! annualizes the growth from the first fund size to that value.

mod accrual;
mod rates;
mod returns;
mod series;

pub(crate) use accrual::compound_breakdown;
pub use accrual::{cash_flows, final_value, size_profit_compound, AccrualBreakdown};
pub use rates::RateSchedule;
pub use returns::{
    annualized_growth, arithmetic_mean_return, grow_projection, naive_compound, net_return,
    CompoundedReturn,
};
pub use series::{FundRecord, FundSeries};

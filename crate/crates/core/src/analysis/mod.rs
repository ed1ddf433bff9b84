//! Scenario analytics built on the compounding core: sub-period tables,
//! wealth proxies, performance-fee redistribution and the gap between
//! naive and size-profit compounding.

mod divergence;
mod fees;
mod reports;
mod subperiod;
mod wealth;

pub use divergence::{divergence_report, DivergenceReport};
pub use fees::{fee_adjusted_manager_return, FeeOutcome, FeeScenario};
pub use reports::{fund_report, FeeReport, FundReport, ProjectionReport, WealthReport, YearRow};
pub use subperiod::{subperiod_report, subperiod_report_by_year, SubperiodReport};
pub use wealth::{bundled_wealth_scenarios, wealth_growth, WealthProxyScenario};

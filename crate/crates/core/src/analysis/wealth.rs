use serde::{Deserialize, Serialize};

use crate::compounding::CompoundedReturn;
use crate::error::Result;

/// A manager's personal wealth at two dates, used as an after-fee stand-in
/// for the fund's own compounded return.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WealthProxyScenario {
    pub label: String,
    pub initial_wealth: f64,
    pub final_wealth: f64,
    pub years: u32,
}

impl WealthProxyScenario {
    pub fn new(
        label: impl Into<String>,
        initial_wealth: f64,
        final_wealth: f64,
        years: u32,
    ) -> Self {
        Self {
            label: label.into(),
            initial_wealth,
            final_wealth,
            years,
        }
    }
}

/// Simons' wealth proxies in millions: half of a 1.1 billion fund in 1998,
/// and 70% of the 20 million starting fund in 1988, both grown to 26.2
/// billion in 2020.
pub fn bundled_wealth_scenarios() -> Vec<WealthProxyScenario> {
    vec![
        WealthProxyScenario::new("Simons 1998-2020, 50% of 1,100", 550.0, 26_200.0, 23),
        WealthProxyScenario::new("Simons 1988-2020, 70% of 20", 14.0, 26_200.0, 33),
    ]
}

pub fn wealth_growth(scenario: &WealthProxyScenario) -> Result<CompoundedReturn> {
    CompoundedReturn::between(
        scenario.initial_wealth,
        scenario.final_wealth,
        scenario.years,
    )
}

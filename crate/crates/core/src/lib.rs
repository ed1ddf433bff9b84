//! Annualized compounded returns for funds whose size jumps around.
//!
//! Chaining yearly net returns only measures growth when each year's ending
//! value is the next year's starting value. Funds that take in capital or
//! pay out profits break that chain. This crate computes the naive chained
//! rate alongside a size-profit rate that accounts for the cash actually
//! added and withdrawn, and ships the Medallion fund's 1988-2018 record as a
//! worked dataset.
//!
//! ```
//! use fund_compounding::compounding::{naive_compound, size_profit_compound, RateSchedule};
//! use fund_compounding::ingestion::builtin_medallion;
//!
//! let doc = builtin_medallion();
//! let naive = naive_compound(&doc.series.net_returns()).unwrap();
//! let actual = size_profit_compound(&doc.series, &RateSchedule::zero(31)).unwrap();
//! assert!(naive > 0.63 && actual.rate < 0.32);
//! ```

pub mod analysis;
pub mod cli;
pub mod compounding;
pub mod error;
pub mod ingestion;

pub use error::{Error, Result};

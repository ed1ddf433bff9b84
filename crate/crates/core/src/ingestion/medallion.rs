use crate::compounding::FundSeries;

use super::csv_io::{SeriesDocument, DEFAULT_UNIT};

pub const MEDALLION_SOURCE: &str = "builtin:medallion";
pub const MEDALLION_BASE_YEAR: i32 = 1988;

/// Medallion fund size at the start of each year and trading profit before
/// fees, 1988-2018, in millions.
pub const MEDALLION_TABLE: [(f64, f64); 31] = [
    (20.0, 3.0),
    (20.0, 0.0),
    (30.0, 23.0),
    (42.0, 23.0),
    (74.0, 35.0),
    (122.0, 66.0),
    (276.0, 258.0),
    (462.0, 244.0),
    (637.0, 283.0),
    (829.0, 261.0),
    (1_100.0, 628.0),
    (1_540.0, 549.0),
    (1_900.0, 2_434.0),
    (3_800.0, 2_149.0),
    (5_240.0, 2_676.0),
    (5_090.0, 2_245.0),
    (5_200.0, 2_572.0),
    (5_200.0, 2_999.0),
    (5_200.0, 4_374.0),
    (5_200.0, 7_104.0),
    (5_200.0, 7_911.0),
    (5_200.0, 3_881.0),
    (10_000.0, 5_750.0),
    (10_000.0, 7_107.0),
    (10_000.0, 5_679.0),
    (10_000.0, 8_875.0),
    (9_500.0, 7_125.0),
    (9_500.0, 6_582.0),
    (9_500.0, 6_514.0),
    (10_000.0, 8_536.0),
    (10_000.0, 7_643.0),
];

pub fn builtin_medallion() -> SeriesDocument {
    let series = FundSeries::new(MEDALLION_BASE_YEAR, MEDALLION_TABLE)
        .expect("bundled table is a valid series");
    SeriesDocument {
        source: MEDALLION_SOURCE.to_string(),
        series,
        unit_label: DEFAULT_UNIT.to_string(),
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One year of a fund: size at the start of the year and profit earned during it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FundRecord {
    /// 1-based position in the series.
    pub year_no: u32,
    /// Beginning-of-year fund size.
    pub fund_size: f64,
    /// Trading profit earned over the year; losses are negative.
    pub trading_profit: f64,
}

impl FundRecord {
    /// Profit over beginning-of-year size.
    pub fn net_return(&self) -> f64 {
        self.trading_profit / self.fund_size
    }
}

/// A validated, contiguous run of yearly fund records anchored to a calendar year.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FundSeries {
    records: Vec<FundRecord>,
    base_year: i32,
}

impl FundSeries {
    /// Builds a series from `(fund_size, trading_profit)` pairs, numbering them 1..N.
    pub fn new<I>(base_year: i32, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let records = rows
            .into_iter()
            .enumerate()
            .map(|(i, (fund_size, trading_profit))| FundRecord {
                year_no: i as u32 + 1,
                fund_size,
                trading_profit,
            })
            .collect();
        Self::from_records(base_year, records)
    }

    pub fn from_columns(base_year: i32, sizes: &[f64], profits: &[f64]) -> Result<Self> {
        if sizes.len() != profits.len() {
            return Err(Error::ColumnLengthMismatch {
                sizes: sizes.len(),
                profits: profits.len(),
            });
        }
        Self::new(
            base_year,
            sizes.iter().copied().zip(profits.iter().copied()),
        )
    }

    pub fn from_records(base_year: i32, records: Vec<FundRecord>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::EmptySeries);
        }
        for (i, rec) in records.iter().enumerate() {
            let expected = i as u32 + 1;
            if rec.year_no != expected {
                return Err(Error::NonContiguousYearNo {
                    position: i + 1,
                    found: rec.year_no,
                });
            }
            if !rec.fund_size.is_finite() {
                return Err(Error::NonFinite {
                    year_no: rec.year_no,
                    field: "fund_size",
                    value: rec.fund_size,
                });
            }
            if rec.fund_size <= 0.0 {
                return Err(Error::NonPositiveSize {
                    year_no: Some(rec.year_no),
                    size: rec.fund_size,
                });
            }
            if !rec.trading_profit.is_finite() {
                return Err(Error::NonFinite {
                    year_no: rec.year_no,
                    field: "trading_profit",
                    value: rec.trading_profit,
                });
            }
        }
        Ok(Self { records, base_year })
    }

    pub fn records(&self) -> &[FundRecord] {
        &self.records
    }

    pub fn base_year(&self) -> i32 {
        self.base_year
    }

    pub fn last_year(&self) -> i32 {
        self.base_year + self.records.len() as i32 - 1
    }

    /// Number of years N.
    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// Always false for a constructed series; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Record for 1-based `year_no`.
    pub fn get(&self, year_no: u32) -> Option<&FundRecord> {
        (year_no as usize)
            .checked_sub(1)
            .and_then(|i| self.records.get(i))
    }

    pub fn sizes(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.fund_size)
    }

    pub fn profits(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.trading_profit)
    }

    /// V_1.
    pub fn initial_size(&self) -> f64 {
        self.records[0].fund_size
    }

    /// V_N.
    pub fn final_size(&self) -> f64 {
        self.records[self.records.len() - 1].fund_size
    }

    pub fn total_profit(&self) -> f64 {
        self.profits().sum()
    }

    pub fn net_returns(&self) -> Vec<f64> {
        self.records.iter().map(FundRecord::net_return).collect()
    }

    pub fn calendar_year(&self, year_no: u32) -> i32 {
        self.base_year + year_no as i32 - 1
    }

    /// Maps a calendar year onto its 1-based index.
    pub fn year_no_of(&self, year: i32) -> Result<u32> {
        if year < self.base_year || year > self.last_year() {
            return Err(Error::YearOutOfRange {
                year,
                first: self.base_year,
                last: self.last_year(),
            });
        }
        Ok((year - self.base_year) as u32 + 1)
    }

    /// Years `from..=to` re-based as a standalone series starting at index 1.
    pub fn window(&self, from: u32, to: u32) -> Result<FundSeries> {
        check_window(from, to, self.len())?;
        let records = self.records[from as usize - 1..to as usize]
            .iter()
            .enumerate()
            .map(|(i, r)| FundRecord {
                year_no: i as u32 + 1,
                ..*r
            })
            .collect();
        Ok(FundSeries {
            records,
            base_year: self.calendar_year(from),
        })
    }

    /// Multiplies every size and profit by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<FundSeries> {
        let records = self
            .records
            .iter()
            .map(|r| FundRecord {
                year_no: r.year_no,
                fund_size: r.fund_size * factor,
                trading_profit: r.trading_profit * factor,
            })
            .collect();
        Self::from_records(self.base_year, records)
    }
}

pub(crate) fn check_window(from: u32, to: u32, len: usize) -> Result<()> {
    if from < 1 || from > to || to as usize > len {
        return Err(Error::InvalidWindow { from, to, len });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_records_from_one() {
        let s = FundSeries::new(1988, [(20.0, 3.0), (20.0, 0.0)]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.records()[1].year_no, 2);
        assert_eq!(s.calendar_year(2), 1989);
        assert_eq!(s.last_year(), 1989);
    }

    #[test]
    fn rejects_empty_and_bad_sizes() {
        assert!(matches!(
            FundSeries::new(2000, Vec::new()),
            Err(Error::EmptySeries)
        ));
        let err = FundSeries::new(2000, [(10.0, 1.0), (0.0, 1.0)]).unwrap_err();
        assert!(matches!(
            err,
            Error::NonPositiveSize {
                year_no: Some(2),
                ..
            }
        ));
        assert!(FundSeries::new(2000, [(f64::NAN, 1.0)]).is_err());
        assert!(FundSeries::new(2000, [(1.0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn losses_are_allowed() {
        let s = FundSeries::new(2000, [(10.0, -25.0)]).unwrap();
        assert_eq!(s.net_returns(), vec![-2.5]);
    }

    #[test]
    fn rejects_gapped_year_numbers() {
        let recs = vec![
            FundRecord {
                year_no: 1,
                fund_size: 1.0,
                trading_profit: 0.0,
            },
            FundRecord {
                year_no: 3,
                fund_size: 1.0,
                trading_profit: 0.0,
            },
        ];
        assert!(matches!(
            FundSeries::from_records(0, recs),
            Err(Error::NonContiguousYearNo {
                position: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn window_rebases_indices_and_calendar() {
        let s = FundSeries::new(1988, (1..=5).map(|i| (i as f64, 0.0))).unwrap();
        let w = s.window(2, 4).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.base_year(), 1989);
        assert_eq!(w.initial_size(), 2.0);
        assert_eq!(w.records()[0].year_no, 1);
        assert!(s.window(0, 2).is_err());
        assert!(s.window(3, 2).is_err());
        assert!(s.window(1, 6).is_err());
    }

    #[test]
    fn calendar_lookup() {
        let s = FundSeries::new(1988, (0..31).map(|_| (1.0, 0.0))).unwrap();
        assert_eq!(s.year_no_of(2010).unwrap(), 23);
        assert!(s.year_no_of(1987).is_err());
        assert!(s.year_no_of(2019).is_err());
    }
}

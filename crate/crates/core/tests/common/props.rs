#![allow(dead_code)]

//! Strategies and property bodies shared by the property tests and the
//! acceptance suite.

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use fund_compounding::analysis::{divergence_report, subperiod_report, FeeScenario};
use fund_compounding::compounding::{
    annualized_growth, arithmetic_mean_return, cash_flows, final_value, grow_projection,
    naive_compound, size_profit_compound, FundSeries, RateSchedule,
};
use fund_compounding::ingestion::{parse_series, serialize_series};

pub const CASES: u32 = 1_000;

/// Sizes and profits for an arbitrary valid series; profits may be losses.
pub fn any_series() -> impl Strategy<Value = FundSeries> {
    (1usize..40, 1900i32..2100)
        .prop_flat_map(|(n, base)| (Just(base), vec((0.01f64..1e6, -1.0f64..3.0), n)))
        .prop_map(|(base, rows)| {
            FundSeries::new(base, rows.into_iter().map(|(v, r)| (v, v * r))).unwrap()
        })
}

/// Whole-number sizes so that differences and their sums are exact.
pub fn integer_size_series() -> impl Strategy<Value = FundSeries> {
    vec((1u32..1_000_000, 0i32..100_000), 1..60).prop_map(|rows| {
        FundSeries::new(2000, rows.into_iter().map(|(v, p)| (v as f64, p as f64))).unwrap()
    })
}

/// Every year's ending value is the next year's starting value.
pub fn self_financing_series() -> impl Strategy<Value = FundSeries> {
    (0.1f64..1e5, vec(-0.9f64..2.0, 1..40)).prop_map(|(v1, returns)| {
        let mut rows = Vec::with_capacity(returns.len());
        let mut v = v1;
        for r in returns {
            let p = v * r;
            rows.push((v, p));
            v += p;
        }
        FundSeries::new(2000, rows).unwrap()
    })
}

/// Positive profits and non-decreasing sizes with at least one increase.
pub fn growing_series() -> impl Strategy<Value = FundSeries> {
    (
        1.0f64..1e4,
        vec((0.0f64..2.0, 0.01f64..2.0), 2..30),
        1usize..1000,
    )
        .prop_map(|(v1, steps, bump_at)| {
            let n = steps.len();
            let bump = 1 + bump_at % (n - 1);
            let mut rows = Vec::with_capacity(n);
            let mut v = v1;
            for (t, (growth, r)) in steps.into_iter().enumerate() {
                if t > 0 {
                    v *= 1.0 + growth;
                    if t == bump {
                        v *= 1.5;
                    }
                }
                rows.push((v, v * r));
            }
            FundSeries::new(2000, rows).unwrap()
        })
}

pub fn returns_above_total_loss() -> impl Strategy<Value = Vec<f64>> {
    vec(-0.99f64..5.0, 1..80)
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn self_financing_equivalence(series: &FundSeries) -> Result<(), TestCaseError> {
    let z = RateSchedule::zero(series.len());
    let naive = naive_compound(&series.net_returns()).unwrap();
    let sp = size_profit_compound(series, &z).unwrap().rate;
    check((naive - sp).abs() < 1e-9, || {
        format!("naive {naive} vs size-profit {sp}")
    })?;
    let gap = divergence_report(series, &z).unwrap().gap;
    check(gap.abs() < 1e-9, || format!("gap {gap}"))
}

pub fn zero_rate_identity(series: &FundSeries) -> Result<(), TestCaseError> {
    let b = final_value(series, &RateSchedule::zero(series.len())).unwrap();
    let expected = series.initial_size() + series.total_profit();
    let scale = series.initial_size()
        + series.profits().map(f64::abs).sum::<f64>()
        + series.sizes().sum::<f64>();
    check((b.final_value - expected).abs() <= 1e-9 * scale, || {
        format!("final value {} vs V1 + sum P {}", b.final_value, expected)
    })
}

pub fn telescoping(series: &FundSeries) -> Result<(), TestCaseError> {
    let total: f64 = cash_flows(series).iter().sum();
    let expected = series.final_size() - series.initial_size();
    check(total == expected, || format!("sum {total} vs {expected}"))?;
    check(cash_flows(series).len() == series.len() - 1, || {
        "length".into()
    })
}

pub fn am_gm(returns: &[f64]) -> Result<(), TestCaseError> {
    let g = naive_compound(returns).unwrap();
    let a = arithmetic_mean_return(returns).unwrap();
    check(g <= a + 1e-12 * (1.0 + a.abs()), || {
        format!("GM {g} > AM {a}")
    })
}

pub fn am_gm_equal_case(value: f64, n: usize) -> Result<(), TestCaseError> {
    let returns = vec![value; n];
    let g = naive_compound(&returns).unwrap();
    let a = arithmetic_mean_return(&returns).unwrap();
    check((g - a).abs() <= 1e-12 * (1.0 + a.abs()), || {
        format!("GM {g} != AM {a}")
    })
}

pub fn round_trip(initial: f64, rate: f64, years: u32) -> Result<(), TestCaseError> {
    let grown = grow_projection(initial, rate, years).unwrap();
    let back = annualized_growth(initial, grown, years).unwrap();
    check((back - rate).abs() <= 1e-9 * rate.abs().max(1.0), || {
        format!("rate {rate} came back as {back}")
    })
}

pub fn scale_invariance(series: &FundSeries, lambda: f64) -> Result<(), TestCaseError> {
    let n = series.len();
    let z = RateSchedule::zero(n);
    let scaled = series.scaled(lambda).unwrap();

    let naive = naive_compound(&series.net_returns()).unwrap();
    let naive_scaled = naive_compound(&scaled.net_returns()).unwrap();
    check(
        (naive - naive_scaled).abs() <= 1e-9 * naive.abs().max(1.0),
        || format!("naive {naive} vs {naive_scaled}"),
    )?;

    let rates = RateSchedule::flat(0.03, n).unwrap();
    for r in [&z, &rates] {
        let b = final_value(series, r).unwrap();
        let bs = final_value(&scaled, r).unwrap();
        let tol =
            1e-9 * lambda * (b.final_value.abs() + b.accrued_inflow.abs() + b.final_fund_size);
        check(
            (bs.final_value - lambda * b.final_value).abs() <= tol,
            || {
                format!(
                    "final value {} vs {} * {}",
                    bs.final_value, lambda, b.final_value
                )
            },
        )?;
        if b.final_value > 0.0 {
            let c = size_profit_compound(series, r).unwrap().rate;
            let cs = size_profit_compound(&scaled, r).unwrap().rate;
            check((c - cs).abs() <= 1e-9 * c.abs().max(1.0), || {
                format!("mu_c {c} vs {cs}")
            })?;
        }
    }
    Ok(())
}

pub fn financing_monotone(series: &FundSeries, base: f64, bump: f64) -> Result<(), TestCaseError> {
    let n = series.len();
    let lo = RateSchedule::flat_split(base, base, n).unwrap();
    let hi = RateSchedule::flat_split(base, base + bump, n).unwrap();
    let (a, b) = (
        size_profit_compound(series, &lo),
        size_profit_compound(series, &hi),
    );
    match (a, b) {
        (Ok(a), Ok(b)) => check(b.rate < a.rate, || format!("{} !< {}", b.rate, a.rate)),
        // Raising financing cost can only push the final value down, possibly
        // through zero.
        (Ok(_), Err(_)) => Ok(()),
        (a, b) => Err(TestCaseError::fail(format!("unexpected {a:?} / {b:?}"))),
    }
}

pub fn deposit_monotone(series: &FundSeries, base: f64, bump: f64) -> Result<(), TestCaseError> {
    let n = series.len();
    let lo = RateSchedule::flat_split(base, base, n).unwrap();
    let hi = RateSchedule::flat_split(base + bump, base, n).unwrap();
    let a = final_value(series, &lo).unwrap().final_value;
    let b = final_value(series, &hi).unwrap().final_value;
    check(b > a, || format!("final value {b} !> {a}"))?;
    if let (Ok(a), Ok(b)) = (
        size_profit_compound(series, &lo),
        size_profit_compound(series, &hi),
    ) {
        check(b.rate > a.rate, || format!("{} !> {}", b.rate, a.rate))?;
    }
    Ok(())
}

pub fn fee_redistribution(s: &FeeScenario) -> Result<(), TestCaseError> {
    let r = s.outcome().unwrap().manager_return;
    let g = s.gross_profit_rate;
    if s.insider_equity >= s.manager_stake {
        check(r >= g - 1e-12 * g, || {
            format!("{r} < {g} with insider >= stake")
        })
    } else if s.insider_equity < s.manager_stake - 1e-9 {
        check(r < g, || format!("{r} >= {g} with insider < stake"))
    } else {
        Ok(())
    }
}

pub fn fee_scenarios() -> impl Strategy<Value = FeeScenario> {
    (
        0.01f64..=1.0,
        1.0f64..1e6,
        0.001f64..3.0,
        0.001f64..0.999,
        0.01f64..=1.0,
    )
        .prop_map(
            |(manager_stake, fund_size, gross_profit_rate, performance_fee, insider_equity)| {
                FeeScenario {
                    manager_stake,
                    fund_size,
                    gross_profit_rate,
                    performance_fee,
                    insider_equity,
                }
            },
        )
}

pub fn window_telescoping(series: &FundSeries, split: usize) -> Result<(), TestCaseError> {
    let n = series.len() as u32;
    if n < 2 {
        return Ok(());
    }
    let k = 1 + (split as u32 % n);
    let z = RateSchedule::zero(series.len());
    let left = subperiod_report(series, 1, k, &z).unwrap().total_inflow;
    let right = subperiod_report(series, k, n, &z).unwrap().total_inflow;
    let whole = subperiod_report(series, 1, n, &z).unwrap().total_inflow;
    check(left + right == whole, || {
        format!("{left} + {right} != {whole}")
    })
}

pub fn csv_round_trip(series: &FundSeries) -> Result<(), TestCaseError> {
    let text = serialize_series(series);
    let parsed = parse_series(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    check(&parsed.series == series, || {
        format!("round trip changed\n{text}")
    })
}

//! Counting subsets of the function space that are closed under
//! permutation, and the fraction they make up of all non-empty subsets.
//!
//! A closed subset is a union of basis classes and there is one basis class
//! per histogram, so there are `2^H - 1` non-empty closed subsets where
//! `H = C(|X|+|Y|-1, |X|)`, out of `2^(|Y|^|X|) - 1` non-empty subsets.

use std::io::Write;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{NflError, Result};
use crate::rational::Rational;
use crate::space::{CostDomain, FunctionSet, Guards, ObjectiveFunction, SearchSpace};

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        acc /= BigUint::from(i);
    }
    acc
}

/// Number of histograms `C(x + y - 1, x)`.
pub fn count_histograms(x: u64, y: u64) -> BigUint {
    assert!(x >= 1 && y >= 1, "|X| and |Y| must be positive");
    binomial(x + y - 1, x)
}

/// `|Y|^|X|`.
pub fn count_functions(x: u64, y: u64) -> BigUint {
    num_traits::pow(BigUint::from(y), x as usize)
}

fn pow2_minus_one(exponent: &BigUint, guards: &Guards) -> Result<BigUint> {
    match exponent.to_u64() {
        Some(e) if e <= guards.max_exponent => Ok((BigUint::one() << e) - 1u32),
        _ => Err(NflError::ExactOverflowGuard {
            exponent: exponent.to_string(),
            limit: guards.max_exponent,
        }),
    }
}

/// Non-empty closed subsets, `2^C(x+y-1, x) - 1`.
pub fn count_cup_subsets(x: u64, y: u64, guards: &Guards) -> Result<BigUint> {
    pow2_minus_one(&count_histograms(x, y), guards)
}

/// All non-empty subsets, `2^(y^x) - 1`.
pub fn count_all_subsets(x: u64, y: u64, guards: &Guards) -> Result<BigUint> {
    pow2_minus_one(&count_functions(x, y), guards)
}

/// `log10(2^n - 1)` without materializing `2^n`.
fn log10_pow2_minus_one(n: &BigUint) -> f64 {
    let nf = n.to_f64().unwrap_or(f64::INFINITY);
    // the -1 only matters for small exponents
    let correction = if nf < 64.0 {
        (-(2f64.powf(-nf))).ln_1p() / std::f64::consts::LN_10
    } else {
        0.0
    };
    nf * std::f64::consts::LOG10_2 + correction
}

/// `log10` of the fraction of non-empty subsets that are closed.
pub fn fraction_log10(x: u64, y: u64) -> f64 {
    let h = count_histograms(x, y);
    let t = count_functions(x, y);
    // the exponent difference is exact; only the scaling is floating point
    let diff = (t.clone() - h.clone()).to_f64().unwrap_or(f64::INFINITY);
    let corr_h = log10_pow2_minus_one(&h) - h.to_f64().unwrap_or(f64::INFINITY) * std::f64::consts::LOG10_2;
    let corr_t = log10_pow2_minus_one(&t) - t.to_f64().unwrap_or(f64::INFINITY) * std::f64::consts::LOG10_2;
    let value = -diff * std::f64::consts::LOG10_2 + corr_h - corr_t;
    if value == 0.0 {
        0.0 // no negative zero in reports
    } else {
        value
    }
}

/// Exact fraction when `2^(y^x)` stays under the exponent guard.
pub fn fraction_exact(x: u64, y: u64, guards: &Guards) -> Result<Rational> {
    let cup = count_cup_subsets(x, y, guards)?;
    let all = count_all_subsets(x, y, guards)?;
    Ok(Rational::new(cup.into(), all.into()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub x: u64,
    pub y: u64,
    pub histogram_count: BigUint,
    pub cup_subsets: BigUint,
    /// `None` when `2^(y^x)` exceeds the exponent guard.
    pub all_subsets: Option<BigUint>,
    pub fraction_log10: f64,
    pub fraction_exact: Option<Rational>,
}

pub fn count_report(x: u64, y: u64, guards: &Guards) -> Result<CountReport> {
    let histogram_count = count_histograms(x, y);
    let cup_subsets = count_cup_subsets(x, y, guards)?;
    let all_subsets = match count_all_subsets(x, y, guards) {
        Ok(n) => Some(n),
        Err(NflError::ExactOverflowGuard { .. }) => None,
        Err(e) => return Err(e),
    };
    let fraction_exact = all_subsets
        .as_ref()
        .map(|all| Rational::new(cup_subsets.clone().into(), all.clone().into()));
    Ok(CountReport {
        x,
        y,
        histogram_count,
        cup_subsets,
        all_subsets,
        fraction_log10: fraction_log10(x, y),
        fraction_exact,
    })
}

/// Counts closed subsets by classifying every non-empty subset of the
/// function space. Only for `y^x <= 20`.
pub fn brute_force_count_cup(x: u64, y: u64, guards: &Guards) -> Result<BigUint> {
    let total = count_functions(x, y);
    let n = match total.to_u64() {
        Some(n) if n <= 20 => n as usize,
        _ => return Err(NflError::guard("brute-force subsets (y^x <= 20)", &total, 20)),
    };
    let space = SearchSpace::new(x as usize)?;
    let costs = CostDomain::range(y as usize)?;
    let functions: Vec<ObjectiveFunction> = (0..n as u64)
        .map(|r| ObjectiveFunction::from_rank(r, x as usize, y as usize))
        .collect();
    let mut closed = 0u64;
    for mask in 1u32..(1u32 << n) {
        let members = functions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, f)| f.clone());
        let set = FunctionSet::new(space.clone(), costs.clone(), members)?;
        if set.is_cup(guards)? {
            closed += 1;
        }
    }
    Ok(BigUint::from(closed))
}

/// One row of the fraction curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub x: u64,
    pub y: u64,
    pub histogram_count: BigUint,
    pub cup_count: CountCell,
    pub total_count: CountCell,
    pub fraction_log10: f64,
}

/// An exact count, or its base-10 logarithm when too long to print.
#[derive(Debug, Clone, PartialEq)]
pub enum CountCell {
    Exact(BigUint),
    Log10(f64),
}

impl std::fmt::Display for CountCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountCell::Exact(n) => write!(f, "{n}"),
            CountCell::Log10(v) => write!(f, "log10:{v:.12}"),
        }
    }
}

/// Counts whose exponent is at most this many bits are printed exactly.
pub const EXACT_CELL_BITS: u64 = 128;

fn cell(exponent: &BigUint) -> CountCell {
    match exponent.to_u64() {
        Some(e) if e <= EXACT_CELL_BITS => CountCell::Exact((BigUint::one() << e) - 1u32),
        _ => CountCell::Log10(log10_pow2_minus_one(exponent)),
    }
}

/// Curve rows for every `y` in `ys` (outer) and `x` in `xs` (inner).
pub fn fraction_curve(xs: impl IntoIterator<Item = u64> + Clone, ys: &[u64]) -> Vec<CurveRow> {
    let mut rows = Vec::new();
    for &y in ys {
        for x in xs.clone() {
            let h = count_histograms(x, y);
            rows.push(CurveRow {
                x,
                y,
                cup_count: cell(&h),
                total_count: cell(&count_functions(x, y)),
                histogram_count: h,
                fraction_log10: fraction_log10(x, y),
            });
        }
    }
    rows
}

pub fn write_curve_csv<W: Write>(rows: &[CurveRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "x",
        "y",
        "histogram_count",
        "cup_count",
        "total_count",
        "fraction_log10",
    ])?;
    for r in rows {
        w.write_record([
            r.x.to_string(),
            r.y.to_string(),
            r.histogram_count.to_string(),
            r.cup_count.to_string(),
            r.total_count.to_string(),
            format!("{:.12}", r.fraction_log10),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigUint::one()];
        for n in 0..30u64 {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v, "C({n},{k})");
            }
            let mut next = vec![BigUint::one()];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigUint::one());
            row = next;
        }
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn histogram_counts() {
        assert_eq!(count_histograms(4, 2), BigUint::from(5u32));
        assert_eq!(count_histograms(7, 1), BigUint::one());
        assert_eq!(count_histograms(2, 3), BigUint::from(6u32));
    }

    #[test]
    fn subset_counts() {
        let g = Guards::default();
        assert_eq!(count_cup_subsets(4, 2, &g).unwrap(), BigUint::from(31u32));
        assert_eq!(count_all_subsets(4, 2, &g).unwrap(), BigUint::from(65535u32));
        assert_eq!(count_cup_subsets(2, 2, &g).unwrap(), BigUint::from(7u32));
        assert_eq!(count_all_subsets(2, 2, &g).unwrap(), BigUint::from(15u32));
        for y in 1..6 {
            assert_eq!(
                count_cup_subsets(1, y, &g).unwrap(),
                count_all_subsets(1, y, &g).unwrap()
            );
        }
    }

    #[test]
    fn exact_guard() {
        let g = Guards {
            max_exponent: 10,
            ..Guards::default()
        };
        assert!(matches!(
            count_all_subsets(4, 2, &g),
            Err(NflError::ExactOverflowGuard { .. })
        ));
        let report = count_report(4, 2, &g).unwrap();
        assert!(report.all_subsets.is_none());
        assert!(report.fraction_exact.is_none());
    }

    #[test]
    fn brute_force_small() {
        let g = Guards::default();
        assert_eq!(brute_force_count_cup(2, 2, &g).unwrap(), BigUint::from(7u32));
        assert_eq!(brute_force_count_cup(1, 3, &g).unwrap(), BigUint::from(7u32));
        assert!(brute_force_count_cup(5, 2, &g).is_err());
    }

    #[test]
    fn curve_point_4_2() {
        let expected = (31f64 / 65535f64).log10();
        assert!((fraction_log10(4, 2) - expected).abs() < 1e-12);
        assert!((fraction_log10(4, 2) + 3.3251).abs() < 1e-4);
        assert_eq!(fraction_log10(1, 3), 0.0);
    }

    #[test]
    fn cells_switch_to_log_form() {
        let rows = fraction_curve(1..=8, &[4]);
        assert!(matches!(rows[0].total_count, CountCell::Exact(_)));
        assert!(matches!(rows[7].total_count, CountCell::Log10(_)));
        assert!(rows[7].total_count.to_string().starts_with("log10:"));
    }
}

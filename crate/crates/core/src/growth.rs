//! Exact Cayley-ball counts and the growth-rate bounds they imply.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Pow;
use rayon::prelude::*;
use thiserror::Error;

use crate::groups::{GeneratingSet, GroupElement, GroupError, GroupSpec, LeftMultiplier};
use crate::scalar::Scalar;
use crate::witness::FreeSemigroupWitness;

/// Default cap on the number of distinct elements visited.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

const CHUNK: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrowthError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("element budget exceeded after radius {}", .partial.radius())]
    BudgetExceeded { partial: Box<GrowthReport> },
    #[error("budget must be at least 1")]
    InvalidBudget,
    #[error("report has no positive radius")]
    EmptyReport,
    #[error("lower bound {lower} exceeds upper bound {upper}")]
    InconsistentBounds { lower: String, upper: String },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

/// Parallelism used by [`enumerate_ball_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Threads {
    /// Rayon's current pool.
    #[default]
    Ambient,
    Sequential,
    Fixed(usize),
}

impl Threads {
    /// `0` is sequential, `k` a pool of `k` threads.
    pub fn from_count(k: usize) -> Self {
        if k == 0 {
            Threads::Sequential
        } else {
            Threads::Fixed(k)
        }
    }
}

/// Ball sizes `β_0..β_N` for one generating set.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub ball_sizes: Vec<u64>,
    pub requested_radius: usize,
    pub elements_visited: u64,
    pub wall_time: Duration,
}

impl GrowthReport {
    /// Largest radius fully counted.
    pub fn radius(&self) -> usize {
        self.ball_sizes.len() - 1
    }

    pub fn is_complete(&self) -> bool {
        self.radius() == self.requested_radius
    }

    /// `β_n^{1/n}` for `n >= 1`.
    pub fn nth_root(&self, n: usize) -> Option<f64> {
        (n >= 1 && n < self.ball_sizes.len()).then(|| (self.ball_sizes[n] as f64).powf(1.0 / n as f64))
    }

    pub fn nth_root_upper_bounds(&self) -> Vec<Option<f64>> {
        (0..self.ball_sizes.len()).map(|n| self.nth_root(n)).collect()
    }

    /// CSV table `n,ball_size,nth_root`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,ball_size,nth_root\n");
        for (n, b) in self.ball_sizes.iter().enumerate() {
            let root = self.nth_root(n).map(|x| format_significant(x, 6)).unwrap_or_default();
            out.push_str(&format!("{n},{b},{root}\n"));
        }
        out
    }
}

/// Decimal rendering of `x` rounded to `digits` significant digits.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i64 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let ds: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let body = if exp >= ds.len() as i64 - 1 {
        format!("{ds}{}", "0".repeat((exp - (ds.len() as i64 - 1)) as usize))
    } else if exp >= 0 {
        let (int, frac) = ds.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{ds}", "0".repeat((-exp - 1) as usize))
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Counts `|{g : λ_S(g) <= n}|` for `n = 0..=radius`.
pub fn enumerate_ball<T: Scalar>(
    spec: &GroupSpec<T>,
    set: &GeneratingSet,
    radius: usize,
    budget: u64,
) -> Result<GrowthReport, GrowthError> {
    enumerate_ball_with(spec, set, radius, budget, Threads::Ambient)
}

pub fn enumerate_ball_with<T: Scalar>(
    spec: &GroupSpec<T>,
    set: &GeneratingSet,
    radius: usize,
    budget: u64,
    threads: Threads,
) -> Result<GrowthReport, GrowthError> {
    walk(spec, set, radius, budget, threads, false).map(|(r, _)| r)
}

/// Every element of the ball of the given radius, layer by layer.
pub fn ball_elements<T: Scalar>(
    spec: &GroupSpec<T>,
    set: &GeneratingSet,
    radius: usize,
    budget: u64,
) -> Result<Vec<GroupElement<T>>, GrowthError> {
    walk(spec, set, radius, budget, Threads::Ambient, true).map(|(_, e)| e)
}

fn walk<T: Scalar>(
    spec: &GroupSpec<T>,
    set: &GeneratingSet,
    radius: usize,
    budget: u64,
    threads: Threads,
    keep: bool,
) -> Result<(GrowthReport, Vec<GroupElement<T>>), GrowthError> {
    if budget == 0 {
        return Err(GrowthError::InvalidBudget);
    }
    let start = Instant::now();
    let kind = spec.kind();
    let mut multipliers: Vec<LeftMultiplier<T>> = Vec::with_capacity(2 * set.len());
    for (_, word) in set.entries() {
        let g = spec.evaluate_word(word)?;
        multipliers.push(kind.left_multiplier(&g)?);
        multipliers.push(kind.left_multiplier(&kind.invert(&g)?)?);
    }

    let pool = match threads {
        Threads::Fixed(k) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| GrowthError::ThreadPool(e.to_string()))?,
        ),
        _ => None,
    };
    let sequential = threads == Threads::Sequential;

    let identity = spec.identity();
    let mut visited: HashSet<Vec<u8>> = HashSet::new();
    visited.insert(identity.canonical_encoding());
    let mut kept = if keep { vec![identity.clone()] } else { Vec::new() };
    let mut frontier = vec![identity];
    let mut sizes = vec![1u64];
    let report = |sizes: Vec<u64>, visited: usize| GrowthReport {
        ball_sizes: sizes,
        requested_radius: radius,
        elements_visited: visited as u64,
        wall_time: start.elapsed(),
    };

    for _ in 0..radius {
        let mut next = Vec::new();
        for chunk in frontier.chunks(CHUNK) {
            let expand = |g: &GroupElement<T>| {
                multipliers
                    .iter()
                    .filter_map(|m| {
                        let h = m.apply(g);
                        let e = h.canonical_encoding();
                        (!visited.contains(&e)).then_some((h, e))
                    })
                    .collect::<Vec<_>>()
            };
            let candidates: Vec<Vec<(GroupElement<T>, Vec<u8>)>> = if sequential {
                chunk.iter().map(expand).collect()
            } else if let Some(pool) = &pool {
                pool.install(|| chunk.par_iter().map(expand).collect())
            } else {
                chunk.par_iter().map(expand).collect()
            };
            for (h, e) in candidates.into_iter().flatten() {
                if visited.insert(e) {
                    if visited.len() as u64 > budget {
                        return Err(GrowthError::BudgetExceeded {
                            partial: Box::new(report(sizes, visited.len())),
                        });
                    }
                    next.push(h);
                }
            }
        }
        sizes.push(visited.len() as u64);
        if keep {
            kept.extend(next.iter().cloned());
        }
        frontier = next;
    }
    let n = visited.len();
    Ok((report(sizes, n), kept))
}

/// Rigorous bounds on the growth rate `β(S, Γ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RateBounds {
    /// Radius attaining the smallest `β_n^{1/n}`.
    pub upper_radius: usize,
    pub upper: f64,
    /// Witness word length `L` behind the lower bound `2^{1/L}`.
    pub lower_length: Option<usize>,
    pub lower: f64,
}

impl RateBounds {
    pub fn upper_display(&self) -> String {
        format_significant(self.upper, 6)
    }

    pub fn lower_display(&self) -> String {
        format_significant(self.lower, 6)
    }
}

/// `upper = min_n β_n^{1/n}`, `lower = 2^{1/L}` from a witness (else 1).
///
/// Comparisons are exact: `β_m^{1/m} < β_n^{1/n}` iff `β_m^n < β_n^m`, and
/// `2^{1/L} <= β_n^{1/n}` iff `2^n <= β_n^L`.
pub fn rate_bounds<T: Scalar>(
    report: &GrowthReport,
    witness: Option<&FreeSemigroupWitness<T>>,
) -> Result<RateBounds, GrowthError> {
    if report.ball_sizes.len() < 2 {
        return Err(GrowthError::EmptyReport);
    }
    let big = |n: usize| BigInt::from(report.ball_sizes[n]);
    let mut best = 1;
    for n in 2..report.ball_sizes.len() {
        if Pow::pow(big(n), best as u32) < Pow::pow(big(best), n as u32) {
            best = n;
        }
    }
    let upper = report.nth_root(best).expect("positive radius");
    let (lower_length, lower) = match witness {
        Some(w) => {
            let l = w.max_length();
            if Pow::pow(BigInt::from(2), best as u32) > Pow::pow(big(best), l as u32) {
                return Err(GrowthError::InconsistentBounds {
                    lower: format_significant(2f64.powf(1.0 / l as f64), 6),
                    upper: format_significant(upper, 6),
                });
            }
            (Some(l), 2f64.powf(1.0 / l as f64))
        }
        None => (None, 1.0),
    };
    Ok(RateBounds { upper_radius: best, upper, lower_length, lower })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(2f64.sqrt(), 6), "1.41421");
        assert_eq!(format_significant(11f64.powf(0.2), 6), "1.61539");
        assert_eq!(format_significant(7.0, 6), "7.00000");
        assert_eq!(format_significant(9.9999996, 6), "10.0000");
        assert_eq!(format_significant(1234567.0, 6), "1234570");
        assert_eq!(format_significant(0.000123456789, 6), "0.000123457");
        assert_eq!(format_significant(-2.5, 3), "-2.50");
    }
}

//! Coefficient tables of partition-counting series.
//!
//! All tables are exact: they are built by multiplying truncated power series
//! with arbitrary-precision coefficients. The only floating-point quantity in
//! this module is [`hr_estimate`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which series a [`CountTable`] holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "series", rename_all = "kebab-case")]
pub enum SeriesKind {
    /// `π(n)`, all partitions.
    Plain,
    /// `π_k(n)`, coefficients of `∏ (1 − t^i)^{−k}`.
    KQuotient { k: usize },
    /// `π'_{a,m}(n)`, distinct parts from `{a, a+m, a+2m, …}`.
    InfiniteProgression { a: usize, m: usize },
    /// `π'_R(n)`, distinct parts from a finite set `R`.
    FiniteSet { set: Vec<usize> },
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Plain => write!(f, "pi"),
            SeriesKind::KQuotient { k } => write!(f, "pi_{k}"),
            SeriesKind::InfiniteProgression { a, m } => write!(f, "pi'_{{{a},{m}}}"),
            SeriesKind::FiniteSet { set } => write!(f, "pi'_R R={set:?}"),
        }
    }
}

/// Dense coefficient table indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    kind: SeriesKind,
    values: Vec<BigUint>,
}

impl CountTable {
    pub fn kind(&self) -> &SeriesKind {
        &self.kind
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Coefficient of `t^n`; zero for negative `n` and past the end of a
    /// finite product. Indexing past the computed limit of an infinite
    /// series panics.
    pub fn get(&self, n: i64) -> BigUint {
        if n < 0 {
            return BigUint::zero();
        }
        match self.values.get(n as usize) {
            Some(v) => v.clone(),
            None if matches!(self.kind, SeriesKind::FiniteSet { .. }) && self.is_full() => {
                BigUint::zero()
            }
            None => panic!("{} computed only up to {}", self.kind, self.values.len() - 1),
        }
    }

    /// Signed access, convenient for alternating sums.
    pub fn signed(&self, n: i64) -> BigInt {
        BigInt::from(self.get(n))
    }

    fn is_full(&self) -> bool {
        match &self.kind {
            SeriesKind::FiniteSet { set } => self.values.len() == set.iter().sum::<usize>() + 1,
            _ => false,
        }
    }
}

/// `a, a+m, a+2m, …` with `gcd(a, m) = 1`, optionally stopped after `steps`
/// further terms (`R = {a, a+m, …, a+km}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProgressionSpec {
    pub a: usize,
    pub m: usize,
    pub steps: Option<usize>,
}

impl ProgressionSpec {
    pub fn new(a: usize, m: usize, steps: Option<usize>) -> Result<Self> {
        if a == 0 || m == 0 {
            return Err(Error::InvalidArgument("progression needs a, m ≥ 1".into()));
        }
        if a.gcd(&m) != 1 {
            return Err(Error::InvalidArgument(format!("gcd({a}, {m}) must be 1")));
        }
        Ok(ProgressionSpec { a, m, steps })
    }

    /// Terms not exceeding `limit` (and within `steps`, when finite).
    pub fn terms_up_to(&self, limit: usize) -> Vec<usize> {
        let count = self.steps.map_or(usize::MAX, |k| k + 1);
        (0..count)
            .map(|r| self.a + r * self.m)
            .take_while(|&t| t <= limit)
            .collect()
    }

    /// The finite set `R(a, m, k)`; errors for an unbounded progression.
    pub fn finite_set(&self) -> Result<Vec<usize>> {
        let k = self
            .steps
            .ok_or_else(|| Error::InvalidArgument("progression has no step count".into()))?;
        Ok((0..=k).map(|r| self.a + r * self.m).collect())
    }
}

/// `π(0..=limit)` by Euler's pentagonal-number recurrence.
pub fn pi(limit: usize) -> CountTable {
    let mut values: Vec<BigInt> = Vec::with_capacity(limit + 1);
    values.push(BigInt::one());
    for n in 1..=limit {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = values[n - g1].clone();
            if g2 <= n {
                term += &values[n - g2];
            }
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        values.push(acc);
    }
    CountTable {
        kind: SeriesKind::Plain,
        values: values
            .into_iter()
            .map(|v| v.to_biguint().expect("partition numbers are positive"))
            .collect(),
    }
}

/// `π_k(0..=limit)`: coefficients of `∏_{i≥1} (1 − t^i)^{−k}`.
pub fn pi_k(k: usize, limit: usize) -> Result<CountTable> {
    if k == 0 {
        return Err(Error::InvalidArgument("pi_k needs k ≥ 1".into()));
    }
    let mut values = vec![BigUint::zero(); limit + 1];
    values[0] = BigUint::one();
    for i in 1..=limit {
        for _ in 0..k {
            for j in i..=limit {
                let add = values[j - i].clone();
                values[j] += add;
            }
        }
    }
    Ok(CountTable {
        kind: SeriesKind::KQuotient { k },
        values,
    })
}

fn distinct_parts_product(parts: &[usize], limit: usize) -> Vec<BigUint> {
    let mut values = vec![BigUint::zero(); limit + 1];
    values[0] = BigUint::one();
    for &r in parts {
        if r > limit {
            continue;
        }
        for j in (r..=limit).rev() {
            let add = values[j - r].clone();
            values[j] += add;
        }
    }
    values
}

/// `π'_{a,m}(0..=limit)`; parts beyond `limit` cannot contribute, so the
/// truncated product is exact.
pub fn pi_prime_inf(spec: ProgressionSpec, limit: usize) -> Result<CountTable> {
    ProgressionSpec::new(spec.a, spec.m, None)?;
    let parts = ProgressionSpec { steps: None, ..spec }.terms_up_to(limit);
    Ok(CountTable {
        kind: SeriesKind::InfiniteProgression {
            a: spec.a,
            m: spec.m,
        },
        values: distinct_parts_product(&parts, limit),
    })
}

/// `π'_R(0..=N)` for a finite set of distinct positive parts, `N = ΣR`.
/// With `limit`, the table is cut at `min(limit, N)`.
pub fn pi_prime_r(set: &[usize], limit: Option<usize>) -> Result<CountTable> {
    if set.is_empty() {
        return Err(Error::InvalidArgument("R must be non-empty".into()));
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    if sorted[0] == 0 {
        return Err(Error::InvalidArgument("R must contain positive integers".into()));
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!("R = {set:?} has repeated entries")));
    }
    let total: usize = sorted.iter().sum();
    let top = limit.map_or(total, |l| l.min(total));
    Ok(CountTable {
        kind: SeriesKind::FiniteSet { set: sorted.clone() },
        values: distinct_parts_product(&sorted, top),
    })
}

/// Smallest `L` with `π'_R(n+1) > π'_R(n) > 0` for every `L ≤ n < ⌊N/2⌋`,
/// or `None` when no `L < ⌊N/2⌋` works.
pub fn monotonicity_threshold(set: &[usize]) -> Result<Option<usize>> {
    let table = pi_prime_r(set, None)?;
    let half = (table.len() - 1) / 2;
    let v = table.values();
    let mut threshold = None;
    for n in (0..half).rev() {
        if v[n + 1] > v[n] && !v[n].is_zero() {
            threshold = Some(n);
        } else {
            break;
        }
    }
    Ok(threshold)
}

/// Leading Hardy–Ramanujan term for `π(n)` next to the exact value.
#[derive(Clone, Debug, Serialize)]
pub struct HrEstimate {
    pub n: usize,
    pub estimate: f64,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub exact: BigUint,
    pub ratio: f64,
}

/// `c = π·√(2/3)` in the exponent of the asymptotic.
pub fn hr_constant() -> f64 {
    std::f64::consts::PI * (2.0f64 / 3.0).sqrt()
}

/// `e^{c√n} / (4√3 n)` and `π(n) / estimate`.
pub fn hr_estimate(n: usize) -> Result<HrEstimate> {
    if n == 0 {
        return Err(Error::InvalidArgument("the estimate needs n ≥ 1".into()));
    }
    let nf = n as f64;
    let estimate = (hr_constant() * nf.sqrt()).exp() / (4.0 * 3f64.sqrt() * nf);
    let exact = pi(n).values[n].clone();
    let ratio = exact
        .to_f64()
        .ok_or_else(|| Error::InvalidArgument(format!("π({n}) overflows a double")))?
        / estimate;
    Ok(HrEstimate {
        n,
        estimate,
        exact,
        ratio,
    })
}

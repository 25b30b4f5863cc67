//! Counts of small ribbons removable from a diagram, and the corner
//! polynomials predicting `g((n−|τ|, τ), μ, μ)` for `|τ| ≤ 3`.

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::character::border_strips;
use crate::error::{Error, Result};
use crate::partition::Partition;

use super::kron_g;

/// Ribbons with at most three cells, named by row lengths read top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ribbon {
    One,
    Two,
    OneOne,
    Three,
    TwoOne,
    OneTwo,
    OneOneOne,
}

impl Ribbon {
    pub const ALL: [Ribbon; 7] = [
        Ribbon::One,
        Ribbon::Two,
        Ribbon::OneOne,
        Ribbon::Three,
        Ribbon::TwoOne,
        Ribbon::OneTwo,
        Ribbon::OneOneOne,
    ];

    pub fn composition(self) -> &'static [usize] {
        match self {
            Ribbon::One => &[1],
            Ribbon::Two => &[2],
            Ribbon::OneOne => &[1, 1],
            Ribbon::Three => &[3],
            Ribbon::TwoOne => &[2, 1],
            Ribbon::OneTwo => &[1, 2],
            Ribbon::OneOneOne => &[1, 1, 1],
        }
    }

    pub fn from_composition(rows: &[usize]) -> Option<Ribbon> {
        Ribbon::ALL.into_iter().find(|r| r.composition() == rows)
    }

    pub fn label(self) -> &'static str {
        match self {
            Ribbon::One => "1",
            Ribbon::Two => "2",
            Ribbon::OneOne => "11",
            Ribbon::Three => "3",
            Ribbon::TwoOne => "21",
            Ribbon::OneTwo => "12",
            Ribbon::OneOneOne => "111",
        }
    }
}

/// `c_ν(μ)` for the seven small ribbons `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerCounts {
    pub mu: Partition,
    counts: [u64; 7],
}

impl CornerCounts {
    pub fn get(&self, r: Ribbon) -> u64 {
        self.counts[Ribbon::ALL.iter().position(|&x| x == r).expect("listed")]
    }
}

impl Serialize for CornerCounts {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(7))?;
        for r in Ribbon::ALL {
            map.serialize_entry(r.label(), &self.get(r))?;
        }
        map.end()
    }
}

pub fn corner_counts(mu: &Partition) -> CornerCounts {
    let mut counts = [0u64; 7];
    for t in 1..=3 {
        for strip in border_strips(mu.parts(), t) {
            if let Some(r) = Ribbon::from_composition(&strip.row_cells) {
                counts[Ribbon::ALL.iter().position(|&x| x == r).expect("listed")] += 1;
            }
        }
    }
    CornerCounts {
        mu: mu.clone(),
        counts,
    }
}

/// The corner polynomial `f(τ, μ)`, a prediction for `g((n−|τ|, τ), μ, μ)`.
pub fn corner_formula(tau: &Partition, mu: &Partition) -> Result<BigInt> {
    let c = corner_counts(mu);
    let v = |r| c.get(r) as i64;
    let c1 = v(Ribbon::One);
    let dom = v(Ribbon::Two) + v(Ribbon::OneOne);
    let bent = v(Ribbon::TwoOne) + v(Ribbon::OneTwo);
    let f = match tau.parts() {
        [] => 1,
        [1] => c1 - 1,
        [1, 1] => (c1 - 1) * (c1 - 1),
        [2] => dom + c1 * c1 - 2 * c1,
        [3] => {
            v(Ribbon::Three) + v(Ribbon::OneOneOne) + bent + (2 * c1 - 3) * dom + c1.pow(3) - 4 * c1 * c1
                + 3 * c1
        }
        [2, 1] => bent + (3 * c1 - 4) * dom + 2 * c1.pow(3) - 8 * c1 * c1 + 7 * c1,
        [1, 1, 1] => bent + (c1 - 1) * dom + c1.pow(3) - 4 * c1 * c1 + 4 * c1 - 1,
        _ => {
            return Err(Error::Unsupported(format!(
                "corner formula for τ = {tau}; only |τ| ≤ 3 is known"
            )))
        }
    };
    Ok(BigInt::from(f))
}

/// One corner polynomial set against the exact coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerComparison {
    pub tau: Partition,
    pub lambda: Partition,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub formula: BigInt,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub exact: BigInt,
    /// Whether `n − |τ| ≥ τ₁ + |τ|`.
    pub guarded: bool,
}

impl CornerComparison {
    pub fn matches(&self) -> bool {
        self.formula == self.exact
    }
}

/// Compares every corner polynomial with `g((n−|τ|, τ), μ, μ)` for the `τ`
/// where `(n−|τ|, τ)` is a partition. With `guard` set, shapes outside
/// `n − |τ| ≥ τ₁ + |τ|` are skipped.
pub fn corner_formula_check(mu: &Partition, guard: bool) -> Result<Vec<CornerComparison>> {
    let n = mu.size();
    let taus: [&[usize]; 7] = [&[], &[1], &[2], &[1, 1], &[3], &[2, 1], &[1, 1, 1]];
    let mut out = Vec::new();
    for t in taus {
        let tau = Partition::new(t.to_vec())?;
        let r = tau.size();
        if n < r || n - r < tau.largest_part() {
            continue;
        }
        let guarded = n - r >= tau.largest_part() + r;
        if guard && !guarded {
            continue;
        }
        let mut parts = vec![n - r];
        parts.extend_from_slice(t);
        let lambda = Partition::new(parts)?;
        let exact = BigInt::from(kron_g(&lambda, mu, mu)?);
        out.push(CornerComparison {
            formula: corner_formula(&tau, mu)?,
            tau,
            lambda,
            exact,
            guarded,
        });
    }
    Ok(out)
}

//! Integer partitions and the shape statistics used throughout the crate.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts
//! together with the cached total. Rim-hook manipulation goes through the
//! beta-set encoding in [`beta`]; enumeration lives in [`enumerate`] and the
//! three self-conjugate shape families in [`families`].

pub mod beta;
pub mod enumerate;
pub mod families;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};

pub use beta::{BetaSet, RimHook};
pub use enumerate::{enumerate_partitions, enumerate_self_conjugate, Partitions};
pub use families::{caret, chopped_square, staircase, Family};

/// A partition of `n`: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "zero part followed by a positive part".into(),
            ));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Accepts signed input, rejecting negative entries.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for &p in parts {
            if p < 0 {
                return Err(Error::InvalidPartition(format!("negative part {p}")));
            }
            out.push(p as usize);
        }
        Partition::new(out)
    }

    /// Trusted constructor for parts already known to be a partition.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition::from_parts_unchecked(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_parts_unchecked(vec![1; n])
    }

    /// The hook `(n - leg, 1^leg)`.
    pub fn hook(n: usize, leg: usize) -> Result<Self> {
        if leg >= n {
            return Err(Error::InvalidArgument(format!(
                "hook leg {leg} must be smaller than n = {n}"
            )));
        }
        let mut parts = vec![n - leg];
        parts.extend(std::iter::repeat_n(1, leg));
        Ok(Partition::from_parts_unchecked(parts))
    }

    /// Partition with Frobenius coordinates `(arms | legs)`; both strictly decreasing.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Self> {
        let d = arms.len();
        if legs.len() != d
            || arms.windows(2).any(|w| w[0] <= w[1])
            || legs.windows(2).any(|w| w[0] <= w[1])
        {
            return Err(Error::InvalidArgument(
                "Frobenius coordinates must be strictly decreasing and of equal length".into(),
            ));
        }
        if d == 0 {
            return Ok(Partition::empty());
        }
        let rows = d + legs[0];
        let mut parts = vec![0usize; rows];
        for (i, &a) in arms.iter().enumerate() {
            parts[i] = a + i + 1;
        }
        // cells below the diagonal, column by column
        for (j, &b) in legs.iter().enumerate() {
            for row in parts.iter_mut().skip(j + 1).take(b) {
                if *row < j + 1 {
                    *row = j + 1;
                }
            }
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n`, the number of cells.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest_part();
        let mut out = vec![0usize; cols];
        for &p in &self.parts {
            for c in out.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition {
            parts: out,
            size: self.size,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Durfee size: the largest `d` with `λ_d ≥ d`.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn is_hook(&self) -> bool {
        self.durfee() <= 1
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Hook length of cell `(i, j)`, 0-based.
    pub fn hook_length(&self, i: usize, j: usize) -> Option<usize> {
        if j >= self.part(i) {
            return None;
        }
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        Some(self.parts[i] - j + leg)
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (0..p).map(|j| p + conj.parts[j] - i - j - 1).collect())
            .collect()
    }

    /// The diagonal hook lengths `(h_11, …, h_dd)`.
    pub fn principal_hooks(&self) -> PrincipalHooks {
        let conj = self.conjugate();
        let hooks = (0..self.durfee())
            .map(|i| self.parts[i] + conj.parts[i] - 2 * i - 1)
            .collect();
        PrincipalHooks { hooks }
    }

    /// Frobenius coordinates `(arms, legs)` with `arm_i = λ_i − i`, `leg_i = λ'_i − i`.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let conj = self.conjugate();
        let d = self.durfee();
        let arms = (0..d).map(|i| self.parts[i] - i - 1).collect();
        let legs = (0..d).map(|i| conj.parts[i] - i - 1).collect();
        (arms, legs)
    }

    /// Number of standard Young tableaux, `n! / ∏ h`.
    pub fn dimension(&self) -> BigInt {
        let mut num = BigUint::one();
        for i in 2..=self.size {
            num *= i;
        }
        let mut den = BigUint::one();
        for row in self.hook_lengths() {
            for h in row {
                den *= h;
            }
        }
        BigInt::from(num / den)
    }

    /// Multiplicity of each part size, indexed by size (entry 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.largest_part() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn to_beta_set(&self, length: usize) -> Result<BetaSet> {
        BetaSet::from_partition(self, length)
    }

    /// The `k`-core, computed by pushing beads down each of the `k` runners.
    pub fn k_core(&self, k: usize) -> Result<Partition> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("k-core needs k ≥ 2, got {k}")));
        }
        Ok(beta::core_of(self, k))
    }

    /// Removable rim hooks of size `t`.
    pub fn rim_hooks(&self, t: usize) -> Vec<RimHook> {
        beta::rim_hooks(&self.parts, t)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[4,3,2,1]`, `4,3,2,1`, or the exponent shorthand `[3^2,2]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix('[').unwrap_or(body);
        let body = body.strip_suffix(']').unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let value: i64 = base
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("cannot read part {item:?} in {s:?}")))?;
            let reps: usize = exp
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("cannot read exponent in {item:?}")))?;
            if value < 0 {
                return Err(Error::InvalidPartition(format!("negative part {value} in {s:?}")));
            }
            parts.extend(std::iter::repeat_n(value as usize, reps));
        }
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Principal hook lengths `λ̂ = (h_11, …, h_dd)`; strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrincipalHooks {
    hooks: Vec<usize>,
}

impl PrincipalHooks {
    pub fn hooks(&self) -> &[usize] {
        &self.hooks
    }

    pub fn total(&self) -> usize {
        self.hooks.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn all_odd(&self) -> bool {
        self.hooks.iter().all(|h| h % 2 == 1)
    }

    /// The hooks read as a cycle type.
    pub fn as_partition(&self) -> Partition {
        Partition::from_parts_unchecked(self.hooks.clone())
    }

    /// Inverse of the self-conjugate bijection: distinct odd hooks to the shape.
    pub fn self_conjugate_shape(&self) -> Result<Partition> {
        if !self.all_odd() {
            return Err(Error::InvalidArgument(
                "self-conjugate shapes need odd principal hooks".into(),
            ));
        }
        let arms: Vec<usize> = self.hooks.iter().map(|h| (h - 1) / 2).collect();
        Partition::from_frobenius(&arms, &arms)
    }

    /// Wraps distinct odd parts, e.g. from a sampler.
    pub fn from_distinct_odd(mut hooks: Vec<usize>) -> Result<Self> {
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        if hooks.windows(2).any(|w| w[0] == w[1]) || hooks.iter().any(|h| h % 2 == 0) {
            return Err(Error::InvalidArgument(format!(
                "{hooks:?} are not distinct odd parts"
            )));
        }
        Ok(PrincipalHooks { hooks })
    }
}

impl fmt::Display for PrincipalHooks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_partition().fmt(f)
    }
}

//! Beta-set (abacus) encoding. Removing a rim hook of size `t` moves one bead
//! from position `b` to the empty position `b - t`; the hook's leg length is
//! the number of beads jumped over.

use crate::error::{Error, Result};

use super::Partition;

/// Strictly decreasing bead positions `β_i = λ_i + L − i` (1-based `i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    beads: Vec<usize>,
}

impl BetaSet {
    pub fn new(beads: Vec<usize>) -> Result<Self> {
        if beads.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "beads {beads:?} are not strictly decreasing"
            )));
        }
        Ok(BetaSet { beads })
    }

    pub fn from_partition(lambda: &Partition, length: usize) -> Result<Self> {
        if length < lambda.len() {
            return Err(Error::InvalidArgument(format!(
                "beta-set length {length} is shorter than the {} parts of {lambda}",
                lambda.len()
            )));
        }
        Ok(BetaSet {
            beads: beads_of(lambda.parts(), length),
        })
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_parts_unchecked(parts_of(&self.beads))
    }
}

/// A removable rim hook: the partition left behind and the hook's leg length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    pub remainder: Vec<usize>,
    pub leg_length: usize,
}

impl RimHook {
    /// `(−1)^{height − 1}`, i.e. `(−1)^{leg}`.
    pub fn sign(&self) -> i32 {
        if self.leg_length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn beads_of(parts: &[usize], length: usize) -> Vec<usize> {
    (0..length)
        .map(|i| parts.get(i).copied().unwrap_or(0) + length - 1 - i)
        .collect()
}

fn parts_of(beads: &[usize]) -> Vec<usize> {
    let len = beads.len();
    let mut parts: Vec<usize> = beads
        .iter()
        .enumerate()
        .map(|(i, &b)| b + 1 + i - len)
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// All rim hooks of size `t` removable from the shape with parts `parts`.
pub(crate) fn rim_hooks(parts: &[usize], t: usize) -> Vec<RimHook> {
    let mut out = Vec::new();
    if t == 0 || parts.is_empty() {
        return out;
    }
    let len = parts.len();
    let beads = beads_of(parts, len);
    if t > beads[0] {
        return out;
    }
    for (i, &b) in beads.iter().enumerate() {
        if b < t {
            break;
        }
        let target = b - t;
        // beads below position i are decreasing; find how many lie above target
        let jumped = beads[i + 1..].iter().take_while(|&&x| x > target).count();
        if beads.get(i + 1 + jumped) == Some(&target) {
            continue;
        }
        let mut moved = beads.clone();
        moved.remove(i);
        moved.insert(i + jumped, target);
        out.push(RimHook {
            remainder: parts_of(&moved),
            leg_length: jumped,
        });
    }
    out
}

/// Pushes every bead as far down its runner as possible.
pub(crate) fn core_of(lambda: &Partition, k: usize) -> Partition {
    let len = lambda.len();
    if len == 0 {
        return Partition::empty();
    }
    let beads = beads_of(lambda.parts(), len);
    let mut per_runner = vec![0usize; k];
    for &b in &beads {
        per_runner[b % k] += 1;
    }
    let mut settled: Vec<usize> = per_runner
        .iter()
        .enumerate()
        .flat_map(|(r, &c)| (0..c).map(move |j| r + j * k))
        .collect();
    settled.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_parts_unchecked(parts_of(&settled))
}

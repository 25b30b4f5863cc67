//! Exactly uniform sampling of partitions by ranking and unranking.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::RngCore;

use crate::counting;
use crate::error::{Error, Result};
use crate::partition::{Partition, PrincipalHooks};

use super::table::{cmp_limbs, FlatCounts};

/// Name of the generator used by every seeded routine in this module.
pub const RNG_ALGORITHM: &str = "ChaCha20Rng (rand_chacha 0.9), seed_from_u64";

pub fn rng_from_seed(seed: u64) -> rand_chacha::ChaCha20Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha20Rng::seed_from_u64(seed)
}

/// A uniform integer in `[0, bound)` by rejection on the bit length.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    let bits = bound.bits();
    let words = bits.div_ceil(32) as usize;
    let top_mask = if bits % 32 == 0 { u32::MAX } else { (1u32 << (bits % 32)) - 1 };
    loop {
        let mut digits: Vec<u32> = (0..words).map(|_| rng.next_u32()).collect();
        if let Some(last) = digits.last_mut() {
            *last &= top_mask;
        }
        let x = BigUint::new(digits);
        if &x < bound {
            return x;
        }
    }
}

fn limb_width(max: &BigUint) -> usize {
    (max.bits() as usize).div_ceil(32).max(1)
}

/// Counts `T(m, j)` of partitions of `m` with largest part at most `j`,
/// `0 ≤ j ≤ m ≤ n`, for ranking `P_n` in lexicographically decreasing order.
pub struct PartitionSampler {
    n: usize,
    counts: FlatCounts,
    total: BigUint,
}

impl PartitionSampler {
    pub fn new(n: usize) -> Self {
        let total = counting::pi(n).values()[n].clone();
        let rows: Vec<usize> = (0..=n).map(|m| m + 1).collect();
        let mut counts = FlatCounts::new(&rows, limb_width(&total));
        for m in 0..=n {
            for j in 0..=m {
                if m == 0 {
                    counts.set_one(0, 0);
                } else if j == 0 {
                    counts.set_sum(m, 0, None, None);
                } else {
                    let rest = m - j;
                    counts.set_sum(m, j, Some((m, j - 1)), Some((rest, j.min(rest))));
                }
            }
        }
        PartitionSampler { n, counts, total }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `π(n)`.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Partitions of `m` with largest part exactly `p`.
    fn block(&self, m: usize, p: usize) -> &[u32] {
        let rest = m - p;
        self.counts.limbs(rest, p.min(rest))
    }

    /// The `index`-th partition of `n` in enumeration order.
    pub fn unrank(&self, index: &BigUint) -> Result<Partition> {
        if index >= &self.total {
            return Err(Error::InvalidArgument(format!("rank {index} is not below π({}) = {}", self.n, self.total)));
        }
        let mut i = index.clone();
        let mut parts = Vec::new();
        let mut m = self.n;
        let mut cap = self.n;
        while m > 0 {
            let mut p = cap.min(m);
            loop {
                let block = self.block(m, p);
                if cmp_limbs(block, &i) == Ordering::Greater {
                    break;
                }
                i -= BigUint::new(block.to_vec());
                p -= 1;
            }
            parts.push(p);
            m -= p;
            cap = p;
        }
        Partition::new(parts)
    }

    /// Position of `λ` in enumeration order.
    pub fn rank(&self, lambda: &Partition) -> Result<BigUint> {
        if lambda.size() != self.n {
            return Err(Error::size(lambda.size(), self.n));
        }
        let mut r = BigUint::zero();
        let mut m = self.n;
        let mut cap = self.n;
        for &part in lambda.parts() {
            for p in (part + 1)..=cap.min(m) {
                r += BigUint::new(self.block(m, p).to_vec());
            }
            m -= part;
            cap = part;
        }
        Ok(r)
    }

    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> Partition {
        let i = uniform_below(rng, &self.total);
        self.unrank(&i).expect("index below total")
    }
}

/// `λ ⊢ n` drawn uniformly, reproducibly from `seed`.
pub fn sample_partition(n: usize, seed: u64) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidArgument("sampling needs n ≥ 1".into()));
    }
    Ok(PartitionSampler::new(n).sample(&mut rng_from_seed(seed)))
}

/// Uniform self-conjugate partitions via their distinct odd principal hooks.
/// `Q(m, i)` counts partitions of `m` into distinct parts from `{1, 3, …, 2i−1}`.
pub struct SelfConjugateSampler {
    n: usize,
    counts: FlatCounts,
    total: BigUint,
}

impl SelfConjugateSampler {
    pub fn new(n: usize) -> Self {
        let cols = |m: usize| m.div_ceil(2) + 1;
        let rows: Vec<usize> = (0..=n).map(cols).collect();
        // distinct odd parts number at most π(n) partitions, a safe width
        let width = limb_width(&counting::pi(n).values()[n]);
        let mut counts = FlatCounts::new(&rows, width);
        for m in 0..=n {
            for i in 0..cols(m) {
                if m == 0 {
                    counts.set_one(0, i);
                    continue;
                }
                let skip = (i > 0).then(|| (m, i - 1));
                let odd = 2 * i;
                let take = (i > 0 && odd - 1 <= m).then(|| {
                    let rest = m - (odd - 1);
                    (rest, (i - 1).min(cols(rest) - 1))
                });
                counts.set_sum(m, i, skip, take);
            }
        }
        let total = counts.get(n, cols(n) - 1);
        SelfConjugateSampler { n, counts, total }
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<Partition> {
        if self.total.is_zero() {
            return Err(Error::InvalidArgument(format!("{} has no self-conjugate partition", self.n)));
        }
        let mut r = uniform_below(rng, &self.total);
        let mut hooks = Vec::new();
        let mut m = self.n;
        let mut i = self.n.div_ceil(2);
        while m > 0 {
            i = i.min(m.div_ceil(2));
            // largest part first: take 2i−1 or skip it
            loop {
                let odd = 2 * i - 1;
                if odd <= m {
                    let rest = m - odd;
                    let take = self.counts.limbs(rest, (i - 1).min(rest.div_ceil(2)));
                    if cmp_limbs(take, &r) == Ordering::Greater {
                        hooks.push(odd);
                        m = rest;
                        i -= 1;
                        break;
                    }
                    r -= BigUint::new(take.to_vec());
                }
                i -= 1;
            }
        }
        PrincipalHooks::from_distinct_odd(hooks)?.self_conjugate_shape()
    }
}

/// `λ = λ' ⊢ n` drawn uniformly, reproducibly from `seed`.
pub fn sample_self_conjugate(n: usize, seed: u64) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidArgument("sampling needs n ≥ 1".into()));
    }
    SelfConjugateSampler::new(n).sample(&mut rng_from_seed(seed))
}

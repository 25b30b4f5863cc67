//! Straight-shape Murnaghan–Nakayama evaluation on beta-sets.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::beta::rim_hooks;
use crate::partition::Partition;

/// Evaluates `χ^λ[ν]` for one fixed class `ν` and any number of shapes `λ`,
/// sharing a memo table between calls.
///
/// Parts of `ν` are consumed largest first. After `d` parts are removed the
/// remaining shape has size `Σ ν[d..]`, so the memo is split by depth and keyed
/// by the remaining shape alone.
#[derive(Debug)]
pub struct ClassEvaluator {
    class: Vec<usize>,
    ones_from: usize,
    memo: Vec<HashMap<Vec<usize>, BigInt>>,
}

impl ClassEvaluator {
    pub fn new(class: &Partition) -> Self {
        let class = class.parts().to_vec();
        let ones_from = class.iter().position(|&p| p == 1).unwrap_or(class.len());
        ClassEvaluator {
            memo: vec![HashMap::new(); ones_from],
            class,
            ones_from,
        }
    }

    pub fn class(&self) -> &[usize] {
        &self.class
    }

    pub fn size(&self) -> usize {
        self.class.iter().sum()
    }

    pub fn eval(&mut self, lambda: &Partition) -> Result<BigInt> {
        if lambda.size() != self.size() {
            return Err(Error::size(lambda.size(), self.size()));
        }
        Ok(self.eval_at(lambda.parts(), 0))
    }

    fn eval_at(&mut self, parts: &[usize], depth: usize) -> BigInt {
        if depth >= self.ones_from {
            // the rest of the class is all 1s: count standard tableaux
            return Partition::from_parts_unchecked(parts.to_vec()).dimension();
        }
        if let Some(v) = self.memo[depth].get(parts) {
            return v.clone();
        }
        let t = self.class[depth];
        let mut total = BigInt::zero();
        // the largest hook is h(1,1); nothing longer can be removed
        if parts[0] + parts.len() > t {
            for hook in rim_hooks(parts, t) {
                let v = self.eval_at(&hook.remainder, depth + 1);
                if hook.sign() > 0 {
                    total += v;
                } else {
                    total -= v;
                }
            }
        }
        self.memo[depth].insert(parts.to_vec(), total.clone());
        total
    }
}

/// `χ^λ[ν]`.
pub fn mn_char(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    ClassEvaluator::new(nu).eval(lambda)
}

/// Number of rim hook tableaux of shape `λ` and weight `a`: hooks of sizes
/// `a_1, a_2, …` labelled `1, 2, …`, so `a`'s last entry is peeled first.
pub fn rim_hook_tableaux_count(lambda: &Partition, weight: &[usize]) -> Result<BigUint> {
    let total: usize = weight.iter().sum();
    if total != lambda.size() {
        return Err(Error::size(lambda.size(), total));
    }
    if weight.contains(&0) {
        return Err(Error::InvalidArgument("weights must be positive".into()));
    }
    let mut memo = vec![HashMap::new(); weight.len()];
    Ok(count_at(lambda.parts(), weight, &mut memo))
}

fn count_at(parts: &[usize], weight: &[usize], memo: &mut [HashMap<Vec<usize>, BigUint>]) -> BigUint {
    let Some((&t, rest)) = weight.split_last() else {
        return BigUint::one();
    };
    let depth = rest.len();
    if let Some(v) = memo[depth].get(parts) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for hook in rim_hooks(parts, t) {
        total += count_at(&hook.remainder, rest, memo);
    }
    memo[depth].insert(parts.to_vec(), total.clone());
    total
}

//! Enumeration of `P_n` in lexicographically decreasing order, and of the
//! self-conjugate partitions through their distinct odd principal hooks.

use super::{Partition, PrincipalHooks};

/// Iterator over the partitions of `n`, from `(n)` down to `(1^n)`.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_parts_unchecked(cur.clone());

        // successor: decrement the last part > 1 and refill greedily
        let mut next = cur;
        let mut freed = 0usize;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(last) = next.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                next.push(take);
                freed -= take;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All `λ = λ'` of size `n`, built from partitions of `n` into distinct odd
/// parts and returned in canonical (lexicographically decreasing) order.
pub fn enumerate_self_conjugate(n: usize) -> Vec<Partition> {
    let mut hook_sets = Vec::new();
    let mut stack = Vec::new();
    distinct_odd(n, usize::MAX, &mut stack, &mut hook_sets);
    let mut out: Vec<Partition> = hook_sets
        .into_iter()
        .map(|h| {
            PrincipalHooks::from_distinct_odd(h)
                .and_then(|h| h.self_conjugate_shape())
                .expect("distinct odd parts give a self-conjugate shape")
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn distinct_odd(rest: usize, below: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(stack.clone());
        return;
    }
    let mut part = rest.min(below.saturating_sub(1));
    if part % 2 == 0 {
        part = part.saturating_sub(1);
    }
    while part >= 1 {
        stack.push(part);
        distinct_odd(rest - part, part, stack, out);
        stack.pop();
        if part < 2 {
            break;
        }
        part -= 2;
    }
}

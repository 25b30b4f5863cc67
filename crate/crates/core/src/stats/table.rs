//! Triangular count tables stored as fixed-width little-endian `u32` limbs,
//! so that tables for `n` in the thousands stay compact.

use num_bigint::BigUint;
use std::cmp::Ordering;

/// Row `m` holds `row_len(m)` counts; every count uses `width` limbs.
pub(crate) struct FlatCounts {
    width: usize,
    offsets: Vec<usize>,
    limbs: Vec<u32>,
}

impl FlatCounts {
    pub fn new(row_lens: &[usize], width: usize) -> Self {
        let mut offsets = Vec::with_capacity(row_lens.len() + 1);
        let mut acc = 0;
        for &len in row_lens {
            offsets.push(acc);
            acc += len;
        }
        offsets.push(acc);
        FlatCounts {
            width,
            offsets,
            limbs: vec![0; acc * width],
        }
    }

    fn slot(&self, m: usize, j: usize) -> usize {
        debug_assert!(self.offsets[m] + j < self.offsets[m + 1]);
        (self.offsets[m] + j) * self.width
    }

    pub fn limbs(&self, m: usize, j: usize) -> &[u32] {
        let s = self.slot(m, j);
        &self.limbs[s..s + self.width]
    }

    pub fn set_one(&mut self, m: usize, j: usize) {
        let s = self.slot(m, j);
        self.limbs[s..s + self.width].fill(0);
        self.limbs[s] = 1;
    }

    /// `T[m][j] = T[a] + T[b]` for two earlier entries.
    pub fn set_sum(&mut self, m: usize, j: usize, a: Option<(usize, usize)>, b: Option<(usize, usize)>) {
        let dst = self.slot(m, j);
        let sa = a.map(|(x, y)| self.slot(x, y));
        let sb = b.map(|(x, y)| self.slot(x, y));
        let mut carry = 0u64;
        for i in 0..self.width {
            let va = sa.map_or(0, |s| self.limbs[s + i]) as u64;
            let vb = sb.map_or(0, |s| self.limbs[s + i]) as u64;
            let t = va + vb + carry;
            self.limbs[dst + i] = t as u32;
            carry = t >> 32;
        }
        assert_eq!(carry, 0, "count table width too small");
    }

    pub fn get(&self, m: usize, j: usize) -> BigUint {
        BigUint::new(self.limbs(m, j).to_vec())
    }
}

/// Compares a limb slice with a big integer without allocating when the
/// integer is short.
pub(crate) fn cmp_limbs(limbs: &[u32], x: &BigUint) -> Ordering {
    BigUint::new(limbs.to_vec()).cmp(x)
}

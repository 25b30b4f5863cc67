//! Signed expansions of straight characters into characters of disconnected
//! shapes: the two-row Frobenius formula, the three-row determinant and the
//! Durfee-two Giambelli formula.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::{mn_skew_char, SkewShape};

/// `Σ sign · χ^{shape}` as a virtual character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCombination {
    pub terms: Vec<(i32, SkewShape)>,
}

impl SkewCombination {
    pub fn evaluate(&self, nu: &Partition) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (sign, shape) in &self.terms {
            total += mn_skew_char(shape, nu)? * *sign;
        }
        Ok(total)
    }
}

impl fmt::Display for SkewCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (sign, shape)) in self.terms.iter().enumerate() {
            match (k, *sign > 0) {
                (0, true) => write!(f, "{shape}")?,
                (0, false) => write!(f, "-{shape}")?,
                (_, true) => write!(f, " + {shape}")?,
                (_, false) => write!(f, " - {shape}")?,
            }
        }
        Ok(())
    }
}

/// `χ^{(n−ℓ,ℓ)} = χ^{(n−ℓ)∘(ℓ)} − χ^{(n−ℓ+1)∘(ℓ−1)}`; the second term is
/// dropped when `ℓ = 0`.
pub fn frobenius_two_row(lambda: &Partition) -> Result<SkewCombination> {
    if lambda.len() > 2 {
        return Err(Error::InvalidArgument(format!("{lambda} has more than two rows")));
    }
    let (a, l) = (lambda.part(0), lambda.part(1));
    let mut terms = vec![(1, SkewShape::rows(&[a, l]))];
    if l > 0 {
        terms.push((-1, SkewShape::rows(&[a + 1, l - 1])));
    }
    Ok(SkewCombination { terms })
}

/// Permutations of three rows with their signs.
const S3: [([usize; 3], i32); 6] = [
    ([0, 1, 2], 1),
    ([1, 0, 2], -1),
    ([0, 2, 1], -1),
    ([2, 0, 1], 1),
    ([1, 2, 0], 1),
    ([2, 1, 0], -1),
];

/// Determinant expansion `Σ_σ sgn σ · χ^{(λ₁−1+σ(1))∘(λ₂−2+σ(2))∘…}` with
/// one-row components; terms with a negative row are dropped.
pub fn jacobi_trudi_rows(lambda: &Partition) -> Result<SkewCombination> {
    let r = lambda.len();
    if r > 3 {
        return Err(Error::InvalidArgument(format!("{lambda} has more than three rows")));
    }
    let perms: Vec<(Vec<usize>, i32)> = match r {
        0 => vec![(vec![], 1)],
        1 => vec![(vec![0], 1)],
        2 => vec![(vec![0, 1], 1), (vec![1, 0], -1)],
        _ => S3.iter().map(|(p, s)| (p.to_vec(), *s)).collect(),
    };
    let mut terms = Vec::new();
    'perm: for (sigma, sign) in perms {
        let mut rows = Vec::with_capacity(r);
        for (i, &s) in sigma.iter().enumerate() {
            let len = lambda.part(i) as i64 - i as i64 + s as i64;
            if len < 0 {
                continue 'perm;
            }
            rows.push(len as usize);
        }
        terms.push((sign, SkewShape::rows(&rows)));
    }
    Ok(SkewCombination { terms })
}

/// The Durfee-two expansion of `λ` with Frobenius coordinates
/// `(a₁, a₂ | b₁, b₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiambelliTerms {
    pub arms: (usize, usize),
    pub legs: (usize, usize),
    pub combination: SkewCombination,
}

/// `χ^λ = χ^{(a₁|b₁)∘(a₂|b₂)} − χ^{(a₁|b₂)∘(a₂|b₁)}` where `(a|b)` is the hook
/// `(a+1, 1^b)`.
pub fn giambelli_durfee2(lambda: &Partition) -> Result<GiambelliTerms> {
    if lambda.durfee() != 2 {
        return Err(Error::InvalidArgument(format!(
            "{lambda} has Durfee size {}, not 2",
            lambda.durfee()
        )));
    }
    let (arms, legs) = lambda.frobenius();
    let (a1, a2, b1, b2) = (arms[0], arms[1], legs[0], legs[1]);
    let hook = |a: usize, b: usize| Partition::hook(a + b + 1, b).expect("valid hook");
    let terms = vec![
        (1, SkewShape::disjoint(vec![hook(a1, b1), hook(a2, b2)])),
        (-1, SkewShape::disjoint(vec![hook(a1, b2), hook(a2, b1)])),
    ];
    Ok(GiambelliTerms {
        arms: (a1, a2),
        legs: (b1, b2),
        combination: SkewCombination { terms },
    })
}

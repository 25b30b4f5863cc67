//! `π'_R` expressions for hook and two-row characters at the principal-hook
//! class of each family, and their comparison with direct evaluation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::character::ClassEvaluator;
use crate::counting::{pi_prime_r, CountTable};
use crate::error::{Error, Result};
use crate::partition::{Family, Partition};

/// `π'_R(j)` with `π'_R(j) = 0` for `j < 0`; an empty `R` gives `[j = 0]`.
pub(crate) struct DistinctParts(Option<CountTable>);

impl DistinctParts {
    pub fn new(set: &[usize]) -> Self {
        DistinctParts(if set.is_empty() {
            None
        } else {
            Some(pi_prime_r(set, None).expect("distinct positive parts"))
        })
    }

    pub fn at(&self, j: i64) -> BigInt {
        match &self.0 {
            Some(t) => t.signed(j),
            None if j == 0 => BigInt::one(),
            None => BigInt::zero(),
        }
    }
}

/// `{a, a+4, a+8, …} ∩ [1, 2k−1]`, the tails of staircase hook classes.
fn step4(a: usize, k: usize) -> Vec<usize> {
    (a..2 * k).step_by(4).collect()
}

fn odd_from(a: usize, k: usize) -> Vec<usize> {
    (a..2 * k).step_by(2).collect()
}

fn check_k(family: Family, k: usize) -> Result<usize> {
    family.shape(k)?;
    Ok(family.size(k))
}

/// The hook character `χ^{(n−ℓ,1^ℓ)}` at the family's principal-hook class,
/// as a `π'_R` expression. For the caret and odd staircase only the
/// magnitude is given.
pub fn closed_form_hook(family: Family, k: usize, ell: usize) -> Result<BigInt> {
    let n = check_k(family, k)?;
    if n == 0 || ell >= n {
        return Err(Error::InvalidArgument(format!("ℓ = {ell} needs 0 ≤ ℓ ≤ n−1 = {}", n.saturating_sub(1))));
    }
    let l = ell as i64;
    let three_term = |set: Vec<usize>| {
        let p = DistinctParts::new(&set);
        p.at(l) - p.at(l - 1) + p.at(l - 2)
    };
    Ok(match family {
        Family::ChoppedSquare => three_term(odd_from(5, k)),
        Family::Caret => DistinctParts::new(&odd_from(3, k)).at(l / 3),
        Family::Staircase if k % 2 == 1 => DistinctParts::new(&step4(5, k)).at(l),
        Family::Staircase => three_term(step4(7, k)),
    })
}

/// The two-row character `χ^{(n−ℓ,ℓ)}` at the family's principal-hook class.
pub fn closed_form_two_row(family: Family, k: usize, ell: usize) -> Result<BigInt> {
    let n = check_k(family, k)?;
    if 2 * ell > n {
        return Err(Error::InvalidArgument(format!("ℓ = {ell} needs 0 ≤ ℓ ≤ n/2 = {}", n / 2)));
    }
    let l = ell as i64;
    Ok(match family {
        Family::ChoppedSquare => {
            let p = DistinctParts::new(&odd_from(3, k));
            p.at(l) - p.at(l - 1)
        }
        Family::Staircase => {
            let hooks = family.shape(k)?.principal_hooks();
            let p = DistinctParts::new(hooks.hooks());
            p.at(l) - p.at(l - 1)
        }
        Family::Caret => {
            // parts of γ̂_k are 3·S; only multiples of 3 are reachable
            let p = DistinctParts::new(&odd_from(1, k));
            match ell % 3 {
                0 => p.at(l / 3),
                1 => -p.at((l - 1) / 3),
                _ => BigInt::zero(),
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeKind {
    Hook,
    TwoRow,
}

impl ShapeKind {
    /// `(n−ℓ, 1^ℓ)` or `(n−ℓ, ℓ)`.
    pub fn shape(self, n: usize, ell: usize) -> Result<Partition> {
        match self {
            ShapeKind::Hook => Partition::hook(n, ell),
            ShapeKind::TwoRow => Partition::new(vec![n - ell, ell]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormMismatch {
    pub ell: usize,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub formula: BigInt,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub exact: BigInt,
}

/// Closed form against direct evaluation for `0 ≤ ℓ ≤ ⌊n/2⌋`, compared in
/// absolute value. `first_agreement` is the least `L` with agreement on all
/// of `[L, ⌊n/2⌋]`; `negative` lists the `ℓ` where the exact value is below
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub kind: ShapeKind,
    pub checked: usize,
    pub mismatches: Vec<ClosedFormMismatch>,
    pub first_agreement: usize,
    pub negative: Vec<usize>,
}

pub fn check_closed_form(family: Family, k: usize, kind: ShapeKind) -> Result<ClosedFormCheck> {
    let n = check_k(family, k)?;
    let class = family.shape(k)?.principal_hooks().as_partition();
    let mut ev = ClassEvaluator::new(&class);
    let mut mismatches = Vec::new();
    let mut negative = Vec::new();
    let top = n / 2;
    for ell in 0..=top {
        let exact = ev.eval(&kind.shape(n, ell)?)?;
        let formula = match kind {
            ShapeKind::Hook => closed_form_hook(family, k, ell)?,
            ShapeKind::TwoRow => closed_form_two_row(family, k, ell)?,
        };
        if exact.is_negative() {
            negative.push(ell);
        }
        if exact.abs() != formula.abs() {
            mismatches.push(ClosedFormMismatch { ell, formula, exact });
        }
    }
    let first_agreement = mismatches.last().map_or(0, |m| m.ell + 1);
    Ok(ClosedFormCheck {
        family,
        k,
        n,
        kind,
        checked: top + 1,
        mismatches,
        first_agreement,
        negative,
    })
}

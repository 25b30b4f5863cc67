//! Near-hooks `(n−ℓ−m, m, 1^ℓ)` and near-two-row shapes `(n−ℓ−m, ℓ, m)`,
//! evaluated through their Giambelli and three-row Frobenius expansions.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::character::{giambelli_durfee2, jacobi_trudi_rows, mn_skew_char, SkewShape};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NearProfile {
    NearHook,
    NearTwoRow,
}

/// `(n−ℓ−m, m, 1^ℓ)`, `m ≥ 2`.
pub fn near_hook(n: usize, ell: usize, m: usize) -> Result<Partition> {
    if m < 2 || n < ell + 2 * m {
        return Err(Error::InvalidArgument(format!(
            "no near-hook (n−ℓ−m, m, 1^ℓ) for n = {n}, ℓ = {ell}, m = {m}"
        )));
    }
    let mut parts = vec![n - ell - m, m];
    parts.extend(std::iter::repeat_n(1, ell));
    Partition::new(parts)
}

/// `(n−ℓ−m, ℓ, m)`, `1 ≤ m ≤ ℓ`.
pub fn near_two_row(n: usize, ell: usize, m: usize) -> Result<Partition> {
    if m < 1 || ell < m || n < 2 * ell + m {
        return Err(Error::InvalidArgument(format!(
            "no near-two-row (n−ℓ−m, ℓ, m) for n = {n}, ℓ = {ell}, m = {m}"
        )));
    }
    Partition::new(vec![n - ell - m, ell, m])
}

/// The expansion of a near shape with each term evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearShapeValue {
    pub profile: NearProfile,
    pub lambda: Partition,
    pub ell: usize,
    pub m: usize,
    pub terms: Vec<NearTerm>,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NearTerm {
    pub sign: i32,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub shape: SkewShape,
    /// `χ^{shape}` at the class, before the sign is applied.
    #[serde(serialize_with = "crate::report::ser_display")]
    pub value: BigInt,
}

fn profile_of(lambda: &Partition, profile: NearProfile) -> Result<(usize, usize)> {
    let p = lambda.parts();
    match profile {
        NearProfile::NearHook if p.len() >= 2 && p[1] >= 2 && p[2..].iter().all(|&x| x == 1) => {
            Ok((p.len() - 2, p[1]))
        }
        NearProfile::NearTwoRow if p.len() == 3 => Ok((p[1], p[2])),
        _ => Err(Error::InvalidArgument(format!("{lambda} is not a {profile:?} shape"))),
    }
}

/// `χ^λ[class]` for a near shape, summed over its expansion terms.
pub fn near_shape_char(lambda: &Partition, profile: NearProfile, class: &Partition) -> Result<NearShapeValue> {
    let (ell, m) = profile_of(lambda, profile)?;
    if lambda.size() != class.size() {
        return Err(Error::size(lambda.size(), class.size()));
    }
    let comb = match profile {
        NearProfile::NearHook => giambelli_durfee2(lambda)?.combination,
        NearProfile::NearTwoRow => jacobi_trudi_rows(lambda)?,
    };
    let mut value = BigInt::zero();
    let mut terms = Vec::with_capacity(comb.terms.len());
    for (sign, shape) in comb.terms {
        let v = mn_skew_char(&shape, class)?;
        value += &v * sign;
        terms.push(NearTerm {
            sign,
            shape,
            value: v,
        });
    }
    Ok(NearShapeValue {
        profile,
        lambda: lambda.clone(),
        ell,
        m,
        terms,
        value,
    })
}

impl NearShapeValue {
    pub fn term_shapes(&self) -> Vec<&SkewShape> {
        self.terms.iter().map(|t| &t.shape).collect()
    }
}

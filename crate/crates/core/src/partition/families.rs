//! The three self-conjugate shape families: staircase `ρ_k`, chopped square
//! `η_k` and caret `γ_k`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Staircase,
    ChoppedSquare,
    Caret,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Staircase, Family::ChoppedSquare, Family::Caret];

    pub fn shape(self, k: usize) -> Result<Partition> {
        match self {
            Family::Staircase => staircase(k),
            Family::ChoppedSquare => chopped_square(k),
            Family::Caret => caret(k),
        }
    }

    /// `|shape(k)|` without building the shape.
    pub fn size(self, k: usize) -> usize {
        match self {
            Family::Staircase => k * (k + 1) / 2,
            Family::ChoppedSquare => (k * k).saturating_sub(1),
            Family::Caret => 3 * k * k,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Staircase => "staircase",
            Family::ChoppedSquare => "chopped-square",
            Family::Caret => "caret",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "staircase" | "rho" => Ok(Family::Staircase),
            "chopped" | "chopped-square" | "eta" => Ok(Family::ChoppedSquare),
            "caret" | "gamma" => Ok(Family::Caret),
            other => Err(Error::InvalidArgument(format!(
                "unknown family {other:?}; expected staircase, chopped or caret"
            ))),
        }
    }
}

/// `ρ_k = (k, k−1, …, 1)`, a partition of `k(k+1)/2`.
pub fn staircase(k: usize) -> Result<Partition> {
    if k < 1 {
        return Err(Error::InvalidArgument("staircase needs k ≥ 1".into()));
    }
    Partition::new((1..=k).rev().collect())
}

/// `η_k = (k^{k−1}, k−1)`, a partition of `k² − 1`.
pub fn chopped_square(k: usize) -> Result<Partition> {
    if k < 2 {
        return Err(Error::InvalidArgument("chopped square needs k ≥ 2".into()));
    }
    let mut parts = vec![k; k - 1];
    parts.push(k - 1);
    Partition::new(parts)
}

/// `γ_k = (3k−1, 3k−3, …, k+1, k, k−1, k−1, …, 1, 1)`, a partition of `3k²`.
pub fn caret(k: usize) -> Result<Partition> {
    if k < 2 {
        return Err(Error::InvalidArgument("caret needs k ≥ 2".into()));
    }
    let mut parts: Vec<usize> = (0..k).map(|i| 3 * k - 1 - 2 * i).collect();
    parts.push(k);
    for v in (1..k).rev() {
        parts.push(v);
        parts.push(v);
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_sizes() {
        let rho4 = staircase(4).unwrap();
        assert_eq!(rho4.to_string(), "[4,3,2,1]");
        assert_eq!(rho4.size(), 10);
        assert_eq!(chopped_square(3).unwrap().to_string(), "[3,3,2]");
        assert_eq!(caret(2).unwrap().to_string(), "[5,3,2,1,1]");
        assert!(staircase(0).is_err());
        assert!(chopped_square(1).is_err());
        assert!(caret(1).is_err());
        for k in 2..=6 {
            let g = caret(k).unwrap();
            assert_eq!(g.size(), 3 * k * k);
            assert!(g.is_self_conjugate());
            assert_eq!(g.durfee(), k);
        }
        for k in 2..=12 {
            for fam in Family::ALL {
                let s = fam.shape(k).unwrap();
                assert!(s.is_self_conjugate(), "{fam} {k}");
                assert_eq!(s.size(), fam.size(k));
            }
            assert_eq!(chopped_square(k).unwrap().durfee(), k - 1);
        }
    }

    #[test]
    fn principal_hook_progressions() {
        for k in 2..=12 {
            let rho: Vec<usize> = staircase(k).unwrap().principal_hooks().hooks().to_vec();
            let want: Vec<usize> = (0..).map(|i| 2 * k - 1 - 4 * i).take((k + 1) / 2).collect();
            assert_eq!(rho, want, "rho_{k}");
            let eta: Vec<usize> = chopped_square(k).unwrap().principal_hooks().hooks().to_vec();
            assert_eq!(eta, (1..k).rev().map(|i| 2 * i + 1).collect::<Vec<_>>(), "eta_{k}");
            let gam: Vec<usize> = caret(k).unwrap().principal_hooks().hooks().to_vec();
            assert_eq!(gam, (1..=k).rev().map(|i| 6 * i - 3).collect::<Vec<_>>(), "gamma_{k}");
        }
        assert_eq!(caret(2).unwrap().principal_hooks().hooks(), &[9, 3]);
    }

    #[test]
    fn family_names_parse() {
        assert_eq!("chopped".parse::<Family>().unwrap(), Family::ChoppedSquare);
        assert_eq!("caret".parse::<Family>().unwrap(), Family::Caret);
        assert!("square".parse::<Family>().is_err());
    }
}

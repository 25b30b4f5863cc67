//! Kronecker coefficients `g(λ,μ,ν) = ⟨χ^λ ⊗ χ^μ, χ^ν⟩` and tensor-square
//! spectra, computed exactly from character values.

mod corners;
mod rules;

pub use corners::{corner_counts, corner_formula, corner_formula_check, CornerComparison, CornerCounts, Ribbon};
pub use rules::{positivity_rules, Rule, RuleVerdict, Verdict};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::character::{has_shared_table, shared_table, ClassEvaluator};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Centralizer order and class size for the cycle type `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassData {
    pub nu: Partition,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub z: BigUint,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub size: BigUint,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `z_ν = ∏ i^{m_i} m_i!` and `n!/z_ν`.
pub fn class_weight(nu: &Partition) -> ClassData {
    let mut z = BigUint::one();
    for (i, &m) in nu.multiplicities().iter().enumerate() {
        if m > 0 {
            z *= BigUint::from(i).pow(m as u32) * factorial(m);
        }
    }
    let size = factorial(nu.size()) / &z;
    ClassData {
        nu: nu.clone(),
        z,
        size,
    }
}

/// Divides an `n!`-scaled inner product back down, checking exactness and sign.
fn unscale(total: BigInt, n: usize, what: &dyn Fn() -> String) -> Result<BigUint> {
    let fact = BigInt::from(factorial(n));
    let (q, r) = total.div_rem(&fact);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{}: class sum is not divisible by {n}!", what())));
    }
    match q.sign() {
        Sign::Minus => Err(Error::Internal(format!("{}: negative multiplicity {q}", what()))),
        _ => Ok(q.magnitude().clone()),
    }
}

/// `g(λ, μ, ν)`.
pub fn kron_g(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    for p in [mu, nu] {
        if p.size() != n {
            return Err(Error::size(n, p.size()));
        }
    }
    let total: BigInt = if has_shared_table(n) {
        let t = shared_table(n);
        let (a, b, c) = (t.index_of(lambda), t.index_of(mu), t.index_of(nu));
        let (a, b, c) = (a.unwrap(), b.unwrap(), c.unwrap());
        t.partitions()
            .iter()
            .enumerate()
            .map(|(col, alpha)| {
                BigInt::from(class_weight(alpha).size)
                    * t.value_at(a, col)
                    * t.value_at(b, col)
                    * t.value_at(c, col)
            })
            .sum()
    } else {
        let classes: Vec<Partition> = enumerate_partitions(n).collect();
        classes
            .par_iter()
            .map(|alpha| {
                let mut ev = ClassEvaluator::new(alpha);
                let x = ev.eval(lambda).expect("sizes checked");
                if x.is_zero() {
                    return BigInt::zero();
                }
                let y = ev.eval(mu).expect("sizes checked");
                if y.is_zero() {
                    return BigInt::zero();
                }
                BigInt::from(class_weight(alpha).size) * x * y * ev.eval(nu).expect("sizes checked")
            })
            .reduce(BigInt::zero, |a, b| a + b)
    };
    unscale(total, n, &|| format!("g({lambda}, {mu}, {nu})"))
}

/// `g(λ, μ, μ)` for every `λ ⊢ n`, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquareSpectrum {
    pub mu: Partition,
    pub multiplicities: Vec<(Partition, BigUint)>,
}

impl TensorSquareSpectrum {
    pub fn get(&self, lambda: &Partition) -> Option<&BigUint> {
        self.multiplicities.iter().find(|(l, _)| l == lambda).map(|(_, g)| g)
    }

    /// `Φ(μ)`: the constituents of `χ^μ ⊗ χ^μ`.
    pub fn support(&self) -> Vec<&Partition> {
        self.multiplicities.iter().filter(|(_, g)| !g.is_zero()).map(|(l, _)| l).collect()
    }

    /// `P_n ∖ Φ(μ)`.
    pub fn missing(&self) -> Vec<&Partition> {
        self.multiplicities.iter().filter(|(_, g)| g.is_zero()).map(|(l, _)| l).collect()
    }

    pub fn is_full(&self) -> bool {
        self.multiplicities.iter().all(|(_, g)| !g.is_zero())
    }
}

/// Decomposes `χ^μ ⊗ χ^μ`. Each class `α` contributes
/// `(n!/z_α) χ^μ[α]² χ^λ[α]` to every `λ`; classes are processed in
/// parallel and the exact partial sums merged.
pub fn tensor_square(mu: &Partition) -> Result<TensorSquareSpectrum> {
    let n = mu.size();
    let lambdas: Vec<Partition> = enumerate_partitions(n).collect();
    let sums: Vec<BigInt> = if has_shared_table(n) {
        let t = shared_table(n);
        let m = t.index_of(mu).expect("table indexes all of P_n");
        let weights: Vec<BigInt> = t
            .partitions()
            .iter()
            .enumerate()
            .map(|(c, alpha)| {
                let x = t.value_at(m, c);
                BigInt::from(class_weight(alpha).size) * x * x
            })
            .collect();
        (0..t.dim())
            .into_par_iter()
            .map(|r| {
                t.row(r)
                    .iter()
                    .zip(&weights)
                    .filter(|(_, w)| !w.is_zero())
                    .map(|(v, w)| v * w)
                    .sum()
            })
            .collect()
    } else {
        let classes: Vec<Partition> = lambdas.clone();
        classes
            .par_iter()
            .filter_map(|alpha| {
                let mut ev = ClassEvaluator::new(alpha);
                let x = ev.eval(mu).expect("same size");
                if x.is_zero() {
                    return None;
                }
                let w = BigInt::from(class_weight(alpha).size) * &x * &x;
                Some(
                    lambdas
                        .iter()
                        .map(|l| ev.eval(l).expect("same size") * &w)
                        .collect::<Vec<BigInt>>(),
                )
            })
            .reduce(
                || vec![BigInt::zero(); lambdas.len()],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    };
    let multiplicities = lambdas
        .into_iter()
        .zip(sums)
        .map(|(l, s)| {
            let g = unscale(s, n, &|| format!("g({l}, {mu}, {mu})"))?;
            Ok((l, g))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TensorSquareSpectrum {
        mu: mu.clone(),
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::shared_table;
    use crate::partition::families::staircase;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_weights() {
        assert_eq!(class_weight(&p(&[1, 1, 1, 1])).z, BigUint::from(24u32));
        assert_eq!(class_weight(&p(&[5])).z, BigUint::from(5u32));
        assert_eq!(class_weight(&p(&[2, 1])).z, BigUint::from(2u32));
        for n in 0..=10 {
            let total: BigUint = enumerate_partitions(n).map(|nu| class_weight(&nu).size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(kron_g(&p(&[1, 1, 1, 1]), &p(&[2, 2]), &p(&[2, 2])).unwrap(), BigUint::one());
        assert_eq!(kron_g(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), BigUint::one());
        assert!(kron_g(&p(&[2]), &p(&[1]), &p(&[2])).is_err());
        for n in 1..=6 {
            for l in enumerate_partitions(n) {
                for m in enumerate_partitions(n) {
                    let want = if l == m { BigUint::one() } else { BigUint::zero() };
                    assert_eq!(kron_g(&l, &m, &Partition::row(n)).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn symmetry_and_conjugation() {
        for n in 1..=7 {
            let ps: Vec<Partition> = enumerate_partitions(n).collect();
            for a in &ps {
                for b in &ps {
                    for c in &ps {
                        if a > b || b > c {
                            continue;
                        }
                        let g = kron_g(a, b, c).unwrap();
                        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                            assert_eq!(kron_g(x, y, z).unwrap(), g);
                        }
                        assert_eq!(kron_g(&a.conjugate(), &b.conjugate(), c).unwrap(), g);
                        assert_eq!(kron_g(&a.conjugate(), b, &c.conjugate()).unwrap(), g);
                    }
                }
            }
        }
    }

    #[test]
    fn spectra() {
        let s = tensor_square(&p(&[2, 2])).unwrap();
        let support: Vec<String> = s.support().iter().map(|l| l.to_string()).collect();
        assert_eq!(support, ["[4]", "[2,2]", "[1,1,1,1]"]);
        let missing: Vec<String> = s.missing().iter().map(|l| l.to_string()).collect();
        assert_eq!(missing, ["[3,1]", "[2,1,1]"]);
        let s = tensor_square(&Partition::row(6)).unwrap();
        assert_eq!(s.support(), vec![&Partition::row(6)]);
        let rho4 = staircase(4).unwrap();
        let s = tensor_square(&rho4).unwrap();
        assert_eq!(s.support().len(), 42);
        assert!(s.is_full());
    }

    #[test]
    fn spectrum_invariants() {
        for n in 1..=12 {
            let table = shared_table(n);
            for mu in table.partitions() {
                let s = tensor_square(mu).unwrap();
                let total: BigInt = s
                    .multiplicities
                    .iter()
                    .map(|(l, g)| BigInt::from(g.clone()) * l.dimension())
                    .sum();
                assert_eq!(total, mu.dimension() * mu.dimension(), "{mu}");
                let sign_in = !s.get(&Partition::column(n)).unwrap().is_zero();
                assert_eq!(sign_in, mu.is_self_conjugate(), "{mu}");
                if mu.is_self_conjugate() {
                    for (l, g) in &s.multiplicities {
                        assert_eq!(s.get(&l.conjugate()).unwrap(), g);
                    }
                }
            }
        }
    }

    #[test]
    fn streamed_and_tabled_paths_agree() {
        // n = 13 has no shared table in this test binary unless built elsewhere
        let mu = p(&[4, 3, 2, 2, 1, 1]);
        let a = tensor_square(&mu).unwrap();
        let t = crate::character::char_table(13);
        let m = t.index_of(&mu).unwrap();
        for (r, (l, g)) in a.multiplicities.iter().enumerate() {
            let mut s = BigInt::zero();
            for c in 0..t.dim() {
                let x = t.value_at(m, c);
                s += BigInt::from(class_weight(&t.partitions()[c]).size) * x * x * t.value_at(r, c);
            }
            assert_eq!(BigInt::from(g.clone()) * BigInt::from(factorial(13)), s, "{l}");
        }
    }
}

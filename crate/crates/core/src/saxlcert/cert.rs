//! Certificates: a nonzero `χ^λ[μ̂]` with `μ = μ'` witnesses `λ ∈ Φ(μ)`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::character::ClassEvaluator;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition, PrincipalHooks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertVerdict {
    CertifiedPositive,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub mu: Partition,
    pub lambda: Partition,
    #[serde(serialize_with = "ser_hooks")]
    pub hook_class: PrincipalHooks,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub char_value: BigInt,
    pub verdict: CertVerdict,
}

fn ser_hooks<S: serde::Serializer>(h: &PrincipalHooks, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&h.as_partition())
}

fn check_mu(mu: &Partition) -> Result<()> {
    if !mu.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(mu.to_string()));
    }
    Ok(())
}

/// `χ^λ[μ̂]` with the large-hook shortcut: when `λ̂₁ < μ̂₁` no rim hook of
/// size `μ̂₁` fits and the value is zero.
pub(crate) fn hook_class_value(ev: &mut ClassEvaluator, lambda: &Partition) -> BigInt {
    let top = ev.class().first().copied().unwrap_or(0);
    if lambda.hook_length(0, 0).unwrap_or(0) < top {
        return BigInt::zero();
    }
    ev.eval(lambda).expect("sizes checked by caller")
}

fn make(mu: &Partition, lambda: Partition, hooks: &PrincipalHooks, value: BigInt) -> Certificate {
    let verdict = if value.is_zero() {
        CertVerdict::Inconclusive
    } else {
        CertVerdict::CertifiedPositive
    };
    Certificate {
        mu: mu.clone(),
        lambda,
        hook_class: hooks.clone(),
        char_value: value,
        verdict,
    }
}

pub fn certify(lambda: &Partition, mu: &Partition) -> Result<Certificate> {
    check_mu(mu)?;
    if lambda.size() != mu.size() {
        return Err(Error::size(lambda.size(), mu.size()));
    }
    let hooks = mu.principal_hooks();
    let mut ev = ClassEvaluator::new(&hooks.as_partition());
    let value = hook_class_value(&mut ev, lambda);
    Ok(make(mu, lambda.clone(), &hooks, value))
}

/// Certificates for every `λ ⊢ n`, in enumeration order.
pub fn certify_all(mu: &Partition) -> Result<Vec<Certificate>> {
    check_mu(mu)?;
    let hooks = mu.principal_hooks();
    let class = hooks.as_partition();
    let lambdas: Vec<Partition> = enumerate_partitions(mu.size()).collect();
    Ok(lambdas
        .into_par_iter()
        .map_init(
            || ClassEvaluator::new(&class),
            |ev, lambda| {
                let value = hook_class_value(ev, &lambda);
                make(mu, lambda, &hooks, value)
            },
        )
        .collect())
}

/// `{λ : χ^λ[μ̂] ≠ 0}`, a subset of `Φ(μ)`.
pub fn certified_phi(mu: &Partition) -> Result<Vec<Partition>> {
    Ok(certify_all(mu)?
        .into_iter()
        .filter(|c| c.verdict == CertVerdict::CertifiedPositive)
        .map(|c| c.lambda)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::tensor_square;
    use crate::partition::{caret, enumerate_self_conjugate, staircase};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let rho3 = staircase(3).unwrap();
        let c = certify(&p(&[5, 1]), &rho3).unwrap();
        assert_eq!(c.verdict, CertVerdict::Inconclusive);
        assert!(tensor_square(&rho3).unwrap().get(&p(&[5, 1])).unwrap().bits() > 0);
        for n in 1..=15 {
            for mu in enumerate_self_conjugate(n) {
                let c = certify(&mu, &mu).unwrap();
                let sign = if (n - mu.durfee()) / 2 % 2 == 0 { 1 } else { -1 };
                assert_eq!(c.char_value, BigInt::from(sign), "{mu}");
                let col = certify(&Partition::column(n), &mu).unwrap();
                assert_eq!(col.verdict, CertVerdict::CertifiedPositive);
            }
        }
        assert!(matches!(certify(&p(&[2, 1]), &p(&[3])), Err(Error::NotSelfConjugate(_))));
        assert!(certify(&p(&[2, 1]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn certified_sets() {
        let phi = certified_phi(&p(&[2, 2])).unwrap();
        let exact = tensor_square(&p(&[2, 2])).unwrap();
        for l in &phi {
            assert!(exact.get(l).unwrap().bits() > 0);
        }
        for k in 4..=8 {
            let bound = 3usize.pow((k as u32).div_ceil(2) - 1);
            assert!(certified_phi(&staircase(k).unwrap()).unwrap().len() > bound, "k={k}");
        }
        for k in 2..=3 {
            let bound = 5usize.pow(k as u32 - 1);
            assert!(certified_phi(&caret(k).unwrap()).unwrap().len() > bound, "k={k}");
        }
    }

    #[test]
    fn conjugate_closure() {
        for n in 1..=12 {
            for mu in enumerate_self_conjugate(n) {
                let certs = certify_all(&mu).unwrap();
                for c in &certs {
                    let d = certify(&c.lambda.conjugate(), &mu).unwrap();
                    assert_eq!(c.verdict, d.verdict);
                    assert_eq!(c.char_value.magnitude(), d.char_value.magnitude());
                }
            }
        }
    }
}

//! Character-table statistics: zero and value densities, vanishing on the
//! caret class, and Monte-Carlo estimates for random pairs `(λ, μ)`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::character::{shared_table, CharTable, ClassEvaluator};
use crate::counting;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, enumerate_self_conjugate, Family, Partition};
use crate::report::{ser_display, Fraction};

use super::sampler::{rng_from_seed, PartitionSampler, SelfConjugateSampler, RNG_ALGORITHM};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValueDensity {
    pub value: i64,
    pub fraction: Fraction,
}

/// Exact densities over all `π(n)²` entries of the character table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroDensityReport {
    pub n: usize,
    #[serde(serialize_with = "ser_display")]
    pub entries: BigUint,
    pub zeros: Fraction,
    pub values: Vec<ValueDensity>,
}

impl ZeroDensityReport {
    pub fn p(&self) -> f64 {
        self.zeros.to_f64()
    }

    pub fn q(&self, value: i64) -> Option<&Fraction> {
        self.values.iter().find(|v| v.value == value).map(|v| &v.fraction)
    }
}

/// `p(n)` and `q_v(n)` for each requested `v`, from the shared table.
pub fn zero_density(n: usize, values: &[i64], budget: &Budget) -> Result<ZeroDensityReport> {
    budget.check_scan("zero density", n)?;
    Ok(zero_density_of(&shared_table(n), values))
}

pub fn zero_density_of(table: &CharTable, values: &[i64]) -> ZeroDensityReport {
    let targets: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    let (zeros, hits) = table
        .values()
        .par_chunks(table.dim().max(1))
        .map(|row| {
            let zeros = row.iter().filter(|x| x.is_zero()).count();
            let hits: Vec<usize> = targets.iter().map(|t| row.iter().filter(|x| *x == t).count()).collect();
            (zeros, hits)
        })
        .reduce(
            || (0, vec![0; targets.len()]),
            |(za, ha), (zb, hb)| (za + zb, ha.iter().zip(&hb).map(|(a, b)| a + b).collect()),
        );
    let entries = BigUint::from(table.dim()) * BigUint::from(table.dim());
    ZeroDensityReport {
        n: table.n(),
        entries: entries.clone(),
        zeros: Fraction::new(zeros, entries.clone()),
        values: values
            .iter()
            .zip(hits)
            .map(|(&value, h)| ValueDensity {
                value,
                fraction: Fraction::new(h, entries.clone()),
            })
            .collect(),
    }
}

/// Vanishing of `χ^λ` on the class of principal hooks of the caret `γ_k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaretVanishingReport {
    pub k: usize,
    pub n: usize,
    #[serde(serialize_with = "ser_display")]
    pub class: Partition,
    #[serde(serialize_with = "ser_display")]
    pub total: BigUint,
    pub vanishing: Fraction,
    pub nonempty_core: Fraction,
    pub empty_core_ratio: Fraction,
    /// Partitions with a non-empty 3-core and a non-zero value; always 0.
    pub nonzero_with_nonempty_core: usize,
}

pub fn caret_vanishing_fraction(k: usize, budget: &Budget) -> Result<CaretVanishingReport> {
    let shape = Family::Caret.shape(k)?;
    let n = shape.size();
    budget.check_scan("caret vanishing", n)?;
    let class = shape.principal_hooks().as_partition();
    let lambdas: Vec<Partition> = enumerate_partitions(n).collect();
    let tally = lambdas
        .par_iter()
        .map_init(
            || ClassEvaluator::new(&class),
            |ev, lam| {
                let zero = ev.eval(lam).expect("same size").is_zero();
                let core = !lam.k_core(3).expect("k = 3").is_empty();
                (zero as usize, core as usize, (core && !zero) as usize)
            },
        )
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    budget.check_time("caret vanishing")?;
    let total = BigUint::from(lambdas.len());
    let empty_cores = counting::pi_k(3, k * k)?.values()[k * k].clone();
    Ok(CaretVanishingReport {
        k,
        n,
        class,
        total: total.clone(),
        vanishing: Fraction::new(tally.0, total.clone()),
        nonempty_core: Fraction::new(tally.1, total.clone()),
        empty_core_ratio: Fraction::new(empty_cores, total),
        nonzero_with_nonempty_core: tally.2,
    })
}

/// How the class is drawn in [`random_char_experiment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentMode {
    /// `μ = μ'` uniform, evaluated on the class `μ̂` of its principal hooks.
    SelfConjugate,
    /// `μ ⊢ n` uniform, evaluated on the class `μ` itself.
    Unrestricted,
}

impl std::str::FromStr for ExperimentMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "self-conjugate" | "selfconj" => Ok(ExperimentMode::SelfConjugate),
            "unrestricted" | "any" => Ok(ExperimentMode::Unrestricted),
            other => Err(Error::InvalidArgument(format!(
                "unknown mode {other:?}; expected self-conjugate or unrestricted"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub trials: usize,
    pub mode: ExperimentMode,
    pub seed: u64,
    pub rng: &'static str,
    pub zeros: usize,
    pub estimate: f64,
    pub confidence: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
}

const Z_95: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `hits` successes in `trials` at 95%.
pub fn wilson_interval(hits: usize, trials: usize) -> (f64, f64) {
    let t = trials as f64;
    let p = hits as f64 / t;
    let z2 = Z_95 * Z_95;
    let centre = (p + z2 / (2.0 * t)) / (1.0 + z2 / t);
    let half = Z_95 * (p * (1.0 - p) / t + z2 / (4.0 * t * t)).sqrt() / (1.0 + z2 / t);
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Estimates `P(χ^λ[class] = 0)` from `trials` independent uniform pairs.
/// Pairs are drawn sequentially from one seeded stream, then evaluated in
/// parallel, so the result depends only on the seed.
pub fn random_char_experiment(n: usize, trials: usize, mode: ExperimentMode, seed: u64) -> Result<ExperimentReport> {
    if n == 0 || trials == 0 {
        return Err(Error::InvalidArgument("experiment needs n ≥ 1 and trials ≥ 1".into()));
    }
    let mut rng = rng_from_seed(seed);
    let lambdas = PartitionSampler::new(n);
    let pairs: Vec<(Partition, Partition)> = match mode {
        ExperimentMode::Unrestricted => (0..trials)
            .map(|_| (lambdas.sample(&mut rng), lambdas.sample(&mut rng)))
            .collect(),
        ExperimentMode::SelfConjugate => {
            let mus = SelfConjugateSampler::new(n);
            (0..trials)
                .map(|_| {
                    let lam = lambdas.sample(&mut rng);
                    let mu = mus.sample(&mut rng)?;
                    Ok((lam, mu.principal_hooks().as_partition()))
                })
                .collect::<Result<_>>()?
        }
    };
    let zeros = pairs
        .par_iter()
        .filter(|(lam, class)| ClassEvaluator::new(class).eval(lam).expect("same size").is_zero())
        .count();
    let (wilson_low, wilson_high) = wilson_interval(zeros, trials);
    Ok(ExperimentReport {
        n,
        trials,
        mode,
        seed,
        rng: RNG_ALGORITHM,
        zeros,
        estimate: zeros as f64 / trials as f64,
        confidence: 0.95,
        wilson_low,
        wilson_high,
    })
}

/// The exact probability estimated by [`random_char_experiment`], by
/// exhaustive enumeration of both coordinates.
pub fn exact_zero_probability(n: usize, mode: ExperimentMode, budget: &Budget) -> Result<Fraction> {
    budget.check_scan("exact zero probability", n)?;
    let lambdas: Vec<Partition> = enumerate_partitions(n).collect();
    let classes: Vec<Partition> = match mode {
        ExperimentMode::Unrestricted => lambdas.clone(),
        ExperimentMode::SelfConjugate => enumerate_self_conjugate(n)
            .iter()
            .map(|mu| mu.principal_hooks().as_partition())
            .collect(),
    };
    if classes.is_empty() {
        return Err(Error::InvalidArgument(format!("{n} has no self-conjugate partition")));
    }
    let zeros: usize = classes
        .par_iter()
        .map(|class| {
            let mut ev = ClassEvaluator::new(class);
            lambdas.iter().filter(|l| ev.eval(l).expect("same size").is_zero()).count()
        })
        .sum();
    let total = lambdas.len() * classes.len();
    Ok(Fraction::new(zeros, total))
}

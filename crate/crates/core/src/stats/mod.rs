//! Uniform random partitions and character-table statistics.

mod experiments;
mod sampler;
mod table;

pub use experiments::{
    caret_vanishing_fraction, exact_zero_probability, random_char_experiment, wilson_interval, zero_density,
    zero_density_of, CaretVanishingReport, ExperimentMode, ExperimentReport, ValueDensity, ZeroDensityReport,
};
pub use sampler::{
    rng_from_seed, sample_partition, sample_self_conjugate, uniform_below, PartitionSampler, SelfConjugateSampler,
    RNG_ALGORITHM,
};

//! Uniform random partitions by exact unranking, and uniform self-conjugate
//! partitions.
//!
//! `cargo run --release --example sampling -- [n] [seed]`

use saxl_lab::stats::{rng_from_seed, PartitionSampler, SelfConjugateSampler};

fn main() -> saxl_lab::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(60);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);

    let sampler = PartitionSampler::new(n);
    println!("π({n}) = {}", sampler.total());
    let mut rng = rng_from_seed(seed);
    for _ in 0..3 {
        let lam = sampler.sample(&mut rng);
        println!("  {lam} has rank {}", sampler.rank(&lam)?);
    }
    let middle = sampler.total() / 2u32;
    println!("partition of rank {middle}: {}", sampler.unrank(&middle)?);

    let sc = SelfConjugateSampler::new(n);
    println!("{} self-conjugate partitions of {n}", sc.total());
    for _ in 0..3 {
        println!("  {}", sc.sample(&mut rng)?);
    }
    Ok(())
}

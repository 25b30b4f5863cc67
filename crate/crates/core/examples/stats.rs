//! Character-table zero densities, caret vanishing and random-pair estimates.
//!
//! `cargo run --release --example stats -- [n]`

use std::time::Instant;

use saxl_lab::stats::{
    caret_vanishing_fraction, random_char_experiment, zero_density, ExperimentMode, PartitionSampler,
};
use saxl_lab::Budget;

fn main() -> saxl_lab::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);

    let rep = zero_density(n, &[1, -1], &Budget::default())?;
    println!("p({n}) = {} ≈ {:.5}", rep.zeros, rep.p());
    println!("q({n}) = {} ≈ {:.5}", rep.values[0].fraction, rep.values[0].fraction.to_f64());

    for k in 2..=3 {
        let c = caret_vanishing_fraction(k, &Budget::default())?;
        println!(
            "caret k={k}: vanishing {:.4}, non-empty 3-core {:.4}, exceptions {}",
            c.vanishing.to_f64(),
            c.nonempty_core.to_f64(),
            c.nonzero_with_nonempty_core
        );
    }

    let start = Instant::now();
    let sampler = PartitionSampler::new(2500);
    let mut rng = saxl_lab::stats::rng_from_seed(1);
    let draws = 400;
    let mean = (0..draws).map(|_| sampler.sample(&mut rng).durfee() as f64).sum::<f64>() / draws as f64;
    let predicted = std::f64::consts::LN_2 * (6.0 * 2500.0f64).sqrt() / std::f64::consts::PI;
    println!(
        "n=2500: mean Durfee size {mean:.2} over {draws} draws, predicted {predicted:.2} ({:.1?})",
        start.elapsed()
    );

    for mode in [ExperimentMode::SelfConjugate, ExperimentMode::Unrestricted] {
        let e = random_char_experiment(30, 2000, mode, 7)?;
        println!(
            "{mode:?} n=30: {:.4} in [{:.4}, {:.4}]",
            e.estimate, e.wilson_low, e.wilson_high
        );
    }
    Ok(())
}

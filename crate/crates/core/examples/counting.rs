//! Partition counts: `π(n)`, `π_k(n)`, distinct parts from progressions and
//! finite sets, the monotonicity threshold and the leading asymptotic.
//!
//! `cargo run --release --example counting`

use saxl_lab::counting::{hr_estimate, monotonicity_threshold, pi, pi_k, pi_prime_inf, pi_prime_r, ProgressionSpec};

fn main() -> saxl_lab::Result<()> {
    let p = pi(100);
    println!("π(100) = {}", p.values()[100]);
    println!("π_3(0..10) = {:?}", pi_k(3, 10)?.values().iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let spec = ProgressionSpec::new(5, 2, None)?;
    let t = pi_prime_inf(spec, 42)?;
    println!("distinct parts from {{5,7,9,…}}: π'(41) = {}, π'(42) = {}", t.get(41), t.get(42));

    let set = ProgressionSpec::new(3, 4, Some(6))?.finite_set()?;
    let r = pi_prime_r(&set, None)?;
    println!("R = {set:?}: {} coefficients, middle value {}", r.len(), r.get(r.len() as i64 / 2));
    match monotonicity_threshold(&set)? {
        Some(t) => println!("  non-decreasing from {t} up to the middle"),
        None => println!("  never non-decreasing up to the middle"),
    }

    for n in [10, 100, 1000] {
        let e = hr_estimate(n)?;
        println!("n={n}: estimate {:.4e}, exact {}, ratio {:.4}", e.estimate, e.exact, e.ratio);
    }
    Ok(())
}

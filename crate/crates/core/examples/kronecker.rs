//! Kronecker coefficients, tensor-square spectra, positivity rules and the
//! corner-count formulas for small `λ = (n−|τ|, τ)`.
//!
//! `cargo run --release --example kronecker -- [parts of μ]`

use saxl_lab::kronecker::{corner_counts, corner_formula_check, kron_g, positivity_rules, tensor_square, Ribbon};
use saxl_lab::Partition;

fn main() -> saxl_lab::Result<()> {
    let parts: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let mu = Partition::new(if parts.is_empty() { vec![4, 2, 1, 1] } else { parts })?;

    let a = Partition::new(vec![3, 2])?;
    let b = Partition::new(vec![2, 2, 1])?;
    let c = Partition::new(vec![3, 1, 1])?;
    println!("g({a}, {b}, {c}) = {}", kron_g(&a, &b, &c)?);

    let spectrum = tensor_square(&mu)?;
    println!("Φ({mu}): {} of {} constituents", spectrum.support().len(), spectrum.multiplicities.len());
    for (lam, g) in spectrum.multiplicities.iter().take(8) {
        let rule = positivity_rules(lam, &mu)?;
        let by = rule.rule.map(|r| r.name()).unwrap_or("-");
        println!("  g({lam}, μ, μ) = {g:<4} rule {:?} ({by})", rule.verdict);
    }
    let missing: Vec<String> = spectrum.missing().iter().map(|l| l.to_string()).collect();
    println!("missing: {}", if missing.is_empty() { "none".into() } else { missing.join(" ") });

    let counts = corner_counts(&mu);
    let summary: Vec<String> = Ribbon::ALL.iter().map(|&r| format!("{}:{}", r.label(), counts.get(r))).collect();
    println!("ribbon counts of {mu}: {}", summary.join(" "));
    for cmp in corner_formula_check(&mu, true)? {
        println!(
            "  τ = {:<8} λ = {:<12} formula {} exact {}{}",
            cmp.tau.to_string(),
            cmp.lambda.to_string(),
            cmp.formula,
            cmp.exact,
            if cmp.matches() { "" } else { "  (differs)" }
        );
    }
    Ok(())
}

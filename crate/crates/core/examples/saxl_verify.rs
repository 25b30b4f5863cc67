//! Checks that a family's tensor square contains every irreducible, first by
//! principal-hook certificates alone and then exactly.
//!
//! `cargo run --release --example saxl_verify -- [family] [k]`

use std::time::Instant;

use saxl_lab::saxlcert::{certify_all, verify_conjecture, CertVerdict, VerifyMode};
use saxl_lab::{Budget, Family};

fn main() -> saxl_lab::Result<()> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("staircase").parse()?;
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let mu = family.shape(k)?;
    println!("{family} k={k}: μ = {mu}, hook class {}", mu.principal_hooks().as_partition());

    let certs = certify_all(&mu)?;
    let positive = certs.iter().filter(|c| c.verdict == CertVerdict::CertifiedPositive).count();
    println!("certificates: {positive} of {} λ have χ^λ[μ̂] ≠ 0", certs.len());
    for c in certs.iter().filter(|c| c.verdict == CertVerdict::Inconclusive).take(5) {
        println!("  inconclusive: {}", c.lambda);
    }

    for mode in [VerifyMode::CertificatesOnly, VerifyMode::Exact] {
        let start = Instant::now();
        let rep = verify_conjecture(family, k, mode, &Budget::default())?;
        println!(
            "{mode:?}: certified {}, rules {}, exact {}, inconclusive {}, missing {}, holds {:?} ({:.1?})",
            rep.certified,
            rep.rule_covered,
            rep.exact_checked,
            rep.inconclusive.len(),
            rep.missing.len(),
            rep.conjecture_holds,
            start.elapsed()
        );
    }
    Ok(())
}

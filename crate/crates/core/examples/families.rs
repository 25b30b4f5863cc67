//! The staircase, chopped-square and caret shapes, their principal hooks and
//! the families of `λ` certified by a unique rim hook tableau.
//!
//! `cargo run --release --example families -- [k]`

use saxl_lab::character::mn_char;
use saxl_lab::saxlcert::{exp_family, exp_family_weight, hook_chain, vanishing_family, vanishing_sizes};
use saxl_lab::Family;

fn main() -> saxl_lab::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for family in Family::ALL {
        let shape = family.shape(k)?;
        println!(
            "{family} k={k}: {shape}, n = {}, Durfee {}, principal hooks {:?}",
            shape.size(),
            shape.durfee(),
            shape.principal_hooks().hooks()
        );
        match (exp_family_weight(family, k), exp_family(family, k)) {
            (Ok(weight), Ok(members)) => println!("  weight {weight:?}: {} certified shapes", members.len()),
            (_, Err(e)) | (Err(e), _) => println!("  {e}"),
        }
    }

    println!("hook chain (1,5,9): {:?}", hook_chain(&[1, 5, 9])?.iter().map(|p| p.to_string()).collect::<Vec<_>>());

    let rho = Family::Staircase.shape(k)?;
    let class = rho.principal_hooks().as_partition();
    let sizes = vanishing_sizes(Family::Staircase, k)?;
    let vanishing = vanishing_family(Family::Staircase, k)?;
    let zeros = vanishing.iter().filter(|l| mn_char(l, &class).map(|v| v == 0.into()).unwrap_or(false)).count();
    println!("staircase vanishing family from sizes {sizes:?}: {} shapes, {zeros} with χ = 0", vanishing.len());
    Ok(())
}

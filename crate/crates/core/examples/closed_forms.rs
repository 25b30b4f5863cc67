//! Hook and two-row characters at a family's principal-hook class, compared
//! with their closed forms in distinct-part counts, plus near-hook and
//! near-two-row decompositions.
//!
//! `cargo run --release --example closed_forms -- [k]`

use saxl_lab::saxlcert::{check_closed_form, near_hook, near_shape_char, near_two_row, NearProfile, ShapeKind};
use saxl_lab::Family;

fn main() -> saxl_lab::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for family in Family::ALL {
        for kind in [ShapeKind::Hook, ShapeKind::TwoRow] {
            let rep = check_closed_form(family, k, kind)?;
            println!(
                "{family} k={k} {kind:?}: {} values, {} mismatches, agreement from ℓ = {}, negative at {:?}",
                rep.checked,
                rep.mismatches.len(),
                rep.first_agreement,
                rep.negative
            );
        }
    }

    let rho = Family::Staircase.shape(k)?;
    let n = rho.size();
    let class = rho.principal_hooks().as_partition();
    let ell = n / 3;
    for m in 2..=4 {
        let lam = near_hook(n, ell, m)?;
        let v = near_shape_char(&lam, NearProfile::NearHook, &class)?;
        let terms: Vec<String> = v.terms.iter().map(|t| format!("{:+}·{}", t.sign, t.value)).collect();
        println!("χ^{lam}[{class}] = {} = {}", v.value, terms.join(" "));
    }
    for m in 1..=4 {
        let lam = near_two_row(n, ell, m)?;
        let v = near_shape_char(&lam, NearProfile::NearTwoRow, &class)?;
        println!("χ^{lam}[{class}] = {} over {} terms", v.value, v.terms.len());
    }
    Ok(())
}

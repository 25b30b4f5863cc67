//! Murnaghan–Nakayama characters, skew characters and the two-row and
//! Durfee-2 decompositions.
//!
//! `cargo run --release --example characters`

use saxl_lab::character::{
    char_table, frobenius_two_row, giambelli_durfee2, mn_char, mn_skew_char, rim_hook_tableaux_count, SkewShape,
};
use saxl_lab::Partition;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn main() -> saxl_lab::Result<()> {
    let t = char_table(5);
    println!("character table of S5 (rows λ, columns ν, both decreasing):");
    for (i, lam) in t.partitions().iter().enumerate() {
        let row: Vec<String> = t.row(i).iter().map(|v| format!("{v:>3}")).collect();
        println!("{:>12} {}", lam.to_string(), row.join(" "));
    }

    let lam = p(&[4, 3, 2, 1]);
    let class = lam.principal_hooks().as_partition();
    println!("χ^{lam}[{class}] = {}", mn_char(&lam, &class)?);
    println!("dim {lam} = {}", lam.dimension());
    println!("rim hook tableaux of {lam}, weight (7,3): {}", rim_hook_tableaux_count(&lam, &[7, 3])?);

    let skew = SkewShape::skew(p(&[4, 3, 1]), p(&[2, 1]))?;
    println!("χ^{{(4,3,1)/(2,1)}}[(3,2)] = {}", mn_skew_char(&skew, &p(&[3, 2]))?);

    let two_row = p(&[9, 5]);
    let combo = frobenius_two_row(&two_row)?;
    let nu = p(&[5, 5, 3, 1]);
    println!(
        "{two_row} as {} skew terms: {} (direct {})",
        combo.terms.len(),
        combo.evaluate(&nu)?,
        mn_char(&two_row, &nu)?
    );

    let d2 = p(&[6, 4, 2, 1]);
    let g = giambelli_durfee2(&d2)?;
    let nu = p(&[7, 3, 2, 1]);
    println!(
        "{d2}: arms {:?}, legs {:?}, value {} (direct {})",
        g.arms,
        g.legs,
        g.combination.evaluate(&nu)?,
        mn_char(&d2, &nu)?
    );
    Ok(())
}

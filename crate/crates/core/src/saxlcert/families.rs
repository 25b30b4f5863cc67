//! Explicit families of shapes obtained by growing a hook one principal hook
//! at a time.

use crate::error::{Error, Result};
use crate::partition::{Family, Partition};

/// One growth step: the rim of `λ` is shifted one cell down and right, the
/// two end cells are filled, and `extra` further cells are split between
/// row 1 and column 1. Yields `extra + 1` shapes, most cells in row 1 first.
fn grow(lambda: &Partition, extra: usize) -> Vec<Partition> {
    let p = lambda.parts();
    (0..=extra)
        .rev()
        .map(|r| {
            let c = extra - r;
            let mut parts = Vec::with_capacity(p.len() + 1 + c);
            parts.push(p[0] + 1 + r);
            parts.extend(p.iter().map(|x| x + 1));
            parts.extend(std::iter::repeat_n(1, c));
            Partition::new(parts).expect("growth keeps parts decreasing")
        })
        .collect()
}

/// All shapes reached from the hooks of size `sizes[0]` by growing the
/// outer rim to `sizes[1]`, `sizes[2]`, …. Each has principal hooks
/// `sizes` (reversed) and a unique rim hook tableau of weight `sizes`.
pub fn hook_chain(sizes: &[usize]) -> Result<Vec<Partition>> {
    let Some((&first, rest)) = sizes.split_first() else {
        return Ok(vec![Partition::empty()]);
    };
    if first == 0 {
        return Err(Error::InvalidArgument("hook sizes must be positive".into()));
    }
    let mut shapes: Vec<Partition> = (0..first)
        .map(|leg| Partition::hook(first, leg).expect("valid hook"))
        .collect();
    let mut prev = first;
    for &s in rest {
        if s < prev + 2 {
            return Err(Error::InvalidArgument(format!(
                "hook sizes must grow by at least 2, got {prev} then {s}"
            )));
        }
        shapes = shapes.iter().flat_map(|l| grow(l, s - prev - 2)).collect();
        prev = s;
    }
    shapes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(shapes)
}

/// The family's principal hooks in increasing order.
pub fn exp_family_weight(family: Family, k: usize) -> Result<Vec<usize>> {
    match family {
        Family::Staircase | Family::Caret => {
            let mut w = family.shape(k)?.principal_hooks().hooks().to_vec();
            w.reverse();
            Ok(w)
        }
        Family::ChoppedSquare => Err(Error::Unsupported(
            "no growth family for the chopped square".into(),
        )),
    }
}

/// Shapes with a unique rim hook tableau whose weight is the family's
/// principal-hook class; each is certified in `Φ(shape(k))`.
pub fn exp_family(family: Family, k: usize) -> Result<Vec<Partition>> {
    hook_chain(&exp_family_weight(family, k)?)
}

/// Hook sizes, increasing, whose largest entry is below the family's
/// largest principal hook; empty when `k` is too small.
pub fn vanishing_sizes(family: Family, k: usize) -> Result<Vec<usize>> {
    family.shape(k)?;
    Ok(match family {
        Family::Staircase if k % 2 == 1 => {
            let m = k / 2;
            if m < 2 {
                return Ok(Vec::new());
            }
            let mut s = vec![3];
            s.extend((5..=4 * m - 3).step_by(4));
            s.push(4 * m - 1);
            s
        }
        Family::Staircase => {
            let m = k / 2;
            if m < 3 {
                return Ok(Vec::new());
            }
            let mut s = vec![5];
            s.extend((7..=4 * m - 5).step_by(4));
            s.push(4 * m - 3);
            s
        }
        Family::Caret => {
            let mut s = vec![5];
            s.extend((2..k).map(|j| 6 * j - 3));
            s.push(6 * k - 5);
            s
        }
        Family::ChoppedSquare => {
            return Err(Error::Unsupported("no growth family for the chopped square".into()))
        }
    })
}

/// Shapes `λ` with `λ̂₁` below the family's top principal hook, so that
/// `χ^λ` vanishes at the principal-hook class.
pub fn vanishing_family(family: Family, k: usize) -> Result<Vec<Partition>> {
    let sizes = vanishing_sizes(family, k)?;
    if sizes.is_empty() {
        return Ok(Vec::new());
    }
    hook_chain(&sizes)
}

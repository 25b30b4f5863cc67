//! Skew and disconnected shapes, evaluated by border-strip recursion on the
//! cell set.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A skew diagram made of disconnected components `outer/inner`. Later
/// components sit strictly above and to the right of earlier ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    components: Vec<(Partition, Partition)>,
}

impl SkewShape {
    pub fn new(components: Vec<(Partition, Partition)>) -> Result<Self> {
        for (outer, inner) in &components {
            if !outer.contains(inner) {
                return Err(Error::InvalidPartition(format!(
                    "{inner} does not fit inside {outer}"
                )));
            }
        }
        Ok(SkewShape { components })
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            components: vec![(lambda, Partition::empty())],
        }
    }

    pub fn skew(outer: Partition, inner: Partition) -> Result<Self> {
        SkewShape::new(vec![(outer, inner)])
    }

    /// Disconnected straight components `λ¹ ∘ λ² ∘ …`.
    pub fn disjoint(parts: Vec<Partition>) -> Self {
        SkewShape {
            components: parts.into_iter().map(|p| (p, Partition::empty())).collect(),
        }
    }

    /// Disconnected one-row components `(r₁) ∘ (r₂) ∘ …`.
    pub fn rows(lengths: &[usize]) -> Self {
        SkewShape::disjoint(lengths.iter().map(|&r| Partition::row(r)).collect())
    }

    /// `self ∘ other`.
    pub fn compose(mut self, other: SkewShape) -> Self {
        self.components.extend(other.components);
        self
    }

    pub fn components(&self) -> &[(Partition, Partition)] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(|(o, i)| o.size() - i.size()).sum()
    }

    /// Combined outer and inner row lengths of the whole diagram.
    pub fn layout(&self) -> (Vec<usize>, Vec<usize>) {
        let live: Vec<&(Partition, Partition)> =
            self.components.iter().filter(|(o, i)| o.size() > i.size()).collect();
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut shift: usize = live.iter().map(|(o, _)| o.largest_part()).sum();
        // last component on top, shifted furthest right
        for (o, i) in live.iter().rev() {
            shift -= o.largest_part();
            for r in 0..o.len() {
                outer.push(o.part(r) + shift);
                inner.push(i.part(r) + shift);
            }
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        (outer, inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("[]");
        }
        for (k, (o, i)) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("∘")?;
            }
            if i.is_empty() {
                write!(f, "{o}")?;
            } else {
                write!(f, "{o}/{i}")?;
            }
        }
        Ok(())
    }
}

impl From<Partition> for SkewShape {
    fn from(lambda: Partition) -> Self {
        SkewShape::straight(lambda)
    }
}

/// A border strip removable from the outer boundary of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BorderStrip {
    /// Cells of the strip in each row it meets, top to bottom.
    pub row_cells: Vec<usize>,
    pub remainder: Vec<usize>,
}

impl BorderStrip {
    pub fn height(&self) -> usize {
        self.row_cells.len() - 1
    }

    pub fn sign(&self) -> i32 {
        if self.height() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All border strips of `t` cells on the outer rim of `outer` (a weakly
/// decreasing row sequence). Containment of any inner shape is the caller's
/// business.
pub(crate) fn border_strips(outer: &[usize], t: usize) -> Vec<BorderStrip> {
    let mut out = Vec::new();
    let len = outer.len();
    let at = |i: usize| outer.get(i).copied().unwrap_or(0);
    if t == 0 {
        return out;
    }
    for a in 0..len {
        if outer[a] == 0 {
            break;
        }
        let mut acc = 0;
        let mut cells = Vec::new();
        for b in a..len {
            let avail = outer[b] - at(b + 1);
            let need = t - acc;
            if need <= avail {
                cells.push(need);
                let mut rem = outer.to_vec();
                for i in a..b {
                    rem[i] = outer[i + 1] - 1;
                }
                rem[b] = outer[b] - need;
                while rem.last() == Some(&0) {
                    rem.pop();
                }
                out.push(BorderStrip {
                    row_cells: cells.clone(),
                    remainder: rem,
                });
                break;
            }
            // continue into the next row through the shared column
            if at(b + 1) == 0 {
                break;
            }
            cells.push(avail + 1);
            acc += avail + 1;
            if acc >= t {
                break;
            }
        }
    }
    out
}

/// `χ^{shape}[ν]` by signed border-strip tableaux.
pub fn mn_skew_char(shape: &SkewShape, nu: &Partition) -> Result<BigInt> {
    if shape.size() != nu.size() {
        return Err(Error::size(shape.size(), nu.size()));
    }
    let (outer, inner) = shape.layout();
    let mut memo = vec![HashMap::new(); nu.len()];
    Ok(skew_at(&outer, &inner, nu.parts(), &mut memo))
}

fn skew_at(
    outer: &[usize],
    inner: &[usize],
    nu: &[usize],
    memo: &mut [HashMap<Vec<usize>, BigInt>],
) -> BigInt {
    let Some((&t, rest)) = nu.split_first() else {
        return BigInt::one();
    };
    let depth = memo.len() - nu.len();
    if let Some(v) = memo[depth].get(outer) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for strip in border_strips(outer, t) {
        let fits = inner
            .iter()
            .enumerate()
            .all(|(i, &w)| strip.remainder.get(i).copied().unwrap_or(0) >= w);
        if !fits {
            continue;
        }
        let v = skew_at(&strip.remainder, inner, rest, memo);
        if strip.sign() > 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo[depth].insert(outer.to_vec(), total.clone());
    total
}

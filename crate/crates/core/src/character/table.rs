//! Full character tables, built column by column in parallel.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

use super::ClassEvaluator;

/// The character table of `S_n`. Rows are indexed by `λ ⊢ n`, columns by
/// classes `ν ⊢ n`, both in lexicographically decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<BigInt>,
}

impl CharTable {
    /// Assembles a table from row-major values; used by cache loaders.
    pub fn from_values(n: usize, values: Vec<BigInt>) -> Result<Self> {
        let partitions: Vec<Partition> = enumerate_partitions(n).collect();
        if values.len() != partitions.len() * partitions.len() {
            return Err(Error::InvalidArgument(format!(
                "a table for n = {n} needs {} entries, got {}",
                partitions.len() * partitions.len(),
                values.len()
            )));
        }
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(CharTable {
            n,
            partitions,
            index,
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn dim(&self) -> usize {
        self.partitions.len()
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn value_at(&self, row: usize, col: usize) -> &BigInt {
        &self.values[row * self.dim() + col]
    }

    pub fn value(&self, lambda: &Partition, nu: &Partition) -> Result<&BigInt> {
        let r = self.lookup(lambda)?;
        let c = self.lookup(nu)?;
        Ok(self.value_at(r, c))
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        let d = self.dim();
        &self.values[row * d..(row + 1) * d]
    }

    pub fn column(&self, col: usize) -> Vec<&BigInt> {
        (0..self.dim()).map(|r| self.value_at(r, col)).collect()
    }

    /// Row-major entries.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    fn lookup(&self, p: &Partition) -> Result<usize> {
        if p.size() != self.n {
            return Err(Error::size(p.size(), self.n));
        }
        self.index_of(p)
            .ok_or_else(|| Error::Internal(format!("{p} missing from the table index")))
    }
}

/// `χ^λ[ν]` for every `λ` in `rows` and every `ν ⊢ n`, one row per `λ`.
/// Each class column is evaluated by its own worker.
pub fn char_rows(n: usize, rows: &[Partition]) -> Result<Vec<Vec<BigInt>>> {
    if let Some(bad) = rows.iter().find(|l| l.size() != n) {
        return Err(Error::size(bad.size(), n));
    }
    let classes: Vec<Partition> = enumerate_partitions(n).collect();
    let columns: Vec<Vec<BigInt>> = classes
        .par_iter()
        .map(|nu| {
            let mut ev = ClassEvaluator::new(nu);
            rows.iter().map(|l| ev.eval(l).expect("sizes checked")).collect()
        })
        .collect();
    Ok((0..rows.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect())
}

pub fn char_table(n: usize) -> CharTable {
    let partitions: Vec<Partition> = enumerate_partitions(n).collect();
    let d = partitions.len();
    let columns: Vec<Vec<BigInt>> = partitions
        .par_iter()
        .map(|nu| {
            let mut ev = ClassEvaluator::new(nu);
            partitions.iter().map(|l| ev.eval(l).expect("same size")).collect()
        })
        .collect();
    let mut values = Vec::with_capacity(d * d);
    for r in 0..d {
        for c in &columns {
            values.push(c[r].clone());
        }
    }
    CharTable::from_values(n, values).expect("shape matches")
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<CharTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `char_table(n)`, computed once per process and shared afterwards.
pub fn shared_table(n: usize) -> Arc<CharTable> {
    if let Some(t) = table_cache().lock().expect("cache lock").get(&n) {
        return Arc::clone(t);
    }
    let table = Arc::new(char_table(n));
    table_cache()
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert(table)
        .clone()
}

/// Registers an externally loaded table (e.g. from disk) in the shared cache.
pub fn install_table(table: CharTable) -> Arc<CharTable> {
    let n = table.n();
    table_cache()
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert_with(|| Arc::new(table))
        .clone()
}

pub fn has_shared_table(n: usize) -> bool {
    table_cache().lock().expect("cache lock").contains_key(&n)
}

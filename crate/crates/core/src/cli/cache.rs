//! Binary character-table cache.
//!
//! Layout, all integers little-endian:
//!
//! | bytes | field |
//! |---|---|
//! | 8 | magic `SAXLCHT\0` |
//! | 4 | format version |
//! | 4 | `n` |
//! | 1 | enumeration order tag (1 = lexicographically decreasing) |
//! | 4 + 4 | rows, columns (both `π(n)`) |
//! | … | per value: 4-byte length, then two's-complement bytes |
//! | 32 | SHA-256 of everything above |

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::character::CharTable;
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 8] = b"SAXLCHT\0";
pub const VERSION: u32 = 1;
pub const ORDER_LEX_DECREASING: u8 = 1;
const HEADER_LEN: usize = 8 + 4 + 4 + 1 + 4 + 4;
const DIGEST_LEN: usize = 32;

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("chartable-{n}.bin"))
}

pub fn encode_table(table: &CharTable) -> Vec<u8> {
    let d = table.dim() as u32;
    let mut out = Vec::with_capacity(HEADER_LEN + table.values().len() * 6 + DIGEST_LEN);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(table.n() as u32).to_le_bytes());
    out.push(ORDER_LEX_DECREASING);
    out.extend_from_slice(&d.to_le_bytes());
    out.extend_from_slice(&d.to_le_bytes());
    for v in table.values() {
        let bytes = v.to_signed_bytes_le();
        out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        out.extend_from_slice(&bytes);
    }
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(len).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| Error::Cache(format!("truncated at byte {}", self.pos)))?;
        let out = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("four bytes")))
    }
}

/// Parses a cache file, rejecting it whole on any inconsistency.
pub fn decode_table(bytes: &[u8]) -> Result<CharTable> {
    if bytes.len() < HEADER_LEN + DIGEST_LEN {
        return Err(Error::Cache(format!("{} bytes is shorter than the header", bytes.len())));
    }
    if &bytes[..8] != MAGIC {
        return Err(Error::Cache("bad magic bytes".into()));
    }
    let (body, digest) = bytes.split_at(bytes.len() - DIGEST_LEN);
    if Sha256::digest(body).as_slice() != digest {
        return Err(Error::Cache("checksum mismatch".into()));
    }
    let mut r = Reader { bytes: body, pos: 8 };
    let version = r.u32()?;
    if version != VERSION {
        return Err(Error::Cache(format!("format version {version}, expected {VERSION}")));
    }
    let n = r.u32()? as usize;
    let order = r.take(1)?[0];
    if order != ORDER_LEX_DECREASING {
        return Err(Error::Cache(format!("unknown enumeration order tag {order}")));
    }
    let rows = r.u32()? as usize;
    let cols = r.u32()? as usize;
    let expected = crate::partition::enumerate_partitions(n).count();
    if rows != expected || cols != expected {
        return Err(Error::Cache(format!("{rows}×{cols} table for n = {n}, expected {expected}×{expected}")));
    }
    let mut values = Vec::with_capacity(rows * cols);
    for _ in 0..rows * cols {
        let len = r.u32()? as usize;
        values.push(BigInt::from_signed_bytes_le(r.take(len)?));
    }
    if r.pos != body.len() {
        return Err(Error::Cache(format!("{} trailing bytes", body.len() - r.pos)));
    }
    CharTable::from_values(n, values)
}

/// Writes atomically: a temporary file renamed into place.
pub fn cache_store(dir: &Path, table: &CharTable) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, table.n());
    let tmp = path.with_extension("bin.tmp");
    fs::write(&tmp, encode_table(table))?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// `Ok(None)` when no file exists; `Err(Error::Cache)` when one exists but
/// is unusable.
pub fn cache_load(dir: &Path, n: usize) -> Result<Option<CharTable>> {
    let path = cache_path(dir, n);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let table = decode_table(&bytes).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    if table.n() != n {
        return Err(Error::Cache(format!("{} holds n = {}, not {n}", path.display(), table.n())));
    }
    Ok(Some(table))
}

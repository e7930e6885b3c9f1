//! Persistent sequence cache: a checksummed text file of `family index value`
//! records, re-verified on load.

use std::fs::{self, File, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, Instant};

use nsatoms_core::sequence::{verify_recursions, Provenance, TableSet};
use nsatoms_core::Family;
use num_bigint::BigUint;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const HEADER: &str = "#nsatoms-cache v1";
const CHECKSUM_PREFIX: &str = "#sha256 ";
const LOCK_WAIT: Duration = Duration::from_secs(30);

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache I/O error on {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("corrupt cache: {0}")]
    CorruptCache(String),
    #[error("unsupported cache version: {0}")]
    VersionMismatch(String),
    #[error("cache is locked by another process: {0}")]
    Locked(PathBuf),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CacheError + '_ {
    move |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Renders the tables, header and checksum included.
pub fn render(t: &TableSet) -> String {
    let mut body = format!("{HEADER}\n");
    for family in Family::ALL {
        for (k, e) in t.get(family).iter() {
            body.push_str(&format!("{} {k} {}\n", family.name(), e.value));
        }
    }
    let sum = digest(&body);
    format!("{body}{CHECKSUM_PREFIX}{sum}\n")
}

/// Parses and validates cache text. Loaded entries are tagged as imported.
pub fn parse(text: &str) -> Result<TableSet, CacheError> {
    let first = text.lines().next().unwrap_or("");
    if first != HEADER {
        return Err(CacheError::VersionMismatch(format!(
            "expected {HEADER:?}, found {first:?}"
        )));
    }
    let trimmed = text.strip_suffix('\n').unwrap_or(text);
    let (body, last) = trimmed
        .rsplit_once('\n')
        .ok_or_else(|| CacheError::CorruptCache("missing checksum line".into()))?;
    let claimed = last
        .strip_prefix(CHECKSUM_PREFIX)
        .ok_or_else(|| CacheError::CorruptCache("missing checksum line".into()))?;
    let body = format!("{body}\n");
    if digest(&body) != claimed.trim() {
        return Err(CacheError::CorruptCache("checksum mismatch".into()));
    }

    let mut t = TableSet::new();
    for (n, line) in body.lines().enumerate().skip(1) {
        let bad = |why: &str| CacheError::CorruptCache(format!("line {}: {why}: {line:?}", n + 1));
        let mut fields = line.split_whitespace();
        let (Some(fam), Some(idx), Some(val), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(bad("expected `family index value`"));
        };
        let family: Family = fam.parse().map_err(|_| bad("unknown family"))?;
        let idx: u32 = idx.parse().map_err(|_| bad("bad index"))?;
        let val: BigUint = val.parse().map_err(|_| bad("bad value"))?;
        let table = t.get_mut(family);
        if idx != table.len() + 1 {
            return Err(bad("indices must ascend from 1 without gaps"));
        }
        table.push(val, Provenance::Imported);
    }

    let report = verify_recursions(&t);
    if let Some(fail) = report.failures().next() {
        return Err(CacheError::CorruptCache(format!(
            "recursion check failed: {}",
            fail.label
        )));
    }
    Ok(t)
}

/// Loads `path`; a missing file is an empty table set.
pub fn load(path: &Path) -> Result<TableSet, CacheError> {
    match fs::read_to_string(path) {
        Ok(text) => parse(&text),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(TableSet::new()),
        Err(e) => Err(io_err(path)(e)),
    }
}

struct Lock(PathBuf);

impl Lock {
    fn acquire(path: &Path) -> Result<Lock, CacheError> {
        let lock = path.with_extension("lock");
        let start = Instant::now();
        loop {
            match OpenOptions::new().write(true).create_new(true).open(&lock) {
                Ok(_) => return Ok(Lock(lock)),
                Err(e) if e.kind() == io::ErrorKind::AlreadyExists => {
                    if start.elapsed() > LOCK_WAIT {
                        return Err(CacheError::Locked(lock));
                    }
                    thread::sleep(Duration::from_millis(50));
                }
                Err(e) => return Err(io_err(&lock)(e)),
            }
        }
    }
}

impl Drop for Lock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

/// Writes atomically (temporary file, then rename) under an exclusive lock file.
pub fn save(path: &Path, t: &TableSet) -> Result<(), CacheError> {
    let _lock = Lock::acquire(path)?;
    let tmp = path.with_extension("tmp");
    let mut file = File::create(&tmp).map_err(io_err(&tmp))?;
    file.write_all(render(t).as_bytes()).map_err(io_err(&tmp))?;
    file.sync_all().map_err(io_err(&tmp))?;
    fs::rename(&tmp, path).map_err(io_err(path))
}

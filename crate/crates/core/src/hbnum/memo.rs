//! Memo store for `B_{N,n}^{(r)}` with an optional line-oriented cache file.
//!
//! File format, one record per line, in any order:
//!
//! ```text
//! N r n num/den
//! ```
//!
//! Blank lines are ignored. Repeated keys must carry the same value.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use rand::seq::IteratorRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

use super::{check_n_param, check_order, hb_higher_row};

/// Index of `B_{N,n}^{(r)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HbKey {
    pub big_n: u64,
    pub r: usize,
    pub n: usize,
}

impl HbKey {
    pub fn new(big_n: u64, r: usize, n: usize) -> Result<Self> {
        check_n_param(big_n)?;
        check_order(r)?;
        Ok(HbKey { big_n, r, n })
    }
}

impl fmt::Display for HbKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} r={} n={}", self.big_n, self.r, self.n)
    }
}

/// Number of entries re-derived when a cache file is loaded.
pub const LOAD_AUDIT_SAMPLE: usize = 3;

/// Thread-safe map `HbKey -> Rational`. Lookups that miss compute the whole
/// `(N, r)` row up to `n` and keep every entry of it.
#[derive(Debug, Default)]
pub struct MemoStore {
    entries: RwLock<HashMap<HbKey, Rational>>,
    path: Option<PathBuf>,
}

impl MemoStore {
    pub fn in_memory() -> Self {
        MemoStore::default()
    }

    /// Store backed by `path`. An existing file is loaded and spot-audited;
    /// a missing one starts empty and is created by [`MemoStore::save`].
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        if path.exists() {
            Self::load(path)
        } else {
            Ok(MemoStore {
                entries: RwLock::default(),
                path: Some(path.to_path_buf()),
            })
        }
    }

    /// Loads an existing cache file and audits a random sample of it.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        let entries = parse_records(&text, path)?;
        let store = MemoStore {
            entries: RwLock::new(entries),
            path: Some(path.to_path_buf()),
        };
        store.audit_sample(LOAD_AUDIT_SAMPLE, &mut rand::thread_rng())?;
        Ok(store)
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn keys(&self) -> Vec<HbKey> {
        let mut keys: Vec<HbKey> = self.read().keys().copied().collect();
        keys.sort();
        keys
    }

    pub fn peek(&self, key: &HbKey) -> Option<Rational> {
        self.read().get(key).cloned()
    }

    /// Cached value, or computes and caches the row `(N, r)` through `n`.
    /// Entries already present are kept as they are.
    pub fn get(&self, key: HbKey) -> Result<Rational> {
        if let Some(v) = self.peek(&key) {
            return Ok(v);
        }
        let row = hb_higher_row(key.big_n, key.r, key.n + 1)?;
        let mut map = self.write();
        for (n, v) in row.into_iter().enumerate() {
            map.entry(HbKey { n, ..key }).or_insert(v);
        }
        Ok(map[&key].clone())
    }

    /// Overwrites one entry, returning the previous value.
    pub fn replace(&self, key: HbKey, value: Rational) -> Option<Rational> {
        self.write().insert(key, value)
    }

    /// Recomputes up to `count` randomly chosen entries.
    pub fn audit_sample<R: Rng>(&self, count: usize, rng: &mut R) -> Result<usize> {
        let chosen = self.keys().into_iter().choose_multiple(rng, count);
        self.audit_keys(&chosen)
    }

    /// Recomputes every entry.
    pub fn audit_all(&self) -> Result<usize> {
        self.audit_keys(&self.keys())
    }

    fn audit_keys(&self, keys: &[HbKey]) -> Result<usize> {
        // one row computation per (N, r)
        let mut rows: HashMap<(u64, usize), usize> = HashMap::new();
        for k in keys {
            let top = rows.entry((k.big_n, k.r)).or_default();
            *top = (*top).max(k.n);
        }
        let mut fresh: HashMap<(u64, usize), Vec<Rational>> = HashMap::new();
        for ((big_n, r), top) in rows {
            fresh.insert((big_n, r), hb_higher_row(big_n, r, top + 1)?);
        }
        let map = self.read();
        for k in keys {
            let cached = &map[k];
            let recomputed = &fresh[&(k.big_n, k.r)][k.n];
            if cached != recomputed {
                return Err(Error::CacheAudit {
                    key: *k,
                    cached: cached.to_string(),
                    recomputed: recomputed.to_string(),
                });
            }
        }
        Ok(keys.len())
    }

    /// Writes all entries, sorted by key, to the backing file (if any).
    pub fn save(&self) -> Result<()> {
        match &self.path {
            Some(p) => self.save_to(p),
            None => Ok(()),
        }
    }

    pub fn save_to(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_records())?;
        Ok(())
    }

    pub fn to_records(&self) -> String {
        let map = self.read();
        let mut keys: Vec<&HbKey> = map.keys().collect();
        keys.sort();
        let mut out = String::new();
        for k in keys {
            out.push_str(&format!("{} {} {} {}\n", k.big_n, k.r, k.n, map[k]));
        }
        out
    }

    fn read(&self) -> std::sync::RwLockReadGuard<'_, HashMap<HbKey, Rational>> {
        self.entries.read().unwrap_or_else(|e| e.into_inner())
    }

    fn write(&self) -> std::sync::RwLockWriteGuard<'_, HashMap<HbKey, Rational>> {
        self.entries.write().unwrap_or_else(|e| e.into_inner())
    }
}

/// Parses cache records; `path` is only used in error messages.
pub fn parse_records(text: &str, path: &Path) -> Result<HashMap<HbKey, Rational>> {
    let mut map: HashMap<HbKey, Rational> = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |reason: String| Error::CacheFormat {
            path: path.to_path_buf(),
            line: idx + 1,
            reason,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [big_n, r, n, value] = fields[..] else {
            return Err(bad(format!("expected 4 fields, found {}", fields.len())));
        };
        let big_n: u64 = big_n.parse().map_err(|_| bad(format!("bad N {big_n:?}")))?;
        let r: usize = r.parse().map_err(|_| bad(format!("bad r {r:?}")))?;
        let n: usize = n.parse().map_err(|_| bad(format!("bad n {n:?}")))?;
        let key = HbKey::new(big_n, r, n).map_err(|e| bad(e.to_string()))?;
        let value: Rational = value.parse().map_err(|e: Error| bad(e.to_string()))?;
        if let Some(prev) = map.get(&key) {
            if *prev != value {
                return Err(Error::CacheConflict {
                    key,
                    first: prev.to_string(),
                    second: value.to_string(),
                });
            }
        } else {
            map.insert(key, value);
        }
    }
    Ok(map)
}

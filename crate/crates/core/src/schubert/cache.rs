//! Append-only store of structure constants.
//!
//! One record per line: `type rank | w | u | v | value`, words as
//! comma-separated 1-based indices and `e` for the identity.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rootsys::CartanType;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub group: CartanType,
    pub w: Vec<usize>,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

pub fn word_text(w: &[usize]) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad word {s:?}"))))
        .collect()
}

impl CacheKey {
    pub fn record(&self, value: &BigInt) -> String {
        format!(
            "{:?} {} | {} | {} | {} | {}",
            self.group.family,
            self.group.rank,
            word_text(&self.w),
            word_text(&self.u),
            word_text(&self.v),
            value
        )
    }

    pub fn parse_record(line: &str) -> Result<(CacheKey, BigInt)> {
        let f: Vec<&str> = line.split('|').collect();
        if f.len() != 5 {
            return Err(Error::Parse(format!("bad cache record {line:?}")));
        }
        let group: CartanType = f[0].split_whitespace().collect::<String>().parse()?;
        let value: BigInt = f[4]
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad cache value in {line:?}")))?;
        Ok((
            CacheKey { group, w: parse_word(f[1])?, u: parse_word(f[2])?, v: parse_word(f[3])? },
            value,
        ))
    }
}

/// Concurrent readers, one writer appending to the backing file.
pub struct ConstantCache {
    map: RwLock<HashMap<CacheKey, BigInt>>,
    writer: Mutex<Option<File>>,
    path: Option<PathBuf>,
}

impl ConstantCache {
    pub fn in_memory() -> Self {
        ConstantCache { map: RwLock::new(HashMap::new()), writer: Mutex::new(None), path: None }
    }

    /// Loads every record of `path` (creating it if missing) and appends new
    /// records to it. A truncated last line is ignored.
    pub fn open(path: &Path) -> Result<Self> {
        let mut map = HashMap::new();
        if path.exists() {
            let f = BufReader::new(File::open(path)?);
            for line in f.lines() {
                let line = line?;
                if line.trim().is_empty() || line.starts_with('#') {
                    continue;
                }
                if let Ok((k, v)) = CacheKey::parse_record(&line) {
                    map.insert(k, v);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(ConstantCache {
            map: RwLock::new(map),
            writer: Mutex::new(Some(file)),
            path: Some(path.to_path_buf()),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, k: &CacheKey) -> Option<BigInt> {
        self.map.read().unwrap().get(k).cloned()
    }

    pub fn insert(&self, k: CacheKey, v: BigInt) -> Result<()> {
        let mut map = self.map.write().unwrap();
        if map.contains_key(&k) {
            return Ok(());
        }
        if let Some(f) = self.writer.lock().unwrap().as_mut() {
            writeln!(f, "{}", k.record(&v))?;
        }
        map.insert(k, v);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn entries(&self) -> Vec<(CacheKey, BigInt)> {
        let mut v: Vec<_> = self.map.read().unwrap().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        v.sort_by(|a, b| a.0.record(&a.1).cmp(&b.0.record(&b.1)));
        v
    }

    pub fn flush(&self) -> Result<()> {
        if let Some(f) = self.writer.lock().unwrap().as_mut() {
            f.flush()?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let k = CacheKey { group: "F4".parse().unwrap(), w: vec![2, 3, 2, 1], u: vec![2, 1], v: vec![] };
        let line = k.record(&BigInt::from(7));
        assert_eq!(line, "F 4 | 2,3,2,1 | 2,1 | e | 7");
        assert_eq!(CacheKey::parse_record(&line).unwrap(), (k, BigInt::from(7)));
    }
}

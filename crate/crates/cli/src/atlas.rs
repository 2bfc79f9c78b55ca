//! The scan atlas: one JSON record per line, appended by a single writer.
//!
//! Each line is written with one `write_all` and flushed, so a crash can only
//! leave a truncated last line. Opening the atlas drops such a line. Records
//! are keyed by `(family, seed, prime)`; a key already present is not
//! written again.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::document::Counts;
use crate::error::{CliError, CliResult};

pub const ATLAS_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRecord {
    pub schema_version: u32,
    pub family: String,
    pub seed: u64,
    pub prime: u64,
    /// `ok` or `error`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<SampleResult>,
}

/// Invariants of one analysed sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleResult {
    pub bidegree: (u32, u32),
    /// Degree and arithmetic genus of `C1` and `C2`.
    pub c1: (i64, i64),
    pub c2: (i64, i64),
    pub genus: u8,
    pub ruled: bool,
    pub deg1part: i64,
    pub isolated_points: usize,
    pub verdict: String,
    pub certificate: i64,
    pub counts: Option<Counts>,
    /// Family found by the classifier.
    pub label: Option<String>,
    pub table_rows: Vec<u32>,
    pub missing_row: Option<String>,
}

pub type AtlasKey = (String, u64, u64);

impl AtlasRecord {
    pub fn key(&self) -> AtlasKey {
        (self.family.clone(), self.seed, self.prime)
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }
}

pub struct Atlas {
    path: PathBuf,
    file: File,
    records: BTreeMap<AtlasKey, AtlasRecord>,
    /// Bytes of a truncated final line removed on open.
    pub repaired_bytes: usize,
}

impl Atlas {
    /// Open or create the atlas, dropping a truncated final line.
    pub fn open(path: &Path) -> CliResult<Atlas> {
        let ioerr = |e| CliError::io(&format!("atlas {}", path.display()), e);
        let mut file = OpenOptions::new().read(true).append(true).create(true).open(path).map_err(ioerr)?;
        let mut text = String::new();
        file.read_to_string(&mut text).map_err(ioerr)?;

        let keep = match text.rfind('\n') {
            Some(i) => i + 1,
            None => 0,
        };
        let repaired_bytes = text.len() - keep;
        if repaired_bytes > 0 {
            file.set_len(keep as u64).map_err(ioerr)?;
            file.seek(SeekFrom::End(0)).map_err(ioerr)?;
        }

        let mut records = BTreeMap::new();
        for (n, line) in text[..keep].lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let rec: AtlasRecord = serde_json::from_str(line).map_err(|e| {
                CliError::parse(format!("atlas {} line {}: {e}", path.display(), n + 1))
            })?;
            records.insert(rec.key(), rec);
        }
        Ok(Atlas { path: path.to_path_buf(), file, records, repaired_bytes })
    }

    pub fn get(&self, key: &AtlasKey) -> Option<&AtlasRecord> {
        self.records.get(key)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Append a record unless its key is present; returns whether it was written.
    pub fn append(&mut self, rec: AtlasRecord) -> CliResult<bool> {
        if self.records.contains_key(&rec.key()) {
            return Ok(false);
        }
        let mut line = serde_json::to_string(&rec).expect("records serialize");
        line.push('\n');
        let ioerr = |e| CliError::io(&format!("atlas {}", self.path.display()), e);
        self.file.write_all(line.as_bytes()).map_err(ioerr)?;
        self.file.flush().map_err(ioerr)?;
        self.records.insert(rec.key(), rec);
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(seed: u64) -> AtlasRecord {
        AtlasRecord {
            schema_version: ATLAS_SCHEMA_VERSION,
            family: "E2".into(),
            seed,
            prime: 1_000_003,
            status: "error".into(),
            error: Some("test".into()),
            result: None,
        }
    }

    #[test]
    fn appends_are_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("atlas.jsonl");
        let mut a = Atlas::open(&path).unwrap();
        assert!(a.append(rec(1)).unwrap());
        assert!(!a.append(rec(1)).unwrap());
        assert!(a.append(rec(2)).unwrap());
        drop(a);
        let a = Atlas::open(&path).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 2);
    }

    #[test]
    fn truncated_line_is_dropped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("atlas.jsonl");
        let mut a = Atlas::open(&path).unwrap();
        a.append(rec(1)).unwrap();
        drop(a);
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        f.write_all(b"{\"schema_version\":1,\"fam").unwrap();
        drop(f);

        let mut a = Atlas::open(&path).unwrap();
        assert_eq!(a.repaired_bytes, 24);
        assert_eq!(a.len(), 1);
        a.append(rec(2)).unwrap();
        drop(a);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().all(|l| serde_json::from_str::<AtlasRecord>(l).is_ok()));
    }
}

//! Persistent store of exact sigma values.
//!
//! One JSON object per line:
//!
//! ```text
//! {"graph6":"Bw","n":6,"value":12,"extremal":"5,1,1,1,1,1","method":"exhaustive","timestamp":1760000000}
//! ```
//!
//! Later lines override earlier ones with the same key. Writers must be
//! serialized by the caller; any number of readers may load concurrently.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{Method, SigmaRecord};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::sequence::DegreeSequence;

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "POTSEQ_CACHE";

/// Largest order canonicalized by trying every relabelling.
pub const CANONICAL_MAX_ORDER: usize = 8;

/// Isomorphism-invariant representative: among all relabellings, the one
/// whose graph6 bit string is largest. Graphs above
/// [`CANONICAL_MAX_ORDER`] vertices are returned unchanged.
pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    let n = g.order();
    if !(2..=CANONICAL_MAX_ORDER).contains(&n) {
        return g.clone();
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // bit position of (i, j), i < j, in graph6 order, most significant first
    let slots = n * (n - 1) / 2;
    let bit = |i: usize, j: usize| -> u64 {
        let (i, j) = (i.min(j), i.max(j));
        1 << (slots - 1 - (j * (j - 1) / 2 + i))
    };
    let best = (0..n)
        .permutations(n)
        .max_by_key(|perm| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | bit(perm[u], perm[v]))
        })
        .expect("at least one permutation");
    // max_by_key keeps the last maximum; any maximizer gives the same graph
    g.relabel(&best)
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheLine {
    graph6: String,
    n: usize,
    value: usize,
    extremal: Option<DegreeSequence>,
    method: Method,
    timestamp: u64,
}

type Key = (String, usize, Method);

#[derive(Debug, Default)]
pub struct SigmaCache {
    path: Option<PathBuf>,
    records: BTreeMap<Key, SigmaRecord>,
}

impl SigmaCache {
    /// A cache that is never written to disk.
    pub fn in_memory() -> Self {
        SigmaCache::default()
    }

    /// Reads `path`. A missing file is an empty cache.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == ErrorKind::NotFound => String::new(),
            Err(e) => {
                return Err(Error::CorruptCache {
                    path,
                    line: 0,
                    reason: e.to_string(),
                })
            }
        };
        let mut records = BTreeMap::new();
        for (k, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let corrupt = |reason: String| Error::CorruptCache {
                path: path.clone(),
                line: k + 1,
                reason,
            };
            let parsed: CacheLine =
                serde_json::from_str(line).map_err(|e| corrupt(e.to_string()))?;
            let target =
                SimpleGraph::from_graph6(&parsed.graph6).map_err(|e| corrupt(e.to_string()))?;
            let record = SigmaRecord {
                target,
                n: parsed.n,
                value: parsed.value,
                extremal: parsed.extremal,
                method: parsed.method,
            };
            record.validate().map_err(corrupt)?;
            records.insert((parsed.graph6, parsed.n, parsed.method), record);
        }
        Ok(SigmaCache {
            path: Some(path),
            records,
        })
    }

    /// Like [`SigmaCache::load`], but a corrupt store is reported and then
    /// treated as empty. Writes still go to `path`.
    pub fn load_or_empty(path: impl AsRef<Path>) -> (Self, Option<Error>) {
        match Self::load(&path) {
            Ok(cache) => (cache, None),
            Err(e) => (
                SigmaCache {
                    path: Some(path.as_ref().to_path_buf()),
                    records: BTreeMap::new(),
                },
                Some(e),
            ),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Looks up sigma(target, n); the target may use any labelling.
    pub fn get(&self, target: &SimpleGraph, n: usize, method: Method) -> Option<&SigmaRecord> {
        let key = canonical_form(target).to_graph6();
        self.records.get(&(key, n, method))
    }

    /// Stores `record`, appending a line to the backing file if there is one.
    pub fn put(&mut self, record: SigmaRecord) -> Result<()> {
        let canonical = canonical_form(&record.target);
        let graph6 = canonical.to_graph6();
        if let Some(path) = &self.path {
            let line = CacheLine {
                graph6: graph6.clone(),
                n: record.n,
                value: record.value,
                extremal: record.extremal.clone(),
                method: record.method,
                timestamp: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            };
            let io = |e: std::io::Error| Error::Io {
                path: path.clone(),
                reason: e.to_string(),
            };
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(io)?;
            let text = serde_json::to_string(&line).expect("cache lines serialize");
            writeln!(file, "{text}").map_err(io)?;
        }
        let key = (graph6, record.n, record.method);
        self.records.insert(
            key,
            SigmaRecord {
                target: canonical,
                ..record
            },
        );
        Ok(())
    }
}

//! Resumable survey of every pair with `n <= n_max`, backed by an
//! append-only JSON Lines cache.
//!
//! Records are appended in canonical order: `n` ascending, then `k`, then
//! pairs as [`all_pairs`] lists them. A torn final line (no newline, not
//! valid JSON) is dropped on load; any other bad line is an error carrying
//! its line number.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atomic::{atomic_witness, canonical_rotation, is_atomic};
use crate::error::{Error, Result};
use crate::io::{parse_column_set, parse_siteswap};
use crate::permcore::{all_pairs, PositroidPair};
use crate::smooth::{smooth_with, Method, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub k: usize,
    pub n: usize,
    pub f: String,
    pub lambda: String,
    pub status: Status,
    pub multiplicity: usize,
    pub atomic: bool,
    /// An atomic pair below a singular one, as `(f, lambda)`.
    pub witness: Option<String>,
}

type Key = (usize, usize, String, String);

impl SurveyRecord {
    fn key(&self) -> Key {
        (self.k, self.n, self.f.clone(), self.lambda.clone())
    }

    pub fn pair(&self) -> Result<PositroidPair> {
        let f = parse_siteswap(&self.f)?;
        let lambda = parse_column_set(&self.lambda, self.n)?;
        PositroidPair::new(f, lambda)
    }
}

fn key_of(p: &PositroidPair) -> Key {
    (p.k(), p.n(), p.f.to_string(), p.lambda.to_string())
}

/// Every pair on its variety with `1 <= n <= n_max`, in canonical order.
pub fn survey_pairs(n_max: usize) -> Vec<PositroidPair> {
    (1..=n_max).flat_map(|n| (0..=n).flat_map(move |k| all_pairs(n, k))).collect()
}

/// Status and multiplicity (all methods must agree), atomicity and witness.
pub fn evaluate(pair: &PositroidPair) -> Result<SurveyRecord> {
    let v = smooth_with(&pair.f, &pair.lambda, Method::All)?;
    let singular = v.status == Status::Singular;
    Ok(SurveyRecord {
        k: pair.k(),
        n: pair.n(),
        f: pair.f.to_string(),
        lambda: pair.lambda.to_string(),
        status: v.status,
        multiplicity: v.multiplicity.unwrap_or(0),
        atomic: singular && is_atomic(pair)?,
        witness: if singular { atomic_witness(pair)?.map(|w| w.to_string()) } else { None },
    })
}

/// Reads the cache. Returns the records and the byte length of the valid
/// prefix (shorter than the file only when the last line was torn).
pub fn load_cache(path: &Path) -> Result<(Vec<SurveyRecord>, u64)> {
    let mut text = String::new();
    match File::open(path) {
        Ok(mut f) => {
            f.read_to_string(&mut text).map_err(|e| Error::CacheCorrupt { line: 0, msg: e.to_string() })?;
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((Vec::new(), 0)),
        Err(e) => return Err(e.into()),
    }
    let mut records = Vec::new();
    let mut valid = 0u64;
    let mut offset = 0usize;
    for (i, line) in text.split_inclusive('\n').enumerate() {
        let complete = line.ends_with('\n');
        let body = line.trim_end_matches('\n');
        offset += line.len();
        if body.trim().is_empty() && complete {
            valid = offset as u64;
            continue;
        }
        let parsed = serde_json::from_str::<SurveyRecord>(body)
            .map_err(|e| e.to_string())
            .and_then(|r| r.pair().map(|_| r).map_err(|e| e.to_string()));
        match parsed {
            Ok(r) if complete => {
                records.push(r);
                valid = offset as u64;
            }
            Err(_) if !complete => break,
            Ok(_) => break,
            Err(msg) => return Err(Error::CacheCorrupt { line: i + 1, msg }),
        }
    }
    Ok((records, valid))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub k: usize,
    pub n: usize,
    pub pairs: usize,
    pub smooth: usize,
    pub singular: usize,
    pub atomic: usize,
    /// Atomic pairs up to cyclic rotation.
    pub atomic_orbits: usize,
}

/// Per-`(k, n)` counts over the records, in `(n, k)` order.
pub fn summarize(records: &[SurveyRecord]) -> Result<Vec<SummaryRow>> {
    let mut rows: BTreeMap<(usize, usize), SummaryRow> = BTreeMap::new();
    let mut orbits: BTreeMap<(usize, usize), std::collections::BTreeSet<String>> = BTreeMap::new();
    for r in records {
        let row = rows.entry((r.n, r.k)).or_insert_with(|| SummaryRow { k: r.k, n: r.n, ..Default::default() });
        row.pairs += 1;
        match r.status {
            Status::Smooth => row.smooth += 1,
            Status::Singular => row.singular += 1,
            Status::NotOnVariety => {}
        }
        if r.atomic {
            row.atomic += 1;
            orbits.entry((r.n, r.k)).or_default().insert(canonical_rotation(&r.pair()?).to_string());
        }
    }
    for (key, set) in orbits {
        rows.get_mut(&key).expect("row exists").atomic_orbits = set.len();
    }
    Ok(rows.into_values().collect())
}

pub fn summary_table(rows: &[SummaryRow]) -> String {
    let mut s = String::from("  n  k   pairs  smooth  singular  atomic  orbits\n");
    for r in rows {
        writeln!(s, "{:>3}{:>3}{:>8}{:>8}{:>10}{:>8}{:>8}", r.n, r.k, r.pairs, r.smooth, r.singular, r.atomic, r.atomic_orbits).unwrap();
    }
    s
}

pub struct SurveyOutcome {
    /// Records for every pair with `n <= n_max`, in canonical order.
    pub records: Vec<SurveyRecord>,
    pub computed: usize,
    pub reused: usize,
}

const CHUNK: usize = 512;

/// Evaluates every pair not yet in the cache, appending results in
/// canonical order from a single writer. Safe to interrupt and rerun.
pub fn run_survey(n_max: usize, cache: &Path) -> Result<SurveyOutcome> {
    let (cached, valid) = load_cache(cache)?;
    let mut have: HashMap<Key, SurveyRecord> = HashMap::with_capacity(cached.len());
    for r in cached {
        have.entry(r.key()).or_insert(r);
    }
    let pairs = survey_pairs(n_max);
    let todo: Vec<&PositroidPair> = pairs.iter().filter(|p| !have.contains_key(&key_of(p))).collect();
    let computed = todo.len();

    let file = OpenOptions::new().create(true).write(true).truncate(false).open(cache)?;
    file.set_len(valid)?;
    let mut out = BufWriter::new(OpenOptions::new().append(true).open(cache)?);
    drop(file);
    for chunk in todo.chunks(CHUNK) {
        let fresh: Vec<SurveyRecord> = chunk.par_iter().map(|p| evaluate(p)).collect::<Result<_>>()?;
        for r in fresh {
            let line = serde_json::to_string(&r).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out, "{line}")?;
            have.insert(r.key(), r);
        }
        out.flush()?;
    }
    let records: Vec<SurveyRecord> = pairs.iter().map(|p| have[&key_of(p)].clone()).collect();
    Ok(SurveyOutcome { reused: records.len() - computed, records, computed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resume_after_torn_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let full = run_survey(4, &path).unwrap();
        assert_eq!(full.reused, 0);
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() * 2 / 3]).unwrap();
        let again = run_survey(4, &path).unwrap();
        assert!(again.computed > 0 && again.reused > 0);
        assert_eq!(again.records, full.records);
        assert_eq!(std::fs::read(&path).unwrap(), bytes);
    }

    #[test]
    fn corrupt_line_is_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        run_survey(3, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines: Vec<&str> = text.lines().collect();
        lines[4] = "{\"k\": oops}";
        std::fs::write(&path, lines.join("\n") + "\n").unwrap();
        assert!(matches!(run_survey(3, &path), Err(Error::CacheCorrupt { line: 5, .. })));
    }
}

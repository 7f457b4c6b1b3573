use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::extract::VerbObjectPair;

/// Per-nominal verb counts: how often each verb took the nominal as its
/// direct object. Zero entries are absent; every stored count is >= 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalTable {
    counts: BTreeMap<String, BTreeMap<String, u64>>,
    totals: BTreeMap<String, u64>,
}

impl LocalTable {
    pub fn new() -> Self {
        LocalTable::default()
    }

    pub fn add(&mut self, nominal: &str, verb: &str, n: u64) {
        if n == 0 {
            return;
        }
        *self
            .counts
            .entry(nominal.to_string())
            .or_default()
            .entry(verb.to_string())
            .or_insert(0) += n;
        *self.totals.entry(nominal.to_string()).or_insert(0) += n;
    }

    pub fn count(&self, nominal: &str, verb: &str) -> u64 {
        self.counts
            .get(nominal)
            .and_then(|m| m.get(verb))
            .copied()
            .unwrap_or(0)
    }

    /// Total pair count for one nominal.
    pub fn total(&self, nominal: &str) -> u64 {
        self.totals.get(nominal).copied().unwrap_or(0)
    }

    pub fn nominals(&self) -> impl Iterator<Item = &str> {
        self.counts.keys().map(|s| s.as_str())
    }

    pub fn verbs_for(&self, nominal: &str) -> impl Iterator<Item = (&str, u64)> {
        self.counts
            .get(nominal)
            .into_iter()
            .flat_map(|m| m.iter().map(|(v, c)| (v.as_str(), *c)))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Drops (nominal, verb) cells below `min_count` and recomputes totals.
    pub fn apply_min_count(&self, min_count: u64) -> LocalTable {
        if min_count <= 1 {
            return self.clone();
        }
        let mut out = LocalTable::new();
        for (nominal, verbs) in &self.counts {
            for (verb, count) in verbs {
                if *count >= min_count {
                    out.add(nominal, verb, *count);
                }
            }
        }
        out
    }

    /// TSV dump: `nominal verb count`, sorted by nominal, then count
    /// descending, then verb.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (nominal, verbs) in &self.counts {
            let mut rows: Vec<(&String, &u64)> = verbs.iter().collect();
            rows.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
            for (verb, count) in rows {
                out.push_str(&format!("{nominal}\t{verb}\t{count}\n"));
            }
        }
        out
    }

    pub fn write_tsv(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_tsv()).map_err(|e| Error::io(path, e))
    }

    pub fn read_tsv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut table = LocalTable::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: i + 1,
                    msg: format!("expected 3 tab-separated columns, got {}", cols.len()),
                });
            }
            let count: u64 = cols[2].parse().map_err(|_| Error::MalformedLine {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!("bad count {:?}", cols[2]),
            })?;
            table.add(cols[0], cols[1], count);
        }
        Ok(table)
    }
}

/// Corpus-wide verb counts with their grand total.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GlobalTable {
    counts: BTreeMap<String, u64>,
    grand_total: u64,
}

impl GlobalTable {
    pub fn new() -> Self {
        GlobalTable::default()
    }

    pub fn add(&mut self, verb: &str, n: u64) {
        if n == 0 {
            return;
        }
        *self.counts.entry(verb.to_string()).or_insert(0) += n;
        self.grand_total += n;
    }

    pub fn count(&self, verb: &str) -> u64 {
        self.counts.get(verb).copied().unwrap_or(0)
    }

    pub fn grand_total(&self) -> u64 {
        self.grand_total
    }

    pub fn verbs(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(v, c)| (v.as_str(), *c))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// TSV dump: `verb count`, sorted by count descending then verb.
    pub fn to_tsv(&self) -> String {
        let mut rows: Vec<(&String, &u64)> = self.counts.iter().collect();
        rows.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
        let mut out = String::new();
        for (verb, count) in rows {
            out.push_str(&format!("{verb}\t{count}\n"));
        }
        out
    }

    pub fn write_tsv(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_tsv()).map_err(|e| Error::io(path, e))
    }

    pub fn read_tsv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut table = GlobalTable::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 2 {
                return Err(Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: i + 1,
                    msg: format!("expected 2 tab-separated columns, got {}", cols.len()),
                });
            }
            let count: u64 = cols[1].parse().map_err(|_| Error::MalformedLine {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!("bad count {:?}", cols[1]),
            })?;
            table.add(cols[0], count);
        }
        Ok(table)
    }
}

/// Counts pairs into a local table. When a non-empty nominal filter is
/// given, only pairs whose object is in the filter are counted.
pub fn build_local_table(
    pairs: &[VerbObjectPair],
    nominal_filter: Option<&BTreeSet<String>>,
) -> LocalTable {
    let filter = nominal_filter.filter(|f| !f.is_empty());
    let mut table = LocalTable::new();
    for pair in pairs {
        if filter.is_none_or(|f| f.contains(&pair.object_lemma)) {
            table.add(&pair.object_lemma, &pair.verb_lemma, 1);
        }
    }
    table
}

/// Global counts as the aggregate of the local data.
pub fn aggregate_global(local: &LocalTable) -> GlobalTable {
    let mut global = GlobalTable::new();
    for verbs in local.counts.values() {
        for (verb, count) in verbs {
            global.add(verb, *count);
        }
    }
    global
}

/// Global counts over every verb-object pair regardless of the nominal
/// filter (the all-objects mode).
pub fn global_from_pairs(pairs: &[VerbObjectPair]) -> GlobalTable {
    let mut global = GlobalTable::new();
    for pair in pairs {
        global.add(&pair.verb_lemma, 1);
    }
    global
}

/// Pointwise sum of two local tables.
pub fn merge_tables(a: &LocalTable, b: &LocalTable) -> LocalTable {
    let mut out = a.clone();
    for (nominal, verbs) in &b.counts {
        for (verb, count) in verbs {
            out.add(nominal, verb, *count);
        }
    }
    out
}

/// A ranked support-verb candidate for one nominal.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub verb_lemma: String,
    pub local_count: u64,
    pub local_rf: f64,
    pub global_rf: f64,
    /// local_rf * global_rf, computed once; the ranking score.
    pub adjusted: f64,
    /// 1-based position in the ranked list.
    pub rank: usize,
}

/// Ranks every verb seen with `nominal` by the product of its local and
/// global relative frequencies, descending. Ties break on higher local
/// count, then verb order. A nominal with no pairs yields an empty list.
pub fn rank_candidates(local: &LocalTable, global: &GlobalTable, nominal: &str) -> Vec<Candidate> {
    let total = local.total(nominal);
    let grand = global.grand_total();
    if total == 0 || grand == 0 {
        return Vec::new();
    }
    let mut candidates: Vec<Candidate> = local
        .verbs_for(nominal)
        .map(|(verb, count)| {
            let local_rf = count as f64 / total as f64;
            let global_rf = global.count(verb) as f64 / grand as f64;
            Candidate {
                verb_lemma: verb.to_string(),
                local_count: count,
                local_rf,
                global_rf,
                adjusted: local_rf * global_rf,
                rank: 0,
            }
        })
        .collect();
    candidates.sort_by(|a, b| {
        b.adjusted
            .partial_cmp(&a.adjusted)
            .expect("relative frequencies are finite")
            .then_with(|| b.local_count.cmp(&a.local_count))
            .then_with(|| a.verb_lemma.cmp(&b.verb_lemma))
    });
    for (i, c) in candidates.iter_mut().enumerate() {
        c.rank = i + 1;
    }
    candidates
}

/// Adjusted frequency of the first choice over the second; None with
/// fewer than two candidates.
pub fn choice_ratio(ranked: &[Candidate]) -> Option<f64> {
    match ranked {
        [first, second, ..] => Some(first.adjusted / second.adjusted),
        _ => None,
    }
}

/// Ranked list dump: `nominal rank verb local_count local_rf global_rf
/// adjusted`.
pub fn ranked_to_tsv(nominal: &str, ranked: &[Candidate]) -> String {
    let mut out = String::new();
    for c in ranked {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.6}\t{:.6}\t{:.6}\n",
            nominal, c.rank, c.verb_lemma, c.local_count, c.local_rf, c.global_rf, c.adjusted
        ));
    }
    out
}

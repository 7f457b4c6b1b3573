use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;

use crate::corpus::Sentence;
use crate::error::{Error, Result};
use crate::tags::TagClasses;

/// Where a lexicon entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Source {
    Builtin,
    Heuristic,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Builtin => write!(f, "builtin"),
            Source::Heuristic => write!(f, "heuristic"),
        }
    }
}

/// Review status of a (noun, stem verb) pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Confirmed,
    Candidate,
    Rejected,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Confirmed => write!(f, "confirmed"),
            Status::Candidate => write!(f, "candidate"),
            Status::Rejected => write!(f, "rejected"),
        }
    }
}

/// A deverbal nominalization paired with its stem verb.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NominalEntry {
    pub noun_lemma: String,
    pub stem_verb_lemma: String,
    pub source: Source,
    pub status: Status,
}

/// Which entries a lookup should see.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LexiconView {
    /// Confirmed entries only (the default).
    #[default]
    Confirmed,
    /// Confirmed plus unreviewed candidates.
    WithCandidates,
}

impl LexiconView {
    fn admits(self, status: Status) -> bool {
        match self {
            LexiconView::Confirmed => status == Status::Confirmed,
            LexiconView::WithCandidates => {
                matches!(status, Status::Confirmed | Status::Candidate)
            }
        }
    }
}

/// One orthographic noun-to-verb rewrite used by the derivation heuristic.
#[derive(Debug, Clone)]
pub struct OrthoRule {
    pub noun_suffix: &'static str,
    pub verb_replacement: &'static str,
    pub rule_id: &'static str,
}

/// The default rewrite table. Longest suffixes first; a noun may match
/// several rules and so propose several stems. Every proposed stem is
/// checked against the verb list, so over-generation is filtered out there
/// or by the manual filter file.
pub fn default_ortho_rules() -> Vec<OrthoRule> {
    fn r(
        noun_suffix: &'static str,
        verb_replacement: &'static str,
        rule_id: &'static str,
    ) -> OrthoRule {
        OrthoRule {
            noun_suffix,
            verb_replacement,
            rule_id,
        }
    }
    vec![
        r("ation", "ate", "ation-ate"),
        r("ation", "e", "ation-e"),
        r("ance", "", "ance-drop"),
        r("ance", "e", "ance-e"),
        r("ence", "", "ence-drop"),
        r("ence", "e", "ence-e"),
        r("ment", "", "ment-drop"),
        r("ment", "e", "ment-e"),
        r("ion", "", "ion-drop"),
        r("ion", "e", "ion-e"),
        r("ing", "", "ing-drop"),
        r("ing", "e", "ing-e"),
        r("age", "", "age-drop"),
        r("ure", "e", "ure-e"),
        r("ery", "", "ery-drop"),
        r("al", "e", "al-e"),
        r("al", "", "al-drop"),
        r("", "", "zero"),
    ]
}

/// The nominalization lexicon: unique (noun, stem verb) pairs with source
/// and review status.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<(String, String), NominalEntry>,
}

impl Lexicon {
    pub fn new() -> Self {
        Lexicon::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = NominalEntry>) -> Self {
        let mut lexicon = Lexicon::new();
        lexicon.add_all(entries);
        lexicon
    }

    /// Inserts entries, deduplicating on the (noun, verb) pair. When the
    /// same pair arrives from both sources, builtin/confirmed wins.
    pub fn add_all(&mut self, entries: impl IntoIterator<Item = NominalEntry>) {
        for e in entries {
            let key = (e.noun_lemma.clone(), e.stem_verb_lemma.clone());
            match self.entries.get(&key) {
                Some(existing)
                    if existing.source == Source::Builtin || existing.status == Status::Confirmed =>
                {
                    continue
                }
                _ => {
                    self.entries.insert(key, e);
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &NominalEntry> {
        self.entries.values()
    }

    pub fn get(&self, noun: &str, verb: &str) -> Option<&NominalEntry> {
        self.entries.get(&(noun.to_string(), verb.to_string()))
    }

    /// Stem verbs recorded for a noun under the given view; empty when the
    /// noun is absent.
    pub fn lookup(&self, noun: &str, view: LexiconView) -> BTreeSet<String> {
        self.entries
            .values()
            .filter(|e| e.noun_lemma == noun && view.admits(e.status))
            .map(|e| e.stem_verb_lemma.clone())
            .collect()
    }

    /// All nouns visible under the view.
    pub fn nouns(&self, view: LexiconView) -> BTreeSet<String> {
        self.entries
            .values()
            .filter(|e| view.admits(e.status))
            .map(|e| e.noun_lemma.clone())
            .collect()
    }

    pub fn contains_noun(&self, noun: &str, view: LexiconView) -> bool {
        self.entries
            .values()
            .any(|e| e.noun_lemma == noun && view.admits(e.status))
    }

    /// Applies a manual filter file (`noun<TAB>verb<TAB>accept|reject`).
    /// Listed pairs become confirmed or rejected; unlisted candidates stay
    /// candidates. Lines naming an absent pair produce warnings, not
    /// errors. Returns the warnings.
    pub fn apply_filter(&mut self, path: impl AsRef<Path>) -> Result<Vec<String>> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut warnings = Vec::new();
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
            let status = match cols[2] {
                "accept" => Status::Confirmed,
                "reject" => Status::Rejected,
                other => {
                    return Err(Error::MalformedLine {
                        path: path.to_path_buf(),
                        line: i + 1,
                        msg: format!("expected \"accept\" or \"reject\", got {other:?}"),
                    })
                }
            };
            let key = (cols[0].to_lowercase(), cols[1].to_lowercase());
            match self.entries.get_mut(&key) {
                Some(entry) => entry.status = status,
                None => warnings.push(format!(
                    "{}:{}: no candidate ({}, {})",
                    path.display(),
                    i + 1,
                    key.0,
                    key.1
                )),
            }
        }
        Ok(warnings)
    }

    /// Writes the lexicon as sorted TSV: `noun verb source status`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in self.entries.values() {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                e.noun_lemma, e.stem_verb_lemma, e.source, e.status
            ));
        }
        out
    }

    pub fn write_tsv(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_tsv()).map_err(|e| Error::io(path, e))
    }

    /// Reads a lexicon previously written by `write_tsv`.
    pub fn read_tsv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 {
                return Err(Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: i + 1,
                    msg: format!("expected 4 tab-separated columns, got {}", cols.len()),
                });
            }
            let source = match cols[2] {
                "builtin" => Source::Builtin,
                "heuristic" => Source::Heuristic,
                other => {
                    return Err(Error::MalformedLine {
                        path: path.to_path_buf(),
                        line: i + 1,
                        msg: format!("unknown source {other:?}"),
                    })
                }
            };
            let status = match cols[3] {
                "confirmed" => Status::Confirmed,
                "candidate" => Status::Candidate,
                "rejected" => Status::Rejected,
                other => {
                    return Err(Error::MalformedLine {
                        path: path.to_path_buf(),
                        line: i + 1,
                        msg: format!("unknown status {other:?}"),
                    })
                }
            };
            entries.push(NominalEntry {
                noun_lemma: cols[0].to_string(),
                stem_verb_lemma: cols[1].to_string(),
                source,
                status,
            });
        }
        Ok(Lexicon::from_entries(entries))
    }
}

/// Loads the builtin nominalization list: TSV `noun<TAB>verb` rows, loaded
/// as confirmed entries with duplicates collapsed.
pub fn load_builtin(path: impl AsRef<Path>) -> Result<Vec<NominalEntry>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 2 || cols[0].is_empty() || cols[1].is_empty() {
            return Err(Error::MalformedLine {
                path: path.to_path_buf(),
                line: i + 1,
                msg: "expected noun<TAB>verb".to_string(),
            });
        }
        let key = (cols[0].to_lowercase(), cols[1].to_lowercase());
        if seen.insert(key.clone()) {
            entries.push(NominalEntry {
                noun_lemma: key.0,
                stem_verb_lemma: key.1,
                source: Source::Builtin,
                status: Status::Confirmed,
            });
        }
    }
    Ok(entries)
}

/// Proposes (noun, stem verb) candidates by applying the orthographic
/// rules to every noun and keeping stems that exist in the verb list.
/// Output is canonically sorted by (noun, verb), one entry per pair.
pub fn derive_candidates(
    nouns: &BTreeSet<String>,
    verbs: &BTreeSet<String>,
    rules: &[OrthoRule],
) -> Vec<NominalEntry> {
    let mut pairs = BTreeSet::new();
    for noun in nouns {
        for rule in rules {
            let Some(stem) = noun.strip_suffix(rule.noun_suffix) else {
                continue;
            };
            if stem.is_empty() && !rule.noun_suffix.is_empty() {
                continue;
            }
            let candidate = format!("{stem}{}", rule.verb_replacement);
            if verbs.contains(&candidate) {
                pairs.insert((noun.clone(), candidate));
            }
        }
    }
    pairs
        .into_iter()
        .map(|(noun_lemma, stem_verb_lemma)| NominalEntry {
            noun_lemma,
            stem_verb_lemma,
            source: Source::Heuristic,
            status: Status::Candidate,
        })
        .collect()
}

/// Collects the noun and verb lemma vocabularies of a parsed corpus, for
/// use as derivation input.
pub fn harvest_vocabulary(
    sentences: &[Sentence],
    classes: &TagClasses,
) -> (BTreeSet<String>, BTreeSet<String>) {
    let mut nouns = BTreeSet::new();
    let mut verbs = BTreeSet::new();
    for s in sentences {
        for t in &s.tokens {
            if classes.is_noun(&t.tag) {
                nouns.insert(t.lemma.clone());
            } else if classes.is_verb(&t.tag) {
                verbs.insert(t.lemma.clone());
            }
        }
    }
    (nouns, verbs)
}

//! Python bindings for the support-verb identification pipeline.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lightverbs as lv;
use lightverbs::{CorpusParser, LemmaRules, TagClasses};

fn to_py_err(e: lv::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parser(skip_malformed: bool) -> CorpusParser {
    static STRICT: OnceLock<CorpusParser> = OnceLock::new();
    static LENIENT: OnceLock<CorpusParser> = OnceLock::new();
    let cell = if skip_malformed { &LENIENT } else { &STRICT };
    cell.get_or_init(|| {
        CorpusParser::new(TagClasses::penn(), LemmaRules::english()).skip_malformed(skip_malformed)
    })
    .clone()
}

/// A parsed tagged corpus.
#[pyclass]
struct Corpus {
    sentences: Vec<lv::Sentence>,
    #[pyo3(get)]
    skipped_tokens: usize,
}

#[pymethods]
impl Corpus {
    fn __len__(&self) -> usize {
        self.sentences.len()
    }

    fn __repr__(&self) -> String {
        format!("Corpus({} sentences)", self.sentences.len())
    }

    /// Sentences re-serialized to surface/TAG lines.
    fn lines(&self) -> Vec<String> {
        self.sentences.iter().map(|s| s.to_line()).collect()
    }

    /// Proportion of content words among non-punctuation tokens.
    fn lexical_density(&self) -> PyResult<f64> {
        lv::lexical_density(
            &self.sentences,
            &TagClasses::penn(),
            &lv::default_aux_stoplist(),
        )
        .map_err(to_py_err)
    }
}

/// A verb and its direct-object noun, with provenance.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Pair {
    #[pyo3(get)]
    sentence_id: usize,
    #[pyo3(get)]
    verb: String,
    #[pyo3(get)]
    object: String,
    #[pyo3(get)]
    verb_index: usize,
    #[pyo3(get)]
    object_index: usize,
}

#[pymethods]
impl Pair {
    fn __repr__(&self) -> String {
        format!(
            "Pair(sentence_id={}, verb={:?}, object={:?})",
            self.sentence_id, self.verb, self.object
        )
    }
}

impl From<lv::VerbObjectPair> for Pair {
    fn from(p: lv::VerbObjectPair) -> Self {
        Pair {
            sentence_id: p.sentence_id,
            verb: p.verb_lemma,
            object: p.object_lemma,
            verb_index: p.verb_index,
            object_index: p.object_index,
        }
    }
}

impl From<&Pair> for lv::VerbObjectPair {
    fn from(p: &Pair) -> Self {
        lv::VerbObjectPair {
            sentence_id: p.sentence_id,
            verb_index: p.verb_index,
            object_index: p.object_index,
            verb_lemma: p.verb.clone(),
            object_lemma: p.object.clone(),
        }
    }
}

/// A ranked support-verb candidate.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Candidate {
    #[pyo3(get)]
    verb: String,
    #[pyo3(get)]
    local_count: u64,
    #[pyo3(get)]
    local_rf: f64,
    #[pyo3(get)]
    global_rf: f64,
    #[pyo3(get)]
    adjusted: f64,
    #[pyo3(get)]
    rank: usize,
}

#[pymethods]
impl Candidate {
    #[new]
    #[pyo3(signature = (verb, adjusted, rank=1, local_count=1, local_rf=0.0, global_rf=0.0))]
    fn new(
        verb: String,
        adjusted: f64,
        rank: usize,
        local_count: u64,
        local_rf: f64,
        global_rf: f64,
    ) -> Self {
        Candidate {
            verb,
            local_count,
            local_rf,
            global_rf,
            adjusted,
            rank,
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "Candidate(rank={}, verb={:?}, adjusted={:.6})",
            self.rank, self.verb, self.adjusted
        )
    }
}

impl From<lv::Candidate> for Candidate {
    fn from(c: lv::Candidate) -> Self {
        Candidate {
            verb: c.verb_lemma,
            local_count: c.local_count,
            local_rf: c.local_rf,
            global_rf: c.global_rf,
            adjusted: c.adjusted,
            rank: c.rank,
        }
    }
}

impl From<&Candidate> for lv::Candidate {
    fn from(c: &Candidate) -> Self {
        lv::Candidate {
            verb_lemma: c.verb.clone(),
            local_count: c.local_count,
            local_rf: c.local_rf,
            global_rf: c.global_rf,
            adjusted: c.adjusted,
            rank: c.rank,
        }
    }
}

/// Local and global frequency tables.
#[pyclass]
struct FreqTables {
    local: lv::LocalTable,
    global: lv::GlobalTable,
}

#[pymethods]
impl FreqTables {
    /// Nominals present in the local table.
    fn nominals(&self) -> Vec<String> {
        self.local.nominals().map(|n| n.to_string()).collect()
    }

    fn local_count(&self, nominal: &str, verb: &str) -> u64 {
        self.local.count(nominal, verb)
    }

    fn global_count(&self, verb: &str) -> u64 {
        self.global.count(verb)
    }

    #[getter]
    fn grand_total(&self) -> u64 {
        self.global.grand_total()
    }

    /// Candidates for one nominal, ranked by adjusted frequency.
    fn rank(&self, nominal: &str) -> Vec<Candidate> {
        lv::rank_candidates(&self.local, &self.global, nominal)
            .into_iter()
            .map(Candidate::from)
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "FreqTables({} nominals, grand_total={})",
            self.local.nominals().count(),
            self.global.grand_total()
        )
    }
}

/// The nominalization lexicon.
#[pyclass]
struct Lexicon {
    inner: lv::Lexicon,
}

fn view(include_candidates: bool) -> lv::LexiconView {
    if include_candidates {
        lv::LexiconView::WithCandidates
    } else {
        lv::LexiconView::Confirmed
    }
}

#[pymethods]
impl Lexicon {
    /// Load a builtin TSV list of noun<TAB>verb pairs (confirmed entries).
    #[staticmethod]
    fn from_builtin(path: &str) -> PyResult<Self> {
        Ok(Lexicon {
            inner: lv::Lexicon::from_entries(lv::load_builtin(path).map_err(to_py_err)?),
        })
    }

    /// Derive candidate entries from noun and verb lemma lists.
    #[staticmethod]
    fn derive(nouns: Vec<String>, verbs: Vec<String>) -> Self {
        let nouns: BTreeSet<String> = nouns.into_iter().collect();
        let verbs: BTreeSet<String> = verbs.into_iter().collect();
        Lexicon {
            inner: lv::Lexicon::from_entries(lv::derive_candidates(
                &nouns,
                &verbs,
                &lv::default_ortho_rules(),
            )),
        }
    }

    /// Merge entries from a builtin file into this lexicon.
    fn add_builtin(&mut self, path: &str) -> PyResult<()> {
        self.inner
            .add_all(lv::load_builtin(path).map_err(to_py_err)?);
        Ok(())
    }

    /// Apply a manual accept/reject filter file; returns warnings.
    fn apply_filter(&mut self, path: &str) -> PyResult<Vec<String>> {
        self.inner.apply_filter(path).map_err(to_py_err)
    }

    /// Stem verbs recorded for a noun.
    #[pyo3(signature = (noun, include_candidates=false))]
    fn lookup(&self, noun: &str, include_candidates: bool) -> Vec<String> {
        self.inner
            .lookup(noun, view(include_candidates))
            .into_iter()
            .collect()
    }

    #[pyo3(signature = (include_candidates=false))]
    fn nouns(&self, include_candidates: bool) -> Vec<String> {
        self.inner
            .nouns(view(include_candidates))
            .into_iter()
            .collect()
    }

    fn to_tsv(&self) -> String {
        self.inner.to_tsv()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// One evaluation test case.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct TestCase {
    #[pyo3(get)]
    source_phrase: String,
    #[pyo3(get)]
    nominal: String,
    #[pyo3(get)]
    stem_verb: String,
    #[pyo3(get)]
    expected_sv: String,
    #[pyo3(get)]
    alternatives: Vec<String>,
    #[pyo3(get)]
    excluded_no_data: bool,
    #[pyo3(get)]
    reference_tag: String,
}

impl From<lv::TestCase> for TestCase {
    fn from(c: lv::TestCase) -> Self {
        TestCase {
            source_phrase: c.source_phrase,
            nominal: c.nominal,
            stem_verb: c.stem_verb,
            expected_sv: c.expected_sv,
            alternatives: c.alternatives.into_iter().collect(),
            excluded_no_data: c.excluded_no_data,
            reference_tag: c.reference_tag,
        }
    }
}

impl From<&TestCase> for lv::TestCase {
    fn from(c: &TestCase) -> Self {
        lv::TestCase {
            source_phrase: c.source_phrase.clone(),
            nominal: c.nominal.clone(),
            stem_verb: c.stem_verb.clone(),
            expected_sv: c.expected_sv.clone(),
            alternatives: c.alternatives.iter().cloned().collect(),
            excluded_no_data: c.excluded_no_data,
            reference_tag: c.reference_tag.clone(),
        }
    }
}

/// Strict/lenient scores over a test set.
#[pyclass]
struct Report {
    inner: lv::EvalReport,
}

type ReportRow = (String, Option<String>, Option<String>, Option<f64>, bool, Option<bool>);

#[pymethods]
impl Report {
    /// (correct, total) under strict scoring.
    #[getter]
    fn strict(&self) -> (usize, usize) {
        self.inner.strict
    }

    /// (correct, total) under lenient scoring.
    #[getter]
    fn lenient(&self) -> (usize, usize) {
        self.inner.lenient
    }

    /// Per-case rows: (nominal, choice1, choice2, ratio, strict_hit,
    /// lenient_hit). lenient_hit is None for excluded cases.
    fn rows(&self) -> Vec<(String, Option<String>, Option<String>, Option<f64>, bool, Option<bool>)> {
        self.inner
            .per_case
            .iter()
            .map(|r| {
                (
                    r.case.nominal.clone(),
                    r.choice1.clone(),
                    r.choice2.clone(),
                    r.ratio,
                    r.strict_hit,
                    r.lenient_hit,
                )
            })
            .collect()
    }

    #[pyo3(signature = (style="pretty"))]
    fn format(&self, style: &str) -> PyResult<String> {
        let style = match style {
            "tsv" => lv::ReportStyle::Tsv,
            "pretty" => lv::ReportStyle::Pretty,
            other => {
                return Err(PyValueError::new_err(format!(
                    "style must be \"tsv\" or \"pretty\", got {other:?}"
                )))
            }
        };
        Ok(lv::format_report(&self.inner, style))
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(strict={}/{}, lenient={}/{})",
            self.inner.strict.0, self.inner.strict.1, self.inner.lenient.0, self.inner.lenient.1
        )
    }
}

/// Parse tagger output (one sentence per line, surface/TAG tokens).
#[pyfunction]
#[pyo3(signature = (text, skip_malformed=false))]
fn parse_corpus(text: &str, skip_malformed: bool) -> PyResult<Corpus> {
    let parsed = parser(skip_malformed).parse_text(text).map_err(to_py_err)?;
    Ok(Corpus {
        sentences: parsed.sentences,
        skipped_tokens: parsed.skipped_tokens,
    })
}

/// Lemma of a verb-tagged token.
#[pyfunction]
fn lemmatize_verb(surface: &str, tag: &str) -> String {
    LemmaRules::english().lemmatize_verb(surface, tag)
}

/// Lemma of a noun-tagged token.
#[pyfunction]
fn lemmatize_noun(surface: &str, tag: &str) -> String {
    LemmaRules::english().lemmatize_noun(surface, tag)
}

/// Extract verb-object pairs. With `nominals`, only pairs whose object is
/// listed are kept.
#[pyfunction]
#[pyo3(signature = (corpus, max_intervening=5, exclude_passive=true, nominals=None))]
fn extract_pairs(
    corpus: &Corpus,
    max_intervening: usize,
    exclude_passive: bool,
    nominals: Option<Vec<String>>,
) -> PyResult<Vec<Pair>> {
    let config = lv::ExtractionConfig {
        max_intervening,
        exclude_passive,
        require_nominal_filter: false,
    };
    let pairs = lv::scan_corpus_parallel(
        &corpus.sentences,
        &config,
        &TagClasses::penn(),
        None,
        lv::LexiconView::Confirmed,
    )
    .map_err(to_py_err)?;
    let filter: Option<BTreeSet<String>> = nominals.map(|n| n.into_iter().collect());
    Ok(pairs
        .into_iter()
        .filter(|p| filter.as_ref().is_none_or(|f| f.contains(&p.object_lemma)))
        .map(Pair::from)
        .collect())
}

/// Build local and global frequency tables from pairs.
#[pyfunction]
#[pyo3(signature = (pairs, nominals=None, global_mode="aggregate", min_count=1))]
fn build_tables(
    pairs: Vec<Pair>,
    nominals: Option<Vec<String>>,
    global_mode: &str,
    min_count: u64,
) -> PyResult<FreqTables> {
    let mode = match global_mode {
        "aggregate" => lv::GlobalMode::Aggregate,
        "all-objects" => lv::GlobalMode::AllObjects,
        other => {
            return Err(PyValueError::new_err(format!(
                "global_mode must be \"aggregate\" or \"all-objects\", got {other:?}"
            )))
        }
    };
    let pairs: Vec<lv::VerbObjectPair> = pairs.iter().map(lv::VerbObjectPair::from).collect();
    let filter: Option<BTreeSet<String>> = nominals.map(|n| n.into_iter().collect());
    let (local, global) = lv::build_tables(&pairs, filter.as_ref(), mode, min_count);
    Ok(FreqTables { local, global })
}

/// Adjusted-frequency ratio of the first choice over the second.
#[pyfunction]
fn choice_ratio(ranked: Vec<Candidate>) -> Option<f64> {
    let ranked: Vec<lv::Candidate> = ranked.iter().map(lv::Candidate::from).collect();
    lv::choice_ratio(&ranked)
}

/// The embedded 18-case test set.
#[pyfunction]
fn default_testset() -> Vec<TestCase> {
    lv::default_testset().into_iter().map(TestCase::from).collect()
}

/// Score ranked predictions (nominal -> candidate list) against a test
/// set.
#[pyfunction]
#[pyo3(signature = (cases, predictions, exclude_stem=false))]
fn score(
    cases: Vec<TestCase>,
    predictions: HashMap<String, Vec<Candidate>>,
    exclude_stem: bool,
) -> Report {
    let cases: Vec<lv::TestCase> = cases.iter().map(lv::TestCase::from).collect();
    let predictions: BTreeMap<String, Vec<lv::Candidate>> = predictions
        .into_iter()
        .map(|(nominal, ranked)| {
            (
                nominal,
                ranked.iter().map(lv::Candidate::from).collect::<Vec<_>>(),
            )
        })
        .collect();
    Report {
        inner: lv::score(&cases, &predictions, exclude_stem),
    }
}

/// Parse, extract, build tables, rank every nominal, and score against
/// the embedded test set in one call.
#[pyfunction]
#[pyo3(signature = (text, exclude_stem=false))]
fn evaluate_corpus(text: &str, exclude_stem: bool) -> PyResult<Report> {
    let corpus = parser(false).parse_text(text).map_err(to_py_err)?;
    let pairs = lv::scan_corpus_parallel(
        &corpus.sentences,
        &lv::ExtractionConfig::default(),
        &TagClasses::penn(),
        None,
        lv::LexiconView::Confirmed,
    )
    .map_err(to_py_err)?;
    let local = lv::build_local_table(&pairs, None);
    let global = lv::aggregate_global(&local);
    let predictions = lv::rank_all(&local, &global);
    Ok(Report {
        inner: lv::score(&lv::default_testset(), &predictions, exclude_stem),
    })
}

#[pymodule]
fn lightverbs_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Corpus>()?;
    m.add_class::<Pair>()?;
    m.add_class::<Candidate>()?;
    m.add_class::<FreqTables>()?;
    m.add_class::<Lexicon>()?;
    m.add_class::<TestCase>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(parse_corpus, m)?)?;
    m.add_function(wrap_pyfunction!(lemmatize_verb, m)?)?;
    m.add_function(wrap_pyfunction!(lemmatize_noun, m)?)?;
    m.add_function(wrap_pyfunction!(extract_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(build_tables, m)?)?;
    m.add_function(wrap_pyfunction!(choice_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(default_testset, m)?)?;
    m.add_function(wrap_pyfunction!(score, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_corpus, m)?)?;
    m.add("MINI_CORPUS", lv::MINI_CORPUS)?;
    Ok(())
}

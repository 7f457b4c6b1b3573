use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::corpus::{CorpusParser, ParsedCorpus};
use crate::error::{Error, Result};
use crate::eval::{
    default_testset, format_report, load_testset, score, EvalReport, ReportStyle, TestCase,
};
use crate::extract::{scan_corpus_parallel, write_pairs_tsv, ExtractionConfig, VerbObjectPair};
use crate::lemma::LemmaRules;
use crate::lexicon::{load_builtin, Lexicon, LexiconView};
use crate::stats::{
    aggregate_global, build_local_table, global_from_pairs, rank_candidates, ranked_to_tsv,
    Candidate, GlobalTable, LocalTable,
};
use crate::tags::TagClasses;

/// How the global table is derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GlobalMode {
    /// Aggregate of the (possibly nominal-filtered) local data.
    #[default]
    Aggregate,
    /// Counts over all verb-object pairs regardless of nominal status.
    AllObjects,
}

/// Where the test set comes from.
#[derive(Debug, Clone, Default)]
pub enum TestsetSource {
    #[default]
    Embedded,
    File(PathBuf),
}

/// Configuration for an end-to-end run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus: PathBuf,
    pub out_dir: PathBuf,
    pub builtin: Option<PathBuf>,
    pub filter: Option<PathBuf>,
    pub lexicon: Option<PathBuf>,
    pub lemma_overrides: Option<PathBuf>,
    pub testset: TestsetSource,
    pub global_mode: GlobalMode,
    pub min_count: u64,
    pub max_intervening: usize,
    pub skip_malformed: bool,
    pub include_candidates: bool,
    pub exclude_stem: bool,
    pub format: ReportStyle,
}

impl RunConfig {
    pub fn new(corpus: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            corpus: corpus.into(),
            out_dir: out_dir.into(),
            builtin: None,
            filter: None,
            lexicon: None,
            lemma_overrides: None,
            testset: TestsetSource::Embedded,
            global_mode: GlobalMode::Aggregate,
            min_count: 1,
            max_intervening: ExtractionConfig::default().max_intervening,
            skip_malformed: false,
            include_candidates: false,
            exclude_stem: false,
            format: ReportStyle::Tsv,
        }
    }

    pub fn view(&self) -> LexiconView {
        if self.include_candidates {
            LexiconView::WithCandidates
        } else {
            LexiconView::Confirmed
        }
    }
}

/// Everything a run produced, for callers that want the values as well as
/// the files.
#[derive(Debug)]
pub struct PipelineOutput {
    pub pairs: Vec<VerbObjectPair>,
    pub local: LocalTable,
    pub global: GlobalTable,
    pub report: EvalReport,
    pub files: Vec<PathBuf>,
    pub skipped_tokens: usize,
}

/// Builds the parser configured by `config`.
pub fn build_parser(config: &RunConfig) -> Result<CorpusParser> {
    let mut rules = LemmaRules::english();
    if let Some(path) = &config.lemma_overrides {
        rules.load_overrides(path)?;
    }
    Ok(CorpusParser::new(TagClasses::penn(), rules).skip_malformed(config.skip_malformed))
}

/// Loads the lexicon named by the config: a prebuilt dump, or a builtin
/// list plus optional manual filter. Returns None when no source is given.
pub fn load_lexicon(config: &RunConfig) -> Result<Option<Lexicon>> {
    let mut lexicon = match (&config.lexicon, &config.builtin) {
        (Some(path), _) => Lexicon::read_tsv(path)?,
        (None, Some(path)) => Lexicon::from_entries(load_builtin(path)?),
        (None, None) => return Ok(None),
    };
    if let Some(path) = &config.filter {
        for warning in lexicon.apply_filter(path)? {
            eprintln!("warning: {warning}");
        }
    }
    Ok(Some(lexicon))
}

/// Builds local and global tables from pairs per the configured mode.
pub fn build_tables(
    pairs: &[VerbObjectPair],
    nominal_filter: Option<&std::collections::BTreeSet<String>>,
    global_mode: GlobalMode,
    min_count: u64,
) -> (LocalTable, GlobalTable) {
    let local = build_local_table(pairs, nominal_filter).apply_min_count(min_count);
    let global = match global_mode {
        GlobalMode::Aggregate => aggregate_global(&local),
        GlobalMode::AllObjects => global_from_pairs(pairs),
    };
    (local, global)
}

/// Ranked candidate lists for every nominal present in the local table.
pub fn rank_all(local: &LocalTable, global: &GlobalTable) -> BTreeMap<String, Vec<Candidate>> {
    local
        .nominals()
        .map(|n| (n.to_string(), rank_candidates(local, global, n)))
        .collect()
}

pub fn resolve_testset(source: &TestsetSource) -> Result<Vec<TestCase>> {
    match source {
        TestsetSource::Embedded => Ok(default_testset()),
        TestsetSource::File(path) => load_testset(path),
    }
}

fn write_artifact(dir: &Path, name: &str, contents: &str, files: &mut Vec<PathBuf>) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
    files.push(path);
    Ok(())
}

/// Runs parse -> extract -> lexicon filter -> tables -> rank -> score and
/// writes the pair dump, table dumps, ranked lists and the report into the
/// output directory. Deterministic: identical inputs yield byte-identical
/// artifacts.
pub fn run_pipeline(config: &RunConfig) -> Result<PipelineOutput> {
    let parser = build_parser(config)?;
    let corpus: ParsedCorpus = parser.parse_file(&config.corpus)?;

    let lexicon = load_lexicon(config)?;
    // The scan stays unfiltered so the all-objects global mode can see
    // every pair; the nominal filter applies at table-build time.
    let extraction = ExtractionConfig {
        max_intervening: config.max_intervening,
        exclude_passive: true,
        require_nominal_filter: false,
    };
    let pairs = scan_corpus_parallel(
        &corpus.sentences,
        &extraction,
        parser.classes(),
        None,
        config.view(),
    )?;

    let nominal_filter = lexicon.as_ref().map(|l| l.nouns(config.view()));
    let (local, global) = build_tables(
        &pairs,
        nominal_filter.as_ref(),
        config.global_mode,
        config.min_count,
    );

    let predictions = rank_all(&local, &global);
    let cases = resolve_testset(&config.testset)?;
    let report = score(&cases, &predictions, config.exclude_stem);

    fs::create_dir_all(&config.out_dir).map_err(|e| Error::io(&config.out_dir, e))?;
    let mut files = Vec::new();
    write_pairs_tsv(&pairs, config.out_dir.join("pairs.tsv"))?;
    files.push(config.out_dir.join("pairs.tsv"));
    write_artifact(&config.out_dir, "local.tsv", &local.to_tsv(), &mut files)?;
    write_artifact(&config.out_dir, "global.tsv", &global.to_tsv(), &mut files)?;

    let mut ranked_dump = String::new();
    for (nominal, ranked) in &predictions {
        ranked_dump.push_str(&ranked_to_tsv(nominal, ranked));
    }
    write_artifact(&config.out_dir, "ranked.tsv", &ranked_dump, &mut files)?;

    let report_name = match config.format {
        ReportStyle::Tsv => "report.tsv",
        ReportStyle::Pretty => "report.txt",
    };
    write_artifact(
        &config.out_dir,
        report_name,
        &format_report(&report, config.format),
        &mut files,
    )?;

    Ok(PipelineOutput {
        pairs,
        local,
        global,
        report,
        files,
        skipped_tokens: corpus.skipped_tokens,
    })
}

/// Scores a test set against prebuilt tables (the no-corpus path).
pub fn eval_from_tables(
    local: &LocalTable,
    global: &GlobalTable,
    testset: &TestsetSource,
    exclude_stem: bool,
) -> Result<EvalReport> {
    let predictions = rank_all(local, global);
    let cases = resolve_testset(testset)?;
    Ok(score(&cases, &predictions, exclude_stem))
}

//! Corpus statistics for identifying the support (light) verb of deverbal
//! nominalizations.
//!
//! The pipeline parses a POS-tagged corpus, extracts shallow verb-object
//! pairs, restricts objects to a nominalization lexicon, and ranks
//! support-verb candidates per nominal by the product of the verb's local
//! relative frequency (with that nominal) and its global relative frequency
//! (across all nominals). A lexical-density measure and the evaluation test
//! set ride along.

pub mod corpus;
pub mod error;
pub mod eval;
pub mod extract;
pub mod lemma;
pub mod lexicon;
pub mod pipeline;
pub mod stats;
pub mod tags;

pub use corpus::{
    default_aux_stoplist, lexical_density, CorpusParser, ParsedCorpus, Sentence, TaggedToken,
};
pub use error::{Error, Result};
pub use eval::{
    default_testset, format_report, load_testset, save_testset, score, CaseResult, EvalReport,
    ReportStyle, TestCase,
};
pub use extract::{
    extract_pairs, pairs_to_tsv, read_pairs_tsv, scan_corpus, scan_corpus_parallel,
    write_pairs_tsv, ExtractionConfig, VerbObjectPair,
};
pub use lemma::LemmaRules;
pub use lexicon::{
    default_ortho_rules, derive_candidates, harvest_vocabulary, load_builtin, Lexicon,
    LexiconView, NominalEntry, OrthoRule, Source, Status,
};
pub use pipeline::{
    build_tables, eval_from_tables, rank_all, run_pipeline, GlobalMode, PipelineOutput,
    RunConfig, TestsetSource,
};
pub use stats::{
    aggregate_global, build_local_table, choice_ratio, global_from_pairs, merge_tables,
    rank_candidates, ranked_to_tsv, Candidate, GlobalTable, LocalTable,
};
pub use tags::TagClasses;

/// The bundled 40-sentence synthetic corpus used by the examples and tests.
pub const MINI_CORPUS: &str = include_str!("../data/mini_corpus.tagged");

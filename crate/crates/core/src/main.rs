use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use lightverbs::pipeline::{
    build_parser, build_tables, load_lexicon, rank_all, resolve_testset, run_pipeline,
};
use lightverbs::{
    default_aux_stoplist, default_ortho_rules, derive_candidates, format_report,
    harvest_vocabulary, lexical_density, load_builtin, pairs_to_tsv, rank_candidates,
    ranked_to_tsv, read_pairs_tsv, scan_corpus_parallel, score, write_pairs_tsv, Error,
    ExtractionConfig, GlobalMode, GlobalTable, Lexicon, LocalTable, ReportStyle, Result,
    RunConfig, TestsetSource,
};

#[derive(Parser)]
#[command(
    name = "lightverbs",
    about = "Identify support verbs for deverbal nominalizations from a POS-tagged corpus",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GlobalModeArg {
    Aggregate,
    AllObjects,
}

impl From<GlobalModeArg> for GlobalMode {
    fn from(v: GlobalModeArg) -> Self {
        match v {
            GlobalModeArg::Aggregate => GlobalMode::Aggregate,
            GlobalModeArg::AllObjects => GlobalMode::AllObjects,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Pretty,
}

impl From<FormatArg> for ReportStyle {
    fn from(v: FormatArg) -> Self {
        match v {
            FormatArg::Tsv => ReportStyle::Tsv,
            FormatArg::Pretty => ReportStyle::Pretty,
        }
    }
}

#[derive(Args)]
struct CorpusOpts {
    /// Tagged corpus file (one sentence per line, surface/TAG tokens)
    #[arg(long)]
    corpus: PathBuf,
    /// Count and skip malformed tokens instead of aborting
    #[arg(long)]
    skip_malformed: bool,
    /// Lemma override file (surface<TAB>verb|noun<TAB>lemma)
    #[arg(long)]
    lemma_overrides: Option<PathBuf>,
}

#[derive(Args)]
struct LexiconOpts {
    /// Prebuilt lexicon dump (noun<TAB>verb<TAB>source<TAB>status)
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Builtin nominalization list (noun<TAB>verb)
    #[arg(long)]
    builtin: Option<PathBuf>,
    /// Manual filter file (noun<TAB>verb<TAB>accept|reject)
    #[arg(long)]
    filter: Option<PathBuf>,
    /// Use unreviewed candidates as well as confirmed entries
    #[arg(long)]
    include_candidates: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Extract verb-object pairs from a corpus
    Extract {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        lexicon: LexiconOpts,
        /// Maximum premodifiers between verb and object
        #[arg(long, default_value_t = 5)]
        max_intervening: usize,
        /// Write pairs.tsv into this directory instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a nominalization lexicon from word lists or a corpus
    Lexicon {
        /// Noun list, one lemma per line
        #[arg(long)]
        nouns: Option<PathBuf>,
        /// Verb list, one lemma per line
        #[arg(long)]
        verbs: Option<PathBuf>,
        /// Harvest noun/verb vocabularies from a tagged corpus
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        builtin: Option<PathBuf>,
        #[arg(long)]
        filter: Option<PathBuf>,
        #[arg(long)]
        skip_malformed: bool,
        /// Write lexicon.tsv into this directory instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build local/global frequency tables from a pair dump
    Tables {
        /// Pair dump produced by `extract`
        #[arg(long)]
        pairs: PathBuf,
        #[command(flatten)]
        lexicon: LexiconOpts,
        #[arg(long, value_enum, default_value_t = GlobalModeArg::Aggregate)]
        global_mode: GlobalModeArg,
        /// Drop (nominal, verb) counts below this threshold
        #[arg(long, default_value_t = 1)]
        min_count: u64,
        /// Output directory for local.tsv and global.tsv
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Rank support-verb candidates for one nominal
    Rank {
        /// Local table dump
        #[arg(long)]
        local: PathBuf,
        /// Global table dump
        #[arg(long)]
        global: PathBuf,
        /// The nominal to rank candidates for
        #[arg(long)]
        nominal: String,
    },
    /// Run the pipeline and score it against a test set
    Eval {
        /// Tagged corpus file; alternatively give --local and --global
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Local table dump (with --global, replaces --corpus)
        #[arg(long)]
        local: Option<PathBuf>,
        /// Global table dump
        #[arg(long)]
        global: Option<PathBuf>,
        #[command(flatten)]
        lexicon: LexiconOpts,
        /// Test set TSV, or "default" for the embedded set
        #[arg(long, default_value = "default")]
        testset: String,
        #[arg(long, value_enum, default_value_t = GlobalModeArg::Aggregate)]
        global_mode: GlobalModeArg,
        #[arg(long, default_value_t = 1)]
        min_count: u64,
        #[arg(long, default_value_t = 5)]
        max_intervening: usize,
        #[arg(long)]
        skip_malformed: bool,
        #[arg(long)]
        lemma_overrides: Option<PathBuf>,
        /// Exclude each case's own stem verb from its candidates
        #[arg(long)]
        exclude_stem: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
        format: FormatArg,
        /// Also write pairs/tables/ranked/report artifacts here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lexical density of a corpus
    Density {
        #[command(flatten)]
        corpus: CorpusOpts,
    },
}

fn testset_source(arg: &str) -> TestsetSource {
    if arg == "default" {
        TestsetSource::Embedded
    } else {
        TestsetSource::File(PathBuf::from(arg))
    }
}

fn read_word_list(path: &PathBuf) -> Result<BTreeSet<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .map(|l| l.trim().to_lowercase())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Extract {
            corpus,
            lexicon,
            max_intervening,
            out,
        } => {
            let mut config = RunConfig::new(&corpus.corpus, out.clone().unwrap_or_default());
            config.skip_malformed = corpus.skip_malformed;
            config.lemma_overrides = corpus.lemma_overrides;
            config.lexicon = lexicon.lexicon;
            config.builtin = lexicon.builtin;
            config.filter = lexicon.filter;
            config.include_candidates = lexicon.include_candidates;

            let parser = build_parser(&config)?;
            let parsed = parser.parse_file(&config.corpus)?;
            if parsed.skipped_tokens > 0 {
                eprintln!("skipped {} malformed tokens", parsed.skipped_tokens);
            }
            let lex = load_lexicon(&config)?;
            let extraction = ExtractionConfig {
                max_intervening,
                exclude_passive: true,
                require_nominal_filter: lex.is_some(),
            };
            let pairs = scan_corpus_parallel(
                &parsed.sentences,
                &extraction,
                parser.classes(),
                lex.as_ref(),
                config.view(),
            )?;
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
                    write_pairs_tsv(&pairs, dir.join("pairs.tsv"))?;
                }
                None => print!("{}", pairs_to_tsv(&pairs)),
            }
            Ok(())
        }
        Command::Lexicon {
            nouns,
            verbs,
            corpus,
            builtin,
            filter,
            skip_malformed,
            out,
        } => {
            let (mut noun_set, mut verb_set) = (BTreeSet::new(), BTreeSet::new());
            if let Some(path) = &corpus {
                let mut config = RunConfig::new(path, "");
                config.skip_malformed = skip_malformed;
                let parser = build_parser(&config)?;
                let parsed = parser.parse_file(path)?;
                let (n, v) = harvest_vocabulary(&parsed.sentences, parser.classes());
                noun_set.extend(n);
                verb_set.extend(v);
            }
            if let Some(path) = &nouns {
                noun_set.extend(read_word_list(path)?);
            }
            if let Some(path) = &verbs {
                verb_set.extend(read_word_list(path)?);
            }
            if builtin.is_none() && (noun_set.is_empty() || verb_set.is_empty()) {
                return Err(Error::Config(
                    "need --builtin, --corpus, or both --nouns and --verbs".to_string(),
                ));
            }

            let mut lex = Lexicon::new();
            if let Some(path) = &builtin {
                lex.add_all(load_builtin(path)?);
            }
            lex.add_all(derive_candidates(&noun_set, &verb_set, &default_ortho_rules()));
            if let Some(path) = &filter {
                for warning in lex.apply_filter(path)? {
                    eprintln!("warning: {warning}");
                }
            }
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
                    lex.write_tsv(dir.join("lexicon.tsv"))?;
                }
                None => print!("{}", lex.to_tsv()),
            }
            Ok(())
        }
        Command::Tables {
            pairs,
            lexicon,
            global_mode,
            min_count,
            out,
        } => {
            let pair_list = read_pairs_tsv(&pairs)?;
            let mut config = RunConfig::new("", &out);
            config.lexicon = lexicon.lexicon;
            config.builtin = lexicon.builtin;
            config.filter = lexicon.filter;
            config.include_candidates = lexicon.include_candidates;
            let lex = load_lexicon(&config)?;
            let nominal_filter = lex.as_ref().map(|l| l.nouns(config.view()));
            let (local, global) = build_tables(
                &pair_list,
                nominal_filter.as_ref(),
                global_mode.into(),
                min_count,
            );
            std::fs::create_dir_all(&out).map_err(|e| Error::io(&out, e))?;
            local.write_tsv(out.join("local.tsv"))?;
            global.write_tsv(out.join("global.tsv"))?;
            Ok(())
        }
        Command::Rank {
            local,
            global,
            nominal,
        } => {
            let local = LocalTable::read_tsv(&local)?;
            let global = GlobalTable::read_tsv(&global)?;
            let ranked = rank_candidates(&local, &global, &nominal);
            print!("{}", ranked_to_tsv(&nominal, &ranked));
            Ok(())
        }
        Command::Eval {
            corpus,
            local,
            global,
            lexicon,
            testset,
            global_mode,
            min_count,
            max_intervening,
            skip_malformed,
            lemma_overrides,
            exclude_stem,
            format,
            out,
        } => {
            let style: ReportStyle = format.into();
            let source = testset_source(&testset);
            match (corpus, local, global) {
                (Some(corpus), None, None) => {
                    let mut config = RunConfig::new(&corpus, out.clone().unwrap_or_default());
                    config.lexicon = lexicon.lexicon;
                    config.builtin = lexicon.builtin;
                    config.filter = lexicon.filter;
                    config.include_candidates = lexicon.include_candidates;
                    config.testset = source;
                    config.global_mode = global_mode.into();
                    config.min_count = min_count;
                    config.max_intervening = max_intervening;
                    config.skip_malformed = skip_malformed;
                    config.lemma_overrides = lemma_overrides;
                    config.exclude_stem = exclude_stem;
                    config.format = style;
                    if out.is_some() {
                        let output = run_pipeline(&config)?;
                        print!("{}", format_report(&output.report, style));
                    } else {
                        // no --out: run in memory, print the report only
                        let parser = build_parser(&config)?;
                        let parsed = parser.parse_file(&config.corpus)?;
                        let lex = load_lexicon(&config)?;
                        let extraction = ExtractionConfig {
                            max_intervening,
                            exclude_passive: true,
                            require_nominal_filter: lex.is_some(),
                        };
                        let pairs = scan_corpus_parallel(
                            &parsed.sentences,
                            &extraction,
                            parser.classes(),
                            lex.as_ref(),
                            config.view(),
                        )?;
                        let nominal_filter = lex.as_ref().map(|l| l.nouns(config.view()));
                        let (local, global) = build_tables(
                            &pairs,
                            nominal_filter.as_ref(),
                            config.global_mode,
                            min_count,
                        );
                        let predictions = rank_all(&local, &global);
                        let cases = resolve_testset(&config.testset)?;
                        let report = score(&cases, &predictions, exclude_stem);
                        print!("{}", format_report(&report, style));
                    }
                    Ok(())
                }
                (None, Some(local), Some(global)) => {
                    let local = LocalTable::read_tsv(&local)?;
                    let global = GlobalTable::read_tsv(&global)?;
                    let predictions = rank_all(&local, &global);
                    let cases = resolve_testset(&source)?;
                    let report = score(&cases, &predictions, exclude_stem);
                    print!("{}", format_report(&report, style));
                    Ok(())
                }
                _ => Err(Error::Config(
                    "eval needs either --corpus or both --local and --global".to_string(),
                )),
            }
        }
        Command::Density { corpus } => {
            let mut config = RunConfig::new(&corpus.corpus, "");
            config.skip_malformed = corpus.skip_malformed;
            config.lemma_overrides = corpus.lemma_overrides;
            let parser = build_parser(&config)?;
            let parsed = parser.parse_file(&config.corpus)?;
            let density = lexical_density(
                &parsed.sentences,
                parser.classes(),
                &default_aux_stoplist(),
            )?;
            println!("{density:.6}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

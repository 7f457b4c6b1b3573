use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::corpus::Sentence;
use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, LexiconView};
use crate::tags::TagClasses;

/// A verb and the noun that is its direct object, with provenance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VerbObjectPair {
    pub sentence_id: usize,
    pub verb_index: usize,
    pub object_index: usize,
    pub verb_lemma: String,
    pub object_lemma: String,
}

/// Knobs for the shallow verb-object scan.
#[derive(Debug, Clone)]
pub struct ExtractionConfig {
    /// Maximum number of premodifier tokens allowed between the verb and
    /// the start of the object noun run.
    pub max_intervening: usize,
    /// Skip past participles directly preceded (verb-wise) by a form of
    /// "be".
    pub exclude_passive: bool,
    /// Keep only pairs whose object is a known nominalization.
    pub require_nominal_filter: bool,
}

impl Default for ExtractionConfig {
    fn default() -> Self {
        ExtractionConfig {
            max_intervening: 5,
            exclude_passive: true,
            require_nominal_filter: false,
        }
    }
}

/// Finds, for each verb token, the noun phrase it directly governs as an
/// object.
///
/// From each verb the scan moves right across at most `max_intervening`
/// determiner/possessive/adjective/adverb/cardinal tokens. If that run is
/// immediately followed by one or more consecutive noun tokens, the verb
/// pairs with the LAST noun of the run (the NP head); any other tag ends
/// the scan without a pair. A VBN whose nearest preceding verb token is a
/// form of "be" is treated as passive and yields nothing. Each verb emits
/// at most one pair.
pub fn extract_pairs(
    sentence: &Sentence,
    config: &ExtractionConfig,
    classes: &TagClasses,
) -> Vec<VerbObjectPair> {
    let tokens = &sentence.tokens;
    let mut pairs = Vec::new();
    for (vi, verb) in tokens.iter().enumerate() {
        if !classes.is_verb(&verb.tag) {
            continue;
        }
        if config.exclude_passive && verb.tag == "VBN" && preceded_by_be(sentence, vi, classes) {
            continue;
        }
        let mut j = vi + 1;
        let mut intervening = 0;
        while j < tokens.len()
            && intervening < config.max_intervening
            && !classes.is_noun(&tokens[j].tag)
            && classes.is_np_premodifier(&tokens[j].tag)
        {
            intervening += 1;
            j += 1;
        }
        if j >= tokens.len() || !classes.is_noun(&tokens[j].tag) {
            continue;
        }
        // head = last noun of the consecutive run
        let mut head = j;
        while head + 1 < tokens.len() && classes.is_noun(&tokens[head + 1].tag) {
            head += 1;
        }
        pairs.push(VerbObjectPair {
            sentence_id: sentence.id,
            verb_index: vi,
            object_index: head,
            verb_lemma: verb.lemma.clone(),
            object_lemma: tokens[head].lemma.clone(),
        });
    }
    pairs
}

fn preceded_by_be(sentence: &Sentence, index: usize, classes: &TagClasses) -> bool {
    sentence.tokens[..index]
        .iter()
        .rev()
        .find(|t| classes.is_verb(&t.tag))
        .is_some_and(|t| t.lemma == "be")
}

fn nominal_filter(
    config: &ExtractionConfig,
    lexicon: Option<&Lexicon>,
    view: LexiconView,
) -> Result<Option<std::collections::BTreeSet<String>>> {
    if !config.require_nominal_filter {
        return Ok(None);
    }
    match lexicon {
        Some(lex) => Ok(Some(lex.nouns(view))),
        None => Err(Error::FilterWithoutLexicon),
    }
}

/// Runs `extract_pairs` over a corpus in sentence order. With
/// `require_nominal_filter` set, only pairs whose object is in the lexicon
/// (under `view`) survive; requesting the filter without a lexicon is a
/// configuration error.
pub fn scan_corpus(
    sentences: &[Sentence],
    config: &ExtractionConfig,
    classes: &TagClasses,
    lexicon: Option<&Lexicon>,
    view: LexiconView,
) -> Result<Vec<VerbObjectPair>> {
    let filter = nominal_filter(config, lexicon, view)?;
    let mut pairs = Vec::new();
    for sentence in sentences {
        pairs.extend(retained(extract_pairs(sentence, config, classes), &filter));
    }
    Ok(pairs)
}

/// Parallel variant of `scan_corpus`. Sentences are processed
/// independently and results concatenated in sentence order, so the output
/// is identical to the sequential scan.
pub fn scan_corpus_parallel(
    sentences: &[Sentence],
    config: &ExtractionConfig,
    classes: &TagClasses,
    lexicon: Option<&Lexicon>,
    view: LexiconView,
) -> Result<Vec<VerbObjectPair>> {
    let filter = nominal_filter(config, lexicon, view)?;
    let per_sentence: Vec<Vec<VerbObjectPair>> = sentences
        .par_iter()
        .map(|s| retained(extract_pairs(s, config, classes), &filter))
        .collect();
    Ok(per_sentence.into_iter().flatten().collect())
}

fn retained(
    pairs: Vec<VerbObjectPair>,
    filter: &Option<std::collections::BTreeSet<String>>,
) -> Vec<VerbObjectPair> {
    match filter {
        None => pairs,
        Some(set) => pairs
            .into_iter()
            .filter(|p| set.contains(&p.object_lemma))
            .collect(),
    }
}

/// Pair dump format: `sentence_id verb object verb_index object_index`,
/// tab-separated, sorted by (sentence_id, verb_index).
pub fn pairs_to_tsv(pairs: &[VerbObjectPair]) -> String {
    let mut sorted: Vec<&VerbObjectPair> = pairs.iter().collect();
    sorted.sort_by_key(|p| (p.sentence_id, p.verb_index));
    let mut out = String::new();
    for p in sorted {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            p.sentence_id, p.verb_lemma, p.object_lemma, p.verb_index, p.object_index
        ));
    }
    out
}

pub fn write_pairs_tsv(pairs: &[VerbObjectPair], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, pairs_to_tsv(pairs)).map_err(|e| Error::io(path, e))
}

pub fn read_pairs_tsv(path: impl AsRef<Path>) -> Result<Vec<VerbObjectPair>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 5 {
            return Err(Error::MalformedLine {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!("expected 5 tab-separated columns, got {}", cols.len()),
            });
        }
        let parse_num = |s: &str, what: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::MalformedLine {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!("bad {what}: {s:?}"),
            })
        };
        pairs.push(VerbObjectPair {
            sentence_id: parse_num(cols[0], "sentence id")?,
            verb_lemma: cols[1].to_string(),
            object_lemma: cols[2].to_string(),
            verb_index: parse_num(cols[3], "verb index")?,
            object_index: parse_num(cols[4], "object index")?,
        });
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::CorpusParser;
    use crate::lemma::LemmaRules;
    use crate::lexicon::{NominalEntry, Source, Status};

    fn parser() -> CorpusParser {
        CorpusParser::new(TagClasses::penn(), LemmaRules::english())
    }

    fn pairs_of(line: &str) -> Vec<(String, String)> {
        let (s, _) = parser().parse_line(line, 0, 1).unwrap();
        extract_pairs(&s, &ExtractionConfig::default(), parser().classes())
            .into_iter()
            .map(|p| (p.verb_lemma, p.object_lemma))
            .collect()
    }

    fn lexicon_with(nouns: &[&str]) -> Lexicon {
        Lexicon::from_entries(nouns.iter().map(|n| NominalEntry {
            noun_lemma: n.to_string(),
            stem_verb_lemma: format!("{n}_stem"),
            source: Source::Builtin,
            status: Status::Confirmed,
        }))
    }

    #[test]
    fn object_through_premodifiers() {
        assert_eq!(
            pairs_of("He/PRP made/VBD his/PRP$ formal/JJ proposal/NN to/IN the/DT full/JJ committee/NN ./."),
            vec![("make".to_string(), "proposal".to_string())]
        );
    }

    #[test]
    fn concretised_object_is_still_extracted() {
        assert_eq!(
            pairs_of("He/PRP put/VBD the/DT proposal/NN in/IN the/DT drawer/NN ./."),
            vec![("put".to_string(), "proposal".to_string())]
        );
    }

    #[test]
    fn passive_emits_nothing() {
        assert_eq!(
            pairs_of("The/DT proposal/NN was/VBD rejected/VBN ./."),
            vec![]
        );
    }

    #[test]
    fn head_is_last_noun_of_run() {
        // Frozen from the brute-force reference: the head of the noun run
        // "policy decision" is its last noun.
        assert_eq!(
            pairs_of("She/PRP made/VBD a/DT very/RB difficult/JJ policy/NN decision/NN ./."),
            vec![("make".to_string(), "decision".to_string())]
        );
    }

    #[test]
    fn preposition_blocks_the_scan() {
        assert_eq!(pairs_of("He/PRP looked/VBD at/IN the/DT plan/NN ./."), vec![]);
    }

    #[test]
    fn particle_blocks_the_scan() {
        assert_eq!(pairs_of("They/PRP gave/VBD up/RP hope/NN ./."), vec![]);
    }

    #[test]
    fn another_verb_blocks_the_scan() {
        assert_eq!(
            pairs_of("They/PRP let/VBD go/VB quickly/RB ./."),
            vec![]
        );
    }

    #[test]
    fn max_intervening_bounds_the_run() {
        let line = "He/PRP made/VBD a/DT very/RB very/RB very/RB very/RB very/RB big/JJ plan/NN ./.";
        let (s, _) = parser().parse_line(line, 0, 1).unwrap();
        let cfg = ExtractionConfig::default(); // max 5: seven premodifiers is too many
        assert!(extract_pairs(&s, &cfg, parser().classes()).is_empty());
        let cfg = ExtractionConfig {
            max_intervening: 7,
            ..ExtractionConfig::default()
        };
        assert_eq!(extract_pairs(&s, &cfg, parser().classes()).len(), 1);
    }

    #[test]
    fn zero_intervening_is_allowed() {
        assert_eq!(
            pairs_of("We/PRP make/VBP decisions/NNS every/DT day/NN ./."),
            vec![("make".to_string(), "decision".to_string())]
        );
    }

    #[test]
    fn passive_exclusion_can_be_disabled() {
        let line = "The/DT offer/NN was/VBD rejected/VBN last/JJ week/NN ./.";
        let (s, _) = parser().parse_line(line, 0, 1).unwrap();
        let cfg = ExtractionConfig {
            exclude_passive: false,
            ..ExtractionConfig::default()
        };
        let got = extract_pairs(&s, &cfg, parser().classes());
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].verb_lemma, "reject");
        assert_eq!(got[0].object_lemma, "week");
    }

    #[test]
    fn one_pair_per_verb_with_indices() {
        let line = "He/PRP made/VBD a/DT proposal/NN and/CC rejected/VBD an/DT offer/NN ./.";
        let (s, _) = parser().parse_line(line, 0, 1).unwrap();
        let got = extract_pairs(&s, &ExtractionConfig::default(), parser().classes());
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].verb_index, 1);
        assert_eq!(got[0].object_index, 3);
        assert_eq!(got[1].verb_index, 5);
        assert_eq!(got[1].object_index, 7);
        for p in &got {
            assert!(p.verb_index < p.object_index);
        }
    }

    #[test]
    fn empty_corpus_scans_to_nothing() {
        let got = scan_corpus(
            &[],
            &ExtractionConfig::default(),
            &TagClasses::penn(),
            None,
            LexiconView::Confirmed,
        )
        .unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn filter_retains_lexicon_objects() {
        let text = "He/PRP made/VBD his/PRP$ formal/JJ proposal/NN to/IN the/DT full/JJ committee/NN ./.\n\
                    He/PRP put/VBD the/DT proposal/NN in/IN the/DT drawer/NN ./.\n";
        let corpus = parser().parse_text(text).unwrap();
        let cfg = ExtractionConfig {
            require_nominal_filter: true,
            ..ExtractionConfig::default()
        };

        let lex = lexicon_with(&["proposal"]);
        let got = scan_corpus(
            &corpus.sentences,
            &cfg,
            parser().classes(),
            Some(&lex),
            LexiconView::Confirmed,
        )
        .unwrap();
        assert_eq!(got.len(), 2, "both proposal pairs retained");

        let lex = lexicon_with(&["decision"]);
        let got = scan_corpus(
            &corpus.sentences,
            &cfg,
            parser().classes(),
            Some(&lex),
            LexiconView::Confirmed,
        )
        .unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn filter_without_lexicon_is_config_error() {
        let cfg = ExtractionConfig {
            require_nominal_filter: true,
            ..ExtractionConfig::default()
        };
        let err = scan_corpus(&[], &cfg, &TagClasses::penn(), None, LexiconView::Confirmed);
        assert!(matches!(err, Err(Error::FilterWithoutLexicon)));
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        let text = "He/PRP made/VBD a/DT proposal/NN ./.\n\
                    The/DT board/NN rejected/VBD the/DT plan/NN ./.\n\
                    It/PRP was/VBD rejected/VBN ./.\n";
        let corpus = parser().parse_text(text).unwrap();
        let cfg = ExtractionConfig::default();
        let seq = scan_corpus(
            &corpus.sentences,
            &cfg,
            parser().classes(),
            None,
            LexiconView::Confirmed,
        )
        .unwrap();
        let par = scan_corpus_parallel(
            &corpus.sentences,
            &cfg,
            parser().classes(),
            None,
            LexiconView::Confirmed,
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn pair_dump_round_trip() {
        let text = "He/PRP made/VBD a/DT proposal/NN ./.\n\
                    The/DT board/NN rejected/VBD the/DT plan/NN ./.\n";
        let corpus = parser().parse_text(text).unwrap();
        let pairs = scan_corpus(
            &corpus.sentences,
            &ExtractionConfig::default(),
            parser().classes(),
            None,
            LexiconView::Confirmed,
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pairs.tsv");
        write_pairs_tsv(&pairs, &path).unwrap();
        assert_eq!(read_pairs_tsv(&path).unwrap(), pairs);
    }
}

//! Shared test helpers: an independent brute-force extractor and random
//! input generators.
#![allow(dead_code)] // not every test target uses every helper

use rand::rngs::StdRng;
use rand::Rng;

use lightverbs::{CorpusParser, ExtractionConfig, LemmaRules, LocalTable, Sentence, TagClasses, VerbObjectPair};

/// Reference extractor. Instead of scanning, it enumerates every
/// (verb index, noun index) pair and checks the intervening-token
/// condition directly:
///   - the noun is the last of its consecutive noun run,
///   - the run starts after the verb,
///   - everything strictly between the verb and the run start is a
///     non-noun premodifier, and there are at most `max_intervening` of
///     them,
///   - the verb is not a passive participle.
///
/// At most one noun index can satisfy this per verb, because any later
/// run's gap would contain the earlier run's nouns.
pub fn brute_force_pairs(
    sentence: &Sentence,
    config: &ExtractionConfig,
    classes: &TagClasses,
) -> Vec<VerbObjectPair> {
    let tokens = &sentence.tokens;
    let mut out = Vec::new();
    for v in 0..tokens.len() {
        if !classes.is_verb(&tokens[v].tag) {
            continue;
        }
        if config.exclude_passive && tokens[v].tag == "VBN" {
            let nearest = tokens[..v].iter().rev().find(|t| classes.is_verb(&t.tag));
            if nearest.is_some_and(|t| t.lemma == "be") {
                continue;
            }
        }
        for n in (v + 1)..tokens.len() {
            if !classes.is_noun(&tokens[n].tag) {
                continue;
            }
            if n + 1 < tokens.len() && classes.is_noun(&tokens[n + 1].tag) {
                continue; // not the head of its run
            }
            let mut run_start = n;
            while run_start > 0 && classes.is_noun(&tokens[run_start - 1].tag) {
                run_start -= 1;
            }
            if run_start <= v {
                continue;
            }
            let gap = &tokens[v + 1..run_start];
            if gap.len() > config.max_intervening {
                continue;
            }
            if !gap
                .iter()
                .all(|t| classes.is_np_premodifier(&t.tag) && !classes.is_noun(&t.tag))
            {
                continue;
            }
            out.push(VerbObjectPair {
                sentence_id: sentence.id,
                verb_index: v,
                object_index: n,
                verb_lemma: tokens[v].lemma.clone(),
                object_lemma: tokens[n].lemma.clone(),
            });
        }
    }
    out
}

/// Vocabulary for random tagged sentences: every tag class is present,
/// including passives ("was rejected"), prepositions, particles, stacked
/// modifiers, and a surface containing a slash.
const VOCAB: &[(&str, &str)] = &[
    ("made", "VBD"),
    ("makes", "VBZ"),
    ("making", "VBG"),
    ("rejected", "VBD"),
    ("rejected", "VBN"),
    ("expected", "VBN"),
    ("given", "VBN"),
    ("took", "VBD"),
    ("take", "VB"),
    ("have", "VBP"),
    ("has", "VBZ"),
    ("was", "VBD"),
    ("is", "VBZ"),
    ("be", "VB"),
    ("been", "VBN"),
    ("did", "VBD"),
    ("proposal", "NN"),
    ("decision", "NN"),
    ("decisions", "NNS"),
    ("committee", "NN"),
    ("drawer", "NN"),
    ("policy", "NN"),
    ("judgment", "NN"),
    ("studies", "NNS"),
    ("men", "NNS"),
    ("Grolier", "NNP"),
    ("the", "DT"),
    ("a", "DT"),
    ("every", "DT"),
    ("no", "DT"),
    ("his", "PRP$"),
    ("its", "PRP$"),
    ("formal", "JJ"),
    ("difficult", "JJ"),
    ("striking", "JJ"),
    ("very", "RB"),
    ("quickly", "RB"),
    ("two", "CD"),
    ("1/2", "CD"),
    ("of", "IN"),
    ("in", "IN"),
    ("to", "TO"),
    ("and", "CC"),
    ("which", "WDT"),
    ("should", "MD"),
    ("he", "PRP"),
    ("it", "PRP"),
    ("up", "RP"),
    (".", "."),
    (",", ","),
];

/// One random tagged line, 0..=24 tokens drawn from the vocabulary.
pub fn random_tagged_line(rng: &mut StdRng) -> String {
    let len = rng.random_range(0..=24);
    (0..len)
        .map(|_| {
            let (surface, tag) = VOCAB[rng.random_range(0..VOCAB.len())];
            format!("{surface}/{tag}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn penn_parser() -> CorpusParser {
    CorpusParser::new(TagClasses::penn(), LemmaRules::english())
}

/// A random local table over small nominal/verb pools.
pub fn random_local_table(rng: &mut StdRng) -> LocalTable {
    let mut table = LocalTable::new();
    let cells = rng.random_range(0..12);
    for _ in 0..cells {
        let nominal = format!("n{}", rng.random_range(0..6));
        let verb = format!("v{}", rng.random_range(0..5));
        table.add(&nominal, &verb, rng.random_range(1..20));
    }
    table
}

/// Random verb-object pair streams for table invariants.
pub fn random_pairs(rng: &mut StdRng, max_len: usize) -> Vec<VerbObjectPair> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|i| VerbObjectPair {
            sentence_id: i,
            verb_index: 0,
            object_index: 1,
            verb_lemma: format!("v{}", rng.random_range(0..7)),
            object_lemma: format!("n{}", rng.random_range(0..9)),
        })
        .collect()
}

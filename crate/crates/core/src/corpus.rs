use std::collections::HashSet;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lemma::LemmaRules;
use crate::tags::TagClasses;

/// One token of tagger output: surface form, POS tag, and the lemma
/// assigned at parse time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub surface: String,
    pub tag: String,
    pub lemma: String,
}

/// A corpus sentence. Ids are 0-based and strictly increasing in input
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub id: usize,
    pub tokens: Vec<TaggedToken>,
}

impl Sentence {
    /// Serializes back to the `surface/TAG` line format. Re-parsing the
    /// result yields an identical sentence.
    pub fn to_line(&self) -> String {
        self.tokens
            .iter()
            .map(|t| format!("{}/{}", t.surface, t.tag))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A parsed corpus plus the count of tokens skipped in lenient mode.
#[derive(Debug, Clone, Default)]
pub struct ParsedCorpus {
    pub sentences: Vec<Sentence>,
    pub skipped_tokens: usize,
}

/// Parses tagger output (one sentence per line, tokens as `surface/TAG`)
/// into lemmatized sentences.
///
/// The last `/` in a token separates surface from tag, so `1/2/CD` parses
/// as surface `1/2` with tag `CD`. Malformed tokens abort the parse unless
/// `skip_malformed` is set, in which case they are counted and dropped.
#[derive(Debug, Clone)]
pub struct CorpusParser {
    classes: TagClasses,
    rules: LemmaRules,
    skip_malformed: bool,
}

impl CorpusParser {
    pub fn new(classes: TagClasses, rules: LemmaRules) -> Self {
        CorpusParser {
            classes,
            rules,
            skip_malformed: false,
        }
    }

    pub fn skip_malformed(mut self, yes: bool) -> Self {
        self.skip_malformed = yes;
        self
    }

    pub fn classes(&self) -> &TagClasses {
        &self.classes
    }

    pub fn rules(&self) -> &LemmaRules {
        &self.rules
    }

    /// Parses one line into a sentence with the given id. An empty line is
    /// an empty sentence, not an error. `line_no` is 1-based and only used
    /// in error messages. Returns the sentence and the number of malformed
    /// tokens skipped.
    pub fn parse_line(&self, line: &str, id: usize, line_no: usize) -> Result<(Sentence, usize)> {
        let mut tokens = Vec::new();
        let mut skipped = 0;
        for (index, raw) in line.split_whitespace().enumerate() {
            match self.parse_token(raw) {
                Some(token) => tokens.push(token),
                None if self.skip_malformed => skipped += 1,
                None => {
                    return Err(Error::MalformedToken {
                        line: line_no,
                        index,
                        token: raw.to_string(),
                    })
                }
            }
        }
        Ok((Sentence { id, tokens }, skipped))
    }

    fn parse_token(&self, raw: &str) -> Option<TaggedToken> {
        let sep = raw.rfind('/')?;
        let (surface, tag) = (&raw[..sep], &raw[sep + 1..]);
        if surface.is_empty() || tag.is_empty() {
            return None;
        }
        let lemma = if self.classes.is_verb(tag) {
            self.rules.lemmatize_verb(surface, tag)
        } else if self.classes.is_noun(tag) {
            self.rules.lemmatize_noun(surface, tag)
        } else {
            surface.to_lowercase()
        };
        Some(TaggedToken {
            surface: surface.to_string(),
            tag: tag.to_string(),
            lemma,
        })
    }

    /// Parses a whole corpus from text, assigning sentence ids in input
    /// order (empty lines keep their id and yield empty sentences).
    pub fn parse_text(&self, text: &str) -> Result<ParsedCorpus> {
        let mut corpus = ParsedCorpus::default();
        for (i, line) in text.lines().enumerate() {
            let (sentence, skipped) = self.parse_line(line, i, i + 1)?;
            corpus.skipped_tokens += skipped;
            corpus.sentences.push(sentence);
        }
        Ok(corpus)
    }

    pub fn parse_file(&self, path: impl AsRef<Path>) -> Result<ParsedCorpus> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        self.parse_text(&text)
    }
}

/// The auxiliary lemmas excluded from the content-word count.
pub fn default_aux_stoplist() -> HashSet<String> {
    ["be", "have", "do"].iter().map(|s| s.to_string()).collect()
}

/// Proportion of content words among non-punctuation tokens.
///
/// Content words are tokens with an open-class tag, minus verb-tagged
/// tokens whose lemma is on the auxiliary stoplist. Errors when there are
/// no non-punctuation tokens at all.
pub fn lexical_density(
    sentences: &[Sentence],
    classes: &TagClasses,
    aux_stoplist: &HashSet<String>,
) -> Result<f64> {
    let mut content = 0u64;
    let mut total = 0u64;
    for sentence in sentences {
        for token in &sentence.tokens {
            if classes.is_punctuation(&token.tag) {
                continue;
            }
            total += 1;
            if classes.is_content(&token.tag)
                && !(classes.is_verb(&token.tag) && aux_stoplist.contains(&token.lemma))
            {
                content += 1;
            }
        }
    }
    if total == 0 {
        return Err(Error::UndefinedDensity);
    }
    Ok(content as f64 / total as f64)
}

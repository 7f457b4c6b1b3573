use std::collections::HashSet;

use crate::error::{Error, Result};

/// Classification of POS codes into the classes the pipeline cares about.
///
/// The default set is the Penn Treebank tagset. Every tag classifies as
/// either content or non-content (`is_content` is total), and punctuation
/// tags are excluded from density denominators.
#[derive(Debug, Clone)]
pub struct TagClasses {
    pub verb_tags: HashSet<String>,
    pub noun_tags: HashSet<String>,
    pub determiner_tags: HashSet<String>,
    pub adjective_tags: HashSet<String>,
    pub adverb_tags: HashSet<String>,
    pub possessive_tags: HashSet<String>,
    pub cardinal_tags: HashSet<String>,
    pub content_tags: HashSet<String>,
    pub punctuation_tags: HashSet<String>,
}

fn set(tags: &[&str]) -> HashSet<String> {
    tags.iter().map(|t| t.to_string()).collect()
}

impl TagClasses {
    /// Penn Treebank defaults.
    pub fn penn() -> Self {
        let classes = TagClasses {
            verb_tags: set(&["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"]),
            noun_tags: set(&["NN", "NNS", "NNP", "NNPS"]),
            determiner_tags: set(&["DT", "PDT"]),
            adjective_tags: set(&["JJ", "JJR", "JJS"]),
            adverb_tags: set(&["RB", "RBR", "RBS"]),
            possessive_tags: set(&["PRP$", "POS"]),
            cardinal_tags: set(&["CD"]),
            content_tags: set(&[
                "NN", "NNS", "NNP", "NNPS", "JJ", "JJR", "JJS", "VB", "VBD", "VBG", "VBN",
                "VBP", "VBZ", "RB", "RBR", "RBS",
            ]),
            punctuation_tags: set(&[
                ".", ",", ":", "``", "''", "(", ")", "-LRB-", "-RRB-", "#", "$", "SYM",
            ]),
        };
        classes.validate().expect("builtin tagset is consistent");
        classes
    }

    /// Checks the structural invariants: verbs and nouns are disjoint, and
    /// content tags cover at least the noun and adjective classes.
    pub fn validate(&self) -> Result<()> {
        if let Some(t) = self.verb_tags.intersection(&self.noun_tags).next() {
            return Err(Error::Config(format!(
                "tag {t:?} is classified as both verb and noun"
            )));
        }
        for t in self.noun_tags.iter().chain(self.adjective_tags.iter()) {
            if !self.content_tags.contains(t) {
                return Err(Error::Config(format!(
                    "tag {t:?} is a noun/adjective tag but not a content tag"
                )));
            }
        }
        Ok(())
    }

    pub fn is_verb(&self, tag: &str) -> bool {
        self.verb_tags.contains(tag)
    }

    pub fn is_noun(&self, tag: &str) -> bool {
        self.noun_tags.contains(tag)
    }

    pub fn is_content(&self, tag: &str) -> bool {
        self.content_tags.contains(tag)
    }

    pub fn is_punctuation(&self, tag: &str) -> bool {
        self.punctuation_tags.contains(tag)
    }

    /// Tags allowed between a verb and its object NP: determiners,
    /// possessives, adjectives, adverbs and cardinals.
    pub fn is_np_premodifier(&self, tag: &str) -> bool {
        self.determiner_tags.contains(tag)
            || self.possessive_tags.contains(tag)
            || self.adjective_tags.contains(tag)
            || self.adverb_tags.contains(tag)
            || self.cardinal_tags.contains(tag)
    }
}

impl Default for TagClasses {
    fn default() -> Self {
        Self::penn()
    }
}

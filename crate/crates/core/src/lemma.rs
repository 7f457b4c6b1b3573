use std::collections::HashMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// One suffix-rewrite rule: if the word ends in `suffix` and at least
/// `min_stem` characters remain before it, rewrite the suffix to
/// `replacement`. Rules are ordered; the first match wins.
#[derive(Debug, Clone)]
pub struct SuffixRule {
    pub suffix: &'static str,
    pub replacement: &'static str,
    pub min_stem: usize,
}

const fn rule(suffix: &'static str, replacement: &'static str, min_stem: usize) -> SuffixRule {
    SuffixRule {
        suffix,
        replacement,
        min_stem,
    }
}

// Third-person singular present (VBZ). Sibilant-stem suffixes come before
// the generic es/s rules.
const VERB_S_RULES: &[SuffixRule] = &[
    rule("ies", "y", 2),
    rule("sses", "ss", 1),
    rule("ches", "ch", 1),
    rule("shes", "sh", 1),
    rule("xes", "x", 1),
    rule("zzes", "zz", 1),
    rule("oes", "o", 1),
    rule("es", "e", 2),
    rule("ss", "ss", 1),
    rule("us", "us", 1),
    rule("s", "", 2),
];

// Past tense / past participle (VBD, VBN). Ordered: -ied, doubled
// consonants, stem contexts that keep their spelling, stem contexts that
// restore a dropped "e", then the bare strip.
const VERB_ED_RULES: &[SuffixRule] = &[
    rule("ied", "y", 2),
    rule("ied", "ie", 1),
    // doubled final consonant: stopped -> stop, referred -> refer
    rule("bbed", "b", 1),
    rule("dded", "d", 1),
    rule("gged", "g", 1),
    rule("mmed", "m", 1),
    rule("nned", "n", 1),
    rule("pped", "p", 1),
    rule("rred", "r", 1),
    rule("tted", "t", 1),
    // doubled finals that are spelled that way in the base form
    rule("lled", "ll", 1),
    rule("ssed", "ss", 1),
    rule("ffed", "ff", 1),
    rule("zzed", "zz", 1),
    rule("cked", "ck", 1),
    // contexts where the bare strip is already right
    rule("eeded", "eed", 1),
    rule("eated", "eat", 0),
    rule("eared", "ear", 1),
    rule("eemed", "eem", 1),
    rule("ooked", "ook", 1),
    rule("ooded", "ood", 1),
    rule("oaded", "oad", 1),
    rule("eaded", "ead", 1),
    rule("oided", "oid", 1),
    rule("aided", "aid", 1),
    rule("eaked", "eak", 1),
    rule("oaked", "oak", 1),
    rule("ailed", "ail", 1),
    rule("ealed", "eal", 1),
    rule("oiled", "oil", 1),
    rule("eeled", "eel", 1),
    rule("aired", "air", 1),
    rule("oured", "our", 1),
    rule("lored", "lor", 1),
    rule("nored", "nor", 0),
    rule("vored", "vor", 1),
    rule("bored", "bor", 1),
    rule("loped", "lop", 1),
    rule("eeped", "eep", 1),
    // -eed bases (feed, succeed) stay put; -ee pasts (agreed, freed) are
    // irregular entries
    rule("eed", "eed", 1),
    // contexts where the base form ends in "e"
    rule("eded", "ede", 1),
    rule("ided", "ide", 1),
    rule("uded", "ude", 1),
    rule("aded", "ade", 1),
    rule("oded", "ode", 1),
    rule("ated", "ate", 2),
    rule("oted", "ote", 1),
    rule("uted", "ute", 1),
    rule("cited", "cite", 1),
    rule("vited", "vite", 1),
    rule("nited", "nite", 1),
    rule("aked", "ake", 1),
    rule("iked", "ike", 1),
    rule("oked", "oke", 1),
    rule("ced", "ce", 1),
    rule("ged", "ge", 1),
    rule("sed", "se", 1),
    rule("ued", "ue", 1),
    rule("ved", "ve", 1),
    rule("zed", "ze", 1),
    rule("amed", "ame", 1),
    rule("imed", "ime", 1),
    rule("omed", "ome", 1),
    rule("umed", "ume", 1),
    rule("ained", "ain", 1),
    rule("oined", "oin", 1),
    rule("ined", "ine", 1),
    rule("iled", "ile", 1),
    rule("uled", "ule", 1),
    rule("aled", "ale", 1),
    rule("ared", "are", 1),
    rule("ired", "ire", 1),
    rule("ored", "ore", 1),
    rule("ured", "ure", 1),
    rule("ibed", "ibe", 1),
    rule("iped", "ipe", 1),
    rule("aped", "ape", 1),
    rule("oped", "ope", 1),
    rule("yped", "ype", 1),
    // consonant+le stems: handled -> handle, resembled -> resemble
    rule("bled", "ble", 1),
    rule("cled", "cle", 1),
    rule("dled", "dle", 1),
    rule("gled", "gle", 1),
    rule("kled", "kle", 1),
    rule("pled", "ple", 1),
    rule("tled", "tle", 1),
    rule("zled", "zle", 1),
    rule("ed", "", 2),
];

// Gerund / present participle (VBG). Mirrors the -ed table on the shared
// stem contexts; -nging stems (singing, bringing) go through the irregular
// table instead because they collide with change/arrange.
const VERB_ING_RULES: &[SuffixRule] = &[
    rule("bbing", "b", 1),
    rule("dding", "d", 1),
    rule("gging", "g", 1),
    rule("mming", "m", 1),
    rule("nning", "n", 1),
    rule("pping", "p", 1),
    rule("rring", "r", 1),
    rule("tting", "t", 1),
    rule("lling", "ll", 1),
    rule("ssing", "ss", 1),
    rule("ffing", "ff", 1),
    rule("zzing", "zz", 1),
    rule("cking", "ck", 1),
    rule("eeding", "eed", 1),
    rule("eating", "eat", 0),
    rule("earing", "ear", 1),
    rule("eeming", "eem", 1),
    rule("ooking", "ook", 1),
    rule("ooding", "ood", 1),
    rule("oading", "oad", 1),
    rule("eading", "ead", 1),
    rule("oiding", "oid", 1),
    rule("aiding", "aid", 1),
    rule("eaking", "eak", 1),
    rule("oaking", "oak", 1),
    rule("ailing", "ail", 1),
    rule("ealing", "eal", 1),
    rule("oiling", "oil", 1),
    rule("eeling", "eel", 1),
    rule("airing", "air", 1),
    rule("ouring", "our", 1),
    rule("loring", "lor", 1),
    rule("noring", "nor", 0),
    rule("voring", "vor", 1),
    rule("boring", "bor", 1),
    rule("loping", "lop", 1),
    rule("eeping", "eep", 1),
    rule("eeing", "ee", 1),
    rule("eding", "ede", 1),
    rule("iding", "ide", 1),
    rule("uding", "ude", 1),
    rule("ading", "ade", 1),
    rule("oding", "ode", 1),
    rule("ating", "ate", 2),
    rule("oting", "ote", 1),
    rule("uting", "ute", 1),
    rule("citing", "cite", 1),
    rule("viting", "vite", 1),
    rule("niting", "nite", 1),
    rule("aking", "ake", 1),
    rule("iking", "ike", 1),
    rule("oking", "oke", 1),
    rule("cing", "ce", 1),
    rule("ging", "ge", 1),
    rule("sing", "se", 1),
    rule("uing", "ue", 1),
    rule("ving", "ve", 1),
    rule("zing", "ze", 1),
    rule("aming", "ame", 1),
    rule("iming", "ime", 1),
    rule("oming", "ome", 1),
    rule("uming", "ume", 1),
    rule("aining", "ain", 1),
    rule("oining", "oin", 1),
    rule("ining", "ine", 1),
    rule("iling", "ile", 1),
    rule("uling", "ule", 1),
    rule("aling", "ale", 1),
    rule("aring", "are", 1),
    rule("iring", "ire", 1),
    rule("oring", "ore", 1),
    rule("uring", "ure", 1),
    rule("ibing", "ibe", 1),
    rule("iping", "ipe", 1),
    rule("aping", "ape", 1),
    rule("oping", "ope", 1),
    rule("yping", "ype", 1),
    rule("bling", "ble", 1),
    rule("cling", "cle", 1),
    rule("dling", "dle", 1),
    rule("gling", "gle", 1),
    rule("kling", "kle", 1),
    rule("pling", "ple", 1),
    rule("tling", "tle", 1),
    rule("zling", "zle", 1),
    // -er and -ow stems strip cleanly; then bases that themselves end in
    // -ring or -wing (bring, spring, swing) stay put
    rule("ering", "er", 1),
    rule("owing", "ow", 1),
    rule("ewing", "ew", 1),
    rule("awing", "aw", 1),
    rule("ring", "ring", 0),
    rule("wing", "wing", 0),
    rule("ing", "", 2),
];

// Plural nouns (NNS). The -es rule only fires on sibilant stems that are
// spelled with the sibilant doubled or digraphed (class/box/church/wish);
// e-final stems like "use" and "case" reach their lemma through the plain
// -s strip instead.
const NOUN_PLURAL_RULES: &[SuffixRule] = &[
    rule("ies", "y", 2),
    rule("sses", "ss", 1),
    rule("ches", "ch", 1),
    rule("shes", "sh", 1),
    rule("xes", "x", 1),
    rule("zzes", "zz", 1),
    rule("zes", "ze", 1),
    rule("oes", "o", 2),
    rule("ics", "ics", 1),
    rule("ss", "ss", 1),
    rule("us", "us", 1),
    rule("is", "is", 1),
    rule("s", "", 3),
];

// Inflected irregular verb forms, mapped to their base form. Also carries a
// handful of forms the suffix rules would mangle (bringing, creating, ...).
const IRREGULAR_VERBS: &[(&str, &str)] = &[
    ("am", "be"),
    ("is", "be"),
    ("are", "be"),
    ("was", "be"),
    ("were", "be"),
    ("been", "be"),
    ("being", "be"),
    ("has", "have"),
    ("had", "have"),
    ("does", "do"),
    ("did", "do"),
    ("done", "do"),
    ("made", "make"),
    ("took", "take"),
    ("taken", "take"),
    ("gave", "give"),
    ("given", "give"),
    ("got", "get"),
    ("gotten", "get"),
    ("went", "go"),
    ("gone", "go"),
    ("came", "come"),
    ("saw", "see"),
    ("seen", "see"),
    ("knew", "know"),
    ("known", "know"),
    ("bore", "bear"),
    ("borne", "bear"),
    ("born", "bear"),
    ("arose", "arise"),
    ("arisen", "arise"),
    ("awoke", "awake"),
    ("awoken", "awake"),
    ("beaten", "beat"),
    ("became", "become"),
    ("began", "begin"),
    ("begun", "begin"),
    ("bent", "bend"),
    ("bit", "bite"),
    ("bitten", "bite"),
    ("blew", "blow"),
    ("blown", "blow"),
    ("broke", "break"),
    ("broken", "break"),
    ("brought", "bring"),
    ("built", "build"),
    ("burnt", "burn"),
    ("bought", "buy"),
    ("caught", "catch"),
    ("chose", "choose"),
    ("chosen", "choose"),
    ("clung", "cling"),
    ("crept", "creep"),
    ("dealt", "deal"),
    ("dug", "dig"),
    ("drew", "draw"),
    ("drawn", "draw"),
    ("drank", "drink"),
    ("drunk", "drink"),
    ("drove", "drive"),
    ("driven", "drive"),
    ("ate", "eat"),
    ("eaten", "eat"),
    ("fell", "fall"),
    ("fallen", "fall"),
    ("fed", "feed"),
    ("felt", "feel"),
    ("fought", "fight"),
    ("found", "find"),
    ("fled", "flee"),
    ("flung", "fling"),
    ("flew", "fly"),
    ("flown", "fly"),
    ("forbade", "forbid"),
    ("forbidden", "forbid"),
    ("forgot", "forget"),
    ("forgotten", "forget"),
    ("forgave", "forgive"),
    ("forgiven", "forgive"),
    ("froze", "freeze"),
    ("frozen", "freeze"),
    ("grew", "grow"),
    ("grown", "grow"),
    ("hung", "hang"),
    ("heard", "hear"),
    ("hid", "hide"),
    ("hidden", "hide"),
    ("held", "hold"),
    ("kept", "keep"),
    ("knelt", "kneel"),
    ("laid", "lay"),
    ("led", "lead"),
    ("leapt", "leap"),
    ("left", "leave"),
    ("lent", "lend"),
    ("lit", "light"),
    ("lost", "lose"),
    ("meant", "mean"),
    ("met", "meet"),
    ("overcame", "overcome"),
    ("oversaw", "oversee"),
    ("overseen", "oversee"),
    ("paid", "pay"),
    ("repaid", "repay"),
    ("rode", "ride"),
    ("ridden", "ride"),
    ("rang", "ring"),
    ("rung", "ring"),
    ("rose", "rise"),
    ("risen", "rise"),
    ("ran", "run"),
    ("said", "say"),
    ("sought", "seek"),
    ("sold", "sell"),
    ("sent", "send"),
    ("shook", "shake"),
    ("shaken", "shake"),
    ("shone", "shine"),
    ("shot", "shoot"),
    ("showed", "show"),
    ("shown", "show"),
    ("shrank", "shrink"),
    ("shrunk", "shrink"),
    ("sang", "sing"),
    ("sung", "sing"),
    ("sank", "sink"),
    ("sunk", "sink"),
    ("sat", "sit"),
    ("slept", "sleep"),
    ("slid", "slide"),
    ("spoke", "speak"),
    ("spoken", "speak"),
    ("sped", "speed"),
    ("spelt", "spell"),
    ("spent", "spend"),
    ("spilt", "spill"),
    ("spun", "spin"),
    ("spat", "spit"),
    ("sprang", "spring"),
    ("sprung", "spring"),
    ("stood", "stand"),
    ("stole", "steal"),
    ("stolen", "steal"),
    ("stuck", "stick"),
    ("stung", "sting"),
    ("stank", "stink"),
    ("stunk", "stink"),
    ("struck", "strike"),
    ("strove", "strive"),
    ("striven", "strive"),
    ("swore", "swear"),
    ("sworn", "swear"),
    ("swept", "sweep"),
    ("swam", "swim"),
    ("swum", "swim"),
    ("swung", "swing"),
    ("taught", "teach"),
    ("tore", "tear"),
    ("torn", "tear"),
    ("told", "tell"),
    ("thought", "think"),
    ("threw", "throw"),
    ("thrown", "throw"),
    ("undertook", "undertake"),
    ("undertaken", "undertake"),
    ("underwent", "undergo"),
    ("undergone", "undergo"),
    ("understood", "understand"),
    ("upheld", "uphold"),
    ("woke", "wake"),
    ("woken", "wake"),
    ("wore", "wear"),
    ("worn", "wear"),
    ("wove", "weave"),
    ("woven", "weave"),
    ("wept", "weep"),
    ("won", "win"),
    ("wound", "wind"),
    ("withdrew", "withdraw"),
    ("withdrawn", "withdraw"),
    ("withheld", "withhold"),
    ("withstood", "withstand"),
    ("wrote", "write"),
    ("written", "write"),
    ("read", "read"),
    ("misread", "misread"),
    ("spread", "spread"),
    ("shed", "shed"),
    ("wed", "wed"),
    ("bred", "breed"),
    ("agreed", "agree"),
    ("freed", "free"),
    ("decreed", "decree"),
    ("guaranteed", "guarantee"),
    // forms the suffix tables would otherwise mangle
    ("writing", "write"),
    ("creating", "create"),
    ("created", "create"),
    ("bringing", "bring"),
    ("singing", "sing"),
    ("hanging", "hang"),
    ("hanged", "hang"),
    ("ringing", "ring"),
    ("swinging", "swing"),
    ("springing", "spring"),
    ("belonging", "belong"),
    ("belonged", "belong"),
    ("longing", "long"),
    ("longed", "long"),
    ("banging", "bang"),
    ("banged", "bang"),
    ("dying", "die"),
    ("lying", "lie"),
    ("tying", "tie"),
    ("focused", "focus"),
    ("focusing", "focus"),
    ("sting", "sting"),
    ("cling", "cling"),
    ("fling", "fling"),
];

const IRREGULAR_NOUNS: &[(&str, &str)] = &[
    ("men", "man"),
    ("women", "woman"),
    ("children", "child"),
    ("feet", "foot"),
    ("teeth", "tooth"),
    ("mice", "mouse"),
    ("geese", "goose"),
    ("oxen", "ox"),
    ("criteria", "criterion"),
    ("phenomena", "phenomenon"),
    ("analyses", "analysis"),
    ("crises", "crisis"),
    ("theses", "thesis"),
    ("hypotheses", "hypothesis"),
    ("indices", "index"),
    ("appendices", "appendix"),
    ("matrices", "matrix"),
    ("vertices", "vertex"),
    ("series", "series"),
    ("species", "species"),
    ("news", "news"),
    ("movies", "movie"),
    ("shoes", "shoe"),
    ("toes", "toe"),
    ("foes", "foe"),
    ("buses", "bus"),
    ("gases", "gas"),
    ("viruses", "virus"),
    ("lenses", "lens"),
    ("lens", "lens"),
    ("knives", "knife"),
    ("wives", "wife"),
    ("lives", "life"),
    ("leaves", "leaf"),
    ("halves", "half"),
    ("selves", "self"),
    ("shelves", "shelf"),
    ("loaves", "loaf"),
    ("thieves", "thief"),
    ("calves", "calf"),
    ("wolves", "wolf"),
    ("scarves", "scarf"),
];

/// Rule-based English lemmatizer for verb and noun inflection.
///
/// Lookup order is irregular table first, then the ordered suffix rules for
/// the token's inflection (selected by tag), then the lowercased surface
/// unchanged. Application is deterministic: the first matching rule wins.
#[derive(Debug, Clone)]
pub struct LemmaRules {
    irregular_verbs: HashMap<String, String>,
    irregular_nouns: HashMap<String, String>,
    verb_s_rules: Vec<SuffixRule>,
    verb_ed_rules: Vec<SuffixRule>,
    verb_ing_rules: Vec<SuffixRule>,
    noun_plural_rules: Vec<SuffixRule>,
}

impl LemmaRules {
    /// The built-in English rule set.
    pub fn english() -> Self {
        LemmaRules {
            irregular_verbs: IRREGULAR_VERBS
                .iter()
                .map(|(s, l)| (s.to_string(), l.to_string()))
                .collect(),
            irregular_nouns: IRREGULAR_NOUNS
                .iter()
                .map(|(s, l)| (s.to_string(), l.to_string()))
                .collect(),
            verb_s_rules: VERB_S_RULES.to_vec(),
            verb_ed_rules: VERB_ED_RULES.to_vec(),
            verb_ing_rules: VERB_ING_RULES.to_vec(),
            noun_plural_rules: NOUN_PLURAL_RULES.to_vec(),
        }
    }

    /// Loads user overrides from a TSV file of
    /// `surface<TAB>verb|noun<TAB>lemma` rows. Returns the number of entries
    /// added. Overrides shadow the built-in irregular tables.
    pub fn load_overrides(&mut self, path: impl AsRef<Path>) -> Result<usize> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut added = 0;
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
            let surface = cols[0].to_lowercase();
            let lemma = cols[2].to_lowercase();
            if surface.is_empty() || lemma.is_empty() {
                return Err(Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: i + 1,
                    msg: "empty surface or lemma".to_string(),
                });
            }
            match cols[1] {
                "verb" => {
                    self.irregular_verbs.insert(surface, lemma);
                }
                "noun" => {
                    self.irregular_nouns.insert(surface, lemma);
                }
                other => {
                    return Err(Error::MalformedLine {
                        path: path.to_path_buf(),
                        line: i + 1,
                        msg: format!("tag class must be \"verb\" or \"noun\", got {other:?}"),
                    });
                }
            }
            added += 1;
        }
        Ok(added)
    }

    /// Lemma of a verb-tagged token.
    pub fn lemmatize_verb(&self, surface: &str, tag: &str) -> String {
        let word = surface.to_lowercase();
        if let Some(lemma) = self.irregular_verbs.get(&word) {
            return lemma.clone();
        }
        let rules: &[SuffixRule] = match tag {
            "VBZ" => &self.verb_s_rules,
            "VBD" | "VBN" => &self.verb_ed_rules,
            "VBG" => &self.verb_ing_rules,
            // VB and VBP are already base forms.
            _ => return word,
        };
        apply_rules(rules, &word).unwrap_or(word)
    }

    /// Lemma of a noun-tagged token. Proper nouns are lowercased only.
    pub fn lemmatize_noun(&self, surface: &str, tag: &str) -> String {
        let word = surface.to_lowercase();
        if let Some(lemma) = self.irregular_nouns.get(&word) {
            return lemma.clone();
        }
        if tag != "NNS" {
            return word;
        }
        apply_rules(&self.noun_plural_rules, &word).unwrap_or(word)
    }
}

impl Default for LemmaRules {
    fn default() -> Self {
        Self::english()
    }
}

fn apply_rules(rules: &[SuffixRule], word: &str) -> Option<String> {
    for r in rules {
        if let Some(stem) = word.strip_suffix(r.suffix) {
            if stem.chars().count() >= r.min_stem {
                return Some(format!("{stem}{}", r.replacement));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules() -> LemmaRules {
        LemmaRules::english()
    }

    #[test]
    fn irregular_lookup_first() {
        let r = rules();
        assert_eq!(r.lemmatize_verb("made", "VBD"), "make");
        assert_eq!(r.lemmatize_verb("Made", "VBD"), "make");
        assert_eq!(r.lemmatize_verb("took", "VBD"), "take");
        assert_eq!(r.lemmatize_verb("was", "VBD"), "be");
        assert_eq!(r.lemmatize_verb("did", "VBD"), "do");
        assert_eq!(r.lemmatize_verb("bore", "VBD"), "bear");
    }

    #[test]
    fn third_person_singular() {
        let r = rules();
        assert_eq!(r.lemmatize_verb("includes", "VBZ"), "include");
        assert_eq!(r.lemmatize_verb("makes", "VBZ"), "make");
        assert_eq!(r.lemmatize_verb("watches", "VBZ"), "watch");
        assert_eq!(r.lemmatize_verb("passes", "VBZ"), "pass");
        assert_eq!(r.lemmatize_verb("goes", "VBZ"), "go");
        assert_eq!(r.lemmatize_verb("fixes", "VBZ"), "fix");
        assert_eq!(r.lemmatize_verb("studies", "VBZ"), "study");
        assert_eq!(r.lemmatize_verb("dies", "VBZ"), "die");
        assert_eq!(r.lemmatize_verb("runs", "VBZ"), "run");
        assert_eq!(r.lemmatize_verb("bears", "VBZ"), "bear");
        assert_eq!(r.lemmatize_verb("uses", "VBZ"), "use");
    }

    #[test]
    fn past_forms() {
        let r = rules();
        assert_eq!(r.lemmatize_verb("rejected", "VBD"), "reject");
        assert_eq!(r.lemmatize_verb("walked", "VBD"), "walk");
        assert_eq!(r.lemmatize_verb("tried", "VBD"), "try");
        assert_eq!(r.lemmatize_verb("died", "VBD"), "die");
        assert_eq!(r.lemmatize_verb("stopped", "VBD"), "stop");
        assert_eq!(r.lemmatize_verb("called", "VBD"), "call");
        assert_eq!(r.lemmatize_verb("passed", "VBN"), "pass");
        assert_eq!(r.lemmatize_verb("used", "VBN"), "use");
        assert_eq!(r.lemmatize_verb("included", "VBD"), "include");
        assert_eq!(r.lemmatize_verb("produced", "VBD"), "produce");
        assert_eq!(r.lemmatize_verb("judged", "VBD"), "judge");
        assert_eq!(r.lemmatize_verb("changed", "VBD"), "change");
        assert_eq!(r.lemmatize_verb("proposed", "VBD"), "propose");
        assert_eq!(r.lemmatize_verb("resembled", "VBD"), "resemble");
        assert_eq!(r.lemmatize_verb("agreed", "VBD"), "agree");
        assert_eq!(r.lemmatize_verb("needed", "VBD"), "need");
        assert_eq!(r.lemmatize_verb("created", "VBD"), "create");
        assert_eq!(r.lemmatize_verb("visited", "VBD"), "visit");
        assert_eq!(r.lemmatize_verb("decided", "VBD"), "decide");
        assert_eq!(r.lemmatize_verb("caused", "VBD"), "cause");
        assert_eq!(r.lemmatize_verb("allowed", "VBD"), "allow");
        assert_eq!(r.lemmatize_verb("appeared", "VBD"), "appear");
    }

    #[test]
    fn ing_forms() {
        let r = rules();
        assert_eq!(r.lemmatize_verb("making", "VBG"), "make");
        assert_eq!(r.lemmatize_verb("taking", "VBG"), "take");
        assert_eq!(r.lemmatize_verb("working", "VBG"), "work");
        assert_eq!(r.lemmatize_verb("looking", "VBG"), "look");
        assert_eq!(r.lemmatize_verb("using", "VBG"), "use");
        assert_eq!(r.lemmatize_verb("having", "VBG"), "have");
        assert_eq!(r.lemmatize_verb("giving", "VBG"), "give");
        assert_eq!(r.lemmatize_verb("running", "VBG"), "run");
        assert_eq!(r.lemmatize_verb("changing", "VBG"), "change");
        assert_eq!(r.lemmatize_verb("bringing", "VBG"), "bring");
        assert_eq!(r.lemmatize_verb("eating", "VBG"), "eat");
        assert_eq!(r.lemmatize_verb("treating", "VBG"), "treat");
        assert_eq!(r.lemmatize_verb("including", "VBG"), "include");
        assert_eq!(r.lemmatize_verb("going", "VBG"), "go");
        assert_eq!(r.lemmatize_verb("doing", "VBG"), "do");
        assert_eq!(r.lemmatize_verb("studying", "VBG"), "study");
    }

    #[test]
    fn base_forms_pass_through() {
        let r = rules();
        assert_eq!(r.lemmatize_verb("need", "VB"), "need");
        assert_eq!(r.lemmatize_verb("succeed", "VB"), "succeed");
        assert_eq!(r.lemmatize_verb("focus", "VBP"), "focus");
        assert_eq!(r.lemmatize_verb("Make", "VB"), "make");
    }

    #[test]
    fn noun_plurals() {
        let r = rules();
        assert_eq!(r.lemmatize_noun("decisions", "NNS"), "decision");
        assert_eq!(r.lemmatize_noun("proposal", "NN"), "proposal");
        assert_eq!(r.lemmatize_noun("studies", "NNS"), "study");
        assert_eq!(r.lemmatize_noun("classes", "NNS"), "class");
        assert_eq!(r.lemmatize_noun("boxes", "NNS"), "box");
        assert_eq!(r.lemmatize_noun("churches", "NNS"), "church");
        assert_eq!(r.lemmatize_noun("wishes", "NNS"), "wish");
        assert_eq!(r.lemmatize_noun("cases", "NNS"), "case");
        assert_eq!(r.lemmatize_noun("uses", "NNS"), "use");
        assert_eq!(r.lemmatize_noun("heroes", "NNS"), "hero");
        assert_eq!(r.lemmatize_noun("sizes", "NNS"), "size");
        assert_eq!(r.lemmatize_noun("children", "NNS"), "child");
        assert_eq!(r.lemmatize_noun("men", "NNS"), "man");
        assert_eq!(r.lemmatize_noun("feelings", "NNS"), "feeling");
    }

    #[test]
    fn noun_singular_guards() {
        let r = rules();
        assert_eq!(r.lemmatize_noun("class", "NN"), "class");
        assert_eq!(r.lemmatize_noun("process", "NNS"), "process");
        assert_eq!(r.lemmatize_noun("status", "NNS"), "status");
        assert_eq!(r.lemmatize_noun("analysis", "NNS"), "analysis");
        assert_eq!(r.lemmatize_noun("physics", "NNS"), "physics");
        assert_eq!(r.lemmatize_noun("gas", "NNS"), "gas");
    }

    #[test]
    fn proper_nouns_lowercase_only() {
        let r = rules();
        assert_eq!(r.lemmatize_noun("Grolier", "NNP"), "grolier");
        assert_eq!(r.lemmatize_noun("Antipodes", "NNPS"), "antipodes");
    }

    #[test]
    fn idempotent_on_irregular_outputs() {
        let r = rules();
        for (_, lemma) in IRREGULAR_VERBS {
            for tag in ["VB", "VBD", "VBG", "VBN", "VBP", "VBZ"] {
                assert_eq!(
                    r.lemmatize_verb(lemma, tag),
                    *lemma,
                    "verb lemma {lemma:?} not stable under tag {tag}"
                );
            }
        }
        for (_, lemma) in IRREGULAR_NOUNS {
            for tag in ["NN", "NNS"] {
                assert_eq!(
                    r.lemmatize_noun(lemma, tag),
                    *lemma,
                    "noun lemma {lemma:?} not stable under tag {tag}"
                );
            }
        }
    }

    #[test]
    fn overrides_shadow_builtins() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("overrides.tsv");
        std::fs::write(&path, "wrought\tverb\twork\ndata\tnoun\tdatum\n").unwrap();
        let mut r = rules();
        assert_eq!(r.load_overrides(&path).unwrap(), 2);
        assert_eq!(r.lemmatize_verb("wrought", "VBD"), "work");
        assert_eq!(r.lemmatize_noun("data", "NNS"), "datum");
    }

    #[test]
    fn malformed_override_line_reports_position() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("overrides.tsv");
        std::fs::write(&path, "ok\tverb\tok\nbad line without tabs\n").unwrap();
        let mut r = rules();
        let err = r.load_overrides(&path).unwrap_err();
        assert!(err.to_string().contains(":2:"), "got: {err}");
    }
}

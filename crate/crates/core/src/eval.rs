use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::stats::{choice_ratio, Candidate};

/// One test case: a source phrase, its head nominal, the stem verb the
/// phrase rewrites to, and the support verb the phrase uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCase {
    pub source_phrase: String,
    pub nominal: String,
    pub stem_verb: String,
    pub expected_sv: String,
    /// Other verbs accepted by lenient scoring.
    pub alternatives: BTreeSet<String>,
    /// Excluded from lenient scoring for lack of usable corpus data.
    pub excluded_no_data: bool,
    pub reference_tag: String,
}

fn case(
    source_phrase: &str,
    nominal: &str,
    stem_verb: &str,
    expected_sv: &str,
    alternatives: &[&str],
    excluded_no_data: bool,
    reference_tag: &str,
) -> TestCase {
    TestCase {
        source_phrase: source_phrase.to_string(),
        nominal: nominal.to_string(),
        stem_verb: stem_verb.to_string(),
        expected_sv: expected_sv.to_string(),
        alternatives: alternatives.iter().map(|s| s.to_string()).collect(),
        excluded_no_data,
        reference_tag: reference_tag.to_string(),
    }
}

/// The embedded 18-case test set of light verb constructions.
pub fn default_testset() -> Vec<TestCase> {
    vec![
        case("make an attempt", "attempt", "attempt", "make", &[], false, "DD"),
        case("make a change", "change", "change", "make", &[], false, "DD"),
        case("make a concession", "concession", "concede", "make", &[], false, "DD"),
        case("make a demand", "demand", "demand", "make", &[], false, "GT"),
        case("make a distinction", "distinction", "distinguish", "make", &[], false, "DD"),
        case("have a drink (of)", "drink", "drink", "have", &[], true, "W"),
        case("have an effect (on)", "effect", "affect", "have", &[], false, "DD"),
        case("have a feeling", "feeling", "feel", "have", &[], false, "Ha"),
        case("make a gift (of)", "gift", "give", "make", &[], false, "Ha"),
        case("do harm (to)", "harm", "harm", "do", &["cause"], false, "Hu"),
        case("make a judgment", "judgment", "judge", "make", &[], false, "DD"),
        case("have a knowledge (of)", "knowledge", "know", "have", &[], false, "K"),
        case("make progress", "progress", "progress", "make", &[], false, "Ha"),
        case("make a proposal", "proposal", "propose", "make", &[], false, "GT"),
        case("bear a resemblance (to)", "resemblance", "resemble", "bear", &[], false, "Hu"),
        case("give a shove (to)", "shove", "shove", "give", &[], true, "Ha"),
        case("have a snooze", "snooze", "snooze", "have", &[], true, "Ha"),
        case("make use (of)", "use", "use", "make", &[], false, "DD"),
    ]
}

fn alternatives_field(alts: &BTreeSet<String>) -> String {
    if alts.is_empty() {
        "-".to_string()
    } else {
        alts.iter().cloned().collect::<Vec<_>>().join(",")
    }
}

/// Writes a test set in the TSV exchange format.
pub fn save_testset(cases: &[TestCase], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    for c in cases {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            c.source_phrase,
            c.nominal,
            c.stem_verb,
            c.expected_sv,
            alternatives_field(&c.alternatives),
            u8::from(c.excluded_no_data),
            c.reference_tag
        ));
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

/// Loads a test set from TSV:
/// `source_phrase nominal stem_verb expected_sv alternatives excluded ref`,
/// where alternatives is comma-separated or `-`, and excluded is 0 or 1.
pub fn load_testset(path: impl AsRef<Path>) -> Result<Vec<TestCase>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut cases = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 7 {
            return Err(Error::MalformedLine {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!("expected 7 tab-separated columns, got {}", cols.len()),
            });
        }
        let alternatives: BTreeSet<String> = if cols[4] == "-" {
            BTreeSet::new()
        } else {
            cols[4]
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.to_string())
                .collect()
        };
        let excluded_no_data = match cols[5] {
            "0" => false,
            "1" => true,
            other => {
                return Err(Error::MalformedLine {
                    path: path.to_path_buf(),
                    line: i + 1,
                    msg: format!("excluded flag must be 0 or 1, got {other:?}"),
                })
            }
        };
        cases.push(TestCase {
            source_phrase: cols[0].to_string(),
            nominal: cols[1].to_string(),
            stem_verb: cols[2].to_string(),
            expected_sv: cols[3].to_string(),
            alternatives,
            excluded_no_data,
            reference_tag: cols[6].to_string(),
        });
    }
    Ok(cases)
}

/// Outcome of one test case: the system's first and second choices, their
/// adjusted-frequency ratio, and the hit flags. `lenient_hit` is None for
/// cases excluded from lenient scoring.
#[derive(Debug, Clone)]
pub struct CaseResult {
    pub case: TestCase,
    pub choice1: Option<String>,
    pub choice2: Option<String>,
    pub ratio: Option<f64>,
    pub strict_hit: bool,
    pub lenient_hit: Option<bool>,
}

/// Scores for the whole test set. Strict counts rank-1 matches over all
/// cases; lenient drops the no-data cases and accepts listed alternatives.
#[derive(Debug, Clone)]
pub struct EvalReport {
    pub per_case: Vec<CaseResult>,
    pub strict: (usize, usize),
    pub lenient: (usize, usize),
}

/// Scores ranked predictions against the test set. Missing or empty
/// prediction lists count as no answer. With `exclude_stem` set, a case's
/// own stem verb is removed from its candidate list before choices are
/// read off.
pub fn score(
    cases: &[TestCase],
    predictions: &BTreeMap<String, Vec<Candidate>>,
    exclude_stem: bool,
) -> EvalReport {
    let mut per_case = Vec::with_capacity(cases.len());
    let mut strict_correct = 0;
    let mut lenient_correct = 0;
    let mut lenient_total = 0;
    for case in cases {
        let empty = Vec::new();
        let ranked = predictions.get(&case.nominal).unwrap_or(&empty);
        let filtered: Vec<&Candidate> = ranked
            .iter()
            .filter(|c| !exclude_stem || c.verb_lemma != case.stem_verb)
            .collect();
        let choice1 = filtered.first().map(|c| c.verb_lemma.clone());
        let choice2 = filtered.get(1).map(|c| c.verb_lemma.clone());
        let owned: Vec<Candidate> = filtered.iter().map(|c| (*c).clone()).collect();
        let ratio = choice_ratio(&owned);

        let strict_hit = choice1.as_deref() == Some(case.expected_sv.as_str());
        if strict_hit {
            strict_correct += 1;
        }
        let lenient_hit = if case.excluded_no_data {
            None
        } else {
            lenient_total += 1;
            let hit = choice1
                .as_deref()
                .is_some_and(|c| c == case.expected_sv || case.alternatives.contains(c));
            if hit {
                lenient_correct += 1;
            }
            Some(hit)
        };
        per_case.push(CaseResult {
            case: case.clone(),
            choice1,
            choice2,
            ratio,
            strict_hit,
            lenient_hit,
        });
    }
    EvalReport {
        per_case,
        strict: (strict_correct, cases.len()),
        lenient: (lenient_correct, lenient_total),
    }
}

/// Output style for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportStyle {
    #[default]
    Tsv,
    Pretty,
}

fn na(value: &Option<String>) -> &str {
    value.as_deref().unwrap_or("N/A")
}

fn ratio_str(ratio: Option<f64>) -> String {
    match ratio {
        Some(r) => format!("{r:.2}"),
        None => "N/A".to_string(),
    }
}

/// Renders a report. The pretty style mirrors the result-table layout
/// (Source Text, Verb, Choice 1, Choice 2, Ratio); the TSV style carries
/// the same columns plus hit flags, then the two score lines.
pub fn format_report(report: &EvalReport, style: ReportStyle) -> String {
    match style {
        ReportStyle::Tsv => {
            let mut out = String::from(
                "source_text\tverb\tchoice1\tchoice2\tratio\tstrict_hit\tlenient_hit\n",
            );
            for r in &report.per_case {
                let lenient = match r.lenient_hit {
                    None => "excluded".to_string(),
                    Some(hit) => u8::from(hit).to_string(),
                };
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.case.source_phrase,
                    r.case.stem_verb,
                    na(&r.choice1),
                    na(&r.choice2),
                    ratio_str(r.ratio),
                    u8::from(r.strict_hit),
                    lenient
                ));
            }
            out.push_str(&format!(
                "strict_score\t{}/{}\n",
                report.strict.0, report.strict.1
            ));
            out.push_str(&format!(
                "lenient_score\t{}/{}\n",
                report.lenient.0, report.lenient.1
            ));
            out
        }
        ReportStyle::Pretty => {
            let header = [
                "Source Text".to_string(),
                "Verb".to_string(),
                "Choice 1".to_string(),
                "Choice 2".to_string(),
                "Ratio".to_string(),
            ];
            let mut rows: Vec<[String; 5]> = vec![header];
            for r in &report.per_case {
                rows.push([
                    r.case.source_phrase.clone(),
                    r.case.stem_verb.clone(),
                    na(&r.choice1).to_string(),
                    na(&r.choice2).to_string(),
                    ratio_str(r.ratio),
                ]);
            }
            let mut widths = [0usize; 5];
            for row in &rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut out = String::new();
            for (ri, row) in rows.iter().enumerate() {
                let line = row
                    .iter()
                    .enumerate()
                    .map(|(i, cell)| format!("{cell:<width$}", width = widths[i]))
                    .collect::<Vec<_>>()
                    .join("  ");
                out.push_str(line.trim_end());
                out.push('\n');
                if ri == 0 {
                    let total: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
                    out.push_str(&"-".repeat(total));
                    out.push('\n');
                }
            }
            out.push_str(&format!(
                "strict: {}/{}  lenient: {}/{}\n",
                report.strict.0, report.strict.1, report.lenient.0, report.lenient.1
            ));
            out
        }
    }
}

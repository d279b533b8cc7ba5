//! Parsing of compound word lists and character whitelists.
//!
//! The input formats are deliberately plain: UTF-8 text, one entry per line,
//! `#` starts a comment line, blank lines are ignored, and both LF and CRLF
//! line endings are accepted. Every line is trimmed and NFC-normalized before
//! anything else, so a "character" throughout this crate means one Unicode
//! scalar value after NFC normalization.

use std::collections::BTreeSet;
use std::io::{BufRead, BufReader, Read, Write};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// One directed upper→lower character pair with its multiplicity.
///
/// Repeated occurrences of the same pair in a word list accumulate into a
/// single `Compound` with `multiplicity` equal to the number of occurrences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Compound {
    pub upper: char,
    pub lower: char,
    pub multiplicity: u32,
}

/// How [`parse_compounds`] treats malformed lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParsePolicy {
    /// Any malformed line aborts the parse with its line number.
    Strict,
    /// Malformed lines are skipped and recorded in the [`ParseReport`].
    Skip,
}

/// Bookkeeping for one parse: line counts and per-line warnings.
///
/// `accepted + skipped` equals the number of non-comment, non-blank lines.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ParseReport {
    pub accepted: usize,
    pub skipped: usize,
    /// `(line number, reason)` pairs, 1-based over the whole input.
    pub warnings: Vec<(usize, String)>,
}

/// A named, deduplicated, nonempty set of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSet {
    members: BTreeSet<char>,
    label: String,
}

impl CharSet {
    /// Builds a set from any character iterator; duplicates collapse silently.
    pub fn new(label: impl Into<String>, members: impl IntoIterator<Item = char>) -> Result<Self> {
        let members: BTreeSet<char> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyCharSet);
        }
        Ok(CharSet {
            members,
            label: label.into(),
        })
    }

    pub fn contains(&self, c: char) -> bool {
        self.members.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in ascending scalar-value order.
    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.members.iter().copied()
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Trim surrounding whitespace and apply Unicode NFC normalization.
pub fn normalize_line(line: &str) -> String {
    line.trim().nfc().collect()
}

fn is_comment(line: &str) -> bool {
    line.starts_with('#')
}

/// Parses a compound word list: one two-character word per line.
///
/// Duplicate (upper, lower) pairs accumulate multiplicity; output order is
/// first-appearance order. Under [`ParsePolicy::Skip`], lines that are not
/// exactly two scalars are recorded as warnings instead of aborting.
pub fn parse_compounds<R: Read>(
    stream: R,
    policy: ParsePolicy,
) -> Result<(Vec<Compound>, ParseReport)> {
    let reader = BufReader::new(stream);
    let mut pairs: IndexMap<(char, char), u32> = IndexMap::new();
    let mut report = ParseReport::default();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let text = normalize_line(&line?);
        if text.is_empty() || is_comment(&text) {
            continue;
        }
        let mut scalars = text.chars();
        match (scalars.next(), scalars.next(), scalars.next()) {
            (Some(upper), Some(lower), None) => {
                *pairs.entry((upper, lower)).or_insert(0) += 1;
                report.accepted += 1;
            }
            _ => {
                let reason = format!(
                    "expected a two-character word, found {} character(s) in {text:?}",
                    text.chars().count()
                );
                match policy {
                    ParsePolicy::Strict => return Err(Error::Parse { line: lineno, reason }),
                    ParsePolicy::Skip => {
                        report.skipped += 1;
                        report.warnings.push((lineno, reason));
                    }
                }
            }
        }
    }

    let compounds = pairs
        .into_iter()
        .map(|((upper, lower), multiplicity)| Compound {
            upper,
            lower,
            multiplicity,
        })
        .collect();
    Ok((compounds, report))
}

/// Loads a character whitelist: one character per line.
///
/// Duplicate entries are deduplicated and logged as warnings. A line with
/// more or fewer than one scalar is always an error, as is an empty result.
pub fn load_charset<R: Read>(stream: R, label: &str) -> Result<(CharSet, ParseReport)> {
    let reader = BufReader::new(stream);
    let mut members = BTreeSet::new();
    let mut report = ParseReport::default();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let text = normalize_line(&line?);
        if text.is_empty() || is_comment(&text) {
            continue;
        }
        let mut scalars = text.chars();
        match (scalars.next(), scalars.next()) {
            (Some(c), None) => {
                report.accepted += 1;
                if !members.insert(c) {
                    report.warnings.push((lineno, format!("duplicate character '{c}'")));
                }
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!(
                        "expected a single character, found {} in {text:?}",
                        text.chars().count()
                    ),
                });
            }
        }
    }

    if members.is_empty() {
        return Err(Error::EmptyCharSet);
    }
    Ok((
        CharSet {
            members,
            label: label.to_owned(),
        },
        report,
    ))
}

/// Writes compounds as TSV rows `upper<TAB>lower<TAB>multiplicity`, sorted
/// lexicographically by (upper, lower). UTF-8, LF line endings, no BOM.
pub fn write_edge_tsv<W: Write>(mut w: W, compounds: &[Compound]) -> Result<()> {
    let mut rows: Vec<&Compound> = compounds.iter().collect();
    rows.sort_by_key(|c| (c.upper, c.lower));
    for c in rows {
        write!(w, "{}\t{}\t{}\n", c.upper, c.lower, c.multiplicity)?;
    }
    Ok(())
}

/// Reads the TSV edge format back; duplicate pairs accumulate multiplicity.
pub fn read_edge_tsv<R: Read>(stream: R) -> Result<Vec<Compound>> {
    let reader = BufReader::new(stream);
    let mut pairs: IndexMap<(char, char), u32> = IndexMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let raw = line?;
        let text = normalize_line(&raw);
        if text.is_empty() || is_comment(&text) {
            continue;
        }
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                reason: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        }
        let upper = single_char(fields[0], lineno, "upper")?;
        let lower = single_char(fields[1], lineno, "lower")?;
        let multiplicity: u32 = fields[2].parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("multiplicity {:?} is not a positive integer", fields[2]),
        })?;
        if multiplicity == 0 {
            return Err(Error::Parse {
                line: lineno,
                reason: "multiplicity must be at least 1".into(),
            });
        }
        *pairs.entry((upper, lower)).or_insert(0) += multiplicity;
    }

    Ok(pairs
        .into_iter()
        .map(|((upper, lower), multiplicity)| Compound {
            upper,
            lower,
            multiplicity,
        })
        .collect())
}

fn single_char(field: &str, lineno: usize, name: &str) -> Result<char> {
    let mut scalars = field.chars();
    match (scalars.next(), scalars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::Parse {
            line: lineno,
            reason: format!("{name} field {field:?} is not a single character"),
        }),
    }
}

//! Pattern-based hyphenation.
//!
//! Implements the classic pattern voting scheme used by TeX and the
//! office-suite hyphenation dictionaries: patterns interleave letters with
//! digit weights, matching assigns each inter-letter position the maximum
//! weight over all matching patterns, and odd final weights become break
//! points. `.` in a pattern anchors it to the start or end of a word.
//!
//! The dictionary text format is the common one-pattern-per-line layout
//! with an optional encoding declaration on the first line and optional
//! `LEFTHYPHENMIN n` / `RIGHTHYPHENMIN n` headers. Replacement extensions
//! (`pattern/repl,...`) are reduced to their break positions so that the
//! concatenation of the returned pieces always equals the input word.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::stream::{Scheme, StreamError, UnitStream};

/// Word-edge anchor in patterns.
const DOT: char = '.';
/// Word characters equal to the anchor are masked with this sentinel so
/// they can never match edge-anchored patterns mid-word.
const MASKED: char = '\u{1}';

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    /// Encoding declaration other than UTF-8.
    UnsupportedEncoding(String),
    /// Two adjacent weight digits, an empty pattern, or a digits-only line.
    MalformedPattern { line: usize, pattern: String },
    /// `LEFTHYPHENMIN` / `RIGHTHYPHENMIN` header without a positive number.
    BadHeader { line: usize },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::UnsupportedEncoding(enc) => {
                write!(f, "unsupported dictionary encoding {enc:?} (only UTF-8)")
            }
            PatternError::MalformedPattern { line, pattern } => {
                write!(f, "line {line}: malformed pattern {pattern:?}")
            }
            PatternError::BadHeader { line } => {
                write!(f, "line {line}: hyphenmin header needs a positive integer")
            }
        }
    }
}

impl core::error::Error for PatternError {}

#[derive(Debug, Default)]
struct TrieNode {
    children: BTreeMap<char, usize>,
    /// Weights for a pattern ending at this node: weights[i] sits before
    /// the i-th pattern letter, the last entry after the final letter.
    weights: Option<Vec<u8>>,
}

/// Compiled hyphenation patterns plus the minimum unhyphenated prefix and
/// suffix lengths.
#[derive(Debug)]
pub struct PatternTrie {
    nodes: Vec<TrieNode>,
    left_min: usize,
    right_min: usize,
    pattern_count: usize,
    /// Language the dictionary is for; "tr" switches to Turkish case folding.
    language: String,
}

impl PatternTrie {
    /// Parse a dictionary from text. `language` controls case folding.
    pub fn parse(text: &str, language: &str) -> Result<Self, PatternError> {
        let mut trie = PatternTrie {
            nodes: alloc::vec![TrieNode::default()],
            left_min: 2,
            right_min: 2,
            pattern_count: 0,
            language: language.to_owned(),
        };
        let mut first_content_line = true;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim_start_matches('\u{feff}').trim();
            if line.is_empty() || line.starts_with('%') || line.starts_with('#') {
                continue;
            }
            if first_content_line {
                first_content_line = false;
                let upper = line.to_ascii_uppercase();
                if upper == "UTF-8" || upper == "UTF8" {
                    continue;
                }
                if looks_like_encoding(&upper) {
                    return Err(PatternError::UnsupportedEncoding(line.to_owned()));
                }
            }
            if let Some(rest) = line.strip_prefix("LEFTHYPHENMIN") {
                trie.left_min = parse_min(rest, lineno)?;
                continue;
            }
            if let Some(rest) = line.strip_prefix("RIGHTHYPHENMIN") {
                trie.right_min = parse_min(rest, lineno)?;
                continue;
            }
            // Compound-mode and multi-level directives are not part of the
            // break-position semantics this engine implements.
            if line
                .strip_prefix("COMPOUND")
                .is_some_and(|r| r.contains("HYPHENMIN"))
                || line == "NEXTLEVEL"
                || line.starts_with("NOHYPHEN")
            {
                continue;
            }
            // Replacement extensions: keep the break positions only.
            let pattern = line.split('/').next().unwrap_or(line);
            trie.insert(pattern, lineno)?;
        }
        Ok(trie)
    }

    fn insert(&mut self, pattern: &str, lineno: usize) -> Result<(), PatternError> {
        let mut letters: Vec<char> = Vec::new();
        let mut weights: Vec<u8> = alloc::vec![0];
        let mut previous_was_digit = false;
        for c in pattern.chars() {
            if let Some(d) = c.to_digit(10) {
                if previous_was_digit {
                    return Err(PatternError::MalformedPattern {
                        line: lineno,
                        pattern: pattern.to_owned(),
                    });
                }
                *weights.last_mut().expect("nonempty") = d as u8;
                previous_was_digit = true;
            } else {
                letters.push(fold_char(c, &self.language));
                weights.push(0);
                previous_was_digit = false;
            }
        }
        if letters.is_empty() {
            return Err(PatternError::MalformedPattern {
                line: lineno,
                pattern: pattern.to_owned(),
            });
        }
        // Weightless patterns (the en_US file carries ligature variants
        // without digits) cannot influence any break; skip them so the trie
        // only stores patterns with at least one nonzero weight.
        if weights.iter().all(|&w| w == 0) {
            return Ok(());
        }
        let mut node = 0;
        for &c in &letters {
            let next = match self.nodes[node].children.get(&c) {
                Some(&n) => n,
                None => {
                    self.nodes.push(TrieNode::default());
                    let n = self.nodes.len() - 1;
                    self.nodes[node].children.insert(c, n);
                    n
                }
            };
            node = next;
        }
        // Duplicate patterns keep the position-wise maximum.
        match &mut self.nodes[node].weights {
            Some(existing) => {
                for (slot, w) in existing.iter_mut().zip(&weights) {
                    *slot = (*slot).max(*w);
                }
            }
            none => *none = Some(weights),
        }
        self.pattern_count += 1;
        Ok(())
    }

    pub fn pattern_count(&self) -> usize {
        self.pattern_count
    }

    pub fn left_min(&self) -> usize {
        self.left_min
    }

    pub fn right_min(&self) -> usize {
        self.right_min
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    /// Break positions inside `word` (char indices, ascending), after the
    /// prefix and suffix minimums are applied.
    pub fn break_positions(&self, word: &str) -> Vec<usize> {
        self.break_positions_bounded(word, self.left_min, self.right_min)
    }

    fn break_positions_bounded(
        &self,
        word: &str,
        left_min: usize,
        right_min: usize,
    ) -> Vec<usize> {
        let n = word.chars().count();
        if n < left_min + right_min {
            return Vec::new();
        }
        // ".word." with masked in-word anchors.
        let mut dotted: Vec<char> = Vec::with_capacity(n + 2);
        dotted.push(DOT);
        for c in word.chars() {
            let folded = fold_char(c, &self.language);
            dotted.push(if folded == DOT { MASKED } else { folded });
        }
        dotted.push(DOT);

        // levels[i] votes on the boundary between word chars i-1 and i.
        let mut levels = alloc::vec![0u8; n + 1];
        for start in 0..dotted.len() {
            let mut node = 0;
            for &c in &dotted[start..] {
                match self.nodes[node].children.get(&c) {
                    Some(&next) => {
                        node = next;
                        if let Some(weights) = &self.nodes[node].weights {
                            for (k, &w) in weights.iter().enumerate() {
                                // Boundary before dotted index start+k,
                                // i.e. before word char start+k-1.
                                let Some(pos) = (start + k).checked_sub(1) else {
                                    continue;
                                };
                                if pos <= n && w > levels[pos] {
                                    levels[pos] = w;
                                }
                            }
                        }
                    }
                    None => break,
                }
            }
        }

        (1..n)
            .filter(|&i| i >= left_min && i + right_min <= n && levels[i] % 2 == 1)
            .collect()
    }

    /// Hyphenate one word into pieces. Pieces preserve the original casing
    /// and always concatenate back to the word.
    pub fn hyphenate_word(&self, word: &str) -> Vec<String> {
        let breaks = self.break_positions(word);
        split_at_char_indices(word, &breaks)
    }
}

/// Charset names seen on the first line of the common dictionary files.
fn looks_like_encoding(upper: &str) -> bool {
    const PREFIXES: &[&str] = &[
        "ISO8859", "ISO-8859", "MICROSOFT-CP", "WINDOWS-", "KOI8", "LATIN", "US-ASCII",
        "ASCII", "EUC-", "BIG5", "GB2312", "TIS-620",
    ];
    PREFIXES.iter().any(|p| upper.starts_with(p))
}

fn parse_min(rest: &str, lineno: usize) -> Result<usize, PatternError> {
    rest.trim()
        .parse::<usize>()
        .ok()
        .filter(|&v| v >= 1)
        .ok_or(PatternError::BadHeader { line: lineno })
}

/// Simple per-scalar case folding; Turkish dictionaries get the dotted and
/// dotless I pair.
fn fold_char(c: char, language: &str) -> char {
    if language == "tr" {
        match c {
            'I' => return '\u{131}',
            '\u{130}' => return 'i',
            _ => {}
        }
    }
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

fn split_at_char_indices(word: &str, breaks: &[usize]) -> Vec<String> {
    if breaks.is_empty() {
        return alloc::vec![word.to_string()];
    }
    let mut out = Vec::with_capacity(breaks.len() + 1);
    let mut piece = String::new();
    let mut next_break = 0;
    for (i, c) in word.chars().enumerate() {
        if next_break < breaks.len() && i == breaks[next_break] {
            out.push(core::mem::take(&mut piece));
            next_break += 1;
        }
        piece.push(c);
    }
    out.push(piece);
    out
}

/// Hyphenate every word and assemble a stream with `@` boundaries.
pub fn hyphenate_stream(
    words: &[Vec<String>],
    trie: &PatternTrie,
) -> Result<UnitStream, StreamError> {
    let language = if trie.language().is_empty() {
        "und"
    } else {
        trie.language()
    };
    let scheme = Scheme::hyphen(language).expect("language is non-empty");
    let pieces = words
        .iter()
        .map(|sentence| {
            sentence
                .iter()
                .map(|word| trie.hyphenate_word(word))
                .collect()
        })
        .collect();
    UnitStream::from_pieces(scheme, pieces)
}

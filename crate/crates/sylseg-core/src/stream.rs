//! Sentence-aligned unit streams and the `@`-separated text format.
//!
//! Every segmentation scheme in this crate produces a [`UnitStream`]: per
//! sentence, a flat sequence of non-empty unit strings in which the literal
//! token `@` marks the boundary between two source words. The textual form
//! writes one sentence per line with units separated by single spaces:
//!
//! ```text
//! A @ syl la ble @ con tains @ a @ sin gle @ vow el @ u nit
//! ```
//!
//! Joining the non-`@` units of a sentence and re-inserting a space at every
//! `@` reproduces the source words exactly, for every scheme except plain
//! characters where the same holds per scalar value.

use alloc::borrow::ToOwned;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

/// The word-boundary token.
pub const BOUNDARY: &str = "@";

/// Identifies which segmenter produced a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    Char,
    Syllable,
    Hyphen,
    Bpe,
    External,
}

impl SchemeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SchemeKind::Char => "char",
            SchemeKind::Syllable => "syllable",
            SchemeKind::Hyphen => "hyphen",
            SchemeKind::Bpe => "bpe",
            SchemeKind::External => "external",
        }
    }
}

/// A segmentation scheme: kind, language, BPE parameter and display label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scheme {
    kind: SchemeKind,
    language: String,
    parameter: u32,
    label: String,
}

/// Invalid scheme parameterisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemeError {
    /// BPE schemes need a target vocabulary of at least two symbols.
    BpeParameter(u32),
    /// Non-BPE schemes carry no parameter.
    UnexpectedParameter(SchemeKind, u32),
    /// Syllable and hyphenation schemes are tied to a language.
    MissingLanguage(SchemeKind),
}

impl fmt::Display for SchemeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeError::BpeParameter(p) => {
                write!(f, "bpe scheme needs a target vocabulary >= 2, got {p}")
            }
            SchemeError::UnexpectedParameter(kind, p) => {
                write!(f, "{} scheme takes no parameter, got {p}", kind.as_str())
            }
            SchemeError::MissingLanguage(kind) => {
                write!(f, "{} scheme needs a language code", kind.as_str())
            }
        }
    }
}

impl core::error::Error for SchemeError {}

impl Scheme {
    pub fn new(
        kind: SchemeKind,
        language: &str,
        parameter: u32,
        label: &str,
    ) -> Result<Self, SchemeError> {
        match kind {
            SchemeKind::Bpe if parameter < 2 => return Err(SchemeError::BpeParameter(parameter)),
            SchemeKind::Bpe => {}
            _ if parameter != 0 => {
                return Err(SchemeError::UnexpectedParameter(kind, parameter));
            }
            _ => {}
        }
        if matches!(kind, SchemeKind::Syllable | SchemeKind::Hyphen) && language.is_empty() {
            return Err(SchemeError::MissingLanguage(kind));
        }
        Ok(Scheme {
            kind,
            language: language.to_owned(),
            parameter,
            label: label.to_owned(),
        })
    }

    pub fn chars() -> Self {
        Scheme::new(SchemeKind::Char, "", 0, "char").expect("valid scheme")
    }

    pub fn syllable(language: &str) -> Result<Self, SchemeError> {
        let label = alloc::format!("syl-{language}");
        Scheme::new(SchemeKind::Syllable, language, 0, &label)
    }

    pub fn hyphen(language: &str) -> Result<Self, SchemeError> {
        let label = alloc::format!("hyph-{language}");
        Scheme::new(SchemeKind::Hyphen, language, 0, &label)
    }

    pub fn bpe(target_vocab: u32) -> Result<Self, SchemeError> {
        let label = alloc::format!("bpe-{target_vocab}");
        Scheme::new(SchemeKind::Bpe, "", target_vocab, &label)
    }

    pub fn external(label: &str) -> Self {
        Scheme::new(SchemeKind::External, "", 0, label).expect("valid scheme")
    }

    /// Word-per-unit pseudo scheme used by corpus statistics.
    pub fn words() -> Self {
        Scheme::external("word")
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_owned();
        self
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Violations of the stream invariants, found while building or decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StreamError {
    /// Unit at `line` (1-based, 0 when not from text) is empty.
    EmptyUnit { line: usize },
    /// Unit contains whitespace.
    WhitespaceInUnit { line: usize, unit: String },
    /// `@` at the start or end of a sentence, or two in a row.
    BoundaryPlacement { line: usize },
    /// A sentence with no units.
    EmptySentence { line: usize },
    /// A word piece handed to the assembler is empty or whitespace.
    BadPiece { word: String },
}

impl fmt::Display for StreamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StreamError::EmptyUnit { line } => write!(f, "line {line}: empty unit"),
            StreamError::WhitespaceInUnit { line, unit } => {
                write!(f, "line {line}: unit {unit:?} contains whitespace")
            }
            StreamError::BoundaryPlacement { line } => {
                write!(f, "line {line}: misplaced word boundary '@'")
            }
            StreamError::EmptySentence { line } => write!(f, "line {line}: empty sentence"),
            StreamError::BadPiece { word } => {
                write!(f, "segmenter produced an invalid piece for word {word:?}")
            }
        }
    }
}

impl core::error::Error for StreamError {}

/// Invalid UTF-8 input, reported with the byte offset of the first bad byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Utf8DecodeError {
    pub byte_offset: usize,
}

impl fmt::Display for Utf8DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid UTF-8 at byte offset {}", self.byte_offset)
    }
}

impl core::error::Error for Utf8DecodeError {}

/// Decode raw bytes as UTF-8, reporting the offending byte offset.
pub fn decode_utf8(bytes: &[u8]) -> Result<&str, Utf8DecodeError> {
    core::str::from_utf8(bytes).map_err(|e| Utf8DecodeError {
        byte_offset: e.valid_up_to(),
    })
}

/// True for the strings that would collide with the boundary token once
/// written out: `@`, `\@`, `\\@`, ...
fn collides_with_boundary(s: &str) -> bool {
    s.ends_with('@') && s[..s.len() - 1].chars().all(|c| c == '\\')
}

/// Escape a word piece so it can live next to boundary tokens.
fn escape_piece(s: &str) -> String {
    if collides_with_boundary(s) {
        let mut out = String::with_capacity(s.len() + 1);
        out.push('\\');
        out.push_str(s);
        out
    } else {
        s.to_owned()
    }
}

/// Undo [`escape_piece`].
fn unescape_unit(s: &str) -> &str {
    if s.len() > 1 && s.starts_with('\\') && collides_with_boundary(&s[1..]) {
        &s[1..]
    } else {
        s
    }
}

/// A sentence-aligned sequence of segmentation units under one scheme.
///
/// Invariants, enforced at every construction site:
/// - no unit is empty or contains whitespace;
/// - no sentence is empty;
/// - `@` never starts or ends a sentence and never appears twice in a row;
/// - no content unit is the bare string `@` (the escaped form `\@` stands in
///   for a source piece equal to the boundary token).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitStream {
    scheme: Scheme,
    sentences: Vec<Vec<String>>,
}

impl UnitStream {
    /// Assemble a stream from per-word piece lists, inserting `@` between
    /// words and escaping pieces that collide with the boundary token.
    pub fn from_pieces(
        scheme: Scheme,
        sentences: Vec<Vec<Vec<String>>>,
    ) -> Result<Self, StreamError> {
        let mut out = Vec::with_capacity(sentences.len());
        for words in sentences {
            if words.is_empty() {
                return Err(StreamError::EmptySentence { line: 0 });
            }
            let mut units = Vec::new();
            for (w, pieces) in words.iter().enumerate() {
                if w > 0 {
                    units.push(BOUNDARY.to_string());
                }
                if pieces.is_empty() {
                    return Err(StreamError::BadPiece {
                        word: String::new(),
                    });
                }
                for piece in pieces {
                    if piece.is_empty() || piece.chars().any(char::is_whitespace) {
                        return Err(StreamError::BadPiece {
                            word: pieces.concat(),
                        });
                    }
                    units.push(escape_piece(piece));
                }
            }
            out.push(units);
        }
        Ok(UnitStream {
            scheme,
            sentences: out,
        })
    }

    /// Wrap raw unit sentences, validating every invariant.
    pub fn from_units(
        scheme: Scheme,
        sentences: Vec<Vec<String>>,
    ) -> Result<Self, StreamError> {
        for units in &sentences {
            validate_sentence(units, 0)?;
        }
        Ok(UnitStream {
            scheme,
            sentences,
        })
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn sentences(&self) -> &[Vec<String>] {
        &self.sentences
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    /// Total units excluding boundaries.
    pub fn content_tokens(&self) -> u64 {
        self.sentences
            .iter()
            .flatten()
            .filter(|u| u.as_str() != BOUNDARY)
            .count() as u64
    }

    /// Total boundary tokens.
    pub fn boundary_tokens(&self) -> u64 {
        self.sentences
            .iter()
            .flatten()
            .filter(|u| u.as_str() == BOUNDARY)
            .count() as u64
    }

    /// Rebuild the word sentences by joining units at `@` boundaries.
    pub fn words(&self) -> Vec<Vec<String>> {
        self.sentences
            .iter()
            .map(|units| {
                let mut words = Vec::new();
                let mut current = String::new();
                for unit in units {
                    if unit == BOUNDARY {
                        words.push(core::mem::take(&mut current));
                    } else {
                        current.push_str(unescape_unit(unit));
                    }
                }
                words.push(current);
                words
            })
            .collect()
    }

    /// Write the stream in the `@`-separated text format, one sentence per
    /// line, trailing newline after every sentence.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        for units in &self.sentences {
            for (i, unit) in units.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(unit);
            }
            out.push('\n');
        }
        out
    }

    /// Parse the `@`-separated text format produced by [`UnitStream::encode`].
    ///
    /// Rejects empty units (double spaces), misplaced boundaries and empty
    /// lines other than a single trailing one. The caller names the scheme
    /// the file is understood to contain.
    pub fn decode(text: &str, scheme: Scheme) -> Result<Self, StreamError> {
        let mut sentences = Vec::new();
        let mut lines = text.split('\n').enumerate().peekable();
        while let Some((idx, line)) = lines.next() {
            let lineno = idx + 1;
            if line.is_empty() {
                if lines.peek().is_none() {
                    break; // trailing newline
                }
                return Err(StreamError::EmptySentence { line: lineno });
            }
            let mut units = Vec::new();
            for token in line.split(' ') {
                units.push(token.to_string());
            }
            validate_sentence(&units, lineno)?;
            sentences.push(units);
        }
        Ok(UnitStream {
            scheme,
            sentences,
        })
    }
}

fn validate_sentence(units: &[String], line: usize) -> Result<(), StreamError> {
    if units.is_empty() {
        return Err(StreamError::EmptySentence { line });
    }
    let mut prev_boundary = false;
    for (i, unit) in units.iter().enumerate() {
        if unit.is_empty() {
            return Err(StreamError::EmptyUnit { line });
        }
        if unit.chars().any(char::is_whitespace) {
            return Err(StreamError::WhitespaceInUnit {
                line,
                unit: unit.clone(),
            });
        }
        let is_boundary = unit == BOUNDARY;
        if is_boundary && (i == 0 || i == units.len() - 1 || prev_boundary) {
            return Err(StreamError::BoundaryPlacement { line });
        }
        prev_boundary = is_boundary;
    }
    Ok(())
}

/// Split raw text into sentences of words: one sentence per line, words on
/// Unicode whitespace, leading and trailing non-alphanumeric marks split off
/// as their own tokens. Internal marks (apostrophes, hyphens) stay attached.
pub fn tokenize_words(text: &str) -> Vec<Vec<String>> {
    let mut sentences = Vec::new();
    for line in text.split('\n') {
        let mut words = Vec::new();
        for chunk in line.split_whitespace() {
            split_chunk(chunk, &mut words);
        }
        if !words.is_empty() {
            sentences.push(words);
        }
    }
    sentences
}

fn split_chunk(chunk: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = chunk.chars().collect();
    let mut start = 0;
    let mut end = chars.len();
    while start < end && !chars[start].is_alphanumeric() {
        start += 1;
    }
    while end > start && !chars[end - 1].is_alphanumeric() {
        end -= 1;
    }
    for &c in &chars[..start] {
        out.push(c.to_string());
    }
    if start < end {
        out.push(chars[start..end].iter().collect());
    }
    for &c in &chars[end..] {
        out.push(c.to_string());
    }
}

/// Character segmentation: each word becomes its sequence of Unicode scalar
/// values.
pub fn to_char_stream(words: &[Vec<String>]) -> Result<UnitStream, StreamError> {
    let pieces = words
        .iter()
        .map(|sentence| {
            sentence
                .iter()
                .map(|word| word.chars().map(|c| c.to_string()).collect())
                .collect()
        })
        .collect();
    UnitStream::from_pieces(Scheme::chars(), pieces)
}

/// Word-per-unit stream, used for word-level corpus statistics.
pub fn to_word_stream(words: &[Vec<String>]) -> Result<UnitStream, StreamError> {
    let pieces = words
        .iter()
        .map(|sentence| sentence.iter().map(|w| alloc::vec![w.clone()]).collect())
        .collect();
    UnitStream::from_pieces(Scheme::words(), pieces)
}

/// Unit counts over a stream with deterministic dense ids.
///
/// Every unit including `@` is counted; the reported type and token
/// statistics exclude `@`, which is treated as formatting rather than
/// content. Ids run 0..len in descending count order, ties broken by
/// code-point order of the unit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    units: Vec<(String, u64)>,
    index: HashMap<String, u32>,
    total_tokens: u64,
}

impl Vocabulary {
    pub fn from_stream(stream: &UnitStream) -> Self {
        let mut counts: HashMap<&str, u64> = HashMap::new();
        let mut total = 0u64;
        for sentence in stream.sentences() {
            for unit in sentence {
                *counts.entry(unit.as_str()).or_insert(0) += 1;
                total += 1;
            }
        }
        let mut units: Vec<(String, u64)> = counts
            .into_iter()
            .map(|(u, c)| (u.to_owned(), c))
            .collect();
        units.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let index = units
            .iter()
            .enumerate()
            .map(|(i, (u, _))| (u.clone(), i as u32))
            .collect();
        Vocabulary {
            units,
            index,
            total_tokens: total,
        }
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn id(&self, unit: &str) -> Option<u32> {
        self.index.get(unit).copied()
    }

    pub fn count(&self, unit: &str) -> u64 {
        self.index
            .get(unit)
            .map(|&id| self.units[id as usize].1)
            .unwrap_or(0)
    }

    pub fn get(&self, id: u32) -> Option<(&str, u64)> {
        self.units.get(id as usize).map(|(u, c)| (u.as_str(), *c))
    }

    /// All tokens including boundaries.
    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    /// Distinct units excluding the boundary token.
    pub fn content_types(&self) -> usize {
        self.units.len() - usize::from(self.index.contains_key(BOUNDARY))
    }

    /// Total tokens excluding boundaries.
    pub fn content_tokens(&self) -> u64 {
        self.total_tokens - self.count(BOUNDARY)
    }

    /// Units in id order (descending count, ties by code point).
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.units.iter().map(|(u, c)| (u.as_str(), *c))
    }

    /// Iterate content units only.
    pub fn content_units(&self) -> impl Iterator<Item = (&str, u64)> {
        self.iter().filter(|(u, _)| *u != BOUNDARY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn words(sentences: &[&[&str]]) -> Vec<Vec<String>> {
        sentences
            .iter()
            .map(|s| s.iter().map(|w| w.to_string()).collect())
            .collect()
    }

    #[test]
    fn tokenize_splits_trailing_punctuation() {
        assert_eq!(
            tokenize_words("A syllable."),
            words(&[&["A", "syllable", "."]])
        );
    }

    #[test]
    fn tokenize_empty_input() {
        assert!(tokenize_words("").is_empty());
        assert!(tokenize_words("   \n\n  ").is_empty());
    }

    #[test]
    fn tokenize_keeps_internal_apostrophe() {
        assert_eq!(tokenize_words("don't  stop"), words(&[&["don't", "stop"]]));
    }

    #[test]
    fn tokenize_leading_and_multiple_marks() {
        assert_eq!(
            tokenize_words("\u{ab}wait\u{bb}... (ok)"),
            words(&[&[
                "\u{ab}", "wait", "\u{bb}", ".", ".", ".", "(", "ok", ")"
            ]])
        );
    }

    #[test]
    fn tokenize_splits_sentences_on_newline() {
        assert_eq!(
            tokenize_words("one two\nthree"),
            words(&[&["one", "two"], &["three"]])
        );
    }

    #[test]
    fn char_stream_basic() {
        let s = to_char_stream(&words(&[&["ab", "c"]])).unwrap();
        assert_eq!(s.sentences()[0], vec!["a", "b", "@", "c"]);
        assert_eq!(s.scheme().kind(), SchemeKind::Char);
    }

    #[test]
    fn char_stream_scalar_values_not_bytes() {
        let s = to_char_stream(&words(&[&["\u{fc}"]])).unwrap();
        assert_eq!(s.sentences()[0], vec!["\u{fc}"]);
    }

    #[test]
    fn encode_matches_boundary_format() {
        let pieces = vec![vec![
            vec!["A".to_string()],
            vec!["syl".to_string(), "la".to_string(), "ble".to_string()],
            vec!["con".to_string(), "tains".to_string()],
        ]];
        let s = UnitStream::from_pieces(Scheme::syllable("en").unwrap(), pieces).unwrap();
        assert_eq!(s.encode(), "A @ syl la ble @ con tains\n");
    }

    #[test]
    fn empty_stream_encodes_to_empty_file() {
        let s = UnitStream::from_units(Scheme::chars(), vec![]).unwrap();
        assert_eq!(s.encode(), "");
        let back = UnitStream::decode("", Scheme::chars()).unwrap();
        assert!(back.is_empty());
    }

    #[test]
    fn decode_rejects_misplaced_boundaries() {
        for bad in ["@ a", "a @", "a @ @ b", "@"] {
            let err = UnitStream::decode(bad, Scheme::chars()).unwrap_err();
            assert_eq!(err, StreamError::BoundaryPlacement { line: 1 });
        }
    }

    #[test]
    fn decode_rejects_empty_units_and_lines() {
        assert_eq!(
            UnitStream::decode("a  b", Scheme::chars()).unwrap_err(),
            StreamError::EmptyUnit { line: 1 }
        );
        assert_eq!(
            UnitStream::decode("a\n\nb", Scheme::chars()).unwrap_err(),
            StreamError::EmptySentence { line: 2 }
        );
    }

    #[test]
    fn boundary_word_is_escaped_and_restored() {
        let src = words(&[&["a", "@", "b"]]);
        let s = to_char_stream(&src).unwrap();
        assert_eq!(s.sentences()[0], vec!["a", "@", "\\@", "@", "b"]);
        assert_eq!(s.words(), src);
        let text = s.encode();
        let back = UnitStream::decode(&text, Scheme::chars()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn escaping_is_injective_for_backslash_forms() {
        let src = words(&[&["\\@", "x"]]);
        let s = to_word_stream(&src).unwrap();
        assert_eq!(s.sentences()[0], vec!["\\\\@", "@", "x"]);
        assert_eq!(s.words(), src);
    }

    #[test]
    fn vocabulary_counts_and_content_stats() {
        let s = UnitStream::from_units(
            Scheme::chars(),
            vec![vec![
                "a".to_string(),
                "b".to_string(),
                "@".to_string(),
                "a".to_string(),
            ]],
        )
        .unwrap();
        let v = Vocabulary::from_stream(&s);
        assert_eq!(v.count("a"), 2);
        assert_eq!(v.count("b"), 1);
        assert_eq!(v.count("@"), 1);
        assert_eq!(v.content_types(), 2);
        assert_eq!(v.content_tokens(), 3);
        assert_eq!(v.total_tokens(), 4);
    }

    #[test]
    fn vocabulary_order_is_count_then_code_point() {
        let s = UnitStream::from_units(
            Scheme::chars(),
            vec![vec![
                "b".to_string(),
                "b".to_string(),
                "a".to_string(),
                "c".to_string(),
            ]],
        )
        .unwrap();
        let v = Vocabulary::from_stream(&s);
        let order: Vec<&str> = v.iter().map(|(u, _)| u).collect();
        assert_eq!(order, vec!["b", "a", "c"]);
        assert_eq!(v.id("b"), Some(0));
        assert_eq!(v.id("a"), Some(1));
        assert_eq!(v.id("c"), Some(2));
    }

    #[test]
    fn scheme_invariants() {
        assert!(Scheme::bpe(1).is_err());
        assert!(Scheme::bpe(2).is_ok());
        assert!(Scheme::syllable("").is_err());
        assert!(Scheme::new(SchemeKind::Char, "", 3, "x").is_err());
    }

    #[test]
    fn utf8_error_reports_offset() {
        let err = decode_utf8(&[b'o', b'k', 0xff, b'x']).unwrap_err();
        assert_eq!(err.byte_offset, 2);
    }
}

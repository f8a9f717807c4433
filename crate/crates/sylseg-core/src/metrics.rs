//! Segmentation analyses: type overlap, vocabulary growth, corpus
//! statistics and type/token ratios, with CSV renderings.
//!
//! All analyses work on content units; the `@` boundary token is
//! formatting, not content, and never enters a type set or a token count
//! here.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::stream::{Scheme, UnitStream, Vocabulary, BOUNDARY};

/// Type overlap between two vocabularies.
///
/// `ratio_ab` is `(A intersect B) / B`, `ratio_ba` the reverse; the integer
/// fields keep the identity `ratio_ab * b_types == intersection` exact.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapReport {
    pub scheme_a: Scheme,
    pub scheme_b: Scheme,
    pub a_types: u64,
    pub b_types: u64,
    pub intersection: u64,
    pub ratio_ab: f64,
    pub ratio_ba: f64,
}

/// Exact set intersection of the content unit strings (case-sensitive).
pub fn overlap(
    scheme_a: &Scheme,
    vocab_a: &Vocabulary,
    scheme_b: &Scheme,
    vocab_b: &Vocabulary,
) -> OverlapReport {
    let a: HashSet<&str> = vocab_a.content_units().map(|(u, _)| u).collect();
    let b: HashSet<&str> = vocab_b.content_units().map(|(u, _)| u).collect();
    let intersection = a.intersection(&b).count() as u64;
    OverlapReport {
        scheme_a: scheme_a.clone(),
        scheme_b: scheme_b.clone(),
        a_types: a.len() as u64,
        b_types: b.len() as u64,
        intersection,
        ratio_ab: ratio(intersection, b.len() as u64, a.len() as u64),
        ratio_ba: ratio(intersection, a.len() as u64, b.len() as u64),
    }
}

fn ratio(intersection: u64, denominator: u64, other: u64) -> f64 {
    if denominator == 0 {
        // Empty against empty counts as full overlap.
        return if other == 0 { 1.0 } else { 0.0 };
    }
    intersection as f64 / denominator as f64
}

/// Accumulative type counts along the token sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCurve {
    pub scheme: Scheme,
    /// (content tokens seen, distinct content types seen), nondecreasing.
    pub points: Vec<(u64, u64)>,
}

/// Scan content tokens in corpus order and record the distinct type count
/// at every `interval` tokens and at the end.
pub fn growth(stream: &UnitStream, interval: u64) -> GrowthCurve {
    assert!(interval >= 1, "interval must be at least 1");
    let mut seen: HashSet<&str> = HashSet::new();
    let mut tokens: u64 = 0;
    let mut points: Vec<(u64, u64)> = Vec::new();
    for sentence in stream.sentences() {
        for unit in sentence {
            if unit == BOUNDARY {
                continue;
            }
            seen.insert(unit.as_str());
            tokens += 1;
            if tokens.is_multiple_of(interval) {
                points.push((tokens, seen.len() as u64));
            }
        }
    }
    if points.last().map(|&(t, _)| t) != Some(tokens) {
        points.push((tokens, seen.len() as u64));
    }
    GrowthCurve {
        scheme: stream.scheme().clone(),
        points,
    }
}

/// Content types per content token; the vocabulary-richness measure.
/// NaN on an empty vocabulary.
pub fn type_token_ratio(vocab: &Vocabulary) -> f64 {
    vocab.content_types() as f64 / vocab.content_tokens() as f64
}

/// One row of the corpus statistics table.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsRow {
    pub split: String,
    pub scheme: Scheme,
    pub tokens: u64,
    pub types: u64,
    pub ttr: f64,
}

impl StatsRow {
    pub fn from_stream(split: &str, stream: &UnitStream) -> StatsRow {
        let vocab = Vocabulary::from_stream(stream);
        StatsRow {
            split: String::from(split),
            scheme: stream.scheme().clone(),
            tokens: vocab.content_tokens(),
            types: vocab.content_types() as u64,
            ttr: type_token_ratio(&vocab),
        }
    }
}

/// `split,scheme,tokens,types,ttr` with one row per entry.
pub fn stats_csv(rows: &[StatsRow]) -> String {
    let mut out = String::from("split,scheme,tokens,types,ttr\n");
    for row in rows {
        out.push_str(&alloc::format!(
            "{},{},{},{},{:.6}\n",
            row.split,
            row.scheme,
            row.tokens,
            row.types,
            row.ttr
        ));
    }
    out
}

/// `scheme,tokens_seen,types_seen` with one row per sample point.
pub fn growth_csv(curves: &[GrowthCurve]) -> String {
    let mut out = String::from("scheme,tokens_seen,types_seen\n");
    for curve in curves {
        for &(tokens, types) in &curve.points {
            out.push_str(&alloc::format!("{},{tokens},{types}\n", curve.scheme));
        }
    }
    out
}

/// `scheme_a,scheme_b,a_types,b_types,intersection,ratio_ab,ratio_ba`.
pub fn overlap_csv(reports: &[OverlapReport]) -> String {
    let mut out = String::from("scheme_a,scheme_b,a_types,b_types,intersection,ratio_ab,ratio_ba\n");
    for r in reports {
        out.push_str(&alloc::format!(
            "{},{},{},{},{},{:.6},{:.6}\n",
            r.scheme_a,
            r.scheme_b,
            r.a_types,
            r.b_types,
            r.intersection,
            r.ratio_ab,
            r.ratio_ba
        ));
    }
    out
}

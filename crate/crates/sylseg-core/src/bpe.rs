//! Byte-pair-encoding trainer and encoder.
//!
//! Training greedily merges the most frequent adjacent symbol pair inside
//! words, weighted by word frequency, until the vocabulary (initial
//! alphabet plus merge results) reaches the target size or no pair occurs
//! at least twice. Ties are broken by lexicographic order of the pair, so
//! training is deterministic and independent of input order. Merges never
//! cross word boundaries; the stream assembler carries boundaries as `@`.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::stream::{Scheme, StreamError, UnitStream};

/// Merges below this frequency are never made.
const MIN_PAIR_FREQUENCY: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BpeError {
    EmptyCorpus,
    /// The target vocabulary must exceed the initial alphabet.
    TargetTooSmall { target: u32, alphabet: usize },
    /// Merge table file problems, with a 1-based line number.
    BadTableLine { line: usize },
    MissingTableHeader,
}

impl fmt::Display for BpeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BpeError::EmptyCorpus => write!(f, "cannot train on an empty corpus"),
            BpeError::TargetTooSmall { target, alphabet } => write!(
                f,
                "target vocabulary {target} does not exceed the {alphabet}-symbol alphabet"
            ),
            BpeError::BadTableLine { line } => {
                write!(f, "line {line}: expected 'left right' merge pair")
            }
            BpeError::MissingTableHeader => write!(f, "merge table must start with 'version 1'"),
        }
    }
}

impl core::error::Error for BpeError {}

/// An ordered list of merge operations plus the derived piece vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeTable {
    merges: Vec<(String, String)>,
    target_vocab: u32,
    alphabet: BTreeSet<String>,
}

impl MergeTable {
    pub fn merges(&self) -> &[(String, String)] {
        &self.merges
    }

    pub fn target_vocab(&self) -> u32 {
        self.target_vocab
    }

    pub fn alphabet(&self) -> &BTreeSet<String> {
        &self.alphabet
    }

    /// Alphabet plus merge results: every piece the encoder can emit.
    pub fn vocabulary(&self) -> BTreeSet<String> {
        let mut vocab = self.alphabet.clone();
        for (left, right) in &self.merges {
            let mut piece = String::with_capacity(left.len() + right.len());
            piece.push_str(left);
            piece.push_str(right);
            vocab.insert(piece);
        }
        vocab
    }

    pub fn vocab_size(&self) -> usize {
        self.vocabulary().len()
    }

    /// Serialize in the merge table text format.
    pub fn to_text(&self) -> String {
        let mut out = String::from("version 1\n");
        for (left, right) in &self.merges {
            out.push_str(left);
            out.push(' ');
            out.push_str(right);
            out.push('\n');
        }
        out
    }

    /// Parse the text format. The alphabet of a loaded table is derived
    /// from the merge operands; the target vocabulary is set to the size of
    /// the derived vocabulary.
    pub fn parse(text: &str) -> Result<Self, BpeError> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, header)) if header.trim() == "version 1" => {}
            _ => return Err(BpeError::MissingTableHeader),
        }
        let mut merges = Vec::new();
        let mut alphabet = BTreeSet::new();
        for (idx, line) in lines {
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(' ');
            let (left, right) = match (parts.next(), parts.next(), parts.next()) {
                (Some(l), Some(r), None) if !l.is_empty() && !r.is_empty() => (l, r),
                _ => return Err(BpeError::BadTableLine { line: idx + 1 }),
            };
            for part in [left, right] {
                for c in part.chars() {
                    alphabet.insert(c.to_string());
                }
            }
            merges.push((left.to_owned(), right.to_owned()));
        }
        let target = (alphabet.len() + merges.len()) as u32;
        Ok(MergeTable {
            merges,
            target_vocab: target.max(2),
            alphabet,
        })
    }
}

/// Heap entry: count first, then the lexicographically smallest pair wins
/// ties, then the interned ids of the pair itself.
type HeapEntry = (u64, Reverse<(String, String)>, (u32, u32));

/// Symbol-interned view of the training corpus.
struct Trainer {
    symbols: Vec<String>,
    words: Vec<(Vec<u32>, u64)>,
    pair_counts: HashMap<(u32, u32), u64>,
    pair_words: HashMap<(u32, u32), BTreeSet<usize>>,
    /// Lazily revalidated max-heap over pair counts.
    heap: BinaryHeap<HeapEntry>,
}

impl Trainer {
    fn new(word_counts: &BTreeMap<String, u64>) -> Self {
        let mut symbol_ids: HashMap<char, u32> = HashMap::new();
        let mut symbols: Vec<String> = Vec::new();
        let mut words = Vec::with_capacity(word_counts.len());
        for (word, &count) in word_counts {
            let ids: Vec<u32> = word
                .chars()
                .map(|c| {
                    *symbol_ids.entry(c).or_insert_with(|| {
                        symbols.push(c.to_string());
                        (symbols.len() - 1) as u32
                    })
                })
                .collect();
            words.push((ids, count));
        }
        let mut trainer = Trainer {
            symbols,
            words,
            pair_counts: HashMap::new(),
            pair_words: HashMap::new(),
            heap: BinaryHeap::new(),
        };
        for idx in 0..trainer.words.len() {
            let (ids, count) = &trainer.words[idx];
            let count = *count;
            let pairs: Vec<(u32, u32)> = ids.windows(2).map(|w| (w[0], w[1])).collect();
            for pair in pairs {
                *trainer.pair_counts.entry(pair).or_insert(0) += count;
                trainer.pair_words.entry(pair).or_default().insert(idx);
            }
        }
        let entries: Vec<((u32, u32), u64)> = trainer
            .pair_counts
            .iter()
            .map(|(&p, &c)| (p, c))
            .collect();
        for (pair, count) in entries {
            trainer.push_heap(pair, count);
        }
        trainer
    }

    fn pair_strings(&self, pair: (u32, u32)) -> (String, String) {
        (
            self.symbols[pair.0 as usize].clone(),
            self.symbols[pair.1 as usize].clone(),
        )
    }

    fn push_heap(&mut self, pair: (u32, u32), count: u64) {
        let strings = self.pair_strings(pair);
        self.heap.push((count, Reverse(strings), pair));
    }

    /// Pop the current best pair, skipping entries whose count went stale.
    fn best_pair(&mut self) -> Option<((u32, u32), u64)> {
        while let Some((count, _, pair)) = self.heap.pop() {
            let current = self.pair_counts.get(&pair).copied().unwrap_or(0);
            if current == count {
                return Some((pair, count));
            }
            if current > 0 {
                self.push_heap(pair, current);
            }
        }
        None
    }

    /// Replace every `pair` occurrence with `merged` in the words indexed
    /// by the pair, updating pair counts incrementally.
    fn apply_merge(&mut self, pair: (u32, u32), merged: u32) {
        let affected = self.pair_words.remove(&pair).unwrap_or_default();
        for idx in affected {
            let (old, count) = {
                let (ids, count) = &self.words[idx];
                (ids.clone(), *count)
            };
            let mut new = Vec::with_capacity(old.len());
            let mut i = 0;
            while i < old.len() {
                if i + 1 < old.len() && (old[i], old[i + 1]) == pair {
                    new.push(merged);
                    i += 2;
                } else {
                    new.push(old[i]);
                    i += 1;
                }
            }
            if new.len() == old.len() {
                continue;
            }
            let mut touched: HashSet<(u32, u32)> = HashSet::new();
            for w in old.windows(2) {
                let p = (w[0], w[1]);
                if let Some(c) = self.pair_counts.get_mut(&p) {
                    *c -= count.min(*c);
                    if *c == 0 {
                        self.pair_counts.remove(&p);
                        self.pair_words.remove(&p);
                    }
                }
                touched.insert(p);
            }
            for w in new.windows(2) {
                let p = (w[0], w[1]);
                *self.pair_counts.entry(p).or_insert(0) += count;
                self.pair_words.entry(p).or_default().insert(idx);
                touched.insert(p);
            }
            for p in touched {
                if let Some(&c) = self.pair_counts.get(&p) {
                    self.push_heap(p, c);
                }
            }
            self.words[idx].0 = new;
        }
    }
}

/// Train a merge table from word frequencies.
pub fn train_bpe(word_counts: &BTreeMap<String, u64>, target_vocab: u32) -> Result<MergeTable, BpeError> {
    if word_counts.is_empty() || word_counts.values().all(|&c| c == 0) {
        return Err(BpeError::EmptyCorpus);
    }
    let alphabet: BTreeSet<String> = word_counts
        .keys()
        .flat_map(|w| w.chars())
        .map(|c| c.to_string())
        .collect();
    if target_vocab as usize <= alphabet.len() {
        return Err(BpeError::TargetTooSmall {
            target: target_vocab,
            alphabet: alphabet.len(),
        });
    }
    let mut trainer = Trainer::new(word_counts);
    let mut merges = Vec::new();
    while alphabet.len() + merges.len() < target_vocab as usize {
        let Some((pair, count)) = trainer.best_pair() else {
            break;
        };
        if count < MIN_PAIR_FREQUENCY {
            break;
        }
        let (left, right) = trainer.pair_strings(pair);
        let mut merged = String::with_capacity(left.len() + right.len());
        merged.push_str(&left);
        merged.push_str(&right);
        trainer.symbols.push(merged);
        let merged_id = (trainer.symbols.len() - 1) as u32;
        trainer.pair_counts.remove(&pair);
        trainer.apply_merge(pair, merged_id);
        merges.push((left, right));
    }
    Ok(MergeTable {
        merges,
        target_vocab,
        alphabet,
    })
}

/// Collect word frequencies from word sentences.
pub fn word_counts(sentences: &[Vec<String>]) -> BTreeMap<String, u64> {
    let mut counts = BTreeMap::new();
    for sentence in sentences {
        for word in sentence {
            *counts.entry(word.clone()).or_insert(0) += 1;
        }
    }
    counts
}

/// Encode one word: start from scalar-value symbols and apply merges in
/// table order, leftmost occurrence first.
pub fn encode_word(word: &str, table: &MergeTable) -> Vec<String> {
    let mut pieces: Vec<String> = word.chars().map(|c| c.to_string()).collect();
    if pieces.len() < 2 {
        return pieces;
    }
    let ranks: HashMap<(&str, &str), usize> = table
        .merges
        .iter()
        .enumerate()
        .map(|(i, (l, r))| ((l.as_str(), r.as_str()), i))
        .collect();
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in 0..pieces.len() - 1 {
            if let Some(&rank) = ranks.get(&(pieces[i].as_str(), pieces[i + 1].as_str())) {
                if best.is_none_or(|(r, _)| rank < r) {
                    best = Some((rank, i));
                }
            }
        }
        let Some((_, i)) = best else { break };
        let right = pieces.remove(i + 1);
        pieces[i].push_str(&right);
        if pieces.len() < 2 {
            break;
        }
    }
    pieces
}

/// Encode every word and assemble a stream with `@` boundaries.
pub fn encode_stream(words: &[Vec<String>], table: &MergeTable) -> Result<UnitStream, StreamError> {
    let scheme = Scheme::bpe(table.target_vocab.max(2)).expect("target >= 2");
    let pieces = words
        .iter()
        .map(|sentence| {
            sentence
                .iter()
                .map(|word| encode_word(word, table))
                .collect()
        })
        .collect();
    UnitStream::from_pieces(scheme, pieces)
}

/// The standard target sweep plus the syllabary-sized setting, deduplicated
/// and ascending. Training runs once to the largest target; smaller tables
/// are prefixes of the same merge sequence.
pub fn sweep(
    word_counts: &BTreeMap<String, u64>,
    syllabary_size: u32,
) -> Result<Vec<MergeTable>, BpeError> {
    let mut targets: BTreeSet<u32> = [2500, 5000, 7500, 10000].into_iter().collect();
    targets.insert(syllabary_size);
    let max = *targets.iter().next_back().expect("nonempty");
    let full = train_bpe(word_counts, max)?;
    let alphabet_len = full.alphabet.len();
    let mut tables = Vec::with_capacity(targets.len());
    for target in targets {
        if target as usize <= alphabet_len {
            return Err(BpeError::TargetTooSmall {
                target,
                alphabet: alphabet_len,
            });
        }
        let keep = (target as usize - alphabet_len).min(full.merges.len());
        tables.push(MergeTable {
            merges: full.merges[..keep].to_vec(),
            target_vocab: target,
            alphabet: full.alphabet.clone(),
        });
    }
    Ok(tables)
}

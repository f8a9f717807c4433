//! Open-vocabulary n-gram language modelling over unit streams.
//!
//! The model is an interpolated modified Kneser-Ney n-gram over the units
//! of a stream: content units, the `@` boundary token and one end-of-
//! sentence event per sentence are all predicted. No unit is ever treated
//! as unknown: a test unit absent from the training vocabulary is scored
//! as the NEW event times a character-level spelling model of its scalar
//! values, so scoring is total over arbitrary strings.
//!
//! Evaluation reports cross-entropy per predicted unit together with the
//! character-level perplexity
//! `ppl_c = exp(ce * (|s_seg| + 1) / (|s_char| + 1))`, which makes models
//! over different unit granularities comparable. `|s_seg|` counts content
//! and boundary units of the whole test corpus, `|s_char|` the scalar
//! values of its words, and the shared `+1` accounts for the end of the
//! sequence; both conventions are applied once per corpus and identically
//! for every scheme.

mod kn;

use alloc::borrow::ToOwned;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use crate::stream::{Scheme, SchemeKind, UnitStream};
use kn::{KnModel, EOS, FIRST_SYMBOL, NEW, UNSEEN};

/// Order of the character-level spelling model.
const SPELLING_ORDER: usize = 5;
/// Probability floor for a spelling character never seen in training.
const SPELLING_CHAR_FLOOR: f64 = 1e-9;
/// Default n-gram order.
pub const DEFAULT_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LmError {
    EmptyTrainingData,
    /// Scoring a stream whose scheme kind differs from the training scheme.
    SchemeMismatch {
        model: SchemeKind,
        stream: SchemeKind,
    },
    /// Orders outside 1..=16.
    BadOrder(usize),
    /// Model file problems, with a 1-based line number.
    BadModelLine { line: usize, what: &'static str },
}

impl fmt::Display for LmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LmError::EmptyTrainingData => write!(f, "cannot train on an empty stream"),
            LmError::SchemeMismatch { model, stream } => write!(
                f,
                "model was trained on a {} stream, got {}",
                model.as_str(),
                stream.as_str()
            ),
            LmError::BadOrder(order) => write!(f, "order {order} not in 1..=16"),
            LmError::BadModelLine { line, what } => write!(f, "line {line}: {what}"),
        }
    }
}

impl core::error::Error for LmError {}

/// Interns unit strings; ids 0..3 are reserved for BOS, EOS and NEW.
#[derive(Debug, Clone, Default)]
struct SymbolTable {
    list: Vec<String>,
    map: HashMap<String, u32>,
}

impl SymbolTable {
    fn intern(&mut self, s: &str) -> u32 {
        match self.map.get(s) {
            Some(&id) => id,
            None => {
                let id = FIRST_SYMBOL + self.list.len() as u32;
                self.list.push(s.to_owned());
                self.map.insert(s.to_owned(), id);
                id
            }
        }
    }

    fn lookup(&self, s: &str) -> Option<u32> {
        self.map.get(s).copied()
    }

    fn len(&self) -> usize {
        self.list.len()
    }
}

/// Character-level KN model over unit spellings with an end-of-spelling
/// event; gives every string a positive probability.
#[derive(Debug, Clone)]
struct SpellingModel {
    chars: SymbolTable,
    kn: KnModel,
}

impl SpellingModel {
    /// Trained on the distinct unit spellings of the training stream.
    fn train(unit_types: &[String]) -> Self {
        let mut chars = SymbolTable::default();
        let sequences: Vec<Vec<u32>> = unit_types
            .iter()
            .map(|unit| {
                unit.chars()
                    .map(|c| chars.intern(c.encode_utf8(&mut [0; 4])))
                    .collect()
            })
            .collect();
        // Outcomes: every character plus the end of the spelling.
        let outcome_vocab = chars.len() + 1;
        let kn = KnModel::train(
            &sequences,
            SPELLING_ORDER.min(16),
            outcome_vocab,
            &HashSet::new(),
        );
        SpellingModel { chars, kn }
    }

    /// log p(spelling of `unit`), natural log. Characters unknown to the
    /// model contribute the flat floor instead of a model probability.
    fn log_prob(&self, unit: &str) -> f64 {
        let ids: Vec<u32> = unit
            .chars()
            .map(|c| {
                self.chars
                    .lookup(c.encode_utf8(&mut [0; 4]))
                    .unwrap_or(UNSEEN)
            })
            .collect();
        let mut log_p = 0.0;
        for (t, &id) in ids.iter().enumerate() {
            if id == UNSEEN {
                log_p += libm::log(SPELLING_CHAR_FLOOR);
            } else {
                log_p += libm::log(self.kn.prob(&ids[..t], id));
            }
        }
        log_p + libm::log(self.kn.prob(&ids, EOS))
    }
}

/// Open-vocabulary Kneser-Ney n-gram model over segmentation units.
#[derive(Debug, Clone)]
pub struct NgramModel {
    scheme: Scheme,
    units: SymbolTable,
    kn: KnModel,
    spelling: SpellingModel,
}

/// Evaluation result for one (model, test stream) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub scheme: Scheme,
    /// Cross-entropy in nats, averaged over every predicted unit
    /// (content, boundaries and one end-of-sentence per sentence).
    pub cross_entropy_nats_per_unit: f64,
    /// Content plus boundary units of the test corpus.
    pub total_units: u64,
    /// Scalar values of the test corpus words.
    pub total_chars: u64,
    /// Sentences scored (each contributes one end-of-sentence event).
    pub sentences: u64,
    pub ppl_c: f64,
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "scheme={} cross_entropy={:.6} units={} chars={} ppl_c={:.4}",
            self.scheme, self.cross_entropy_nats_per_unit, self.total_units, self.total_chars,
            self.ppl_c
        )
    }
}

/// Character-level perplexity: `exp(ce * (seg_len + 1) / (char_len + 1))`.
/// The shared extra unit stands for the end of the sequence.
pub fn ppl_c(cross_entropy: f64, seg_len: u64, char_len: u64) -> f64 {
    libm::exp(cross_entropy * (seg_len + 1) as f64 / (char_len + 1) as f64)
}

impl NgramModel {
    /// Count n-grams of the stream and build the model. Unit types seen
    /// exactly once also train the NEW event in their contexts, and the
    /// spelling model learns the distinct unit spellings.
    pub fn train(stream: &UnitStream, order: usize) -> Result<Self, LmError> {
        if !(1..=16).contains(&order) {
            return Err(LmError::BadOrder(order));
        }
        if stream.is_empty() {
            return Err(LmError::EmptyTrainingData);
        }
        let mut units = SymbolTable::default();
        let sequences: Vec<Vec<u32>> = stream
            .sentences()
            .iter()
            .map(|sentence| sentence.iter().map(|u| units.intern(u)).collect())
            .collect();
        let mut frequency: HashMap<u32, u64> = HashMap::new();
        for sequence in &sequences {
            for &id in sequence {
                *frequency.entry(id).or_insert(0) += 1;
            }
        }
        let singletons: HashSet<u32> = frequency
            .iter()
            .filter(|&(_, &c)| c == 1)
            .map(|(&id, _)| id)
            .collect();
        // Outcomes: every unit type plus EOS plus NEW.
        let outcome_vocab = units.len() + 2;
        let kn = KnModel::train(&sequences, order, outcome_vocab, &singletons);
        let spelling = SpellingModel::train(&units.list);
        Ok(NgramModel {
            scheme: stream.scheme().clone(),
            units,
            kn,
            spelling,
        })
    }

    pub fn order(&self) -> usize {
        self.kn.order()
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    /// Distinct unit types seen in training (boundary included).
    pub fn unit_types(&self) -> usize {
        self.units.len()
    }

    /// Size of the outcome space: unit types + end-of-sentence + NEW.
    pub fn outcome_vocab(&self) -> usize {
        self.kn.outcome_vocab()
    }

    /// p(unit | history) over the closed outcome space; `unit` may be
    /// `"</s>"` for the end-of-sentence event and `"<new>"` for the NEW
    /// event. Unknown history units weaken the context, unknown predicted
    /// units return the NEW probability (without the spelling factor).
    pub fn prob_unit(&self, history: &[&str], unit: &str) -> f64 {
        let ids: Vec<u32> = history
            .iter()
            .map(|u| self.units.lookup(u).unwrap_or(UNSEEN))
            .collect();
        let w = match unit {
            "</s>" => EOS,
            "<new>" => NEW,
            other => self.units.lookup(other).unwrap_or(NEW),
        };
        self.kn.prob(&ids, w)
    }

    /// The same model truncated to a lower order; equals training directly
    /// at that order on the same stream.
    pub fn with_order(&self, order: usize) -> Result<Self, LmError> {
        if order < 1 || order > self.kn.order() {
            return Err(LmError::BadOrder(order));
        }
        Ok(NgramModel {
            scheme: self.scheme.clone(),
            units: self.units.clone(),
            kn: self.kn.truncated(order),
            spelling: self.spelling.clone(),
        })
    }

    /// Score a test stream: cross-entropy over all predicted units and the
    /// character-level perplexity under the corpus-level length convention.
    pub fn score(&self, stream: &UnitStream) -> Result<EvalReport, LmError> {
        if stream.scheme().kind() != self.scheme.kind() {
            return Err(LmError::SchemeMismatch {
                model: self.scheme.kind(),
                stream: stream.scheme().kind(),
            });
        }
        let mut log_sum = 0.0;
        let mut predicted: u64 = 0;
        let mut total_units: u64 = 0;
        for sentence in stream.sentences() {
            let ids: Vec<u32> = sentence
                .iter()
                .map(|u| self.units.lookup(u).unwrap_or(UNSEEN))
                .collect();
            for (t, unit) in sentence.iter().enumerate() {
                let history = &ids[..t];
                if ids[t] == UNSEEN {
                    log_sum += libm::log(self.kn.prob(history, NEW));
                    log_sum += self.spelling.log_prob(unit);
                } else {
                    log_sum += libm::log(self.kn.prob(history, ids[t]));
                }
            }
            log_sum += libm::log(self.kn.prob(&ids, EOS));
            predicted += sentence.len() as u64 + 1;
            total_units += sentence.len() as u64;
        }
        let total_chars: u64 = stream
            .words()
            .iter()
            .flatten()
            .map(|w| w.chars().count() as u64)
            .sum();
        let cross_entropy = if predicted == 0 {
            0.0
        } else {
            -log_sum / predicted as f64
        };
        Ok(EvalReport {
            scheme: stream.scheme().clone(),
            cross_entropy_nats_per_unit: cross_entropy,
            total_units,
            total_chars,
            sentences: stream.len() as u64,
            ppl_c: ppl_c(cross_entropy, total_units, total_chars),
        })
    }

    /// Serialize as a versioned textual count dump. Loading rebuilds the
    /// model from the integer counts, so scores survive the round trip
    /// exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::from("sylseg-ngram-model v1\n");
        out.push_str(&alloc::format!(
            "scheme {} {} {} {}\n",
            self.scheme.kind().as_str(),
            if self.scheme.language().is_empty() {
                "-"
            } else {
                self.scheme.language()
            },
            self.scheme.parameter(),
            self.scheme.label(),
        ));
        out.push_str(&alloc::format!("order {}\n", self.kn.order()));
        out.push_str(&alloc::format!("units {}\n", self.units.list.len()));
        for unit in &self.units.list {
            out.push_str(unit);
            out.push('\n');
        }
        dump_counts(&mut out, "ngrams", self.kn.raw_counts());
        out.push_str(&alloc::format!(
            "spelling-units {}\n",
            self.spelling.chars.list.len()
        ));
        for c in &self.spelling.chars.list {
            out.push_str(c);
            out.push('\n');
        }
        dump_counts(&mut out, "spelling-ngrams", self.spelling.kn.raw_counts());
        out.push_str("end\n");
        out
    }

    /// Parse the textual count dump written by [`NgramModel::to_text`].
    pub fn parse(text: &str) -> Result<Self, LmError> {
        let mut reader = Reader {
            lines: text.lines(),
            line: 0,
        };

        let header = reader.next_line("missing header")?;
        if header != "sylseg-ngram-model v1" {
            return Err(reader.error("unrecognized model header"));
        }
        let scheme_line = reader.next_line("missing scheme")?;
        let scheme =
            parse_scheme_line(scheme_line).ok_or_else(|| reader.error("bad scheme line"))?;
        let order_line = reader.next_line("missing order")?;
        let order: usize = field(order_line, "order")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| reader.error("bad order line"))?;
        if !(1..=16).contains(&order) {
            return Err(LmError::BadOrder(order));
        }

        let mut units = SymbolTable::default();
        let units_line = reader.next_line("missing units")?;
        let unit_count: usize = field(units_line, "units")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| reader.error("bad units line"))?;
        for _ in 0..unit_count {
            let unit = reader.next_line("missing unit")?;
            units.intern(unit);
        }

        let raw = parse_counts(&mut reader, "ngrams", order)?;

        let mut chars = SymbolTable::default();
        let chars_line = reader.next_line("missing spelling units")?;
        let char_count: usize = field(chars_line, "spelling-units")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| reader.error("bad spelling-units line"))?;
        for _ in 0..char_count {
            let c = reader.next_line("missing spelling unit")?;
            chars.intern(c);
        }

        let spelling_raw = parse_counts(&mut reader, "spelling-ngrams", SPELLING_ORDER)?;
        if reader.next_line("missing end marker")? != "end" {
            return Err(reader.error("expected end marker"));
        }

        let outcome_vocab = units.len() + 2;
        let kn = KnModel::from_raw(raw, order, outcome_vocab);
        let spelling_kn = KnModel::from_raw(spelling_raw, SPELLING_ORDER, chars.len() + 1);
        Ok(NgramModel {
            scheme,
            units,
            kn,
            spelling: SpellingModel {
                chars,
                kn: spelling_kn,
            },
        })
    }
}

struct Reader<'a> {
    lines: core::str::Lines<'a>,
    line: usize,
}

impl<'a> Reader<'a> {
    fn next_line(&mut self, what: &'static str) -> Result<&'a str, LmError> {
        self.line += 1;
        self.lines.next().ok_or(LmError::BadModelLine {
            line: self.line,
            what,
        })
    }

    fn error(&self, what: &'static str) -> LmError {
        LmError::BadModelLine {
            line: self.line,
            what,
        }
    }
}

fn field<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix(key)?.strip_prefix(' ').map(str::trim)
}

fn parse_scheme_line(line: &str) -> Option<Scheme> {
    let rest = line.strip_prefix("scheme ")?;
    let mut parts = rest.splitn(4, ' ');
    let kind = match parts.next()? {
        "char" => SchemeKind::Char,
        "syllable" => SchemeKind::Syllable,
        "hyphen" => SchemeKind::Hyphen,
        "bpe" => SchemeKind::Bpe,
        "external" => SchemeKind::External,
        _ => return None,
    };
    let language = match parts.next()? {
        "-" => "",
        l => l,
    };
    let parameter: u32 = parts.next()?.parse().ok()?;
    let label = parts.next().unwrap_or("");
    Scheme::new(kind, language, parameter, label).ok()
}

/// One raw k-gram count table per order.
type RawTables = Vec<HashMap<alloc::boxed::Box<[u32]>, u64>>;

fn dump_counts(out: &mut String, section: &str, raw: &[HashMap<alloc::boxed::Box<[u32]>, u64>]) {
    for (k, table) in raw.iter().enumerate() {
        out.push_str(&alloc::format!("{section} {} {}\n", k + 1, table.len()));
        let mut grams: Vec<_> = table.iter().collect();
        grams.sort_unstable_by(|a, b| a.0.cmp(b.0));
        for (gram, count) in grams {
            for id in gram.iter() {
                out.push_str(&id.to_string());
                out.push(' ');
            }
            out.push_str(&count.to_string());
            out.push('\n');
        }
    }
}

fn parse_counts(
    reader: &mut Reader<'_>,
    section: &'static str,
    order: usize,
) -> Result<RawTables, LmError> {
    let mut raw = Vec::with_capacity(order);
    for k in 1..=order {
        let header = reader.next_line("missing count section")?;
        let mut parts = header.split(' ');
        if parts.next() != Some(section) {
            return Err(reader.error("bad count section header"));
        }
        let k_read: Option<usize> = parts.next().and_then(|v| v.parse().ok());
        let entries: Option<usize> = parts.next().and_then(|v| v.parse().ok());
        let (Some(k_read), Some(entries)) = (k_read, entries) else {
            return Err(reader.error("bad count section header"));
        };
        if k_read != k {
            return Err(reader.error("count section out of order"));
        }
        let mut table = HashMap::with_capacity(entries);
        for _ in 0..entries {
            let row = reader.next_line("missing count row")?;
            let mut numbers = row
                .split(' ')
                .map(|v| v.parse::<u64>())
                .collect::<Result<Vec<u64>, _>>()
                .map_err(|_| reader.error("bad count row"))?;
            if numbers.len() != k + 1 {
                return Err(reader.error("bad count row arity"));
            }
            let count = numbers.pop().expect("nonempty");
            let gram: Vec<u32> = numbers.into_iter().map(|v| v as u32).collect();
            table.insert(gram.into_boxed_slice(), count);
        }
        raw.push(table);
    }
    Ok(raw)
}

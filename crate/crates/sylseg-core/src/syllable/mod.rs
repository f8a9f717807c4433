//! Rule-based syllabification.
//!
//! One shared algorithm serves every language: scan the word for vowel
//! nuclei (grouping listed diphthongs, long vowels and offglide teams into a
//! single nucleus), then split each intervocalic consonant cluster by the
//! maximal legal onset — the longest suffix of the cluster found in the
//! language's onset table starts the next syllable, a single consonant unit
//! otherwise. Digraphs count as one consonant unit and are never divided.
//! Everything language-specific lives in a [`LanguageRules`] table.
//!
//! Built-in tables cover English, Spanish, Russian, Finnish and Turkish;
//! additional languages can be supplied as rule files, see
//! [`LanguageRules::parse`].

mod tables;

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::stream::{Scheme, StreamError, UnitStream};

/// Word-internal separators that split a word into independently
/// syllabified parts; the separator attaches to the preceding piece.
const SEPARATORS: [char; 3] = ['-', '\'', '\u{2019}'];

/// Language-specific behaviour toggles.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RuleFlags {
    /// A word-final `e` after a consonant is not a nucleus when the word
    /// already has one (English "late").
    pub silent_final_e: bool,
    /// A final consonant+"le" forms its own syllable (English "ta-ble").
    pub consonant_le: bool,
    /// `y` opens a nucleus after a consonant (English "syl-la-ble").
    pub y_nucleus_after_consonant: bool,
    /// `й` never starts a syllable; it closes the preceding one.
    pub j_closes_syllable: bool,
}

/// Syllabification tables for one language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageRules {
    language: String,
    vowels: BTreeSet<char>,
    /// Vowels that only act as a nucleus in special positions (English y).
    semivowels: BTreeSet<char>,
    /// Two-vowel sequences treated as one nucleus.
    diphthongs: BTreeSet<(char, char)>,
    /// Vowel + consonant teams absorbed into the nucleus (English "ow").
    offglides: BTreeSet<(char, char)>,
    /// Consonant clusters that may start a syllable.
    onsets: BTreeSet<Vec<char>>,
    /// Two-consonant sequences treated as one unit, never split.
    digraphs: BTreeSet<(char, char)>,
    flags: RuleFlags,
}

/// Problems in a rules table or rules file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RulesError {
    NoVowels,
    /// A diphthong member is not in the vowel set.
    DiphthongNotVowels(String),
    /// A digraph or onset contains a vowel.
    ConsonantTableHasVowel(String),
    /// An offglide team must be vowel + non-vowel.
    BadOffglide(String),
    /// Rules file line without a `key: value` shape.
    MalformedLine { line: usize },
    UnknownKey { line: usize, key: String },
    /// Entry that must be exactly two characters.
    BadPairEntry { line: usize, entry: String },
    UnknownFlag { line: usize, flag: String },
    UnknownLanguage(String),
}

impl fmt::Display for RulesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RulesError::NoVowels => write!(f, "rules define no vowels"),
            RulesError::DiphthongNotVowels(d) => {
                write!(f, "diphthong {d:?} contains a non-vowel")
            }
            RulesError::ConsonantTableHasVowel(s) => {
                write!(f, "onset or digraph {s:?} contains a vowel")
            }
            RulesError::BadOffglide(s) => {
                write!(f, "offglide {s:?} must be a vowel followed by a non-vowel")
            }
            RulesError::MalformedLine { line } => {
                write!(f, "line {line}: expected 'key: values'")
            }
            RulesError::UnknownKey { line, key } => {
                write!(f, "line {line}: unknown key {key:?}")
            }
            RulesError::BadPairEntry { line, entry } => {
                write!(f, "line {line}: {entry:?} must be exactly two characters")
            }
            RulesError::UnknownFlag { line, flag } => {
                write!(f, "line {line}: unknown flag {flag:?}")
            }
            RulesError::UnknownLanguage(l) => {
                write!(f, "no built-in syllabification rules for {l:?}")
            }
        }
    }
}

impl core::error::Error for RulesError {}

impl LanguageRules {
    /// Built-in tables: `en`, `es`, `ru`, `fi`, `tr`.
    pub fn builtin(language: &str) -> Result<Self, RulesError> {
        tables::builtin(language).ok_or_else(|| RulesError::UnknownLanguage(language.to_owned()))
    }

    /// Languages with built-in tables.
    pub fn builtin_languages() -> &'static [&'static str] {
        tables::BUILTIN_LANGUAGES
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        language: &str,
        vowels: &str,
        semivowels: &str,
        diphthongs: &[&str],
        offglides: &[&str],
        onsets: &[&str],
        digraphs: &[&str],
        flags: RuleFlags,
    ) -> Result<Self, RulesError> {
        let rules = LanguageRules {
            language: language.to_owned(),
            vowels: vowels.chars().collect(),
            semivowels: semivowels.chars().collect(),
            diphthongs: pair_set(diphthongs)?,
            offglides: pair_set(offglides)?,
            onsets: onsets.iter().map(|o| o.chars().collect()).collect(),
            digraphs: pair_set(digraphs)?,
            flags,
        };
        rules.validate()?;
        Ok(rules)
    }

    /// Parse a rules file: one `key: value value ...` entry per line, `#`
    /// comments. Keys: `language`, `vowels`, `semivowels`, `diphthongs`,
    /// `offglides`, `onsets`, `digraphs`, `flags`.
    pub fn parse(text: &str) -> Result<Self, RulesError> {
        let mut fields: BTreeMap<&str, (usize, Vec<&str>)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let lineno = idx + 1;
            let (key, value) = line
                .split_once(':')
                .ok_or(RulesError::MalformedLine { line: lineno })?;
            let key = key.trim();
            if !matches!(
                key,
                "language"
                    | "vowels"
                    | "semivowels"
                    | "diphthongs"
                    | "offglides"
                    | "onsets"
                    | "digraphs"
                    | "flags"
            ) {
                return Err(RulesError::UnknownKey {
                    line: lineno,
                    key: key.to_owned(),
                });
            }
            fields.insert(key, (lineno, value.split_whitespace().collect()));
        }
        let list = |key: &str| -> Vec<&str> {
            fields.get(key).map(|(_, v)| v.clone()).unwrap_or_default()
        };
        let mut flags = RuleFlags::default();
        if let Some((lineno, names)) = fields.get("flags") {
            for name in names {
                match *name {
                    "silent-final-e" => flags.silent_final_e = true,
                    "consonant-le" => flags.consonant_le = true,
                    "y-after-consonant" => flags.y_nucleus_after_consonant = true,
                    "j-closes-syllable" => flags.j_closes_syllable = true,
                    other => {
                        return Err(RulesError::UnknownFlag {
                            line: *lineno,
                            flag: other.to_owned(),
                        })
                    }
                }
            }
        }
        let pair_entries = |key: &str| -> Result<BTreeSet<(char, char)>, RulesError> {
            let (lineno, entries) = match fields.get(key) {
                Some((l, v)) => (*l, v.clone()),
                None => return Ok(BTreeSet::new()),
            };
            let mut set = BTreeSet::new();
            for entry in entries {
                let mut chars = entry.chars();
                match (chars.next(), chars.next(), chars.next()) {
                    (Some(a), Some(b), None) => {
                        set.insert((a, b));
                    }
                    _ => {
                        return Err(RulesError::BadPairEntry {
                            line: lineno,
                            entry: entry.to_owned(),
                        })
                    }
                }
            }
            Ok(set)
        };
        let rules = LanguageRules {
            language: list("language").first().copied().unwrap_or("").to_owned(),
            vowels: list("vowels").iter().flat_map(|v| v.chars()).collect(),
            semivowels: list("semivowels").iter().flat_map(|v| v.chars()).collect(),
            diphthongs: pair_entries("diphthongs")?,
            offglides: pair_entries("offglides")?,
            onsets: list("onsets").iter().map(|o| o.chars().collect()).collect(),
            digraphs: pair_entries("digraphs")?,
            flags,
        };
        rules.validate()?;
        Ok(rules)
    }

    fn validate(&self) -> Result<(), RulesError> {
        if self.vowels.is_empty() {
            return Err(RulesError::NoVowels);
        }
        for &(a, b) in &self.diphthongs {
            if !self.vowels.contains(&a) || !self.vowels.contains(&b) {
                return Err(RulesError::DiphthongNotVowels(pair_string(a, b)));
            }
        }
        for &(a, b) in &self.offglides {
            if !self.vowels.contains(&a) || self.vowels.contains(&b) {
                return Err(RulesError::BadOffglide(pair_string(a, b)));
            }
        }
        for &(a, b) in &self.digraphs {
            if self.vowels.contains(&a) || self.vowels.contains(&b) {
                return Err(RulesError::ConsonantTableHasVowel(pair_string(a, b)));
            }
        }
        for onset in &self.onsets {
            if onset.iter().any(|c| self.vowels.contains(c)) {
                return Err(RulesError::ConsonantTableHasVowel(
                    onset.iter().collect::<String>(),
                ));
            }
        }
        Ok(())
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    fn is_vowel(&self, c: char) -> bool {
        self.vowels.contains(&c)
    }

    /// Case fold one scalar for matching. Turkish gets its dotted/dotless I
    /// pair; elsewhere a multi-scalar lowercase expansion keeps the original
    /// so that folding stays length-preserving.
    fn fold(&self, c: char) -> char {
        if self.language == "tr" {
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
}

fn pair_set(entries: &[&str]) -> Result<BTreeSet<(char, char)>, RulesError> {
    let mut set = BTreeSet::new();
    for entry in entries {
        let mut chars = entry.chars();
        match (chars.next(), chars.next(), chars.next()) {
            (Some(a), Some(b), None) => {
                set.insert((a, b));
            }
            _ => {
                return Err(RulesError::BadPairEntry {
                    line: 0,
                    entry: (*entry).to_owned(),
                })
            }
        }
    }
    Ok(set)
}

fn pair_string(a: char, b: char) -> String {
    let mut s = String::new();
    s.push(a);
    s.push(b);
    s
}

/// Split one word into syllables. Total on non-empty input: concatenating
/// the result always reproduces the word, and words without a vowel come
/// back whole. Matching is case-insensitive, output preserves case.
pub fn syllabify_word(word: &str, rules: &LanguageRules) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let mut syllables: Vec<String> = Vec::new();
    let mut pending = String::new();
    let mut start = 0;
    for i in 0..=chars.len() {
        let at_separator = i < chars.len() && SEPARATORS.contains(&chars[i]);
        if at_separator || i == chars.len() {
            if start < i {
                let part: String = chars[start..i].iter().collect();
                let mut part_syllables = syllabify_part(&part, rules);
                if !pending.is_empty() {
                    part_syllables[0] = {
                        let mut s = core::mem::take(&mut pending);
                        s.push_str(&part_syllables[0]);
                        s
                    };
                }
                syllables.extend(part_syllables);
            }
            if at_separator {
                match syllables.last_mut() {
                    Some(last) => last.push(chars[i]),
                    None => pending.push(chars[i]),
                }
                start = i + 1;
            }
        }
    }
    if !pending.is_empty() {
        // word made of separators only
        syllables.push(pending);
    }
    if syllables.is_empty() {
        syllables.push(String::new());
    }
    syllables.retain(|s| !s.is_empty());
    if syllables.is_empty() {
        syllables.push(word.to_owned());
    }
    syllables
}

/// Syllabify a separator-free part.
fn syllabify_part(part: &str, rules: &LanguageRules) -> Vec<String> {
    let original: Vec<char> = part.chars().collect();
    let folded: Vec<char> = original.iter().map(|&c| rules.fold(c)).collect();
    let n = folded.len();

    let mut nuclei = find_nuclei(&folded, rules);
    if nuclei.is_empty() {
        return alloc::vec![part.to_owned()];
    }

    // Final consonant+"le" claims the last three characters as a syllable.
    let mut forced_le = None;
    if rules.flags.consonant_le
        && n >= 4
        && folded[n - 1] == 'e'
        && folded[n - 2] == 'l'
        && !rules.is_vowel(folded[n - 3])
        && folded[n - 3] != 'l'
        && nuclei.iter().any(|&(_, end)| end <= n - 3)
    {
        nuclei.retain(|&(s, _)| s < n - 3);
        forced_le = Some(n - 3);
    } else if rules.flags.silent_final_e && nuclei.len() >= 2 {
        let &(last_start, last_end) = nuclei.last().expect("nonempty");
        if last_end == n && last_start == n - 1 && folded[n - 1] == 'e' && n >= 2
            && !rules.is_vowel(folded[n - 2])
        {
            nuclei.pop();
        }
    }

    if nuclei.is_empty() {
        return alloc::vec![part.to_owned()];
    }

    let mut boundaries = Vec::new();
    for pair in nuclei.windows(2) {
        let (_, prev_end) = pair[0];
        let (next_start, _) = pair[1];
        boundaries.push(split_cluster(&folded, prev_end, next_start, rules));
    }
    if let Some(b) = forced_le {
        boundaries.push(b);
    }

    let mut out = Vec::with_capacity(boundaries.len() + 1);
    let mut prev = 0;
    for b in boundaries {
        debug_assert!(prev < b && b < n);
        out.push(original[prev..b].iter().collect());
        prev = b;
    }
    out.push(original[prev..].iter().collect());
    out
}

/// Locate vowel nuclei as char ranges, grouping diphthongs, long vowels and
/// offglide teams.
fn find_nuclei(folded: &[char], rules: &LanguageRules) -> Vec<(usize, usize)> {
    let mut nuclei: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < folded.len() {
        let c = folded[i];
        let starts = if !rules.vowels.contains(&c) {
            false
        } else if rules.semivowels.contains(&c) {
            // Nucleic only via the y-after-consonant rule, and never right
            // after another nucleus ("law-yer").
            rules.flags.y_nucleus_after_consonant
                && c == 'y'
                && i > 0
                && !rules.is_vowel(folded[i - 1])
                && nuclei.last().is_none_or(|&(_, end)| end < i)
        } else {
            true
        };
        if !starts {
            i += 1;
            continue;
        }
        let mut end = i + 1;
        if let Some(&d) = folded.get(i + 1) {
            if rules.diphthongs.contains(&(c, d)) || rules.offglides.contains(&(c, d)) {
                end = i + 2;
            }
        }
        nuclei.push((i, end));
        i = end;
    }
    nuclei
}

/// Choose the boundary inside the consonant cluster `folded[from..to]`
/// between two nuclei. Returns the index where the next syllable starts.
fn split_cluster(folded: &[char], from: usize, to: usize, rules: &LanguageRules) -> usize {
    // Group the cluster into consonant units: digraphs stay whole.
    let mut units: Vec<(usize, usize)> = Vec::new();
    let mut i = from;
    while i < to {
        if i + 1 < to && rules.digraphs.contains(&(folded[i], folded[i + 1])) {
            units.push((i, i + 2));
            i += 2;
        } else {
            units.push((i, i + 1));
            i += 1;
        }
    }

    let mut split = if units.is_empty() {
        to
    } else if units.len() == 1 {
        units[0].0
    } else {
        // Maximal legal onset: longest unit suffix listed in the onset
        // table; a single consonant unit otherwise.
        let mut chosen = units[units.len() - 1].0;
        for k in (0..units.len() - 1).rev() {
            let candidate: Vec<char> = folded[units[k].0..to].to_vec();
            if rules.onsets.contains(&candidate) {
                chosen = units[k].0;
            }
        }
        chosen
    };

    // `й` may not open a syllable; hand it to the preceding one.
    if rules.flags.j_closes_syllable {
        while split < to && folded[split] == '\u{439}' {
            split += 1;
        }
    }
    split
}

/// Apply [`syllabify_word`] to every word and assemble a syllable stream.
pub fn syllabify_stream(
    words: &[Vec<String>],
    rules: &LanguageRules,
) -> Result<UnitStream, StreamError> {
    let scheme = Scheme::syllable(rules.language()).expect("language is non-empty");
    let pieces = words
        .iter()
        .map(|sentence| {
            sentence
                .iter()
                .map(|word| syllabify_word(word, rules))
                .collect()
        })
        .collect();
    UnitStream::from_pieces(scheme, pieces)
}

//! CoNLL-U treebank reading.
//!
//! Only what the pipeline needs: surface forms and lemmas. Token lines are
//! the 10-column tab-separated rows with an integer ID; multiword-token
//! range lines (`1-2`) are skipped in favour of their parts, empty-node
//! lines (`1.1`) are skipped entirely, `#` starts a comment and a blank
//! line ends a sentence.

use std::fs;
use std::path::Path;

use sylseg_core::stream::{Scheme, UnitStream};

use crate::Error;

/// FORM and LEMMA of one syntactic word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub form: String,
    pub lemma: String,
}

/// Parse CoNLL-U text into sentences of tokens.
pub fn parse(text: &str) -> Result<Vec<Vec<Token>>, Error> {
    let mut sentences = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.is_empty() {
            if !current.is_empty() {
                sentences.push(std::mem::take(&mut current));
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 10 {
            return Err(Error::Conllu {
                line: lineno,
                what: format!("expected 10 tab-separated columns, found {}", fields.len()),
            });
        }
        let id = fields[0];
        if id.contains('-') || id.contains('.') {
            // Range line or empty node.
            continue;
        }
        if id.parse::<u64>().is_err() {
            return Err(Error::Conllu {
                line: lineno,
                what: format!("unrecognized token id {id:?}"),
            });
        }
        if fields[1].is_empty() {
            return Err(Error::Conllu {
                line: lineno,
                what: "empty FORM column".to_string(),
            });
        }
        current.push(Token {
            form: fields[1].to_string(),
            lemma: fields[2].to_string(),
        });
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    Ok(sentences)
}

/// Sentences of surface forms from a CoNLL-U file.
pub fn read_words(path: &Path) -> Result<Vec<Vec<String>>, Error> {
    let text = read_utf8(path)?;
    Ok(words(&parse(&text)?))
}

/// Sentences of tokens from a CoNLL-U file.
pub fn read_tokens(path: &Path) -> Result<Vec<Vec<Token>>, Error> {
    parse(&read_utf8(path)?)
}

pub fn words(sentences: &[Vec<Token>]) -> Vec<Vec<String>> {
    sentences
        .iter()
        .map(|s| s.iter().map(|t| t.form.clone()).collect())
        .collect()
}

/// Lemma-based morph approximation: when the lemma is a non-empty proper
/// prefix of the form (case-sensitive), the word splits into lemma and
/// remainder; otherwise it stays whole. A stand-in for externally supplied
/// morphological segmentations, labelled as an approximation.
pub fn lemma_morph_split(sentences: &[Vec<Token>]) -> Result<UnitStream, Error> {
    let pieces: Vec<Vec<Vec<String>>> = sentences
        .iter()
        .map(|sentence| sentence.iter().map(split_token).collect())
        .collect();
    UnitStream::from_pieces(Scheme::external("morph"), pieces).map_err(Error::from)
}

fn split_token(token: &Token) -> Vec<String> {
    let form = &token.form;
    let lemma = &token.lemma;
    if !lemma.is_empty()
        && lemma.len() < form.len()
        && form.starts_with(lemma.as_str())
        && !form[lemma.len()..].contains(char::is_whitespace)
    {
        vec![lemma.clone(), form[lemma.len()..].to_string()]
    } else {
        vec![form.clone()]
    }
}

pub(crate) fn read_utf8(path: &Path) -> Result<String, Error> {
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match sylseg_core::stream::decode_utf8(&bytes) {
        Ok(s) => Ok(s.to_string()),
        Err(e) => Err(Error::Utf8 {
            path: path.to_path_buf(),
            offset: e.byte_offset,
        }),
    }
}

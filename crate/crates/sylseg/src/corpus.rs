//! Raw-text and pre-segmented corpus reading, and train/valid/test
//! bundling.

use std::path::{Path, PathBuf};

use sylseg_core::stream::{tokenize_words, Scheme, UnitStream};

use crate::conllu::read_utf8;
use crate::Error;

/// A named corpus with its three splits and the files they came from.
/// Re-reading the same files yields an identical corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    name: String,
    train: Vec<Vec<String>>,
    valid: Vec<Vec<String>>,
    test: Vec<Vec<String>>,
    provenance: Vec<PathBuf>,
}

impl Corpus {
    pub fn new(
        name: &str,
        train: Vec<Vec<String>>,
        valid: Vec<Vec<String>>,
        test: Vec<Vec<String>>,
        provenance: Vec<PathBuf>,
    ) -> Result<Self, Error> {
        if train.is_empty() {
            return Err(Error::Corpus(format!("corpus {name:?} has an empty train split")));
        }
        for (split, sentences) in [("train", &train), ("valid", &valid), ("test", &test)] {
            if sentences.iter().any(|s| s.is_empty()) {
                return Err(Error::Corpus(format!(
                    "corpus {name:?}: empty sentence in {split} split"
                )));
            }
        }
        Ok(Corpus {
            name: name.to_string(),
            train,
            valid,
            test,
            provenance,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn train(&self) -> &[Vec<String>] {
        &self.train
    }

    pub fn valid(&self) -> &[Vec<String>] {
        &self.valid
    }

    pub fn test(&self) -> &[Vec<String>] {
        &self.test
    }

    pub fn provenance(&self) -> &[PathBuf] {
        &self.provenance
    }

    pub fn splits(&self) -> [(&'static str, &[Vec<String>]); 3] {
        [
            ("train", self.train.as_slice()),
            ("valid", self.valid.as_slice()),
            ("test", self.test.as_slice()),
        ]
    }
}

/// Read a raw UTF-8 text corpus: one sentence per line, blank lines
/// skipped, leading/trailing punctuation split off words.
pub fn read_raw(path: &Path) -> Result<Vec<Vec<String>>, Error> {
    Ok(tokenize_words(&read_utf8(path)?))
}

/// Read a file in the `@`-separated segmentation format under the caller's
/// scheme, validating every stream invariant.
pub fn read_segmented(path: &Path, scheme: Scheme) -> Result<UnitStream, Error> {
    let text = read_utf8(path)?;
    UnitStream::decode(&text, scheme).map_err(|e| Error::at(path, e.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn temp_file(contents: &[u8]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents).unwrap();
        f.flush().unwrap();
        f
    }

    #[test]
    fn raw_one_line_file_is_one_sentence() {
        let f = temp_file(b"Hello brave world.\n");
        let sentences = read_raw(f.path()).unwrap();
        assert_eq!(sentences, vec![vec!["Hello", "brave", "world", "."]]);
    }

    #[test]
    fn raw_blank_lines_yield_nothing() {
        let f = temp_file(b"\n\n\n");
        assert!(read_raw(f.path()).unwrap().is_empty());
    }

    #[test]
    fn raw_fixture_matches_hand_count() {
        let f = temp_file("uno dos tres\ncuatro (cinco) seis!\n\u{00a1}siete!\n".as_bytes());
        let sentences = read_raw(f.path()).unwrap();
        let tokens: usize = sentences.iter().map(Vec::len).sum();
        // Hand count: 3 + (cuatro ( cinco ) seis !) 6 + (¡ siete !) 3.
        assert_eq!(tokens, 12);
    }

    #[test]
    fn raw_rejects_invalid_utf8_with_offset() {
        let f = temp_file(b"ok\xff");
        match read_raw(f.path()) {
            Err(Error::Utf8 { offset: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn segmented_round_trip() {
        let f = temp_file(b"a b @ c\nxy\n");
        let stream = read_segmented(f.path(), Scheme::external("x")).unwrap();
        assert_eq!(stream.sentences()[0], vec!["a", "b", "@", "c"]);
        assert_eq!(stream.encode(), "a b @ c\nxy\n");
    }

    #[test]
    fn segmented_rejects_leading_boundary() {
        let f = temp_file(b"@ a\n");
        let err = read_segmented(f.path(), Scheme::external("x")).unwrap_err();
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn corpus_invariants() {
        assert!(Corpus::new("t", vec![], vec![], vec![], vec![]).is_err());
        assert!(Corpus::new(
            "t",
            vec![vec!["a".into()]],
            vec![vec![]],
            vec![],
            vec![]
        )
        .is_err());
        let c = Corpus::new("t", vec![vec!["a".into()]], vec![], vec![], vec![]).unwrap();
        assert_eq!(c.splits()[0].0, "train");
    }
}

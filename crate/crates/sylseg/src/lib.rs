//! Corpus readers, output formats and the command line front end for the
//! `sylseg-core` segmentation and language-model toolkit.

use std::path::{Path, PathBuf};

use thiserror::Error;

pub mod cli;
pub mod conllu;
pub mod corpus;
pub mod files;
pub mod svg;

/// Everything that can go wrong while reading or writing toolkit data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: invalid UTF-8 at byte offset {offset}")]
    Utf8 { path: PathBuf, offset: usize },
    #[error("line {line}: {what}")]
    Conllu { line: usize, what: String },
    #[error("{path}: {source}")]
    At {
        path: PathBuf,
        source: Box<Error>,
    },
    #[error("{0}")]
    Corpus(String),
    #[error(transparent)]
    Stream(#[from] sylseg_core::stream::StreamError),
    #[error(transparent)]
    Scheme(#[from] sylseg_core::stream::SchemeError),
    #[error(transparent)]
    Patterns(#[from] sylseg_core::hyphen::PatternError),
    #[error(transparent)]
    Rules(#[from] sylseg_core::syllable::RulesError),
    #[error(transparent)]
    Bpe(#[from] sylseg_core::bpe::BpeError),
    #[error(transparent)]
    Lm(#[from] sylseg_core::lm::LmError),
}

impl Error {
    /// Attach a file path to an inner error.
    pub fn at(path: &Path, inner: Error) -> Error {
        Error::At {
            path: path.to_path_buf(),
            source: Box::new(inner),
        }
    }
}

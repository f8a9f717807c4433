//! Multilingual subword segmentation schemes (characters, rule-based
//! syllables, pattern hyphenation, byte-pair encoding), an open-vocabulary
//! Kneser-Ney n-gram language model over the resulting unit streams, and
//! the analyses that compare schemes: character-level perplexity, type
//! overlap, vocabulary growth and type/token ratios.
//!
//! The crate is `no_std` + `alloc`; corpus readers, file IO and the
//! command line front end live in the companion `sylseg` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bpe;
pub mod hyphen;
pub mod lm;
pub mod metrics;
pub mod stream;
pub mod syllable;

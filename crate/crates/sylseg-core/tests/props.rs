//! Property tests for the core invariants: format round trips,
//! losslessness of every segmenter, and counting oracles.

use std::collections::HashMap;

use proptest::prelude::*;

use sylseg_core::bpe::{encode_word, train_bpe, word_counts};
use sylseg_core::hyphen::PatternTrie;
use sylseg_core::lm::NgramModel;
use sylseg_core::stream::{
    to_char_stream, to_word_stream, Scheme, UnitStream, Vocabulary,
};
use sylseg_core::syllable::{syllabify_stream, syllabify_word, LanguageRules};

/// Any non-whitespace scalar soup, including the boundary collision cases.
fn arb_word() -> impl Strategy<Value = String> {
    proptest::string::string_regex("[a-zA-Z\\\\@\u{e0}-\u{ff}\u{430}-\u{44f}]{1,12}")
        .expect("valid regex")
}

fn arb_sentences() -> impl Strategy<Value = Vec<Vec<String>>> {
    proptest::collection::vec(
        proptest::collection::vec(arb_word(), 1..8),
        0..6,
    )
}

/// Random per-word segmentations of random words.
fn arb_pieces() -> impl Strategy<Value = Vec<Vec<Vec<String>>>> {
    let piece = proptest::string::string_regex("[a-z@\\\\]{1,4}").expect("valid regex");
    proptest::collection::vec(
        proptest::collection::vec(proptest::collection::vec(piece, 1..5), 1..6),
        0..5,
    )
}

proptest! {
    #[test]
    fn encode_decode_round_trip(sentences in arb_sentences()) {
        let stream = to_char_stream(&sentences).unwrap();
        let text = stream.encode();
        let back = UnitStream::decode(&text, Scheme::chars()).unwrap();
        prop_assert_eq!(back, stream);
    }

    #[test]
    fn char_stream_is_lossless(sentences in arb_sentences()) {
        let stream = to_char_stream(&sentences).unwrap();
        prop_assert_eq!(stream.words(), sentences);
    }

    #[test]
    fn char_stream_length_law(sentences in arb_sentences()) {
        let stream = to_char_stream(&sentences).unwrap();
        let chars: u64 = sentences
            .iter()
            .flatten()
            .map(|w| w.chars().count() as u64)
            .sum();
        prop_assert_eq!(stream.content_tokens(), chars);
    }

    #[test]
    fn assembled_pieces_round_trip(pieces in arb_pieces()) {
        let stream = UnitStream::from_pieces(Scheme::external("t"), pieces.clone()).unwrap();
        let expected: Vec<Vec<String>> = pieces
            .iter()
            .map(|s| s.iter().map(|w| w.concat()).collect())
            .collect();
        prop_assert_eq!(stream.words(), expected);
        let decoded = UnitStream::decode(&stream.encode(), Scheme::external("t")).unwrap();
        prop_assert_eq!(decoded, stream);
    }

    #[test]
    fn vocabulary_matches_brute_force(sentences in arb_sentences()) {
        let stream = to_word_stream(&sentences).unwrap();
        let vocab = Vocabulary::from_stream(&stream);
        let mut expected: HashMap<String, u64> = HashMap::new();
        for sentence in stream.sentences() {
            for unit in sentence {
                *expected.entry(unit.clone()).or_insert(0) += 1;
            }
        }
        prop_assert_eq!(vocab.len(), expected.len());
        for (unit, count) in &expected {
            prop_assert_eq!(vocab.count(unit), *count);
        }
        let rebuilt = Vocabulary::from_stream(&stream);
        let a: Vec<(&str, u64)> = vocab.iter().collect();
        let b: Vec<(&str, u64)> = rebuilt.iter().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn syllabification_concatenates_back(word in arb_word(), lang_idx in 0usize..5) {
        let lang = LanguageRules::builtin_languages()[lang_idx];
        let rules = LanguageRules::builtin(lang).unwrap();
        let syllables = syllabify_word(&word, &rules);
        prop_assert!(!syllables.is_empty());
        prop_assert!(syllables.iter().all(|s| !s.is_empty()));
        prop_assert_eq!(syllables.concat(), word);
    }

    #[test]
    fn syllable_streams_are_lossless(sentences in arb_sentences(), lang_idx in 0usize..5) {
        let lang = LanguageRules::builtin_languages()[lang_idx];
        let rules = LanguageRules::builtin(lang).unwrap();
        let stream = syllabify_stream(&sentences, &rules).unwrap();
        prop_assert_eq!(stream.words(), sentences);
    }

    #[test]
    fn hyphenation_concatenates_and_respects_bounds(word in arb_word()) {
        let trie = PatternTrie::parse(
            "LEFTHYPHENMIN 2\nRIGHTHYPHENMIN 2\na1b\n\u{e9}1t\n1za\nb1\u{430}\n",
            "en",
        )
        .unwrap();
        let pieces = trie.hyphenate_word(&word);
        prop_assert_eq!(pieces.concat(), word.clone());
        let n = word.chars().count();
        if let Some(first) = pieces.first() {
            prop_assert!(pieces.len() == 1 || first.chars().count() >= 2);
        }
        if let Some(last) = pieces.last() {
            prop_assert!(pieces.len() == 1 || last.chars().count() >= 2);
        }
        prop_assert!(pieces.len() <= n.max(1));
    }

    #[test]
    fn lm_distributions_normalize_on_random_corpora(
        pieces in proptest::collection::vec(
            proptest::collection::vec(
                proptest::collection::vec(
                    proptest::string::string_regex("[abc]{1,3}").expect("valid regex"),
                    1..4,
                ),
                1..5,
            ),
            1..6,
        ),
        order in 1usize..=4,
    ) {
        let stream = UnitStream::from_pieces(Scheme::external("t"), pieces).unwrap();
        let model = NgramModel::train(&stream, order).unwrap();
        let vocab = Vocabulary::from_stream(&stream);
        let mut outcomes: Vec<&str> = vocab.iter().map(|(u, _)| u).collect();
        outcomes.push("</s>");
        outcomes.push("<new>");
        let histories: [&[&str]; 5] = [&[], &["a"], &["ab", "@"], &["zz"], &["c", "ba", "a"]];
        for history in histories {
            let total: f64 = outcomes.iter().map(|u| model.prob_unit(history, u)).sum();
            prop_assert!((total - 1.0).abs() < 1e-9, "history {history:?}: {total}");
        }
    }

    #[test]
    fn lm_serialization_round_trips_on_random_corpora(
        pieces in proptest::collection::vec(
            proptest::collection::vec(
                proptest::collection::vec(
                    proptest::string::string_regex("[ab@\\\\]{1,3}").expect("valid regex"),
                    1..4,
                ),
                1..4,
            ),
            1..5,
        ),
    ) {
        let stream = UnitStream::from_pieces(Scheme::external("t"), pieces).unwrap();
        let model = NgramModel::train(&stream, 3).unwrap();
        let reloaded = NgramModel::parse(&model.to_text()).unwrap();
        let before = model.score(&stream).unwrap();
        let after = reloaded.score(&stream).unwrap();
        prop_assert_eq!(before.cross_entropy_nats_per_unit, after.cross_entropy_nats_per_unit);
        prop_assert_eq!(before.ppl_c, after.ppl_c);
    }

    #[test]
    fn bpe_encoding_concatenates_back(words in proptest::collection::vec(arb_word(), 1..10)) {
        let sentences = vec![words.clone()];
        let counts = word_counts(&sentences);
        let alphabet: usize = counts
            .keys()
            .flat_map(|w| w.chars())
            .collect::<std::collections::HashSet<_>>()
            .len();
        let table = train_bpe(&counts, (alphabet + 10) as u32).unwrap();
        for word in &words {
            let pieces = encode_word(word, &table);
            prop_assert_eq!(pieces.concat(), word.clone());
        }
    }
}

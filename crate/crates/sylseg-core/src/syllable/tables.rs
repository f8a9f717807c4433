//! Built-in syllabification tables.

use super::{LanguageRules, RuleFlags};

pub(super) const BUILTIN_LANGUAGES: &[&str] = &["en", "es", "fi", "ru", "tr"];

pub(super) fn builtin(language: &str) -> Option<LanguageRules> {
    let rules = match language {
        "en" => LanguageRules::from_parts(
            "en",
            "aeiouy",
            "y",
            &[
                "ai", "au", "ay", "ea", "ee", "ei", "eu", "ey", "ie", "oa", "oi", "oo", "ou",
                "oy", "ue", "ui", "uy",
            ],
            &["aw", "ew", "ow"],
            &[],
            &["th", "sh", "ch", "ph", "wh"],
            RuleFlags {
                silent_final_e: true,
                consonant_le: true,
                y_nucleus_after_consonant: true,
                j_closes_syllable: false,
            },
        ),
        "es" => LanguageRules::from_parts(
            "es",
            "a\u{e1}e\u{e9}i\u{ed}o\u{f3}u\u{fa}\u{fc}",
            "",
            &[
                "ia", "ie", "io", "iu", "ua", "ue", "ui", "uo", "ai", "ei", "oi", "au", "eu",
                "ou", "i\u{e1}", "i\u{e9}", "i\u{f3}", "u\u{e1}", "u\u{e9}", "u\u{f3}",
                "\u{e1}i", "\u{e9}i", "\u{f3}i", "\u{e1}u", "\u{e9}u", "\u{fc}e", "\u{fc}i",
            ],
            &[],
            &[
                "pr", "br", "tr", "dr", "cr", "gr", "fr", "pl", "bl", "cl", "gl", "fl",
            ],
            &["ch", "ll", "rr"],
            RuleFlags::default(),
        ),
        "fi" => LanguageRules::from_parts(
            "fi",
            "aeiouy\u{e4}\u{f6}\u{e5}",
            "",
            &[
                "ai", "ei", "oi", "ui", "yi", "\u{e4}i", "\u{f6}i", "au", "eu", "iu", "ou",
                "ey", "iy", "\u{e4}y", "\u{f6}y", "uo", "y\u{f6}", "ie", "aa", "ee", "ii",
                "oo", "uu", "yy", "\u{e4}\u{e4}", "\u{f6}\u{f6}",
            ],
            &[],
            &[],
            &[],
            RuleFlags::default(),
        ),
        "ru" => LanguageRules::from_parts(
            "ru",
            "\u{430}\u{435}\u{451}\u{438}\u{43e}\u{443}\u{44b}\u{44d}\u{44e}\u{44f}",
            "",
            &[],
            &[],
            &[],
            &[],
            RuleFlags {
                silent_final_e: false,
                consonant_le: false,
                y_nucleus_after_consonant: false,
                j_closes_syllable: true,
            },
        ),
        "tr" => LanguageRules::from_parts(
            "tr",
            "ae\u{131}io\u{f6}u\u{fc}\u{e2}\u{ee}\u{fb}",
            "",
            &[],
            &[],
            &[],
            &[],
            RuleFlags::default(),
        ),
        _ => return None,
    };
    Some(rules.expect("built-in tables are valid"))
}

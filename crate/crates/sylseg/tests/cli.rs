//! End-to-end command line tests: determinism, exit codes, pipeline
//! composability and the golden results table over the bundled toy corpus.

use std::path::{Path, PathBuf};
use std::process::Output;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_sylseg"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = run_in(dir, args);
    assert!(
        out.status.success(),
        "command {args:?} failed:\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

#[test]
fn segment_char_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("toy/train.txt");
    let input = input.to_str().unwrap();
    ok(dir.path(), &["segment", "--input", input, "--scheme", "char", "--output", "a.txt"]);
    ok(dir.path(), &["segment", "--input", input, "--scheme", "char", "--output", "b.txt"]);
    let a = std::fs::read(dir.path().join("a.txt")).unwrap();
    let b = std::fs::read(dir.path().join("b.txt")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let sidecar = std::fs::read_to_string(dir.path().join("a.txt.stats")).unwrap();
    assert!(sidecar.starts_with("metric,value\ntokens,"));
}

#[test]
fn segment_syllable_writes_the_boundary_format() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("abstract.txt"), "A syllable contains a single vowel unit\n")
        .unwrap();
    ok(
        dir.path(),
        &["segment", "--input", "abstract.txt", "--scheme", "syllable", "--lang", "en",
          "--output", "syl.txt"],
    );
    let out = std::fs::read_to_string(dir.path().join("syl.txt")).unwrap();
    assert_eq!(out, "A @ syl la ble @ con tains @ a @ sin gle @ vow el @ u nit\n");
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("in.txt"), "some words here\n").unwrap();

    // Missing resource: usage error, exit 1, with remedy text.
    let out = run_in(
        dir.path(),
        &["segment", "--input", "in.txt", "--scheme", "syllable", "--output", "o.txt"],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--lang"));

    // Unknown flags: usage error from the parser, exit 1.
    let out = run_in(dir.path(), &["segment", "--nonsense"]);
    assert_eq!(out.status.code(), Some(1));

    // Malformed data: exit 2 with the offending line.
    std::fs::write(dir.path().join("bad.txt"), "@ leading boundary\n").unwrap();
    let out = run_in(
        dir.path(),
        &["train-lm", "--input", "bad.txt", "--scheme", "char", "--output", "m.txt"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    // Missing input file: exit 2.
    let out = run_in(
        dir.path(),
        &["segment", "--input", "absent.txt", "--scheme", "char", "--output", "o.txt"],
    );
    assert_eq!(out.status.code(), Some(2));

    // Success: exit 0.
    let out = run_in(
        dir.path(),
        &["segment", "--input", "in.txt", "--scheme", "char", "--output", "o.txt"],
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn overlap_of_a_file_with_itself_is_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s.txt"), "a b @ cd\nef g\n").unwrap();
    let stdout = ok(dir.path(), &["overlap", "--a", "s.txt", "--b", "s.txt"]);
    assert!(stdout.contains("= 1.0000"), "stdout: {stdout}");
}

#[test]
fn growth_csv_reaches_the_vocabulary_size() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s.txt"), "a b @ c\na d\n").unwrap();
    let stdout = ok(dir.path(), &["growth", "--input", "s.txt", "--interval", "2"]);
    assert_eq!(stdout, "scheme,tokens_seen,types_seen\ns,2,2\ns,4,3\ns,5,4\n");
}

#[test]
fn stats_reports_word_and_char_rows() {
    let dir = tempfile::tempdir().unwrap();
    let train = data("toy/train.txt");
    let stdout = ok(
        dir.path(),
        &["stats", "--train", train.to_str().unwrap(), "--schemes", "word,char", "--name", "toy"],
    );
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("split,scheme,tokens,types,ttr"));
    let word_row = lines.next().unwrap();
    assert!(word_row.starts_with("train,word,"));
    let char_row = lines.next().unwrap();
    assert!(char_row.starts_with("train,char,"));
}

#[test]
fn train_bpe_sweep_writes_the_five_settings() {
    let dir = tempfile::tempdir().unwrap();
    let train = data("toy/train.txt");
    ok(
        dir.path(),
        &["train-bpe", "--input", train.to_str().unwrap(), "--sweep", "--syllabary-size", "60",
          "--output", "toy.merges"],
    );
    for target in ["60", "2500", "5000", "7500", "10000"] {
        let path = dir.path().join(format!("toy-{target}.merges"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("version 1\n"), "{path:?}");
    }
}

#[test]
fn eval_on_char_scheme_prints_ppl_equal_exp_ce() {
    let dir = tempfile::tempdir().unwrap();
    let train = data("toy/train.txt");
    ok(
        dir.path(),
        &["segment", "--input", train.to_str().unwrap(), "--scheme", "char",
          "--output", "chars.txt"],
    );
    ok(
        dir.path(),
        &["train-lm", "--input", "chars.txt", "--scheme", "char", "--output", "char.model"],
    );
    // Single-word sentences carry no boundaries, so unit length equals
    // character length and ppl_c collapses to exp(cross-entropy).
    std::fs::write(dir.path().join("test.txt"), "s i m p l e\nw o r d s\n").unwrap();
    let stdout = ok(
        dir.path(),
        &["eval", "--model", "char.model", "--input", "test.txt"],
    );
    let ce: f64 = field(&stdout, "cross_entropy=");
    let ppl: f64 = field(&stdout, "ppl_c=");
    assert!((ppl - ce.exp()).abs() / ppl < 1e-4, "stdout: {stdout}");
}

fn field(stdout: &str, key: &str) -> f64 {
    stdout
        .split_whitespace()
        .find_map(|part| part.strip_prefix(key))
        .unwrap_or_else(|| panic!("missing {key} in {stdout}"))
        .parse()
        .expect("numeric field")
}

#[test]
fn segment_hyphen_uses_a_pattern_dictionary() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("in.txt"), "hyphenation patterns vote\n").unwrap();
    let dict = data("hyph_en_US.dic");
    ok(
        dir.path(),
        &["segment", "--input", "in.txt", "--scheme", "hyphen", "--dict",
          dict.to_str().unwrap(), "--output", "out.txt"],
    );
    let out = std::fs::read_to_string(dir.path().join("out.txt")).unwrap();
    assert_eq!(out, "hy phen ation @ pat terns @ vote\n");
}

#[test]
fn segment_syllable_accepts_a_rules_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("rules.txt"),
        "language: zz\nvowels: a e i o u\nonsets: tr\n",
    )
    .unwrap();
    std::fs::write(dir.path().join("in.txt"), "matra\n").unwrap();
    ok(
        dir.path(),
        &["segment", "--input", "in.txt", "--scheme", "syllable", "--rules", "rules.txt",
          "--output", "out.txt"],
    );
    let out = std::fs::read_to_string(dir.path().join("out.txt")).unwrap();
    assert_eq!(out, "ma tra\n");
}

#[test]
fn segment_external_validates_and_reemits() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("seg.txt"), "mor fes sor @ pieces\n").unwrap();
    ok(
        dir.path(),
        &["segment", "--input", "seg.txt", "--scheme", "external", "--output", "out.txt"],
    );
    assert_eq!(
        std::fs::read_to_string(dir.path().join("out.txt")).unwrap(),
        "mor fes sor @ pieces\n"
    );
    let sidecar = std::fs::read_to_string(dir.path().join("out.txt.stats")).unwrap();
    assert!(sidecar.contains("tokens,4"));
    assert!(sidecar.contains("types,4"));
}

#[test]
fn morph_scheme_reads_conllu_lemmas() {
    let dir = tempfile::tempdir().unwrap();
    let conllu = "\
1\twalked\twalk\tVERB\t_\t_\t0\troot\t_\t_
2\thome\thome\tNOUN\t_\t_\t1\tobl\t_\t_
";
    std::fs::write(dir.path().join("t.conllu"), conllu).unwrap();
    ok(
        dir.path(),
        &["segment", "--input", "t.conllu", "--input-format", "conllu", "--scheme", "morph",
          "--output", "out.txt"],
    );
    assert_eq!(
        std::fs::read_to_string(dir.path().join("out.txt")).unwrap(),
        "walk ed @ home\n"
    );
    // Raw input is a usage error for the morph scheme.
    let out = run_in(
        dir.path(),
        &["segment", "--input", "t.conllu", "--scheme", "morph", "--output", "o.txt"],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn results_csv_appends_under_one_header() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("train.txt"), "a b a b\nb a\n").unwrap();
    ok(
        dir.path(),
        &["segment", "--input", "train.txt", "--scheme", "char", "--output", "train.char"],
    );
    ok(
        dir.path(),
        &["train-lm", "--input", "train.char", "--scheme", "char", "--output", "m.model"],
    );
    for corpus in ["first", "second"] {
        ok(
            dir.path(),
            &["eval", "--model", "m.model", "--input", "train.char", "--corpus", corpus,
              "--results-csv", "r.csv"],
        );
    }
    let csv = std::fs::read_to_string(dir.path().join("r.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "corpus,scheme,order,cross_entropy,units,chars,ppl_c");
    assert!(lines[1].starts_with("first,char,5,"));
    assert!(lines[2].starts_with("second,char,5,"));
    // Identical inputs produce identical rows apart from the label.
    assert_eq!(lines[1].trim_start_matches("first"), lines[2].trim_start_matches("second"));
}

/// The full pipeline over the bundled toy corpus reproduces a golden
/// results table byte for byte.
#[test]
fn pipeline_reproduces_the_golden_results_csv() {
    let dir = tempfile::tempdir().unwrap();
    let train = data("toy/train.txt");
    let test = data("toy/test.txt");
    let train = train.to_str().unwrap();
    let test = test.to_str().unwrap();

    for (scheme, extra, train_out, test_out) in [
        ("char", vec![], "train.char", "test.char"),
        ("syllable", vec!["--lang", "en"], "train.syl", "test.syl"),
    ] {
        for (input, output) in [(train, train_out), (test, test_out)] {
            let mut args = vec!["segment", "--input", input, "--scheme", scheme];
            args.extend(extra.iter().copied());
            args.extend(["--output", output]);
            ok(dir.path(), &args);
        }
    }

    ok(
        dir.path(),
        &["train-bpe", "--input", train, "--vocab-size", "80", "--output", "toy.merges"],
    );
    for (input, output) in [(train, "train.bpe"), (test, "test.bpe")] {
        ok(
            dir.path(),
            &["apply-bpe", "--merges", "toy.merges", "--input", input, "--output", output],
        );
    }

    for (scheme_spec, train_seg, test_seg, model) in [
        ("char", "train.char", "test.char", "char.model"),
        ("syllable:en", "train.syl", "test.syl", "syl.model"),
        ("bpe:80", "train.bpe", "test.bpe", "bpe.model"),
    ] {
        ok(
            dir.path(),
            &["train-lm", "--input", train_seg, "--scheme", scheme_spec, "--order", "3",
              "--output", model],
        );
        ok(
            dir.path(),
            &["eval", "--model", model, "--input", test_seg, "--corpus", "toy",
              "--results-csv", "results.csv"],
        );
    }

    let produced = std::fs::read_to_string(dir.path().join("results.csv")).unwrap();
    let golden = std::fs::read_to_string(data("toy/golden_results.csv")).unwrap();
    assert_eq!(produced, golden);
}

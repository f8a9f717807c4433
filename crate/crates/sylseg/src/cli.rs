//! The `sylseg` command line: deterministic, scriptable subcommands over
//! the segmentation, language-model and analysis operations. Exit codes:
//! 0 success, 1 usage problems (bad flags, missing resources), 2 data
//! errors (unreadable or malformed files).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use sylseg_core::bpe::{self, MergeTable};
use sylseg_core::hyphen::{hyphenate_stream, PatternTrie};
use sylseg_core::lm::{NgramModel, DEFAULT_ORDER};
use sylseg_core::metrics::{self, GrowthCurve, StatsRow};
use sylseg_core::stream::{
    to_char_stream, to_word_stream, Scheme, UnitStream, Vocabulary,
};
use sylseg_core::syllable::{syllabify_stream, LanguageRules};

use crate::conllu;
use crate::corpus::{read_raw, read_segmented, Corpus};
use crate::files::{append_csv_row, atomic_write};
use crate::svg;
use crate::Error;

const RESULTS_CSV_HEADER: &str = "corpus,scheme,order,cross_entropy,units,chars,ppl_c";

#[derive(Parser)]
#[command(
    name = "sylseg",
    version,
    about = "Subword segmentation schemes and open-vocabulary language-model evaluation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Segment a corpus and write the @-separated unit file.
    Segment(SegmentArgs),
    /// Train a BPE merge table, or a sweep of vocabulary sizes.
    TrainBpe(TrainBpeArgs),
    /// Apply a trained BPE merge table to a corpus.
    ApplyBpe(ApplyBpeArgs),
    /// Train an n-gram language model on a segmented file.
    TrainLm(TrainLmArgs),
    /// Score a segmented test file with a trained model.
    Eval(EvalArgs),
    /// Token-type overlap between segmented files.
    Overlap(OverlapArgs),
    /// Accumulative vocabulary growth of segmented files.
    Growth(GrowthArgs),
    /// Token and type statistics per split and scheme.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// Plain UTF-8 text, one sentence per line.
    Raw,
    /// CoNLL-U treebank.
    Conllu,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Char,
    Syllable,
    Hyphen,
    Bpe,
    External,
    Morph,
    Word,
}

#[derive(Args)]
struct SegmentArgs {
    /// Corpus to segment (already segmented for --scheme external).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "raw")]
    input_format: InputFormat,
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    /// Language code for syllable rules and hyphenation case folding.
    #[arg(long)]
    lang: Option<String>,
    /// Syllabification rules file overriding the built-in tables.
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Hyphenation pattern dictionary.
    #[arg(long)]
    dict: Option<PathBuf>,
    /// BPE merge table.
    #[arg(long)]
    merges: Option<PathBuf>,
    /// Output unit file; a token/type sidecar goes to <output>.stats.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct TrainBpeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "raw")]
    input_format: InputFormat,
    /// Target vocabulary size for a single table.
    #[arg(long, conflicts_with = "sweep")]
    vocab_size: Option<u32>,
    /// Train the standard sweep 2500..10000 plus the syllabary size.
    #[arg(long, requires = "syllabary_size")]
    sweep: bool,
    /// Syllabary-sized setting for --sweep.
    #[arg(long)]
    syllabary_size: Option<u32>,
    /// Output merge table; sweeps write <output>-<size>.merges.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct ApplyBpeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "raw")]
    input_format: InputFormat,
    #[arg(long)]
    merges: PathBuf,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct TrainLmArgs {
    /// Segmented training file in the @-format.
    #[arg(long)]
    input: PathBuf,
    /// Scheme the file contains: char, word, syllable:LANG, hyphen:LANG,
    /// bpe:SIZE or external[:LABEL].
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Model dump file.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    /// Model dump written by train-lm.
    #[arg(long)]
    model: PathBuf,
    /// Segmented test file in the @-format.
    #[arg(long)]
    input: PathBuf,
    /// Corpus label for the results table.
    #[arg(long, default_value = "corpus")]
    corpus: String,
    /// Append the report to this CSV (header written on first use).
    #[arg(long)]
    results_csv: Option<PathBuf>,
}

#[derive(Args)]
struct OverlapArgs {
    /// Segmented files whose types are compared against --b.
    #[arg(long = "a", required = true)]
    a: Vec<PathBuf>,
    /// Reference segmented file.
    #[arg(long = "b")]
    b: PathBuf,
    /// Write all reports as CSV.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write a stacked-area plot across the --a inputs.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct GrowthArgs {
    /// Segmented files, one curve each.
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    /// Sample the type count every this many tokens.
    #[arg(long, default_value_t = 1000)]
    interval: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write a line chart of all curves.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    valid: Option<PathBuf>,
    #[arg(long)]
    test: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "raw")]
    input_format: InputFormat,
    /// Corpus name for reporting; defaults to the train file stem.
    #[arg(long)]
    name: Option<String>,
    /// Comma-separated schemes: word,char,syllable,hyphen,bpe,morph.
    #[arg(long, value_delimiter = ',', default_value = "word,char")]
    schemes: Vec<SchemeArg>,
    #[arg(long)]
    lang: Option<String>,
    #[arg(long)]
    rules: Option<PathBuf>,
    #[arg(long)]
    dict: Option<PathBuf>,
    #[arg(long)]
    merges: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Entry point used by the binary.
pub fn main(args: impl IntoIterator<Item = String>) -> ExitCode {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Segment(args) => segment(args),
        Command::TrainBpe(args) => train_bpe(args),
        Command::ApplyBpe(args) => apply_bpe(args),
        Command::TrainLm(args) => train_lm(args),
        Command::Eval(args) => eval(args),
        Command::Overlap(args) => overlap(args),
        Command::Growth(args) => growth(args),
        Command::Stats(args) => stats(args),
    }
}

/// Sentences of words from a corpus file.
fn load_words(path: &Path, format: InputFormat) -> Result<Vec<Vec<String>>, Error> {
    match format {
        InputFormat::Raw => read_raw(path),
        InputFormat::Conllu => conllu::read_words(path),
    }
}

fn load_rules(
    lang: Option<&str>,
    rules: Option<&Path>,
) -> Result<LanguageRules, CliError> {
    if let Some(path) = rules {
        let text = conllu::read_utf8(path)?;
        return LanguageRules::parse(&text).map_err(|e| CliError::Data(Error::at(path, e.into())));
    }
    let lang = lang.ok_or_else(|| {
        usage(format!(
            "the syllable scheme needs --lang ({}) or --rules FILE",
            LanguageRules::builtin_languages().join("|")
        ))
    })?;
    LanguageRules::builtin(lang).map_err(|_| {
        usage(format!(
            "no built-in syllabification rules for {lang:?}; pass --rules FILE \
             (built-ins: {})",
            LanguageRules::builtin_languages().join(", ")
        ))
    })
}

fn load_dict(dict: Option<&Path>, lang: Option<&str>) -> Result<PatternTrie, CliError> {
    let path = dict.ok_or_else(|| {
        usage("the hyphen scheme needs --dict FILE (a hyphenation pattern dictionary)")
    })?;
    let language = match lang {
        Some(l) => l.to_string(),
        None => guess_language_from_dict(path),
    };
    let text = conllu::read_utf8(path)?;
    PatternTrie::parse(&text, &language).map_err(|e| CliError::Data(Error::at(path, e.into())))
}

/// `hyph_en_US.dic`-style names carry the language right after `hyph_`.
fn guess_language_from_dict(path: &Path) -> String {
    let stem = path.file_stem().map(|s| s.to_string_lossy()).unwrap_or_default();
    let stem = stem.strip_prefix("hyph_").unwrap_or(&stem);
    let lang: String = stem.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    if lang.is_empty() {
        "und".to_string()
    } else {
        lang
    }
}

fn load_merges(merges: Option<&Path>) -> Result<MergeTable, CliError> {
    let path = merges.ok_or_else(|| {
        usage("the bpe scheme needs --merges FILE (train one with `sylseg train-bpe`)")
    })?;
    let text = conllu::read_utf8(path)?;
    MergeTable::parse(&text).map_err(|e| CliError::Data(Error::at(path, e.into())))
}

/// Label a segmented file by its name, dropping only a generic `.txt`
/// extension; scheme-bearing suffixes like `train.bpe2500` stay intact.
fn file_label(path: &Path) -> String {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    name.strip_suffix(".txt").unwrap_or(&name).to_string()
}

fn write_stream(path: &Path, stream: &UnitStream) -> Result<(), Error> {
    atomic_write(path, &stream.encode())?;
    let vocab = Vocabulary::from_stream(stream);
    let sidecar = format!(
        "metric,value\ntokens,{}\ntypes,{}\n",
        vocab.content_tokens(),
        vocab.content_types()
    );
    let mut stats_path = path.as_os_str().to_owned();
    stats_path.push(".stats");
    atomic_write(Path::new(&stats_path), &sidecar)
}

fn segment(args: SegmentArgs) -> Result<(), CliError> {
    if args.scheme == SchemeArg::Morph && args.input_format != InputFormat::Conllu {
        return Err(usage(
            "the morph scheme reads lemmas; use --input-format conllu",
        ));
    }
    let stream = match args.scheme {
        SchemeArg::External => {
            let label = file_label(&args.input);
            read_segmented(&args.input, Scheme::external(&label))?
        }
        SchemeArg::Morph => {
            let tokens = conllu::read_tokens(&args.input)?;
            conllu::lemma_morph_split(&tokens)?
        }
        scheme => {
            let words = load_words(&args.input, args.input_format)?;
            segment_words(&words, scheme, &args)?
        }
    };
    write_stream(&args.output, &stream)?;
    let vocab = Vocabulary::from_stream(&stream);
    println!(
        "wrote {} ({} sentences, {} tokens, {} types)",
        args.output.display(),
        stream.len(),
        vocab.content_tokens(),
        vocab.content_types()
    );
    Ok(())
}

fn segment_words(
    words: &[Vec<String>],
    scheme: SchemeArg,
    args: &SegmentArgs,
) -> Result<UnitStream, CliError> {
    let stream = match scheme {
        SchemeArg::Char => to_char_stream(words),
        SchemeArg::Word => to_word_stream(words),
        SchemeArg::Syllable => {
            let rules = load_rules(args.lang.as_deref(), args.rules.as_deref())?;
            syllabify_stream(words, &rules)
        }
        SchemeArg::Hyphen => {
            let trie = load_dict(args.dict.as_deref(), args.lang.as_deref())?;
            hyphenate_stream(words, &trie)
        }
        SchemeArg::Bpe => {
            let table = load_merges(args.merges.as_deref())?;
            bpe::encode_stream(words, &table)
        }
        SchemeArg::External | SchemeArg::Morph => unreachable!("handled by caller"),
    };
    stream.map_err(|e| CliError::Data(e.into()))
}

fn train_bpe(args: TrainBpeArgs) -> Result<(), CliError> {
    let words = load_words(&args.input, args.input_format)?;
    let counts = bpe::word_counts(&words);
    if args.sweep {
        let syllabary = args.syllabary_size.expect("clap requires syllabary_size");
        let tables = bpe::sweep(&counts, syllabary).map_err(Error::from)?;
        for table in tables {
            let path = sweep_output_path(&args.output, table.target_vocab());
            atomic_write(&path, &table.to_text())?;
            println!(
                "wrote {} ({} merges, vocabulary {})",
                path.display(),
                table.merges().len(),
                table.vocab_size()
            );
        }
    } else {
        let target = args
            .vocab_size
            .ok_or_else(|| usage("pass --vocab-size N, or --sweep --syllabary-size K"))?;
        let table = bpe::train_bpe(&counts, target).map_err(Error::from)?;
        atomic_write(&args.output, &table.to_text())?;
        println!(
            "wrote {} ({} merges, vocabulary {})",
            args.output.display(),
            table.merges().len(),
            table.vocab_size()
        );
    }
    Ok(())
}

fn sweep_output_path(base: &Path, target: u32) -> PathBuf {
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "merges".to_string());
    let ext = base
        .extension()
        .map(|s| format!(".{}", s.to_string_lossy()))
        .unwrap_or_default();
    base.with_file_name(format!("{stem}-{target}{ext}"))
}

fn apply_bpe(args: ApplyBpeArgs) -> Result<(), CliError> {
    let table = load_merges(Some(&args.merges))?;
    let words = load_words(&args.input, args.input_format)?;
    let stream = bpe::encode_stream(&words, &table).map_err(Error::from)?;
    write_stream(&args.output, &stream)?;
    println!("wrote {}", args.output.display());
    Ok(())
}

/// Parse `kind[:argument]` scheme specifications.
fn parse_scheme_spec(spec: &str) -> Result<Scheme, CliError> {
    let (kind, arg) = match spec.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (spec, None),
    };
    let bad = |what: String| usage(what);
    match (kind, arg) {
        ("char", None) => Ok(Scheme::chars()),
        ("word", None) => Ok(Scheme::words()),
        ("syllable", Some(lang)) if !lang.is_empty() => {
            Scheme::syllable(lang).map_err(|e| bad(e.to_string()))
        }
        ("hyphen", Some(lang)) if !lang.is_empty() => {
            Scheme::hyphen(lang).map_err(|e| bad(e.to_string()))
        }
        ("bpe", Some(n)) => {
            let target: u32 = n
                .parse()
                .map_err(|_| bad(format!("bpe scheme needs a numeric size, got {n:?}")))?;
            Scheme::bpe(target).map_err(|e| bad(e.to_string()))
        }
        ("external", None) => Ok(Scheme::external("external")),
        ("external", Some(label)) if !label.is_empty() => Ok(Scheme::external(label)),
        _ => Err(bad(format!(
            "unrecognized scheme {spec:?}; use char, word, syllable:LANG, hyphen:LANG, \
             bpe:SIZE or external[:LABEL]"
        ))),
    }
}

fn train_lm(args: TrainLmArgs) -> Result<(), CliError> {
    let scheme = parse_scheme_spec(&args.scheme)?;
    let stream = read_segmented(&args.input, scheme)?;
    let model = NgramModel::train(&stream, args.order).map_err(Error::from)?;
    atomic_write(&args.output, &model.to_text())?;
    println!(
        "wrote {} (order {}, {} unit types)",
        args.output.display(),
        model.order(),
        model.unit_types()
    );
    Ok(())
}

fn eval(args: EvalArgs) -> Result<(), CliError> {
    let text = conllu::read_utf8(&args.model)?;
    let model =
        NgramModel::parse(&text).map_err(|e| CliError::Data(Error::at(&args.model, e.into())))?;
    let stream = read_segmented(&args.input, model.scheme().clone())?;
    let report = model.score(&stream).map_err(Error::from)?;
    println!("{report}");
    if let Some(csv) = &args.results_csv {
        let row = format!(
            "{},{},{},{:.6},{},{},{:.4}",
            args.corpus,
            report.scheme,
            model.order(),
            report.cross_entropy_nats_per_unit,
            report.total_units,
            report.total_chars,
            report.ppl_c
        );
        append_csv_row(csv, RESULTS_CSV_HEADER, &row)?;
    }
    Ok(())
}

fn overlap(args: OverlapArgs) -> Result<(), CliError> {
    let b_label = file_label(&args.b);
    let b_stream = read_segmented(&args.b, Scheme::external(&b_label))?;
    let b_vocab = Vocabulary::from_stream(&b_stream);
    let mut reports = Vec::new();
    for a_path in &args.a {
        let a_label = file_label(a_path);
        let a_stream = read_segmented(a_path, Scheme::external(&a_label))?;
        let a_vocab = Vocabulary::from_stream(&a_stream);
        let report = metrics::overlap(
            a_stream.scheme(),
            &a_vocab,
            b_stream.scheme(),
            &b_vocab,
        );
        println!(
            "{} vs {}: (A\u{2229}B)/B = {:.4}, (B\u{2229}A)/A = {:.4} ({} common types)",
            report.scheme_a, report.scheme_b, report.ratio_ab, report.ratio_ba,
            report.intersection
        );
        reports.push(report);
    }
    if let Some(path) = &args.output {
        atomic_write(path, &metrics::overlap_csv(&reports))?;
    }
    if let Some(path) = &args.svg {
        let x_labels: Vec<String> = reports.iter().map(|r| r.scheme_a.to_string()).collect();
        let layers = vec![
            (
                "(A\u{2229}B)/B".to_string(),
                reports.iter().map(|r| r.ratio_ab).collect::<Vec<f64>>(),
            ),
            (
                "(B\u{2229}A)/A".to_string(),
                reports.iter().map(|r| r.ratio_ba).collect::<Vec<f64>>(),
            ),
        ];
        let title = format!("Type overlap against {b_label}");
        atomic_write(path, &svg::stacked_area(&title, &x_labels, "ratio", &layers))?;
    }
    Ok(())
}

fn growth(args: GrowthArgs) -> Result<(), CliError> {
    if args.interval < 1 {
        return Err(usage("--interval must be at least 1"));
    }
    let mut curves: Vec<GrowthCurve> = Vec::new();
    for path in &args.inputs {
        let label = file_label(path);
        let stream = read_segmented(path, Scheme::external(&label))?;
        curves.push(metrics::growth(&stream, args.interval));
    }
    let csv = metrics::growth_csv(&curves);
    match &args.output {
        Some(path) => atomic_write(path, &csv)?,
        None => print!("{csv}"),
    }
    if let Some(path) = &args.svg {
        let series: Vec<svg::Series> = curves
            .iter()
            .map(|c| svg::Series {
                label: c.scheme.to_string(),
                points: c
                    .points
                    .iter()
                    .map(|&(x, y)| (x as f64, y as f64))
                    .collect(),
            })
            .collect();
        atomic_write(
            path,
            &svg::line_chart("Vocabulary growth", "tokens", "types", &series),
        )?;
    }
    Ok(())
}

fn stats(args: StatsArgs) -> Result<(), CliError> {
    let name = args.name.clone().unwrap_or_else(|| file_label(&args.train));
    let train = load_words(&args.train, args.input_format)?;
    let valid = match &args.valid {
        Some(p) => load_words(p, args.input_format)?,
        None => Vec::new(),
    };
    let test = match &args.test {
        Some(p) => load_words(p, args.input_format)?,
        None => Vec::new(),
    };
    let mut provenance = vec![args.train.clone()];
    provenance.extend(args.valid.iter().cloned());
    provenance.extend(args.test.iter().cloned());
    let corpus = Corpus::new(&name, train, valid, test, provenance)?;

    let mut rows: Vec<StatsRow> = Vec::new();
    for (split, sentences) in corpus.splits() {
        if sentences.is_empty() {
            continue;
        }
        for &scheme in &args.schemes {
            if scheme == SchemeArg::Morph && args.input_format != InputFormat::Conllu {
                return Err(usage(
                    "the morph scheme reads lemmas; use --input-format conllu",
                ));
            }
            let stream = stats_stream(sentences, scheme, &args, split)?;
            rows.push(StatsRow::from_stream(split, &stream));
        }
    }
    let csv = metrics::stats_csv(&rows);
    match &args.output {
        Some(path) => atomic_write(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn stats_stream(
    sentences: &[Vec<String>],
    scheme: SchemeArg,
    args: &StatsArgs,
    split: &str,
) -> Result<UnitStream, CliError> {
    let stream = match scheme {
        SchemeArg::Char => to_char_stream(sentences),
        SchemeArg::Word => to_word_stream(sentences),
        SchemeArg::Syllable => {
            let rules = load_rules(args.lang.as_deref(), args.rules.as_deref())?;
            syllabify_stream(sentences, &rules)
        }
        SchemeArg::Hyphen => {
            let trie = load_dict(args.dict.as_deref(), args.lang.as_deref())?;
            hyphenate_stream(sentences, &trie)
        }
        SchemeArg::Bpe => {
            let table = load_merges(args.merges.as_deref())?;
            bpe::encode_stream(sentences, &table)
        }
        SchemeArg::Morph => {
            let path = match split {
                "train" => &args.train,
                "valid" => args.valid.as_ref().expect("split present"),
                _ => args.test.as_ref().expect("split present"),
            };
            let tokens = conllu::read_tokens(path)?;
            return conllu::lemma_morph_split(&tokens).map_err(CliError::from);
        }
        SchemeArg::External => {
            return Err(usage(
                "external segmentations are analysed via `segment --scheme external` \
                 or the overlap/growth commands",
            ))
        }
    };
    stream.map_err(|e| CliError::Data(e.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sylseg_core::stream::SchemeKind;

    #[test]
    fn scheme_specs_parse() {
        assert_eq!(parse_scheme_spec("char").unwrap().kind(), SchemeKind::Char);
        assert_eq!(
            parse_scheme_spec("syllable:tr").unwrap().language(),
            "tr"
        );
        assert_eq!(parse_scheme_spec("bpe:2500").unwrap().parameter(), 2500);
        assert_eq!(
            parse_scheme_spec("external:morph").unwrap().label(),
            "morph"
        );
        assert_eq!(parse_scheme_spec("word").unwrap().label(), "word");
        assert!(parse_scheme_spec("syllable").is_err());
        assert!(parse_scheme_spec("bpe:x").is_err());
        assert!(parse_scheme_spec("nonsense").is_err());
    }

    #[test]
    fn dictionary_language_guessing() {
        assert_eq!(
            guess_language_from_dict(Path::new("dicts/hyph_en_US.dic")),
            "en"
        );
        assert_eq!(guess_language_from_dict(Path::new("hyph_tr.dic")), "tr");
        assert_eq!(guess_language_from_dict(Path::new("weird")), "weird");
        assert_eq!(guess_language_from_dict(Path::new("123")), "und");
    }

    #[test]
    fn sweep_paths_carry_the_target() {
        assert_eq!(
            sweep_output_path(Path::new("out/tr.merges"), 2500),
            Path::new("out/tr-2500.merges")
        );
        assert_eq!(
            sweep_output_path(Path::new("plain"), 10000),
            Path::new("plain-10000")
        );
    }
}

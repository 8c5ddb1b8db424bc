//! The `treemaw` command line: compute, verify, generate and benchmark
//! minimal absent words of edge-labeled trees.
//!
//! Exit codes: 0 success, 1 parse error, 2 validation error, 3 verification
//! mismatch, 4 resource cap exceeded.

pub mod formats;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use formats::TreeFile;
use treemaw::alphabet::{format_word, Alphabet, Word};
use treemaw::generators::{
    gen_fixed_length_word, gen_random_rooted, gen_random_unrooted, gen_unrooted_extremal,
};
use treemaw::maw_unrooted::{merged_node_count, UnrootedMaws};
use treemaw::oracle::{oracle_maw_rooted, oracle_maw_unrooted, oracle_maw_word, OracleLimits};
use treemaw::{MawTriple, RootedMaws, SuffixTree, UnrootedTree};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation(String),
    Mismatch(String),
    Cap(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Cap(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Validation(m)
            | CliError::Mismatch(m)
            | CliError::Cap(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(name = "treemaw", version, about = "Minimal absent words of edge-labeled trees")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute all minimal absent words of a tree or word
    Maw {
        #[command(subcommand)]
        what: MawCmd,
    },
    /// Generate instances in the tool's file formats
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Cross-check the fast pipeline against the brute-force oracle
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Time the pipeline on seeded random instances of growing size
    Bench {
        #[arg(long, value_enum)]
        kind: BenchKind,
        /// Comma-separated instance sizes
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        sigma: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25_000_000)]
        max_merged_nodes: u64,
    },
}

#[derive(Args)]
struct OutputOpts {
    /// Print only the number of minimal absent words
    #[arg(long)]
    count: bool,
    /// Print (a, node, b) triples instead of expanded words; node is the
    /// preorder index of the suffix-tree node
    #[arg(long)]
    triples: bool,
    /// Sort output lexicographically instead of emission order
    #[arg(long)]
    sort: bool,
    /// Run the per-letter phases on worker threads (same output order)
    #[arg(long)]
    parallel_letters: bool,
}

#[derive(Subcommand)]
enum MawCmd {
    /// Rooted tree from a file
    Rooted {
        file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Unrooted tree from a file (quadratic reduction; capped)
    Unrooted {
        file: PathBuf,
        /// Abort if the merged tree would exceed this many nodes
        #[arg(long, default_value_t = 25_000_000)]
        max_merged_nodes: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Word given as an ASCII literal (--ascii) or a word-format file
    Word {
        input: String,
        /// Treat the input as a literal ASCII word; the alphabet is inferred
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Word packing many same-length minimal absent words
    FixedLength {
        #[arg(long)]
        sigma: u32,
        #[arg(long)]
        n: u64,
    },
    /// Unrooted tree realizing the s^3 N^2 lower bound
    ExtremalUnrooted {
        #[arg(long = "s")]
        s: u32,
        #[arg(long = "N")]
        n: u32,
    },
    /// Seeded random rooted tree
    RandomRooted {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random unrooted tree
    RandomUnrooted {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyOpts {
    /// Raise the brute-force size guards to this value
    #[arg(long)]
    oracle_limit: Option<u32>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Rooted {
        file: PathBuf,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Unrooted {
        file: PathBuf,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    Word {
        input: String,
        #[arg(long)]
        ascii: bool,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchKind {
    Rooted,
    Unrooted,
}

/// Entry point with injectable output, so tests can capture stdout.
pub fn run_with<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version print to stdout and exit 0; usage errors exit 2
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_with(args, &mut lock)
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Maw { what } => run_maw(what, out),
        Cmd::Gen { what } => run_gen(what, out),
        Cmd::Verify { what } => run_verify(what, out),
        Cmd::Bench { kind, sizes, sigma, seed, max_merged_nodes } => {
            run_bench(kind, &sizes, sigma, seed, max_merged_nodes, out)
        }
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Parse(format!("write failed: {e}"))
}

/// Print the enumeration of a built rooted pipeline per the output flags.
fn print_maws(
    maws: &RootedMaws,
    opts: &OutputOpts,
    symbols: Option<&Alphabet>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let st = maws.suffix_tree();
    let emit = |sink: &mut dyn FnMut(MawTriple)| -> u64 {
        if opts.parallel_letters {
            maws.emit_parallel(|t| sink(t))
        } else {
            maws.emit(|t| sink(t))
        }
    };
    if opts.count {
        let n = emit(&mut |_| {});
        writeln!(out, "{n}").map_err(io_err)?;
        return Ok(());
    }
    let render = |st: &SuffixTree, t: &MawTriple| -> String {
        if opts.triples {
            format!("({}, {}, {})", t.a.0, st.preorder(t.node), t.b.0)
        } else {
            let word = st.expand(t);
            match symbols {
                Some(ab) if ab.has_symbols() => {
                    word.iter().map(|&l| ab.symbol(l).unwrap()).collect()
                }
                _ => format_word(&word),
            }
        }
    };
    if opts.sort {
        let mut rows: Vec<(Word, MawTriple)> = Vec::new();
        emit(&mut |t| rows.push((st.expand(&t), t)));
        rows.sort();
        for (_, t) in &rows {
            writeln!(out, "{}", render(st, t)).map_err(io_err)?;
        }
    } else {
        let mut failed = None;
        emit(&mut |t| {
            if failed.is_none() {
                if let Err(e) = writeln!(out, "{}", render(st, &t)) {
                    failed = Some(e);
                }
            }
        });
        if let Some(e) = failed {
            return Err(io_err(e));
        }
    }
    Ok(())
}

fn run_maw(cmd: MawCmd, out: &mut impl Write) -> Result<(), CliError> {
    match cmd {
        MawCmd::Rooted { file, out: opts } => {
            let TreeFile::Rooted(t) = formats::parse_tree_file(&read_file(&file)?)? else {
                return Err(CliError::Validation(format!(
                    "{} holds an unrooted tree; use `maw unrooted`",
                    file.display()
                )));
            };
            print_maws(&RootedMaws::build(&t), &opts, None, out)
        }
        MawCmd::Unrooted { file, max_merged_nodes, out: opts } => {
            let TreeFile::Unrooted(t) = formats::parse_tree_file(&read_file(&file)?)? else {
                return Err(CliError::Validation(format!(
                    "{} holds a rooted tree; use `maw rooted`",
                    file.display()
                )));
            };
            let maws = build_unrooted_capped(&t, max_merged_nodes)?;
            print_maws(maws.rooted(), &opts, None, out)
        }
        MawCmd::Word { input, ascii, out: opts } => {
            let (word, alphabet) = load_word(&input, ascii)?;
            let t = treemaw::word_to_rooted(alphabet.clone(), &word);
            print_maws(&RootedMaws::build(&t), &opts, Some(&alphabet), out)
        }
    }
}

fn load_word(input: &str, ascii: bool) -> Result<(Word, Alphabet), CliError> {
    if ascii {
        if input.is_empty() {
            return Err(CliError::Validation("empty ASCII word".into()));
        }
        if !input.is_ascii() {
            return Err(CliError::Parse("ASCII word contains non-ASCII bytes".into()));
        }
        let (alphabet, word) = Alphabet::from_ascii(input);
        Ok((word, alphabet))
    } else {
        formats::parse_word_file(&read_file(&PathBuf::from(input))?)
    }
}

fn build_unrooted_capped(t: &UnrootedTree, cap: u64) -> Result<UnrootedMaws, CliError> {
    let merged = merged_node_count(t.n());
    if merged > cap {
        return Err(CliError::Cap(format!(
            "merged tree would have {merged} nodes, over the cap {cap}; \
             raise --max-merged-nodes to allow it"
        )));
    }
    Ok(UnrootedMaws::build(t))
}

fn run_gen(cmd: GenCmd, out: &mut impl Write) -> Result<(), CliError> {
    let text = match cmd {
        GenCmd::FixedLength { sigma, n } => {
            let (word, alphabet, _) = gen_fixed_length_word(sigma, n)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            formats::write_word(&word, alphabet.sigma())
        }
        GenCmd::ExtremalUnrooted { s, n } => {
            if s < 1 || n < 1 {
                return Err(CliError::Validation("need s >= 1 and N >= 1".into()));
            }
            formats::write_unrooted(&gen_unrooted_extremal(s, n))
        }
        GenCmd::RandomRooted { n, sigma, seed } => {
            if n < 1 || sigma < 1 {
                return Err(CliError::Validation("need n >= 1 and sigma >= 1".into()));
            }
            formats::write_rooted(&gen_random_rooted(n, sigma, seed))
        }
        GenCmd::RandomUnrooted { n, sigma, seed } => {
            if n < 1 || sigma < 1 {
                return Err(CliError::Validation("need n >= 1 and sigma >= 1".into()));
            }
            formats::write_unrooted(&gen_random_unrooted(n, sigma, seed))
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn oracle_limits(opts: &VerifyOpts) -> OracleLimits {
    match opts.oracle_limit {
        None => OracleLimits::default(),
        Some(k) => OracleLimits {
            max_word_len: k as usize,
            max_rooted_nodes: k,
            max_unrooted_nodes: k,
        },
    }
}

fn compare_sets(
    fast: std::collections::BTreeSet<Word>,
    oracle: std::collections::BTreeSet<Word>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if fast == oracle {
        writeln!(out, "ok: {} minimal absent words match the oracle", fast.len())
            .map_err(io_err)?;
        return Ok(());
    }
    let missing: Vec<&Word> = oracle.difference(&fast).take(5).collect();
    let extra: Vec<&Word> = fast.difference(&oracle).take(5).collect();
    Err(CliError::Mismatch(format!(
        "pipeline={} oracle={}; missing e.g. {:?}; extra e.g. {:?}",
        fast.len(),
        oracle.len(),
        missing.iter().map(|w| format_word(w)).collect::<Vec<_>>(),
        extra.iter().map(|w| format_word(w)).collect::<Vec<_>>(),
    )))
}

fn run_verify(cmd: VerifyCmd, out: &mut impl Write) -> Result<(), CliError> {
    match cmd {
        VerifyCmd::Rooted { file, opts } => {
            let TreeFile::Rooted(t) = formats::parse_tree_file(&read_file(&file)?)? else {
                return Err(CliError::Validation("expected a rooted tree file".into()));
            };
            let oracle = oracle_maw_rooted(&t, &oracle_limits(&opts))
                .map_err(|e| CliError::Cap(e.to_string()))?;
            let maws = RootedMaws::build(&t);
            compare_sets(maws.collect_words().into_iter().collect(), oracle, out)
        }
        VerifyCmd::Unrooted { file, opts } => {
            let TreeFile::Unrooted(t) = formats::parse_tree_file(&read_file(&file)?)? else {
                return Err(CliError::Validation("expected an unrooted tree file".into()));
            };
            let oracle = oracle_maw_unrooted(&t, &oracle_limits(&opts))
                .map_err(|e| CliError::Cap(e.to_string()))?;
            let maws = UnrootedMaws::build(&t);
            let mut fast = std::collections::BTreeSet::new();
            maws.emit(|trip| {
                fast.insert(maws.rooted().suffix_tree().expand(&trip));
            });
            compare_sets(fast, oracle, out)
        }
        VerifyCmd::Word { input, ascii, opts } => {
            let (word, alphabet) = load_word(&input, ascii)?;
            let oracle = oracle_maw_word(&word, alphabet.sigma(), &oracle_limits(&opts))
                .map_err(|e| CliError::Cap(e.to_string()))?;
            let t = treemaw::word_to_rooted(alphabet, &word);
            let maws = RootedMaws::build(&t);
            compare_sets(maws.collect_words().into_iter().collect(), oracle, out)
        }
    }
}

fn run_bench(
    kind: BenchKind,
    sizes: &[u32],
    sigma: u32,
    seed: u64,
    cap: u64,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if sigma < 1 {
        return Err(CliError::Validation("need sigma >= 1".into()));
    }
    match kind {
        BenchKind::Rooted => {
            writeln!(out, "{:>12} {:>12} {:>10} {:>12} {:>12}", "n", "maws", "ms", "det_nodes", "st_nodes")
                .map_err(io_err)?;
            for (i, &n) in sizes.iter().enumerate() {
                let t = gen_random_rooted(n.max(1), sigma, seed.wrapping_add(i as u64));
                let start = Instant::now();
                let maws = RootedMaws::build(&t);
                let count = maws.count();
                let ms = start.elapsed().as_millis();
                writeln!(
                    out,
                    "{:>12} {:>12} {:>10} {:>12} {:>12}",
                    n,
                    count,
                    ms,
                    maws.determinized().n(),
                    maws.suffix_tree().node_count()
                )
                .map_err(io_err)?;
            }
        }
        BenchKind::Unrooted => {
            writeln!(
                out,
                "{:>8} {:>12} {:>10} {:>14} {:>12} {:>12}",
                "n", "maws", "ms", "merged_nodes", "det_nodes", "st_nodes"
            )
            .map_err(io_err)?;
            for (i, &n) in sizes.iter().enumerate() {
                let t = gen_random_unrooted(n.max(1), sigma, seed.wrapping_add(i as u64));
                let start = Instant::now();
                let maws = build_unrooted_capped(&t, cap)?;
                let count = maws.count();
                let ms = start.elapsed().as_millis();
                writeln!(
                    out,
                    "{:>8} {:>12} {:>10} {:>14} {:>12} {:>12}",
                    n,
                    count,
                    ms,
                    maws.merged_nodes(),
                    maws.rooted().determinized().n(),
                    maws.rooted().suffix_tree().node_count()
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(())
}

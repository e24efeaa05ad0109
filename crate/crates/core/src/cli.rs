//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for file or data errors.
//! Results go to stdout, warnings (skipped lines, OOV counts) to stderr.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::compress::{compress_table, output_dim, parse_paths, CompressionSpec};
use crate::embedding::{
    load_embeddings_file, save_embeddings, write_record, EmbeddingTable, LoadOptions,
    DEFAULT_PRECISION,
};
use crate::error::{Error, Result};
use crate::eval::{
    eval_categorization, eval_sts, eval_word_similarity, knn, render_table, CategorizationDataset,
    EvalReport, SentenceEncoding, StsDataset, WordSimDataset,
};
use crate::filter::{WaveletFilter, DEFAULT_FILTER};
use crate::sentence::{encode_corpus, EmptyPolicy, OovPolicy, SentenceEncoderConfig};
use crate::DEFAULT_SEED;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DATA: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wavelet-embed",
    version,
    about = "Wavelet compression of word embeddings and DWT-DCT sentence encoding"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct EmbArgs {
    /// Embedding file in GloVe / fastText text format
    #[arg(long)]
    emb: PathBuf,
    /// Fold words to lowercase on load and lookup
    #[arg(long)]
    lowercase: bool,
    /// Only read the first N words
    #[arg(long)]
    max_vocab: Option<usize>,
}

#[derive(Debug, clap::Args)]
struct CompressArgs {
    /// Compress the table first using this filter
    #[arg(long, default_value = DEFAULT_FILTER)]
    filter: String,
    /// Compress the table first, keeping these packet paths (e.g. D,AD)
    #[arg(long)]
    paths: Option<String>,
}

#[derive(Debug, clap::Args)]
struct EncoderArgs {
    #[arg(long, default_value = DEFAULT_FILTER)]
    filter: String,
    /// Wavelet levels; 0 disables the wavelet step
    #[arg(long, default_value_t = 1)]
    level: usize,
    /// DCT coefficients kept (1 or 2)
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value_t = OovArg::Skip)]
    oov: OovArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OovArg {
    Skip,
    Zero,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmptyArg {
    Zero,
    Error,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List supported filters with their tap checks
    Filters,
    /// Compress every word vector to the selected subbands
    Compress {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long, default_value = DEFAULT_FILTER)]
        filter: String,
        /// Comma-separated packet paths, e.g. D,AD,AAD
        #[arg(long)]
        paths: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Encode one sentence per corpus line into a fixed-size vector
    Encode {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        corpus: PathBuf,
        #[command(flatten)]
        enc: EncoderArgs,
        #[arg(long, value_enum, default_value_t = EmptyArg::Zero)]
        empty: EmptyArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Spearman correlation on a word-similarity dataset
    EvalWordsim {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        dataset: PathBuf,
        #[command(flatten)]
        compress: CompressArgs,
    },
    /// k-means purity on a concept categorization dataset
    EvalCat {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        compress: CompressArgs,
    },
    /// Nearest neighbours of a word by cosine similarity
    Knn {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[command(flatten)]
        compress: CompressArgs,
    },
    /// Pearson correlation on a sentence-similarity dataset
    EvalSts {
        #[command(flatten)]
        emb: EmbArgs,
        #[arg(long)]
        pairs: PathBuf,
        #[command(flatten)]
        enc: EncoderArgs,
        /// Use word averaging instead of the DWT-DCT encoder
        #[arg(long)]
        avg: bool,
    },
    /// Print the compressed dimension for a path list
    Dims {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        paths: String,
    },
}

impl From<OovArg> for OovPolicy {
    fn from(a: OovArg) -> Self {
        match a {
            OovArg::Skip => OovPolicy::Skip,
            OovArg::Zero => OovPolicy::Zero,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T, O, E>(args: I, stdout: &mut O, stderr: &mut E) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}

fn load(args: &EmbArgs, stderr: &mut impl Write) -> Result<EmbeddingTable> {
    let opts = LoadOptions {
        expected_dim: None,
        lowercase: args.lowercase,
        max_vocab: args.max_vocab,
    };
    let loaded = load_embeddings_file(&args.emb, &opts)?;
    if loaded.skipped_lines > 0 {
        writeln!(
            stderr,
            "warning: skipped {} malformed line(s) in {}",
            loaded.skipped_lines,
            args.emb.display()
        )?;
    }
    Ok(loaded.table)
}

fn maybe_compress(table: EmbeddingTable, args: &CompressArgs) -> Result<EmbeddingTable> {
    match &args.paths {
        Some(p) => compress_table(&table, &CompressionSpec::parse(&args.filter, p)?),
        None => Ok(table),
    }
}

fn encoder(args: &EncoderArgs, lowercase: bool) -> Result<SentenceEncoderConfig> {
    Ok(
        SentenceEncoderConfig::new(WaveletFilter::new(&args.filter)?, args.level, args.k)?
            .lowercase(lowercase)
            .oov(args.oov.into()),
    )
}

fn report(r: &EvalReport, stdout: &mut impl Write, stderr: &mut impl Write) -> Result<()> {
    write!(
        stdout,
        "{}\n{}",
        render_table(std::slice::from_ref(r)),
        r.key_values()
    )?;
    if r.n_skipped > 0 {
        writeln!(
            stderr,
            "warning: {} item(s) skipped (OOV or zero vector)",
            r.n_skipped
        )?;
    }
    Ok(())
}

fn execute(cmd: Command, stdout: &mut impl Write, stderr: &mut impl Write) -> Result<()> {
    match cmd {
        Command::Filters => {
            writeln!(
                stdout,
                "{:<7} {:>4} {:>10} {:>10} {:>10}  status",
                "name", "taps", "|sum h-r2|", "|sum g|", "orth err"
            )?;
            for f in WaveletFilter::all() {
                let c = f.check();
                writeln!(
                    stdout,
                    "{:<7} {:>4} {:>10.1e} {:>10.1e} {:>10.1e}  {}",
                    f.name(),
                    f.len(),
                    c.low_sum_err,
                    c.high_sum_err,
                    c.max_orth_err,
                    if c.passes(1e-10) { "ok" } else { "FAIL" }
                )?;
            }
        }
        Command::Compress {
            emb,
            filter,
            paths,
            out,
            precision,
        } => {
            let spec = CompressionSpec::parse(&filter, &paths)?;
            let table = load(&emb, stderr)?;
            let c = compress_table(&table, &spec)?;
            save_embeddings(&c, File::create(&out)?, precision)?;
            writeln!(
                stdout,
                "compressed {} words: {} -> {} ({})",
                c.len(),
                table.dim(),
                c.dim(),
                spec
            )?;
        }
        Command::Encode {
            emb,
            corpus,
            enc,
            empty,
            out,
            precision,
        } => {
            let mut cfg = encoder(&enc, emb.lowercase)?;
            cfg = cfg.empty(match empty {
                EmptyArg::Zero => EmptyPolicy::Zero,
                EmptyArg::Error => EmptyPolicy::Error,
            });
            let table = load(&emb, stderr)?;
            let lines = BufReader::new(File::open(&corpus)?)
                .lines()
                .map(|l| l.map(|s| s.trim_end_matches('\r').to_string()))
                .collect::<std::io::Result<Vec<_>>>()?;
            let encoded = encode_corpus(&lines, &table, &cfg);
            let mut w = BufWriter::new(File::create(&out)?);
            let mut zeros = 0;
            for (i, v) in encoded.into_iter().enumerate() {
                let v = v.map_err(|e| match e {
                    Error::EmptySentence => Error::Parse {
                        path: corpus.display().to_string(),
                        line: i + 1,
                        msg: "no known words".into(),
                    },
                    e => e,
                })?;
                if v.is_zero() {
                    zeros += 1;
                }
                write_record(&mut w, &(i + 1).to_string(), &v.values, precision)?;
            }
            w.flush()?;
            if zeros > 0 {
                writeln!(
                    stderr,
                    "warning: {zeros} sentence(s) encoded as zero vectors"
                )?;
            }
            writeln!(
                stdout,
                "encoded {} sentences to width {}",
                lines.len(),
                cfg.output_len(table.dim())
            )?;
        }
        Command::EvalWordsim {
            emb,
            dataset,
            compress,
        } => {
            let ds = WordSimDataset::from_file(&dataset)?;
            let table = maybe_compress(load(&emb, stderr)?, &compress)?;
            report(&eval_word_similarity(&table, &ds)?, stdout, stderr)?;
        }
        Command::EvalCat {
            emb,
            dataset,
            seed,
            compress,
        } => {
            let ds = CategorizationDataset::from_file(&dataset)?;
            let table = maybe_compress(load(&emb, stderr)?, &compress)?;
            report(&eval_categorization(&table, &ds, seed)?, stdout, stderr)?;
        }
        Command::Knn {
            emb,
            word,
            k,
            compress,
        } => {
            let table = maybe_compress(load(&emb, stderr)?, &compress)?;
            for n in knn(&table, &word, k)? {
                writeln!(stdout, "{}\t{:.6}", n.word, n.cosine)?;
            }
        }
        Command::EvalSts {
            emb,
            pairs,
            enc,
            avg,
        } => {
            let encoding = if avg {
                SentenceEncoding::Average {
                    lowercase: emb.lowercase,
                    oov: enc.oov.into(),
                }
            } else {
                SentenceEncoding::DwtDct(encoder(&enc, emb.lowercase)?)
            };
            let ds = StsDataset::from_file(&pairs)?;
            let table = load(&emb, stderr)?;
            let mut r = eval_sts(&ds, &table, &encoding)?;
            r.metric = format!("pearson/{}", encoding.label());
            report(&r, stdout, stderr)?;
        }
        Command::Dims { dim, paths } => {
            let paths = parse_paths(&paths)?;
            if paths.is_empty() {
                return Err(Error::NoPaths);
            }
            writeln!(stdout, "{}", output_dim(&paths, dim))?;
        }
    }
    Ok(())
}

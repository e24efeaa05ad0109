//! Spearman correlation on a word-similarity list, before and after
//! compression.
//!
//! ```text
//! cargo run --example word_similarity -- [EMBEDDINGS] [DATASET]
//! ```

use std::io::Cursor;
use std::path::PathBuf;

use wavelet_embed::compress::{compress_table, CompressionSpec};
use wavelet_embed::embedding::load_embeddings_file;
use wavelet_embed::eval::{eval_word_similarity, render_table, WordSimDataset};
use wavelet_embed::{LoadOptions, Result};

const BUILTIN: &str = "\
word1\tword2\tscore
cat\tdog\t8.5
oak\tpine\t8.0
tree\toak\t7.0
cat\tbird\t6.0
sat\tran\t5.0
quickly\tslowly\t4.0
dog\ttree\t2.0
mat\tbird\t1.0
the\tpine\t0.5
";

/// Returns the report values, raw table first.
pub fn run(args: &[String]) -> Result<Vec<f64>> {
    let emb = args.first().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/words8.txt")
    });
    let ds = match args.get(1) {
        Some(p) => WordSimDataset::from_file(p)?,
        None => WordSimDataset::parse(Cursor::new(BUILTIN), "builtin")?,
    };
    let table = load_embeddings_file(&emb, &LoadOptions::default())?.table;

    let mut reports = vec![eval_word_similarity(&table, &ds)?];
    for paths in ["A,D", "D", "A"] {
        let spec = CompressionSpec::parse("coif1", paths)?;
        let mut r = eval_word_similarity(&compress_table(&table, &spec)?, &ds)?;
        r.metric = format!("spearman/{}", spec.label());
        reports.push(r);
    }
    print!("{}", render_table(&reports));
    Ok(reports.iter().map(|r| r.value).collect())
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args)?;
    Ok(())
}

//! k-means purity of word clusters against gold categories.
//!
//! ```text
//! cargo run --example concept_categorization -- [EMBEDDINGS] [DATASET] [SEED]
//! ```

use std::path::PathBuf;

use wavelet_embed::compress::{compress_table, CompressionSpec};
use wavelet_embed::embedding::load_embeddings_file;
use wavelet_embed::eval::{eval_categorization, render_table, CategorizationDataset};
use wavelet_embed::{LoadOptions, Result, DEFAULT_SEED};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Returns the purity on the raw table.
pub fn run(args: &[String]) -> Result<f64> {
    let emb = args
        .first()
        .map(PathBuf::from)
        .unwrap_or_else(|| fixture("words8.txt"));
    let ds = CategorizationDataset::from_file(
        args.get(1)
            .map(PathBuf::from)
            .unwrap_or_else(|| fixture("cat.tsv")),
    )?;
    let seed = args
        .get(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);

    let table = load_embeddings_file(&emb, &LoadOptions::default())?.table;
    println!(
        "{} words in {} categories: {}",
        ds.len(),
        ds.k(),
        ds.categories().join(", ")
    );

    let raw = eval_categorization(&table, &ds, seed)?;
    let mut reports = vec![raw.clone()];
    for paths in ["A", "D,AD"] {
        let spec = CompressionSpec::parse("db2", paths)?;
        let mut r = eval_categorization(&compress_table(&table, &spec)?, &ds, seed)?;
        r.metric = format!("purity/{}", spec.label());
        reports.push(r);
    }
    print!("{}", render_table(&reports));
    Ok(raw.value)
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args)?;
    Ok(())
}

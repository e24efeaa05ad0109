//! Compresses a table of word vectors to a few wavelet subbands and writes
//! the result in the same text format.
//!
//! ```text
//! cargo run --example compress_words -- [EMBEDDINGS] [PATHS] [FILTER]
//! ```
//!
//! Defaults to the bundled 8-d sample table, `D,AD` and `coif2`.

use std::path::PathBuf;

use wavelet_embed::compress::{compress_table, CompressionSpec, RandomPool};
use wavelet_embed::embedding::{load_embeddings_file, save_embeddings};
use wavelet_embed::eval::cosine;
use wavelet_embed::{LoadOptions, Result, DEFAULT_SEED};

fn sample(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Returns (input dim, compressed dim).
pub fn run(args: &[String]) -> Result<(usize, usize)> {
    let emb = args
        .first()
        .map(PathBuf::from)
        .unwrap_or_else(|| sample("words8.txt"));
    let paths = args.get(1).map(String::as_str).unwrap_or("D,AD");
    let filter = args.get(2).map(String::as_str).unwrap_or("coif2");

    let table = load_embeddings_file(&emb, &LoadOptions::default())?.table;
    let spec = CompressionSpec::parse(filter, paths)?;
    let small = compress_table(&table, &spec)?;
    println!(
        "{}: {} words, {} -> {} dims with {spec}",
        table.name(),
        table.len(),
        table.dim(),
        small.dim()
    );

    let pool = RandomPool::new(table.dim(), small.dim(), DEFAULT_SEED)?;
    let random = pool.apply_table(&table)?;
    println!("random baseline keeps coordinates {:?}", pool.indices());

    let words: Vec<&str> = table.vocab().iter().take(4).map(String::as_str).collect();
    println!(
        "\n{:<14} {:>8} {:>8} {:>8}",
        "pair",
        "full",
        spec.label(),
        "random"
    );
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            let sim = |t: &wavelet_embed::EmbeddingTable| {
                cosine(t.lookup(a).unwrap(), t.lookup(b).unwrap())
            };
            println!(
                "{:<14} {:>8.4} {:>8.4} {:>8.4}",
                format!("{a}/{b}"),
                sim(&table)?,
                sim(&small)?,
                sim(&random)?
            );
        }
    }

    let mut buf = Vec::new();
    save_embeddings(&small, &mut buf, 4)?;
    let text = String::from_utf8_lossy(&buf);
    println!(
        "\nfirst line written: {}",
        text.lines().next().unwrap_or("")
    );
    Ok((table.dim(), small.dim()))
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args)?;
    Ok(())
}

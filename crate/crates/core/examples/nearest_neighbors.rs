//! Nearest neighbours by cosine similarity in the full and compressed
//! spaces.
//!
//! ```text
//! cargo run --example nearest_neighbors -- [WORD] [EMBEDDINGS]
//! ```

use std::path::PathBuf;

use wavelet_embed::compress::{compress_table, CompressionSpec};
use wavelet_embed::embedding::load_embeddings_file;
use wavelet_embed::eval::{knn, Neighbor};
use wavelet_embed::{LoadOptions, Result};

fn show(title: &str, ns: &[Neighbor]) {
    println!("{title}");
    for n in ns {
        println!("  {:<10} {:.4}", n.word, n.cosine);
    }
}

/// Returns the neighbours in the full space.
pub fn run(args: &[String]) -> Result<Vec<Neighbor>> {
    let word = args.first().map(String::as_str).unwrap_or("cat");
    let emb = args.get(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/words8.txt")
    });
    let table = load_embeddings_file(&emb, &LoadOptions::default())?.table;

    let full = knn(&table, word, 5)?;
    show(&format!("{word}, {} dims", table.dim()), &full);
    for paths in ["A", "D"] {
        let spec = CompressionSpec::parse("haar", paths)?;
        let small = compress_table(&table, &spec)?;
        show(
            &format!("{word}, {} dims ({spec})", small.dim()),
            &knn(&small, word, 5)?,
        );
    }
    Ok(full)
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args)?;
    Ok(())
}

//! Turns sentences of any length into fixed-size vectors.
//!
//! ```text
//! cargo run --example sentence_encoding
//! ```

use wavelet_embed::eval::cosine;
use wavelet_embed::sentence::{encode_avg, tokenize, OovPolicy};
use wavelet_embed::{encode_tokens, EmbeddingTable, Result, SentenceEncoderConfig, WaveletFilter};

fn toy_table() -> Result<EmbeddingTable> {
    let words = [
        "the", "cat", "dog", "sat", "on", "mat", "chased", "a", "ball",
    ];
    let rows = words.iter().enumerate().map(|(i, w)| {
        let v: Vec<f64> = (0..16)
            .map(|j| ((i * 16 + j) as f64 * 0.61).sin() + if j % (i + 2) == 0 { 0.5 } else { 0.0 })
            .collect();
        (*w, v)
    });
    EmbeddingTable::from_pairs("toy", 16, rows)
}

/// Returns the widths produced for each configuration.
pub fn run() -> Result<Vec<usize>> {
    let table = toy_table()?;
    let sentences = [
        "the cat sat on the mat",
        "the dog chased a ball",
        "a ball chased the dog",
    ];
    let configs = [(0, 1), (1, 1), (2, 1), (1, 2)];
    let mut widths = Vec::new();

    for (level, k) in configs {
        let cfg = SentenceEncoderConfig::new(WaveletFilter::new("db2")?, level, k)?;
        let vs = sentences
            .iter()
            .map(|s| encode_tokens(&tokenize(s), &table, &cfg))
            .collect::<Result<Vec<_>>>()?;
        widths.push(vs[0].values.len());
        println!(
            "L={level} K={k}: width {:>2}, cos(s2, s3) = {:.4}",
            vs[0].values.len(),
            cosine(&vs[1].values, &vs[2].values)?
        );
    }

    let a = encode_avg(&tokenize(sentences[1]), &table, false, OovPolicy::Skip)?;
    let b = encode_avg(&tokenize(sentences[2]), &table, false, OovPolicy::Skip)?;
    println!(
        "average:   width {:>2}, cos(s2, s3) = {:.4}",
        a.len(),
        cosine(&a, &b)?
    );
    println!("\nK=2 sees word order, so the two reorderings are no longer identical.");
    Ok(widths)
}

fn main() -> Result<()> {
    run()?;
    Ok(())
}

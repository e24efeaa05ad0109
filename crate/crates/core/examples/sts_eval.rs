//! Sentence similarity: Pearson correlation of encoder cosines with gold
//! scores, for the averaging baseline and several encoder settings.
//!
//! ```text
//! cargo run --example sts_eval -- [EMBEDDINGS] [PAIRS]
//! ```

use std::path::PathBuf;

use wavelet_embed::embedding::load_embeddings_file;
use wavelet_embed::eval::{eval_sts, render_table, SentenceEncoding, StsDataset};
use wavelet_embed::sentence::OovPolicy;
use wavelet_embed::{LoadOptions, Result, SentenceEncoderConfig, WaveletFilter};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Returns (label, pearson) per encoding.
pub fn run(args: &[String]) -> Result<Vec<(String, f64)>> {
    let emb = args
        .first()
        .map(PathBuf::from)
        .unwrap_or_else(|| fixture("words8.txt"));
    let pairs = args
        .get(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| fixture("sts.tsv"));
    let table = load_embeddings_file(&emb, &LoadOptions::default())?.table;
    let ds = StsDataset::from_file(pairs)?;

    let mut encodings = vec![SentenceEncoding::Average {
        lowercase: false,
        oov: OovPolicy::Skip,
    }];
    for (level, k) in [(0, 1), (1, 1), (1, 2), (0, 2)] {
        let cfg = SentenceEncoderConfig::new(WaveletFilter::new("coif1")?, level, k)?;
        encodings.push(SentenceEncoding::DwtDct(cfg));
    }

    let mut out = Vec::new();
    let mut reports = Vec::new();
    for e in &encodings {
        let mut r = eval_sts(&ds, &table, e)?;
        r.metric = format!("pearson/{}", e.label());
        out.push((e.label(), r.value));
        reports.push(r);
    }
    print!("{}", render_table(&reports));
    Ok(out)
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    run(&args)?;
    Ok(())
}

//! Intrinsic evaluation: word similarity, nearest neighbours, concept
//! categorization and unsupervised sentence similarity.
//!
//! Items that cannot be scored (an out-of-vocabulary word, or a vector
//! whose cosine is undefined) are skipped and counted, never imputed.

pub mod cluster;
pub mod datasets;
pub mod stats;

use std::fmt::Write as _;

use crate::embedding::EmbeddingTable;
use crate::error::{Error, Result};
use crate::sentence::{encode_avg, encode_tokens, tokenize, OovPolicy, SentenceEncoderConfig};

pub use cluster::{kmeans, purity, Clustering, DEFAULT_RESTARTS};
pub use datasets::{CategorizationDataset, SentencePair, StsDataset, WordPair, WordSimDataset};
pub use stats::{average_ranks, cosine, pearson, spearman};

/// Outcome of one evaluation run. `n_evaluated + n_skipped` is the
/// dataset size.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub metric: String,
    pub dataset: String,
    pub value: f64,
    pub n_evaluated: usize,
    pub n_skipped: usize,
}

impl EvalReport {
    /// `key=value` lines for scripts.
    pub fn key_values(&self) -> String {
        format!(
            "metric={}\ndataset={}\nvalue={:.6}\nn_evaluated={}\nn_skipped={}\n",
            self.metric, self.dataset, self.value, self.n_evaluated, self.n_skipped
        )
    }
}

/// Reports as an aligned text table.
pub fn render_table(reports: &[EvalReport]) -> String {
    let header = ["dataset", "metric", "value", "evaluated", "skipped"];
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.dataset.clone(),
                r.metric.clone(),
                format!("{:.4}", r.value),
                r.n_evaluated.to_string(),
                r.n_skipped.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (c, w))| {
                if i < 2 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&header);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells);
    }
    out
}

/// Spearman correlation between model cosines and gold scores.
pub fn eval_word_similarity(table: &EmbeddingTable, ds: &WordSimDataset) -> Result<EvalReport> {
    let mut model = Vec::with_capacity(ds.len());
    let mut gold = Vec::with_capacity(ds.len());
    for p in &ds.pairs {
        let (Some(a), Some(b)) = (table.lookup(&p.first), table.lookup(&p.second)) else {
            continue;
        };
        if let Ok(c) = cosine(a, b) {
            model.push(c);
            gold.push(p.score);
        }
    }
    if model.len() < 2 {
        return Err(Error::TooFew {
            needed: 2,
            found: model.len(),
        });
    }
    Ok(EvalReport {
        metric: "spearman".into(),
        dataset: ds.name.clone(),
        value: spearman(&model, &gold)?,
        n_evaluated: model.len(),
        n_skipped: ds.len() - model.len(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Neighbor {
    pub word: String,
    pub cosine: f64,
}

/// The `k` most cosine-similar words, excluding the query itself.
///
/// Sorted by decreasing cosine; equal scores keep vocabulary order.
/// Zero vectors are never returned.
pub fn knn(table: &EmbeddingTable, word: &str, k: usize) -> Result<Vec<Neighbor>> {
    let q = table
        .lookup(word)
        .ok_or_else(|| Error::OutOfVocabulary(word.to_string()))?;
    let qi = table.position(word);
    if stats::norm(q) == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut scored: Vec<(usize, f64)> = (0..table.len())
        .filter(|&i| Some(i) != qi)
        .filter_map(|i| cosine(q, table.row(i)).ok().map(|c| (i, c)))
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    scored.truncate(k);
    Ok(scored
        .into_iter()
        .map(|(i, c)| Neighbor {
            word: table.vocab()[i].clone(),
            cosine: c,
        })
        .collect())
}

/// k-means purity with `k` set to the number of gold categories.
pub fn eval_categorization(
    table: &EmbeddingTable,
    ds: &CategorizationDataset,
    seed: u64,
) -> Result<EvalReport> {
    let k = ds.k();
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (w, c) in &ds.items {
        if let Some(v) = table.lookup(w) {
            points.push(v);
            labels.push(c.as_str());
        }
    }
    if points.len() < k {
        return Err(Error::TooFew {
            needed: k,
            found: points.len(),
        });
    }
    let clusters = kmeans(&points, k, seed, DEFAULT_RESTARTS)?;
    Ok(EvalReport {
        metric: "purity".into(),
        dataset: ds.name.clone(),
        value: purity(&clusters.assignments, &labels),
        n_evaluated: points.len(),
        n_skipped: ds.len() - points.len(),
    })
}

/// How sentences are turned into vectors for [`eval_sts`].
#[derive(Debug, Clone, PartialEq)]
pub enum SentenceEncoding {
    DwtDct(SentenceEncoderConfig),
    Average { lowercase: bool, oov: OovPolicy },
}

impl SentenceEncoding {
    /// `None` when the sentence has nothing to encode.
    pub fn encode(&self, sentence: &str, table: &EmbeddingTable) -> Result<Option<Vec<f64>>> {
        let tokens = tokenize(sentence);
        let v = match self {
            SentenceEncoding::DwtDct(cfg) => match encode_tokens(&tokens, table, cfg) {
                Ok(v) => v.values,
                Err(Error::EmptySentence) => return Ok(None),
                Err(e) => return Err(e),
            },
            SentenceEncoding::Average { lowercase, oov } => {
                match encode_avg(&tokens, table, *lowercase, *oov) {
                    Ok(v) => v,
                    Err(Error::EmptySentence) => return Ok(None),
                    Err(e) => return Err(e),
                }
            }
        };
        Ok((stats::norm(&v) > 0.0).then_some(v))
    }

    pub fn label(&self) -> String {
        match self {
            SentenceEncoding::DwtDct(c) => {
                let coeffs = if c.k() == 1 { "dct[0]" } else { "dct[0:1]" };
                if c.level() == 0 {
                    coeffs.to_string()
                } else {
                    format!("dwt{}-{coeffs}/{}", c.level(), c.filter())
                }
            }
            SentenceEncoding::Average { .. } => "avg".into(),
        }
    }
}

/// Pearson correlation between sentence-pair cosines and gold scores.
pub fn eval_sts(
    ds: &StsDataset,
    table: &EmbeddingTable,
    encoding: &SentenceEncoding,
) -> Result<EvalReport> {
    let mut model = Vec::new();
    let mut gold = Vec::new();
    for p in &ds.pairs {
        let a = encoding.encode(&p.first, table)?;
        let b = encoding.encode(&p.second, table)?;
        if let (Some(a), Some(b)) = (a, b) {
            model.push(cosine(&a, &b)?);
            gold.push(p.score);
        }
    }
    if model.len() < 2 {
        return Err(Error::TooFew {
            needed: 2,
            found: model.len(),
        });
    }
    Ok(EvalReport {
        metric: "pearson".into(),
        dataset: ds.name.clone(),
        value: pearson(&model, &gold)?,
        n_evaluated: model.len(),
        n_skipped: ds.len() - model.len(),
    })
}

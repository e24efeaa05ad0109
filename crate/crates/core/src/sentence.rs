//! Fixed-size sentence vectors from a DWT over words followed by a DCT over
//! word positions.
//!
//! For a sentence of `N` words of dimension `d`:
//!
//! 1. each word row is replaced by the concatenation of its `2^L` depth-`L`
//!    packet subbands (`L == 0` leaves rows untouched);
//! 2. with `K == 2`, every subband block keeps only its even-indexed
//!    columns, halving its width;
//! 3. every column is DCT-II transformed along the word axis;
//! 4. coefficient rows `c[0]..c[K-1]` are concatenated.
//!
//! Output width is `2^L * b` for `K == 1` and `2 * 2^L * ceil(b / 2)` for
//! `K == 2`, where `b = ceil-halve(d, L)` is the subband width. It equals
//! `d` whenever `2^(L+K-1)` divides `d`, and never depends on `N`.
//! When `N < K` the missing coefficient rows are zero.

use rayon::prelude::*;

use crate::compress::average_words;
use crate::dct::dct_leading;
use crate::dwt::{packet_concat, subband_len};
use crate::embedding::EmbeddingTable;
use crate::error::{Error, Result};
use crate::filter::{WaveletFilter, DEFAULT_FILTER};

/// What to do with a token missing from the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OovPolicy {
    #[default]
    Skip,
    /// Insert an all-zero word in its place.
    Zero,
}

/// What to do when no word of a sentence survives OOV handling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmptyPolicy {
    #[default]
    Zero,
    Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SentenceEncoderConfig {
    filter: WaveletFilter,
    level: usize,
    k: usize,
    pub lowercase: bool,
    pub oov: OovPolicy,
    pub empty: EmptyPolicy,
}

impl SentenceEncoderConfig {
    /// `k` must be 1 or 2; `level == 0` disables the wavelet step.
    pub fn new(filter: WaveletFilter, level: usize, k: usize) -> Result<Self> {
        if !(1..=2).contains(&k) {
            return Err(Error::UnsupportedK(k));
        }
        Ok(Self {
            filter,
            level,
            k,
            lowercase: false,
            oov: OovPolicy::Skip,
            empty: EmptyPolicy::Zero,
        })
    }

    pub fn lowercase(mut self, yes: bool) -> Self {
        self.lowercase = yes;
        self
    }

    pub fn oov(mut self, policy: OovPolicy) -> Self {
        self.oov = policy;
        self
    }

    pub fn empty(mut self, policy: EmptyPolicy) -> Self {
        self.empty = policy;
        self
    }

    pub fn filter(&self) -> &WaveletFilter {
        &self.filter
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn blocks(&self, d: usize) -> (usize, usize) {
        if self.level == 0 {
            (1, d)
        } else {
            (1 << self.level, subband_len(d, self.level))
        }
    }

    /// Sentence-vector width for word dimension `d`.
    pub fn output_len(&self, d: usize) -> usize {
        let (count, width) = self.blocks(d);
        match self.k {
            1 => count * width,
            _ => 2 * count * width.div_ceil(2),
        }
    }
}

impl Default for SentenceEncoderConfig {
    fn default() -> Self {
        Self::new(
            WaveletFilter::new(DEFAULT_FILTER).expect("default filter"),
            1,
            1,
        )
        .expect("default K")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SentenceVector {
    pub values: Vec<f64>,
    pub config: SentenceEncoderConfig,
}

impl SentenceVector {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0.0)
    }
}

/// Encodes a stacked `N x d` sentence matrix given as word rows.
///
/// `words` must be non-empty; the empty-sentence policy is applied by
/// [`encode_tokens`], which knows the table dimension.
pub fn encode<V: AsRef<[f64]>>(words: &[V], cfg: &SentenceEncoderConfig) -> Result<SentenceVector> {
    let first = words.first().ok_or(Error::EmptySentence)?.as_ref();
    let d = first.len();
    if d == 0 {
        return Err(Error::EmptyInput);
    }
    let (_, width) = cfg.blocks(d);

    let mut rows = Vec::with_capacity(words.len());
    for (row, w) in words.iter().enumerate() {
        let w = w.as_ref();
        if w.len() != d {
            return Err(Error::Ragged {
                row,
                expected: d,
                found: w.len(),
            });
        }
        let mut r = packet_concat(w, &cfg.filter, cfg.level)?;
        if cfg.k == 2 {
            r = r
                .chunks(width)
                .flat_map(|block| block.iter().step_by(2).copied())
                .collect();
        }
        rows.push(r);
    }
    debug_assert_eq!(rows[0].len() * cfg.k, cfg.output_len(d));

    let cols = rows[0].len();
    let mut coeffs = vec![0.0; cfg.k * cols];
    let mut column = vec![0.0; rows.len()];
    for j in 0..cols {
        for (c, r) in column.iter_mut().zip(&rows) {
            *c = r[j];
        }
        for (k, v) in dct_leading(&column, cfg.k)?.into_iter().enumerate() {
            coeffs[k * cols + j] = v;
        }
    }
    Ok(SentenceVector {
        values: coeffs,
        config: cfg.clone(),
    })
}

/// Whitespace tokenization.
pub fn tokenize(sentence: &str) -> Vec<&str> {
    sentence.split_whitespace().collect()
}

fn gather<'t, S: AsRef<str>>(
    tokens: &[S],
    table: &'t EmbeddingTable,
    lowercase: bool,
    oov: OovPolicy,
    zero: &'t [f64],
) -> Vec<&'t [f64]> {
    tokens
        .iter()
        .filter_map(|t| {
            let t = t.as_ref();
            let hit = if lowercase {
                table.lookup(&t.to_lowercase())
            } else {
                table.lookup(t)
            };
            match (hit, oov) {
                (Some(v), _) => Some(v),
                (None, OovPolicy::Zero) => Some(zero),
                (None, OovPolicy::Skip) => None,
            }
        })
        .collect()
}

/// Looks up each token and encodes the result.
pub fn encode_tokens<S: AsRef<str>>(
    tokens: &[S],
    table: &EmbeddingTable,
    cfg: &SentenceEncoderConfig,
) -> Result<SentenceVector> {
    let zero = vec![0.0; table.dim()];
    let words = gather(tokens, table, cfg.lowercase, cfg.oov, &zero);
    if words.is_empty() {
        return match cfg.empty {
            EmptyPolicy::Zero => Ok(SentenceVector {
                values: vec![0.0; cfg.output_len(table.dim())],
                config: cfg.clone(),
            }),
            EmptyPolicy::Error => Err(Error::EmptySentence),
        };
    }
    encode(&words, cfg)
}

/// Averaging baseline.
pub fn encode_avg<S: AsRef<str>>(
    tokens: &[S],
    table: &EmbeddingTable,
    lowercase: bool,
    oov: OovPolicy,
) -> Result<Vec<f64>> {
    let zero = vec![0.0; table.dim()];
    let words = gather(tokens, table, lowercase, oov, &zero);
    if words.is_empty() {
        return Err(Error::EmptySentence);
    }
    average_words(&words)
}

/// Encodes one sentence per line, in parallel; output order follows input.
pub fn encode_corpus<S: AsRef<str> + Sync>(
    lines: &[S],
    table: &EmbeddingTable,
    cfg: &SentenceEncoderConfig,
) -> Vec<Result<SentenceVector>> {
    lines
        .par_iter()
        .map(|l| encode_tokens(&tokenize(l.as_ref()), table, cfg))
        .collect()
}

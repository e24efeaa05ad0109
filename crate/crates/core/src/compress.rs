//! Reduced-dimension word vectors from selected wavelet-packet subbands,
//! plus the averaging and random-pooling baselines.

use std::collections::HashSet;
use std::fmt;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dwt::{packet_node, subband_len, PacketPath};
use crate::embedding::EmbeddingTable;
use crate::error::{Error, Result};
use crate::filter::WaveletFilter;

/// Which subbands to keep, and in what order.
#[derive(Debug, Clone, PartialEq)]
pub struct CompressionSpec {
    filter: WaveletFilter,
    paths: Vec<PacketPath>,
    label: String,
}

impl CompressionSpec {
    /// Label defaults to the band names joined by `+`, e.g. `cD+cAD`.
    pub fn new(filter: WaveletFilter, paths: Vec<PacketPath>) -> Result<Self> {
        let label = paths
            .iter()
            .map(PacketPath::band_name)
            .collect::<Vec<_>>()
            .join("+");
        Self::with_label(filter, paths, label)
    }

    pub fn with_label(
        filter: WaveletFilter,
        paths: Vec<PacketPath>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if paths.is_empty() {
            return Err(Error::NoPaths);
        }
        let mut seen = HashSet::new();
        for p in &paths {
            if !seen.insert(p) {
                return Err(Error::DuplicatePath(p.to_string()));
            }
        }
        Ok(Self {
            filter,
            paths,
            label: label.into(),
        })
    }

    /// Parses the command-line form: a filter name and `D,AD,AAD`.
    pub fn parse(filter: &str, paths: &str) -> Result<Self> {
        let filter = WaveletFilter::new(filter)?;
        Self::new(filter, parse_paths(paths)?)
    }

    pub fn filter(&self) -> &WaveletFilter {
        &self.filter
    }

    pub fn paths(&self) -> &[PacketPath] {
        &self.paths
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn output_dim(&self, d: usize) -> usize {
        output_dim(&self.paths, d)
    }
}

impl fmt::Display for CompressionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.label, self.filter)
    }
}

/// Comma-separated packet paths, e.g. `"D,AD,AAD"`.
pub fn parse_paths(s: &str) -> Result<Vec<PacketPath>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

/// Compressed width for a `d`-dimensional input, without touching data.
pub fn output_dim(paths: &[PacketPath], d: usize) -> usize {
    paths.iter().map(|p| subband_len(d, p.depth())).sum()
}

/// Concatenates the selected subbands of `v`, in spec order.
pub fn compress_word(v: &[f64], spec: &CompressionSpec) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(spec.output_dim(v.len()));
    for p in &spec.paths {
        out.extend(packet_node(v, &spec.filter, p)?.coeffs);
    }
    Ok(out)
}

/// Applies [`compress_word`] to every vector; vocabulary order is kept.
pub fn compress_table(table: &EmbeddingTable, spec: &CompressionSpec) -> Result<EmbeddingTable> {
    let dim = spec.output_dim(table.dim());
    let rows = (0..table.len())
        .into_par_iter()
        .map(|i| compress_word(table.row(i), spec))
        .collect::<Result<Vec<_>>>()?;
    let name = format!("{} [{}]", table.name(), spec.label());
    Ok(table.with_rows(name, dim, rows))
}

/// A fixed random subset of coordinates, drawn once and shared by every
/// vector it is applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomPool {
    len: usize,
    indices: Vec<usize>,
}

impl RandomPool {
    /// Draws `keep` of `len` indices without replacement, sorted ascending.
    pub fn new(len: usize, keep: usize, seed: u64) -> Result<Self> {
        if keep == 0 || keep > len {
            return Err(Error::KeepOutOfRange { keep, len });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut indices = index::sample(&mut rng, len, keep).into_vec();
        indices.sort_unstable();
        Ok(Self { len, indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: v.len(),
            });
        }
        Ok(self.indices.iter().map(|&i| v[i]).collect())
    }

    /// Same subset applied to every word of `table`.
    pub fn apply_table(&self, table: &EmbeddingTable) -> Result<EmbeddingTable> {
        let rows = (0..table.len())
            .map(|i| self.apply(table.row(i)))
            .collect::<Result<Vec<_>>>()?;
        let name = format!("{} [random {}]", table.name(), self.indices.len());
        Ok(table.with_rows(name, self.indices.len(), rows))
    }
}

/// Keeps `keep` randomly chosen coordinates of `v`.
pub fn random_pool(v: &[f64], keep: usize, seed: u64) -> Result<Vec<f64>> {
    RandomPool::new(v.len(), keep, seed)?.apply(v)
}

/// Elementwise arithmetic mean.
pub fn average_words<V: AsRef<[f64]>>(vs: &[V]) -> Result<Vec<f64>> {
    let first = vs.first().ok_or(Error::EmptyInput)?.as_ref();
    let d = first.len();
    let mut sum = vec![0.0; d];
    for (row, v) in vs.iter().enumerate() {
        let v = v.as_ref();
        if v.len() != d {
            return Err(Error::Ragged {
                row,
                expected: d,
                found: v.len(),
            });
        }
        for (s, x) in sum.iter_mut().zip(v) {
            *s += x;
        }
    }
    let n = vs.len() as f64;
    sum.iter_mut().for_each(|s| *s /= n);
    Ok(sum)
}

//! Orthonormal DCT-II and its inverse.
//!
//! ```text
//! c[k] = s(k) * sum_{n=0}^{N-1} x[n] * cos(pi * (2n + 1) * k / (2N))
//! s(0) = sqrt(1/N),  s(k > 0) = sqrt(2/N)
//! ```
//!
//! With this scaling the transform matrix is orthogonal, so `||c|| == ||x||`
//! and `c[0] == sqrt(N) * mean(x)`.
//!
//! Evaluation is the direct `O(N^2)` sum. Inputs here are sentence lengths,
//! usually a few dozen points.

use std::f64::consts::PI;

use ndarray::{Array2, Axis};

use crate::error::{Error, Result};

/// DCT-II coefficients of a length-`N` signal.
#[derive(Debug, Clone, PartialEq)]
pub struct DctCoefficients {
    values: Vec<f64>,
}

impl DctCoefficients {
    /// Wraps precomputed coefficients (for example from storage).
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn source_len(&self) -> usize {
        self.values.len()
    }
}

fn scale(k: usize, n: usize) -> f64 {
    if k == 0 {
        (1.0 / n as f64).sqrt()
    } else {
        (2.0 / n as f64).sqrt()
    }
}

fn basis(n: usize, k: usize, len: usize) -> f64 {
    (PI * (2 * n + 1) as f64 * k as f64 / (2 * len) as f64).cos()
}

pub fn dct_ii(x: &[f64]) -> Result<DctCoefficients> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let len = x.len();
    let values = (0..len)
        .map(|k| {
            let s: f64 = x
                .iter()
                .enumerate()
                .map(|(n, v)| v * basis(n, k, len))
                .sum();
            scale(k, len) * s
        })
        .collect();
    Ok(DctCoefficients { values })
}

/// Inverse transform (orthonormal DCT-III).
pub fn idct(c: &DctCoefficients) -> Vec<f64> {
    let len = c.values.len();
    (0..len)
        .map(|n| {
            c.values
                .iter()
                .enumerate()
                .map(|(k, v)| scale(k, len) * v * basis(n, k, len))
                .sum()
        })
        .collect()
}

/// First `count` DCT-II coefficients, zero-filled when `count` exceeds the
/// signal length.
pub fn dct_leading(x: &[f64], count: usize) -> Result<Vec<f64>> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let len = x.len();
    Ok((0..count)
        .map(|k| {
            if k >= len {
                return 0.0;
            }
            let s: f64 = x
                .iter()
                .enumerate()
                .map(|(n, v)| v * basis(n, k, len))
                .sum();
            scale(k, len) * s
        })
        .collect())
}

/// Replaces every column with its DCT-II; row `k` of the result holds
/// coefficient `k` of each column.
pub fn dct_columns(m: &Array2<f64>) -> Result<Array2<f64>> {
    if m.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut out = Array2::zeros(m.raw_dim());
    for (src, mut dst) in m.axis_iter(Axis(1)).zip(out.axis_iter_mut(Axis(1))) {
        let col = src.to_vec();
        let c = dct_ii(&col)?;
        for (d, v) in dst.iter_mut().zip(c.values) {
            *d = v;
        }
    }
    Ok(out)
}

//! Periodized one-dimensional DWT and wavelet-packet decomposition.
//!
//! One analysis step slides both taps of a [`WaveletFilter`] along the
//! signal with circular wrap and keeps every second position, starting at 0:
//!
//! ```text
//! cA[i] = sum_k h[k] * x[(2i + k) mod n]
//! cD[i] = sum_k g[k] * x[(2i + k) mod n]
//! ```
//!
//! Odd-length input is first extended by repeating its last sample, so each
//! subband always has `ceil(n / 2)` coefficients. For even `n` the step is an
//! orthogonal change of basis.
//!
//! Packet nodes are addressed by [`PacketPath`]s read left to right from the
//! root: `"AD"` is the detail band of the level-1 approximation (`cAD`).
//!
//! | path | band  | meaning                                |
//! |------|-------|----------------------------------------|
//! | `A`  | `cA`  | level-1 approximation                  |
//! | `D`  | `cD`  | level-1 detail                         |
//! | `AA` | `cAA` | approximation of the approximation     |
//! | `AD` | `cAD` | detail of the approximation            |
//! | `DA` | `cDA` | approximation of the detail            |
//! | `DD` | `cDD` | detail of the detail                   |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::filter::WaveletFilter;

/// One branch of the packet tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// Low-pass output.
    Approx,
    /// High-pass output.
    Detail,
}

impl Branch {
    fn symbol(self) -> char {
        match self {
            Branch::Approx => 'A',
            Branch::Detail => 'D',
        }
    }
}

/// Address of a wavelet-packet node, e.g. `"AAD"`. Never empty.
///
/// Ordering is lexicographic with `A < D`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PacketPath(Vec<Branch>);

impl PacketPath {
    pub fn new(branches: Vec<Branch>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::InvalidPath(String::new()));
        }
        Ok(Self(branches))
    }

    pub fn branches(&self) -> &[Branch] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Path with one more branch appended.
    pub fn child(&self, branch: Branch) -> Self {
        let mut v = self.0.clone();
        v.push(branch);
        Self(v)
    }

    /// Band name in the `cA` / `cAD` notation.
    pub fn band_name(&self) -> String {
        format!("c{self}")
    }

    /// All `2^depth` paths of a level, in canonical order (`AA..A` first).
    pub fn level(depth: usize) -> Result<Vec<Self>> {
        if depth == 0 {
            return Err(Error::ZeroLevel);
        }
        let mut paths = vec![Vec::new()];
        for _ in 0..depth {
            paths = paths
                .into_iter()
                .flat_map(|p: Vec<Branch>| {
                    let mut a = p.clone();
                    a.push(Branch::Approx);
                    let mut d = p;
                    d.push(Branch::Detail);
                    [a, d]
                })
                .collect();
        }
        Ok(paths.into_iter().map(Self).collect())
    }
}

impl FromStr for PacketPath {
    type Err = Error;

    /// Parses `"AD"`, also accepting the band spelling `"cAD"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t.strip_prefix('c').unwrap_or(t);
        let branches = body
            .chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Branch::Approx),
                'D' | 'd' => Ok(Branch::Detail),
                _ => Err(Error::InvalidPath(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if branches.is_empty() {
            return Err(Error::InvalidPath(s.to_string()));
        }
        Ok(Self(branches))
    }
}

impl fmt::Display for PacketPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b.symbol())?;
        }
        Ok(())
    }
}

/// Coefficients of one packet node.
#[derive(Debug, Clone, PartialEq)]
pub struct Subband {
    pub path: PacketPath,
    pub coeffs: Vec<f64>,
    /// Length of the root signal the node was computed from.
    pub source_len: usize,
}

/// Length of one subband after one analysis step.
pub fn half_len(n: usize) -> usize {
    n.div_ceil(2)
}

/// Length of any node at `depth` below a signal of length `n`.
pub fn subband_len(n: usize, depth: usize) -> usize {
    (0..depth).fold(n, |len, _| half_len(len))
}

/// Single-level periodized analysis step, returning `(cA, cD)`.
pub fn dwt_1d(signal: &[f64], filter: &WaveletFilter) -> Result<(Vec<f64>, Vec<f64>)> {
    if signal.is_empty() {
        return Err(Error::EmptySignal);
    }
    let half = half_len(signal.len());
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    analyze(signal, filter, &mut approx, &mut detail);
    Ok((approx, detail))
}

fn analyze(signal: &[f64], filter: &WaveletFilter, approx: &mut [f64], detail: &mut [f64]) {
    let n = signal.len();
    let padded = n + n % 2;
    let last = signal[n - 1];
    let at = |j: usize| if j < n { signal[j] } else { last };
    let (h, g) = (filter.low(), filter.high());
    for (i, (a, d)) in approx.iter_mut().zip(detail.iter_mut()).enumerate() {
        let mut sa = 0.0;
        let mut sd = 0.0;
        for k in 0..h.len() {
            let j = (2 * i + k) % padded;
            let x = at(j);
            sa += h[k] * x;
            sd += g[k] * x;
        }
        *a = sa;
        *d = sd;
    }
}

/// Inverse of [`dwt_1d`]: rebuilds a signal of length `orig_len`.
pub fn idwt_1d(
    approx: &[f64],
    detail: &[f64],
    filter: &WaveletFilter,
    orig_len: usize,
) -> Result<Vec<f64>> {
    if orig_len == 0 {
        return Err(Error::EmptySignal);
    }
    let half = half_len(orig_len);
    if approx.len() != half || detail.len() != half {
        return Err(Error::CoefficientLength {
            approx: approx.len(),
            detail: detail.len(),
            expected: half,
        });
    }
    let padded = 2 * half;
    let mut out = vec![0.0; padded];
    let (h, g) = (filter.low(), filter.high());
    for i in 0..half {
        let (a, d) = (approx[i], detail[i]);
        for k in 0..h.len() {
            out[(2 * i + k) % padded] += h[k] * a + g[k] * d;
        }
    }
    out.truncate(orig_len);
    Ok(out)
}

/// Coefficients of the packet node at `path`.
pub fn packet_node(signal: &[f64], filter: &WaveletFilter, path: &PacketPath) -> Result<Subband> {
    let mut current = signal.to_vec();
    for branch in path.branches() {
        let (a, d) = dwt_1d(&current, filter)?;
        current = match branch {
            Branch::Approx => a,
            Branch::Detail => d,
        };
    }
    Ok(Subband {
        path: path.clone(),
        coeffs: current,
        source_len: signal.len(),
    })
}

/// Every node at depth `level`, in canonical path order.
///
/// Runs in `O(level * n * filter_len)`: each level touches every
/// coefficient once.
pub fn packet_level(signal: &[f64], filter: &WaveletFilter, level: usize) -> Result<Vec<Subband>> {
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    if signal.is_empty() {
        return Err(Error::EmptySignal);
    }
    let mut nodes: Vec<(Vec<Branch>, Vec<f64>)> = vec![(Vec::new(), signal.to_vec())];
    for _ in 0..level {
        let mut next = Vec::with_capacity(nodes.len() * 2);
        for (path, coeffs) in nodes {
            let (a, d) = dwt_1d(&coeffs, filter)?;
            let mut pa = path.clone();
            pa.push(Branch::Approx);
            let mut pd = path;
            pd.push(Branch::Detail);
            next.push((pa, a));
            next.push((pd, d));
        }
        nodes = next;
    }
    Ok(nodes
        .into_iter()
        .map(|(path, coeffs)| Subband {
            path: PacketPath(path),
            coeffs,
            source_len: signal.len(),
        })
        .collect())
}

/// Concatenation of all depth-`level` subbands; the identity for `level == 0`.
pub fn packet_concat(signal: &[f64], filter: &WaveletFilter, level: usize) -> Result<Vec<f64>> {
    if level == 0 {
        if signal.is_empty() {
            return Err(Error::EmptySignal);
        }
        return Ok(signal.to_vec());
    }
    Ok(packet_level(signal, filter, level)?
        .into_iter()
        .flat_map(|s| s.coeffs)
        .collect())
}

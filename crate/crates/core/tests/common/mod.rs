//! Reference implementations used only by tests. None of these call into
//! the transform or statistics code they are compared against.

#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Explicit analysis matrix of one periodized DWT step: the top half
/// produces cA, the bottom half cD. Odd inputs are extended by repeating
/// the last sample, which the caller does before multiplying.
pub fn dwt_matrix(low: &[f64], high: &[f64], n: usize) -> Vec<Vec<f64>> {
    assert!(n.is_multiple_of(2));
    let half = n / 2;
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..half {
        for k in 0..low.len() {
            let col = (2 * i + k) % n;
            m[i][col] += low[k];
            m[half + i][col] += high[k];
        }
    }
    m
}

pub fn matvec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// DWT by dense matrix multiplication.
pub fn dwt_by_matrix(x: &[f64], low: &[f64], high: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut ext = x.to_vec();
    if ext.len() % 2 == 1 {
        ext.push(*x.last().unwrap());
    }
    let m = dwt_matrix(low, high, ext.len());
    let y = matvec(&m, &ext);
    let half = ext.len() / 2;
    (y[..half].to_vec(), y[half..].to_vec())
}

/// DCT-II straight from the defining double sum.
pub fn dct_definition(x: &[f64]) -> Vec<f64> {
    let n = x.len() as f64;
    (0..x.len())
        .map(|k| {
            let mut s = 0.0;
            for (i, v) in x.iter().enumerate() {
                s += v * (PI / n * (i as f64 + 0.5) * k as f64).cos();
            }
            let scale = if k == 0 {
                (1.0 / n).sqrt()
            } else {
                (2.0 / n).sqrt()
            };
            scale * s
        })
        .collect()
}

/// Tie-averaged ranks by counting, O(n^2).
pub fn ranks_by_counting(xs: &[f64]) -> Vec<f64> {
    xs.iter()
        .map(|&x| {
            let below = xs.iter().filter(|&&y| y < x).count() as f64;
            let equal = xs.iter().filter(|&&y| y == x).count() as f64;
            below + (equal + 1.0) / 2.0
        })
        .collect()
}

/// Pearson via raw sums.
pub fn pearson_raw_sums(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let syy: f64 = ys.iter().map(|y| y * y).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / ((n * sxx - sx * sx).sqrt() * (n * syy - sy * sy).sqrt())
}

pub fn spearman_brute(xs: &[f64], ys: &[f64]) -> f64 {
    pearson_raw_sums(&ranks_by_counting(xs), &ranks_by_counting(ys))
}

fn partition_inertia(points: &[Vec<f64>], assign: &[usize], k: usize) -> f64 {
    let d = points[0].len();
    let mut total = 0.0;
    for c in 0..k {
        let members: Vec<&Vec<f64>> = points
            .iter()
            .zip(assign)
            .filter(|(_, &a)| a == c)
            .map(|(p, _)| p)
            .collect();
        let n = members.len() as f64;
        let mean: Vec<f64> = (0..d)
            .map(|j| members.iter().map(|p| p[j]).sum::<f64>() / n)
            .collect();
        for p in members {
            total += p
                .iter()
                .zip(&mean)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>();
        }
    }
    total
}

fn purity_by_counting(assign: &[usize], labels: &[usize], k: usize) -> f64 {
    let n_labels = labels.iter().max().unwrap() + 1;
    let mut hits = 0;
    for c in 0..k {
        let best = (0..n_labels)
            .map(|l| {
                assign
                    .iter()
                    .zip(labels)
                    .filter(|(&a, &b)| a == c && b == l)
                    .count()
            })
            .max()
            .unwrap();
        hits += best;
    }
    hits as f64 / assign.len() as f64
}

/// Minimum-inertia partition into exactly `k` non-empty clusters by
/// enumerating all `k^n` assignments. Returns `(inertia, purity)`.
pub fn exhaustive_partition(points: &[Vec<f64>], labels: &[usize], k: usize) -> (f64, f64) {
    let n = points.len();
    let mut assign = vec![0usize; n];
    let mut best = (f64::INFINITY, 0.0);
    loop {
        let mut used = vec![false; k];
        assign.iter().for_each(|&a| used[a] = true);
        if used.iter().all(|&u| u) {
            let inertia = partition_inertia(points, &assign, k);
            if inertia < best.0 {
                best = (inertia, purity_by_counting(&assign, labels, k));
            }
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            assign[i] += 1;
            if assign[i] < k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Random clustered instance: `k` centres, `n` points, labels that mostly
/// follow the generating centre but with some flips.
pub fn clustered_instance(rng: &mut ChaCha8Rng, n: usize, k: usize) -> (Vec<Vec<f64>>, Vec<usize>) {
    let centres: Vec<Vec<f64>> = (0..k)
        .map(|_| (0..2).map(|_| rng.random_range(-6.0..6.0)).collect())
        .collect();
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        let c = i % k;
        points.push(
            centres[c]
                .iter()
                .map(|x| x + rng.random_range(-1.5..1.5))
                .collect(),
        );
        labels.push(if rng.random_bool(0.25) {
            rng.random_range(0..k)
        } else {
            c
        });
    }
    (points, labels)
}

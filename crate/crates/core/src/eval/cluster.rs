//! Seeded k-means (k-means++ initialisation, Lloyd iterations) and purity.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_RESTARTS: usize = 10;
const MAX_ITERS: usize = 300;

#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    /// Cluster index per point.
    pub assignments: Vec<usize>,
    /// Sum of squared distances to assigned centroids.
    pub inertia: f64,
    /// Which restart produced this solution.
    pub restart: usize,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(p: &[f64], centers: &[Vec<f64>]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (c, center) in centers.iter().enumerate() {
        let d = sq_dist(p, center);
        if d < best.1 {
            best = (c, d);
        }
    }
    best
}

fn plus_plus<V: AsRef<[f64]>>(points: &[V], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = points.len();
    let mut centers = vec![points[rng.random_range(0..n)].as_ref().to_vec()];
    let mut d2: Vec<f64> = points
        .iter()
        .map(|p| sq_dist(p.as_ref(), &centers[0]))
        .collect();
    while centers.len() < k {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let mut target = rng.random::<f64>() * total;
            let mut idx = n - 1;
            for (i, &w) in d2.iter().enumerate() {
                if target < w {
                    idx = i;
                    break;
                }
                target -= w;
            }
            idx
        } else {
            rng.random_range(0..n)
        };
        let c = points[pick].as_ref().to_vec();
        for (d, p) in d2.iter_mut().zip(points) {
            *d = d.min(sq_dist(p.as_ref(), &c));
        }
        centers.push(c);
    }
    centers
}

fn lloyd<V: AsRef<[f64]>>(points: &[V], mut centers: Vec<Vec<f64>>) -> (Vec<usize>, f64) {
    let k = centers.len();
    let dim = centers[0].len();
    let mut assign = vec![usize::MAX; points.len()];
    for _ in 0..MAX_ITERS {
        let mut changed = false;
        for (a, p) in assign.iter_mut().zip(points) {
            let (c, _) = nearest(p.as_ref(), &centers);
            if *a != c {
                *a = c;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for (&a, p) in assign.iter().zip(points) {
            counts[a] += 1;
            for (s, x) in sums[a].iter_mut().zip(p.as_ref()) {
                *s += x;
            }
        }
        for c in 0..k {
            if counts[c] == 0 {
                // Empty cluster: move it to the point farthest from its centroid.
                let far = (0..points.len())
                    .max_by(|&i, &j| {
                        let di = sq_dist(points[i].as_ref(), &centers[assign[i]]);
                        let dj = sq_dist(points[j].as_ref(), &centers[assign[j]]);
                        di.total_cmp(&dj).then(j.cmp(&i))
                    })
                    .expect("non-empty");
                centers[c] = points[far].as_ref().to_vec();
                assign[far] = c;
            } else {
                let n = counts[c] as f64;
                centers[c] = sums[c].iter().map(|s| s / n).collect();
            }
        }
    }
    let inertia = assign
        .iter()
        .zip(points)
        .map(|(&a, p)| sq_dist(p.as_ref(), &centers[a]))
        .sum();
    (assign, inertia)
}

/// Best of `restarts` seeded runs by inertia; ties go to the lowest restart.
pub fn kmeans<V: AsRef<[f64]> + Sync>(
    points: &[V],
    k: usize,
    seed: u64,
    restarts: usize,
) -> Result<Clustering> {
    if k == 0 || points.len() < k {
        return Err(Error::TooFew {
            needed: k.max(1),
            found: points.len(),
        });
    }
    let runs: Vec<Clustering> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(r as u64);
            let centers = plus_plus(points, k, &mut rng);
            let (assignments, inertia) = lloyd(points, centers);
            Clustering {
                assignments,
                inertia,
                restart: r,
            }
        })
        .collect();
    Ok(runs
        .into_iter()
        .reduce(|best, c| if c.inertia < best.inertia { c } else { best })
        .expect("at least one restart"))
}

/// Fraction of points whose cluster's majority label is their own.
pub fn purity<L: Eq + std::hash::Hash>(assignments: &[usize], labels: &[L]) -> f64 {
    assert_eq!(assignments.len(), labels.len());
    if assignments.is_empty() {
        return 0.0;
    }
    let mut counts: HashMap<usize, HashMap<&L, usize>> = HashMap::new();
    for (&a, l) in assignments.iter().zip(labels) {
        *counts.entry(a).or_default().entry(l).or_default() += 1;
    }
    let majority: usize = counts
        .values()
        .map(|m| m.values().max().copied().unwrap_or(0))
        .sum();
    majority as f64 / assignments.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blobs() -> (Vec<Vec<f64>>, Vec<&'static str>) {
        let pts = vec![
            vec![0.0, 0.1],
            vec![0.2, -0.1],
            vec![-0.1, 0.0],
            vec![10.0, 10.2],
            vec![9.8, 10.0],
            vec![10.1, 9.9],
        ];
        (pts, vec!["a", "a", "a", "b", "b", "b"])
    }

    #[test]
    fn separated_blobs_are_pure() {
        let (pts, labels) = blobs();
        let c = kmeans(&pts, 2, 7, DEFAULT_RESTARTS).unwrap();
        assert_eq!(purity(&c.assignments, &labels), 1.0);
    }

    #[test]
    fn purity_ignores_label_names() {
        let a = [0, 0, 1, 1, 1];
        let p1 = purity(&a, &["x", "y", "y", "y", "x"]);
        let p2 = purity(&a, &["q", "r", "r", "r", "q"]);
        assert_eq!(p1, p2);
        assert_eq!(p1, 3.0 / 5.0);
    }

    #[test]
    fn deterministic_for_seed() {
        let (pts, _) = blobs();
        assert_eq!(
            kmeans(&pts, 3, 11, 10).unwrap(),
            kmeans(&pts, 3, 11, 10).unwrap()
        );
    }

    #[test]
    fn too_few_points() {
        assert!(matches!(
            kmeans(&[vec![1.0]], 2, 0, 10),
            Err(Error::TooFew {
                needed: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn duplicate_points_do_not_panic() {
        let pts = vec![vec![1.0, 1.0]; 5];
        let c = kmeans(&pts, 3, 1, 4).unwrap();
        assert_eq!(c.inertia, 0.0);
    }
}

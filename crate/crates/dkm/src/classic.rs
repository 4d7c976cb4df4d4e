//! Classic k-means: seeded initialisation, nearest-centre assignment, and
//! centroid updates, iterated until the partition stabilises.
//!
//! All randomness flows through a counter-based generator seeded from the
//! config, so a given (data, config) pair always produces the same model,
//! on any platform. Ties in nearest-centre comparisons go to the lowest
//! index, and every reduction runs in index order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::types::{
    clusters_from_assignment, sq_dist, Clustering, Config, Dataset, InitMode, Point,
    TerminationReason,
};

/// Picks `k` initial centres from the data points using the seeded generator.
///
/// `RandomPoints` draws k distinct indices. `PlusPlus` draws the first centre
/// uniformly, then each further centre with probability proportional to its
/// squared distance from the nearest centre chosen so far; points coinciding
/// with a chosen centre have zero weight and are never redrawn. If every
/// remaining point has zero weight (all duplicates of chosen centres), the
/// lowest unchosen index is taken so that k distinct indices always come back.
pub fn init_centres(data: &Dataset, k: usize, mode: InitMode, seed: u64) -> Result<Vec<Point>> {
    let n = data.len();
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let indices = match mode {
        InitMode::RandomPoints => {
            let mut idx: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.random_range(i..n);
                idx.swap(i, j);
            }
            idx.truncate(k);
            idx
        }
        InitMode::PlusPlus => {
            let mut chosen = Vec::with_capacity(k);
            chosen.push(rng.random_range(0..n));
            // Squared distance from each point to its nearest chosen centre.
            let mut weight: Vec<f64> = (0..n)
                .map(|i| sq_dist(data.point(i), data.point(chosen[0])))
                .collect();
            while chosen.len() < k {
                let total: f64 = weight.iter().sum();
                let next = if total > 0.0 {
                    let target = rng.random::<f64>() * total;
                    let mut cum = 0.0;
                    let mut pick = None;
                    for (i, &w) in weight.iter().enumerate() {
                        cum += w;
                        if cum > target {
                            pick = Some(i);
                            break;
                        }
                    }
                    // Roundoff can leave the walk one short; take the last
                    // index that carries any weight.
                    pick.unwrap_or_else(|| {
                        weight.iter().rposition(|&w| w > 0.0).expect("total > 0")
                    })
                } else {
                    // Every remaining point duplicates a chosen centre.
                    (0..n).find(|i| !chosen.contains(i)).expect("k <= n")
                };
                chosen.push(next);
                for (i, w) in weight.iter_mut().enumerate() {
                    let d = sq_dist(data.point(i), data.point(next));
                    if d < *w {
                        *w = d;
                    }
                }
            }
            chosen
        }
    };
    Ok(indices.iter().map(|&i| data.point(i).clone()).collect())
}

/// Maps every point to the index of its nearest centre (squared Euclidean
/// distance, ties to the lowest centre index).
pub fn assign(data: &Dataset, centres: &[Point]) -> Result<Vec<usize>> {
    if centres.is_empty() {
        return Err(Error::InvalidK { k: 0, n: data.len() });
    }
    for c in centres {
        if c.dim() != data.dim() {
            return Err(Error::DimensionMismatch {
                expected: data.dim(),
                got: c.dim(),
            });
        }
    }
    let assignment = data
        .points()
        .iter()
        .map(|p| {
            let mut best = 0;
            let mut best_d = sq_dist(p, &centres[0]);
            for (j, c) in centres.iter().enumerate().skip(1) {
                let d = sq_dist(p, c);
                if d < best_d {
                    best = j;
                    best_d = d;
                }
            }
            best
        })
        .collect();
    Ok(assignment)
}

/// Recomputes each of the `k` centres as the centroid of its assigned points.
///
/// A cluster left empty by reassignment is repaired rather than kept: its
/// centre relocates to the point farthest from that point's own new centroid
/// (ties to the lowest point index, donors restricted to clusters that would
/// not be emptied in turn), and `assignment` is updated to match. After this
/// function returns, every centre is exactly the centroid of its members.
pub fn update_centres(
    data: &Dataset,
    assignment: &mut [usize],
    k: usize,
) -> Result<Vec<Point>> {
    let n = data.len();
    if assignment.len() != n {
        return Err(Error::NotAPartition(format!(
            "assignment covers {} points, dataset has {n}",
            assignment.len()
        )));
    }
    if let Some(&bad) = assignment.iter().find(|&&j| j >= k) {
        return Err(Error::NotAPartition(format!(
            "assignment references cluster {bad}, but k = {k}"
        )));
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &j) in assignment.iter().enumerate() {
        members[j].push(i);
    }
    let mut centres: Vec<Option<Point>> = members
        .iter()
        .map(|m| {
            if m.is_empty() {
                Ok(None)
            } else {
                crate::types::centroid_of_members(data, m).map(Some)
            }
        })
        .collect::<Result<_>>()?;
    for j in 0..k {
        if centres[j].is_some() {
            continue;
        }
        // With k <= n, some cluster always has two or more members.
        let mut far: Option<(usize, f64)> = None;
        for (i, &owner) in assignment.iter().enumerate() {
            if members[owner].len() < 2 {
                continue;
            }
            let d = sq_dist(data.point(i), centres[owner].as_ref().expect("owner non-empty"));
            if far.is_none_or(|(_, fd)| d > fd) {
                far = Some((i, d));
            }
        }
        let (i, _) = far.ok_or(Error::InvalidK { k, n })?;
        let owner = assignment[i];
        members[owner].retain(|&m| m != i);
        members[j] = vec![i];
        assignment[i] = j;
        centres[j] = Some(data.point(i).clone());
        centres[owner] = Some(crate::types::centroid_of_members(data, &members[owner])?);
    }
    Ok(centres.into_iter().map(|c| c.expect("repaired")).collect())
}

/// Runs classic k-means and returns the final model.
pub fn run_kmeans(data: &Dataset, config: &Config) -> Result<Clustering> {
    run_kmeans_traced(data, config).map(|(clustering, _)| clustering)
}

/// Like [`run_kmeans`], but also returns the objective value recorded after
/// every completed assign/update iteration. The sequence is non-increasing.
pub fn run_kmeans_traced(data: &Dataset, config: &Config) -> Result<(Clustering, Vec<f64>)> {
    config.validate()?;
    let n = data.len();
    let k = config.k_max;
    if k > n {
        return Err(Error::InvalidK { k, n });
    }
    let mut centres = init_centres(data, k, config.init_mode, config.seed)?;
    let mut kept: Option<Vec<usize>> = None;
    let mut objectives = Vec::new();
    let mut iterations = 0usize;
    let tol_sq = config.tolerance * config.tolerance;
    let reason = loop {
        if iterations == config.max_iterations {
            break TerminationReason::MaxIterations;
        }
        let mut assignment = assign(data, &centres)?;
        if kept.as_ref() == Some(&assignment) {
            // Fixed point: the centres are already the centroids of this
            // assignment, so nothing can move again.
            break TerminationReason::Converged;
        }
        let new_centres = update_centres(data, &mut assignment, k)?;
        let shift_sq = centres
            .iter()
            .zip(&new_centres)
            .map(|(a, b)| sq_dist(a, b))
            .fold(0.0, f64::max);
        iterations += 1;
        objectives.push(objective_of_assignment(data, &assignment, &new_centres));
        centres = new_centres;
        kept = Some(assignment);
        if shift_sq < tol_sq {
            break TerminationReason::Converged;
        }
    };
    let assignment = kept.expect("max_iterations >= 1 guarantees one iteration");
    let clusters = clusters_from_assignment(&assignment, &centres);
    let clustering = Clustering::new(data, clusters, iterations, reason)?;
    Ok((clustering, objectives))
}

fn objective_of_assignment(data: &Dataset, assignment: &[usize], centres: &[Point]) -> f64 {
    let mut total = 0.0;
    for (i, &j) in assignment.iter().enumerate() {
        total += sq_dist(data.point(i), &centres[j]);
    }
    total
}

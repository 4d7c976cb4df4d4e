//! Discriminative k-means for two-class data.
//!
//! Classic k-means describes each class in isolation; this variant instead
//! carves the space so that cluster centres *separate* the classes. The run
//! starts from a single cluster (unless warm-started) and alternates:
//!
//! 1. assign every point to its nearest centre;
//! 2. delete clusters that lost all members;
//! 3. split every cluster whose members carry both labels into two children,
//!    and move every pure cluster to its member centroid.
//!
//! A split places the children on *opposite* sides of the parent's two class
//! means, each pushed away from the other class:
//!
//! ```text
//! positive child = pos_mean - w_pos * (neg_mean - pos_mean)
//! negative child = neg_mean - w_neg * (pos_mean - neg_mean)
//! ```
//!
//! so the pair repels along the line joining the class means. Under
//! [`WeightMode::DataCount`] each child's push is the other class's share of
//! the parent population: the same weighting that lets a pooled mean be
//! rebuilt from two partial means (see [`pooled_mean_update`]), which makes
//! the children straddle the parent centroid. A run stops when it converges,
//! when the cluster budget `k_max` fills up (after one final assignment
//! against the post-split centres, so the output stays self-consistent), or
//! at the iteration cap.

use crate::classic::assign;
use crate::error::{Error, Result};
use crate::types::{
    centroid, centroid_of_members, clusters_from_assignment, sq_dist, BinaryLabel, Cluster,
    Clustering, Config, Dataset, Point, TerminationReason, WeightMode,
};

/// Two class means closer than this gap (in every coordinate) give a split
/// no direction to repel along; the children stay at the means instead.
pub const DEGENERATE_MEAN_GAP: f64 = 1e-12;

/// Record of one cluster split: where the children went and which weights
/// produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitEvent {
    /// Zero-based iteration in which the split happened.
    pub iteration: usize,
    /// Index of the parent cluster at that iteration.
    pub parent_cluster: usize,
    pub positive_child_centre: Point,
    pub negative_child_centre: Point,
    pub w_used_positive: f64,
    pub w_used_negative: f64,
    pub positive_count: usize,
    pub negative_count: usize,
    /// True when the class means coincided (within [`DEGENERATE_MEAN_GAP`])
    /// and the children were left at the means with an effective w of zero.
    pub degenerate: bool,
}

/// State captured at each iteration of a discriminative run, for replay,
/// verification, and per-iteration plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationSnapshot {
    /// Centres in force during the assignment step (after pruning clusters
    /// that lost all members).
    pub centres: Vec<Point>,
    /// Nearest-centre assignment against `centres`.
    pub assignment: Vec<usize>,
    /// Centres after the update phase; split children are appended at the
    /// end, in ascending parent order.
    pub updated_centres: Vec<Point>,
}

/// Full output of a traced discriminative run.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminativeRun {
    pub clustering: Clustering,
    pub split_events: Vec<SplitEvent>,
    pub snapshots: Vec<IterationSnapshot>,
}

/// Combines two partial means back into the mean of the union:
/// `c_dot + w * (c_ddot - c_dot)` with `w = n_ddot / (n_dot + n_ddot)`.
///
/// Both sides must be non-empty. This identity is what anchors the
/// `DataCount` weighting: with it, an unsplit mixed cluster's update equals
/// its plain member centroid.
pub fn pooled_mean_update(
    c_dot: &Point,
    n_dot: usize,
    c_ddot: &Point,
    n_ddot: usize,
) -> Result<Point> {
    if n_dot == 0 || n_ddot == 0 {
        return Err(Error::PooledMeanEmptySide);
    }
    if c_dot.dim() != c_ddot.dim() {
        return Err(Error::DimensionMismatch {
            expected: c_dot.dim(),
            got: c_ddot.dim(),
        });
    }
    let w = n_ddot as f64 / (n_dot + n_ddot) as f64;
    let coords = c_dot
        .coords()
        .iter()
        .zip(c_ddot.coords())
        .map(|(a, b)| a + w * (b - a))
        .collect();
    Point::new(coords)
}

/// Splits a label-mixed cluster into a positive and a negative child with
/// repelling centres, returning `(positive_child, negative_child, event)`.
///
/// The caller owns the event's `iteration` and `parent_cluster` fields; they
/// come back as zero here.
pub fn split_mixed_cluster(
    data: &Dataset,
    cluster: &Cluster,
    weight_mode: WeightMode,
) -> Result<(Point, Point, SplitEvent)> {
    if let WeightMode::Fixed(w) = weight_mode {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidConfig(
                "fixed weight must be finite and non-negative".into(),
            ));
        }
    }
    let labels = data.require_binary_labels()?;
    let mut pos_members = Vec::new();
    let mut neg_members = Vec::new();
    for &i in cluster.members() {
        if i >= data.len() {
            return Err(Error::NotAPartition(format!(
                "cluster references point {i}, but the dataset has {} points",
                data.len()
            )));
        }
        match labels[i] {
            BinaryLabel::Positive => pos_members.push(i),
            BinaryLabel::Negative => neg_members.push(i),
        }
    }
    if pos_members.is_empty() || neg_members.is_empty() {
        return Err(Error::PureClusterSplit);
    }
    let pos_mean = centroid_of_members(data, &pos_members)?;
    let neg_mean = centroid_of_members(data, &neg_members)?;
    let total = (pos_members.len() + neg_members.len()) as f64;
    let (w_pos, w_neg) = match weight_mode {
        WeightMode::DataCount => (
            neg_members.len() as f64 / total,
            pos_members.len() as f64 / total,
        ),
        WeightMode::Fixed(w) => (w, w),
    };
    let degenerate = pos_mean
        .coords()
        .iter()
        .zip(neg_mean.coords())
        .all(|(a, b)| (a - b).abs() <= DEGENERATE_MEAN_GAP);
    let (positive_child, negative_child, w_pos, w_neg) = if degenerate {
        (pos_mean.clone(), neg_mean.clone(), 0.0, 0.0)
    } else {
        let pos_child = Point::new(
            pos_mean
                .coords()
                .iter()
                .zip(neg_mean.coords())
                .map(|(p, n)| p - w_pos * (n - p))
                .collect(),
        )?;
        let neg_child = Point::new(
            neg_mean
                .coords()
                .iter()
                .zip(pos_mean.coords())
                .map(|(n, p)| n - w_neg * (p - n))
                .collect(),
        )?;
        (pos_child, neg_child, w_pos, w_neg)
    };
    let event = SplitEvent {
        iteration: 0,
        parent_cluster: 0,
        positive_child_centre: positive_child.clone(),
        negative_child_centre: negative_child.clone(),
        w_used_positive: w_pos,
        w_used_negative: w_neg,
        positive_count: pos_members.len(),
        negative_count: neg_members.len(),
        degenerate,
    };
    Ok((positive_child, negative_child, event))
}

/// Runs discriminative k-means on binary-labelled data.
///
/// With no warm start, the run grows from a single cluster at the global
/// centroid. A warm start's centres are taken verbatim as the initial
/// centres; clusters they fail to attract are deleted on the first
/// assignment.
pub fn run_discriminative(
    data: &Dataset,
    config: &Config,
    warm_start: Option<&Clustering>,
) -> Result<(Clustering, Vec<SplitEvent>)> {
    let run = run_discriminative_traced(data, config, warm_start)?;
    Ok((run.clustering, run.split_events))
}

/// [`run_discriminative`] with the initial centres given directly, e.g. read
/// back from a stored model.
pub fn run_discriminative_from_centres(
    data: &Dataset,
    config: &Config,
    centres: &[Point],
) -> Result<(Clustering, Vec<SplitEvent>)> {
    let run = run_impl(data, config, centres.to_vec())?;
    Ok((run.clustering, run.split_events))
}

/// Traced variant returning per-iteration snapshots alongside the model.
pub fn run_discriminative_traced(
    data: &Dataset,
    config: &Config,
    warm_start: Option<&Clustering>,
) -> Result<DiscriminativeRun> {
    let initial = match warm_start {
        Some(model) => model.centres(),
        None => vec![centroid(data.points().iter())?],
    };
    run_impl(data, config, initial)
}

fn run_impl(data: &Dataset, config: &Config, initial: Vec<Point>) -> Result<DiscriminativeRun> {
    config.validate()?;
    let labels = data.require_binary_labels()?.to_vec();
    if initial.is_empty() {
        return Err(Error::InvalidK {
            k: 0,
            n: data.len(),
        });
    }
    for c in &initial {
        if c.dim() != data.dim() {
            return Err(Error::DimensionMismatch {
                expected: data.dim(),
                got: c.dim(),
            });
        }
    }
    if initial.len() > config.k_max {
        return Err(Error::InvalidConfig(format!(
            "warm start provides {} centres, exceeding k_max = {}",
            initial.len(),
            config.k_max
        )));
    }
    let tol_sq = config.tolerance * config.tolerance;
    let mut centres = initial;
    let mut events: Vec<SplitEvent> = Vec::new();
    let mut snapshots: Vec<IterationSnapshot> = Vec::new();
    let mut iterations = 0usize;
    let mut converged_assignment: Option<Vec<usize>> = None;
    let reason = loop {
        if iterations == config.max_iterations {
            break TerminationReason::MaxIterations;
        }
        let raw = assign(data, &centres)?;
        let (kept, assignment, deleted) = prune_empty(&centres, raw);
        centres = kept;
        let k_now = centres.len();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); k_now];
        for (i, &j) in assignment.iter().enumerate() {
            members[j].push(i);
        }
        let census: Vec<(usize, usize)> = members
            .iter()
            .map(|m| {
                let pos = m
                    .iter()
                    .filter(|&&i| labels[i] == BinaryLabel::Positive)
                    .count();
                (pos, m.len() - pos)
            })
            .collect();
        let mixed: Vec<usize> = (0..k_now)
            .filter(|&j| census[j].0 > 0 && census[j].1 > 0)
            .collect();
        // When more clusters are mixed than the budget allows, split the most
        // contested first: largest minority count, ties to the lower index.
        let budget = config.k_max - k_now;
        let mut split_flag = vec![false; k_now];
        if mixed.len() <= budget {
            for &j in &mixed {
                split_flag[j] = true;
            }
        } else {
            let mut order: Vec<usize> = mixed.clone();
            order.sort_by_key(|&j| (std::cmp::Reverse(census[j].0.min(census[j].1)), j));
            for &j in order.iter().take(budget) {
                split_flag[j] = true;
            }
        }
        let mut new_centres = Vec::with_capacity(k_now);
        let mut children = Vec::new();
        for j in 0..k_now {
            if split_flag[j] {
                let parent = Cluster::new(centres[j].clone(), members[j].clone());
                let (pos_child, neg_child, mut event) =
                    split_mixed_cluster(data, &parent, config.weight_mode)?;
                event.iteration = iterations;
                event.parent_cluster = j;
                events.push(event);
                new_centres.push(pos_child);
                children.push(neg_child);
            } else {
                // Pure clusters move to their member centroid; an unsplit
                // mixed cluster's pooled mean is the same point.
                new_centres.push(centroid_of_members(data, &members[j])?);
            }
        }
        let shift_sq = centres
            .iter()
            .zip(&new_centres)
            .map(|(a, b)| sq_dist(a, b))
            .fold(0.0, f64::max);
        let split_any = !children.is_empty();
        new_centres.append(&mut children);
        iterations += 1;
        snapshots.push(IterationSnapshot {
            centres: centres.clone(),
            assignment: assignment.clone(),
            updated_centres: new_centres.clone(),
        });
        let structure_stable = !deleted && !split_any && mixed.is_empty();
        centres = new_centres;
        if structure_stable && shift_sq < tol_sq {
            converged_assignment = Some(assignment);
            break TerminationReason::Converged;
        }
        if centres.len() == config.k_max {
            break TerminationReason::MaxClusters;
        }
    };
    // On the budget and iteration-cap paths the latest centres were never
    // assigned against, so run one final assignment to leave the model
    // self-consistent.
    let (final_centres, final_assignment) = match converged_assignment {
        Some(a) => (centres, a),
        None => {
            let raw = assign(data, &centres)?;
            let (kept, a, _) = prune_empty(&centres, raw);
            (kept, a)
        }
    };
    let clusters = clusters_from_assignment(&final_assignment, &final_centres);
    let clustering = Clustering::new(data, clusters, iterations, reason)?;
    Ok(DiscriminativeRun {
        clustering,
        split_events: events,
        snapshots,
    })
}

/// Drops centres that attracted no points and reindexes the assignment onto
/// the surviving centres. Returns `(kept_centres, assignment, any_deleted)`.
fn prune_empty(centres: &[Point], assignment: Vec<usize>) -> (Vec<Point>, Vec<usize>, bool) {
    let mut counts = vec![0usize; centres.len()];
    for &j in &assignment {
        counts[j] += 1;
    }
    if counts.iter().all(|&c| c > 0) {
        return (centres.to_vec(), assignment, false);
    }
    let mut remap = vec![usize::MAX; centres.len()];
    let mut kept = Vec::new();
    for (j, centre) in centres.iter().enumerate() {
        if counts[j] > 0 {
            remap[j] = kept.len();
            kept.push(centre.clone());
        }
    }
    let assignment = assignment.into_iter().map(|j| remap[j]).collect();
    (kept, assignment, true)
}

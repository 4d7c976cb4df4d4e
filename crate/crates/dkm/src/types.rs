//! Core value types: points, labelled datasets, clusters, clusterings, and
//! the tuning knobs shared by both clustering algorithms.
//!
//! Everything here is immutable after construction. Constructors validate
//! their invariants and return [`Error`](crate::error::Error) on violation,
//! so downstream code can assume well-formed values. Accumulations run
//! sequentially in index order, which keeps results bit-reproducible for a
//! given input ordering.

use crate::error::{Error, Result};

/// A point in d-dimensional feature space. Coordinates are finite and d >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point, rejecting empty coordinate lists and non-finite values.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoordinate { index });
        }
        Ok(Self { coords })
    }

    /// Convenience constructor from a slice.
    pub fn from_slice(coords: &[f64]) -> Result<Self> {
        Self::new(coords.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
}

impl std::ops::Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

/// Two-class label attached to a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryLabel {
    Positive,
    Negative,
}

/// A non-empty collection of points of uniform dimension, optionally carrying
/// a binary label and/or an identity label per point.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    points: Vec<Point>,
    binary_labels: Option<Vec<BinaryLabel>>,
    identity_labels: Option<Vec<usize>>,
}

impl Dataset {
    /// Unlabelled dataset.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        Self::with_labels(points, None, None)
    }

    /// Dataset with a binary label per point.
    pub fn with_binary_labels(points: Vec<Point>, labels: Vec<BinaryLabel>) -> Result<Self> {
        Self::with_labels(points, Some(labels), None)
    }

    /// General constructor. Label vectors, when present, must match the
    /// number of points; all points must share one dimension.
    pub fn with_labels(
        points: Vec<Point>,
        binary_labels: Option<Vec<BinaryLabel>>,
        identity_labels: Option<Vec<usize>>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let dim = points[0].dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        if let Some(labels) = &binary_labels {
            if labels.len() != points.len() {
                return Err(Error::LabelLengthMismatch {
                    kind: "binary",
                    got: labels.len(),
                    expected: points.len(),
                });
            }
        }
        if let Some(labels) = &identity_labels {
            if labels.len() != points.len() {
                return Err(Error::LabelLengthMismatch {
                    kind: "identity",
                    got: labels.len(),
                    expected: points.len(),
                });
            }
        }
        Ok(Self {
            points,
            binary_labels,
            identity_labels,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Datasets are never empty; provided for clippy-friendliness.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn binary_labels(&self) -> Option<&[BinaryLabel]> {
        self.binary_labels.as_deref()
    }

    pub fn identity_labels(&self) -> Option<&[usize]> {
        self.identity_labels.as_deref()
    }

    pub fn require_binary_labels(&self) -> Result<&[BinaryLabel]> {
        self.binary_labels.as_deref().ok_or(Error::MissingBinaryLabels)
    }

    pub fn require_identity_labels(&self) -> Result<&[usize]> {
        self.identity_labels.as_deref().ok_or(Error::MissingIdentityLabels)
    }

    /// New dataset holding the points at `indices`, in the given order,
    /// carrying whatever labels the source has.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.len()) {
            return Err(Error::NotAPartition(format!(
                "index {bad} out of range for {} points",
                self.len()
            )));
        }
        let points = indices.iter().map(|&i| self.points[i].clone()).collect();
        let binary_labels = self
            .binary_labels
            .as_ref()
            .map(|l| indices.iter().map(|&i| l[i]).collect());
        let identity_labels = self
            .identity_labels
            .as_ref()
            .map(|l| indices.iter().map(|&i| l[i]).collect());
        Self::with_labels(points, binary_labels, identity_labels)
    }
}

/// One cluster: a centre plus the indices of its member points.
///
/// The centre is not required to be the member centroid; the discriminative
/// update places it elsewhere on purpose.
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    centre: Point,
    members: Vec<usize>,
}

impl Cluster {
    pub fn new(centre: Point, members: Vec<usize>) -> Self {
        Self { centre, members }
    }

    pub fn centre(&self) -> &Point {
        &self.centre
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// (positive, negative) member counts under the given labels.
    pub fn label_counts(&self, labels: &[BinaryLabel]) -> (usize, usize) {
        let mut pos = 0;
        let mut neg = 0;
        for &i in &self.members {
            match labels[i] {
                BinaryLabel::Positive => pos += 1,
                BinaryLabel::Negative => neg += 1,
            }
        }
        (pos, neg)
    }

    /// True when members carry both labels.
    pub fn is_mixed(&self, labels: &[BinaryLabel]) -> bool {
        let (pos, neg) = self.label_counts(labels);
        pos > 0 && neg > 0
    }
}

/// Why a clustering run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminationReason {
    /// Assignments and centres stabilised within tolerance.
    Converged,
    /// The discriminative run reached its cluster budget.
    MaxClusters,
    /// The iteration cap was hit first.
    MaxIterations,
}

/// Result of a clustering run: a partition of the dataset into non-empty
/// clusters, with run metadata and the achieved objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    clusters: Vec<Cluster>,
    iterations_run: usize,
    objective: f64,
    terminated_by: TerminationReason,
}

impl Clustering {
    /// Assembles and validates a clustering over `data`: every point in
    /// exactly one cluster, no empty clusters, centre dimensions matching.
    /// The objective is computed here, from the stored (not recomputed)
    /// centres.
    pub fn new(
        data: &Dataset,
        clusters: Vec<Cluster>,
        iterations_run: usize,
        terminated_by: TerminationReason,
    ) -> Result<Self> {
        let objective = objective_of_clusters(data, &clusters)?;
        Ok(Self {
            clusters,
            iterations_run,
            objective,
            terminated_by,
        })
    }

    /// Builds the clustering induced by assigning every point of `data` to
    /// its nearest centre, dropping centres that attract no points.
    pub fn from_centres(data: &Dataset, centres: &[Point]) -> Result<Self> {
        let assignment = crate::classic::assign(data, centres)?;
        let clusters = clusters_from_assignment(&assignment, centres);
        Self::new(data, clusters, 0, TerminationReason::Converged)
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn k(&self) -> usize {
        self.clusters.len()
    }

    pub fn iterations_run(&self) -> usize {
        self.iterations_run
    }

    /// Sum of squared distances from each point to its own cluster's centre,
    /// as computed at construction time.
    pub fn objective(&self) -> f64 {
        self.objective
    }

    pub fn terminated_by(&self) -> TerminationReason {
        self.terminated_by
    }

    /// The cluster centres, in cluster order.
    pub fn centres(&self) -> Vec<Point> {
        self.clusters.iter().map(|c| c.centre().clone()).collect()
    }
}

/// Groups points by assignment, pairing cluster `j` with `centres[j]` and
/// omitting clusters that end up empty. Member lists come out in ascending
/// point order.
pub(crate) fn clusters_from_assignment(assignment: &[usize], centres: &[Point]) -> Vec<Cluster> {
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); centres.len()];
    for (i, &j) in assignment.iter().enumerate() {
        members[j].push(i);
    }
    centres
        .iter()
        .zip(members)
        .filter(|(_, m)| !m.is_empty())
        .map(|(c, m)| Cluster::new(c.clone(), m))
        .collect()
}

/// How the repelling factor w is chosen when a mixed cluster splits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightMode {
    /// Each child's w is the other side's share of the cluster population,
    /// mirroring the pooled-mean decomposition of the parent centroid.
    DataCount,
    /// Both children use the given constant (>= 0, finite). Zero turns the
    /// split into plain per-class means.
    Fixed(f64),
}

/// How classic k-means picks its initial centres.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitMode {
    /// k distinct data points chosen by the seeded generator.
    RandomPoints,
    /// Squared-distance-weighted seeding: each next centre is drawn with
    /// probability proportional to its squared distance from the nearest
    /// centre chosen so far.
    PlusPlus,
}

/// Shared tuning knobs for both algorithms.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Cluster budget: exact cluster count for classic k-means, upper bound
    /// for the discriminative variant.
    pub k_max: usize,
    /// Convergence threshold on the largest centre displacement.
    pub tolerance: f64,
    pub max_iterations: usize,
    pub weight_mode: WeightMode,
    pub seed: u64,
    /// Used by classic k-means only; the discriminative run always grows
    /// from a single cluster unless warm-started.
    pub init_mode: InitMode,
}

impl Config {
    pub fn new(k_max: usize) -> Self {
        Self {
            k_max,
            tolerance: 1e-9,
            max_iterations: 1000,
            weight_mode: WeightMode::DataCount,
            seed: 0,
            init_mode: InitMode::RandomPoints,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_weight_mode(mut self, mode: WeightMode) -> Self {
        self.weight_mode = mode;
        self
    }

    pub fn with_init_mode(mut self, mode: InitMode) -> Self {
        self.init_mode = mode;
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max < 1 {
            return Err(Error::InvalidConfig("k_max must be at least 1".into()));
        }
        if !self.tolerance.is_finite() || self.tolerance <= 0.0 {
            return Err(Error::InvalidConfig(
                "tolerance must be finite and positive".into(),
            ));
        }
        if self.max_iterations < 1 {
            return Err(Error::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        if let WeightMode::Fixed(w) = self.weight_mode {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidConfig(
                    "fixed weight must be finite and non-negative".into(),
                ));
            }
        }
        Ok(())
    }
}

impl Default for Config {
    fn default() -> Self {
        Self::new(8)
    }
}

/// Squared Euclidean distance between two points of equal dimension.
pub fn squared_distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(sq_dist(a, b))
}

/// Unchecked squared distance for hot paths; dimensions must already match.
pub(crate) fn sq_dist(a: &Point, b: &Point) -> f64 {
    debug_assert_eq!(a.dim(), b.dim());
    let mut acc = 0.0;
    for (x, y) in a.coords().iter().zip(b.coords()) {
        let d = x - y;
        acc += d * d;
    }
    acc
}

/// Component-wise mean of a non-empty sequence of points.
pub fn centroid<'a, I>(points: I) -> Result<Point>
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut iter = points.into_iter();
    let first = iter.next().ok_or(Error::EmptyCentroid)?;
    let mut acc = first.coords().to_vec();
    let mut count = 1usize;
    for p in iter {
        if p.dim() != acc.len() {
            return Err(Error::DimensionMismatch {
                expected: acc.len(),
                got: p.dim(),
            });
        }
        for (a, x) in acc.iter_mut().zip(p.coords()) {
            *a += x;
        }
        count += 1;
    }
    for a in &mut acc {
        *a /= count as f64;
    }
    Point::new(acc)
}

/// Centroid of the dataset points selected by `members`.
pub(crate) fn centroid_of_members(data: &Dataset, members: &[usize]) -> Result<Point> {
    centroid(members.iter().map(|&i| data.point(i)))
}

/// Recomputes the clustering objective from stored centres, validating that
/// the clusters partition the dataset.
pub fn objective(data: &Dataset, clustering: &Clustering) -> Result<f64> {
    objective_of_clusters(data, clustering.clusters())
}

fn objective_of_clusters(data: &Dataset, clusters: &[Cluster]) -> Result<f64> {
    let n = data.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (j, cluster) in clusters.iter().enumerate() {
        if cluster.members().is_empty() {
            return Err(Error::NotAPartition(format!("cluster {j} has no members")));
        }
        if cluster.centre().dim() != data.dim() {
            return Err(Error::DimensionMismatch {
                expected: data.dim(),
                got: cluster.centre().dim(),
            });
        }
        for &i in cluster.members() {
            if i >= n {
                return Err(Error::NotAPartition(format!(
                    "cluster {j} references point {i}, but the dataset has {n} points"
                )));
            }
            match owner[i] {
                Some(prev) => {
                    return Err(Error::NotAPartition(format!(
                        "point {i} appears in clusters {prev} and {j}"
                    )))
                }
                None => owner[i] = Some(j),
            }
        }
    }
    if let Some(i) = owner.iter().position(|o| o.is_none()) {
        return Err(Error::NotAPartition(format!(
            "point {i} is not assigned to any cluster"
        )));
    }
    let mut total = 0.0;
    for cluster in clusters {
        for &i in cluster.members() {
            total += sq_dist(cluster.centre(), data.point(i));
        }
    }
    Ok(total)
}

//! Recognition harness: per-identity cluster models, nearest-centre
//! classification, leave-one-out evaluation, and the SSD/timing comparisons
//! between the classic and discriminative model families.
//!
//! The protocol treats each identity as a class. A classic model for
//! identity `i` clusters only `i`'s points. A discriminative model for `i`
//! is trained one-vs-rest: `i`'s points labelled positive, everyone else's
//! negative, keeping the centres of clusters whose members are majority
//! positive. A query is classified by the identity owning the globally
//! nearest centre across all models.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::classic::run_kmeans;
use crate::discriminative::run_discriminative;
use crate::error::{Error, Result};
use crate::types::{
    centroid_of_members, sq_dist, BinaryLabel, Clustering, Config, Dataset, Point,
};

/// Which model family trained a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Classic,
    Discriminative,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Classic => "classic",
            Algorithm::Discriminative => "discriminative",
        })
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classic" => Ok(Algorithm::Classic),
            "discriminative" => Ok(Algorithm::Discriminative),
            other => Err(Error::InvalidConfig(format!(
                "unknown algorithm {other:?}, expected \"classic\" or \"discriminative\""
            ))),
        }
    }
}

/// The centres representing one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityModel {
    pub identity: usize,
    pub centres: Vec<Point>,
    pub algorithm: Algorithm,
    /// True when a discriminative run produced no majority-positive cluster
    /// and the model fell back to the identity's plain centroid.
    pub fallback: bool,
}

/// Confusion counts from a classification experiment, rows indexed by true
/// identity and columns by predicted identity, in ascending identity order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfusionMatrix {
    identities: Vec<usize>,
    counts: Vec<Vec<usize>>,
    marginalized: Vec<f64>,
}

impl ConfusionMatrix {
    fn new(identities: Vec<usize>) -> Self {
        let k = identities.len();
        Self {
            identities,
            counts: vec![vec![0; k]; k],
            marginalized: vec![0.0; k],
        }
    }

    fn record(&mut self, true_identity: usize, predicted_identity: usize) {
        let row = self.index_of(true_identity);
        let col = self.index_of(predicted_identity);
        self.counts[row][col] += 1;
    }

    fn index_of(&self, identity: usize) -> usize {
        self.identities
            .binary_search(&identity)
            .expect("identity known to the experiment")
    }

    /// Recomputes the per-identity misclassification fractions
    /// (1 - diagonal / row sum; empty rows count as 0).
    fn finalize(&mut self) {
        self.marginalized = self
            .counts
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let total: usize = row.iter().sum();
                if total == 0 {
                    0.0
                } else {
                    1.0 - row[i] as f64 / total as f64
                }
            })
            .collect();
    }

    /// Ascending identity labels indexing rows and columns.
    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    /// Per-true-identity misclassification fraction.
    pub fn marginalized(&self) -> &[f64] {
        &self.marginalized
    }

    pub fn row_sum(&self, row: usize) -> usize {
        self.counts[row].iter().sum()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().map(|r| r.iter().sum::<usize>()).sum()
    }

    /// Fraction of all queries classified wrongly.
    pub fn overall_error(&self) -> f64 {
        let total = self.total();
        if total == 0 {
            return 0.0;
        }
        let correct: usize = (0..self.identities.len()).map(|i| self.counts[i][i]).sum();
        1.0 - correct as f64 / total as f64
    }
}

impl fmt::Display for ConfusionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "true\\pred")?;
        for id in &self.identities {
            write!(f, "\t{id}")?;
        }
        writeln!(f, "\tmiss")?;
        for (i, row) in self.counts.iter().enumerate() {
            write!(f, "{}", self.identities[i])?;
            for c in row {
                write!(f, "\t{c}")?;
            }
            writeln!(f, "\t{:.3}", self.marginalized[i])?;
        }
        Ok(())
    }
}

/// Per-query outcome of the leave-one-out comparison. `benefit` is +1 when
/// only the discriminative model classified the query correctly, -1 when
/// only the classic one did, and 0 when they agreed.
#[derive(Debug, Clone, PartialEq)]
pub struct SsdRecord {
    pub query_id: usize,
    pub ssd_classic: f64,
    pub ssd_discriminative: f64,
    pub benefit: i8,
}

/// Everything the leave-one-out protocol measures, for both model families
/// over the identical query splits.
#[derive(Debug, Clone, PartialEq)]
pub struct LooReport {
    pub classic: ConfusionMatrix,
    pub discriminative: ConfusionMatrix,
    pub records: Vec<SsdRecord>,
}

/// Trains one model per identity, in ascending identity order.
pub fn train_identity_models(
    data: &Dataset,
    algorithm: Algorithm,
    config: &Config,
) -> Result<Vec<IdentityModel>> {
    config.validate()?;
    let ids = data.require_identity_labels()?;
    let groups = group_by_identity(ids);
    if groups.len() < 2 {
        return Err(Error::TooFewIdentities);
    }
    let mut models = Vec::with_capacity(groups.len());
    for (&identity, indices) in &groups {
        let model = match algorithm {
            Algorithm::Classic => {
                if indices.len() < config.k_max {
                    return Err(Error::IdentityTooSmall {
                        identity,
                        points: indices.len(),
                        k: config.k_max,
                    });
                }
                let own = data.subset(indices)?;
                let clustering = run_kmeans(&own, config)?;
                IdentityModel {
                    identity,
                    centres: clustering.centres(),
                    algorithm,
                    fallback: false,
                }
            }
            Algorithm::Discriminative => {
                let labels = ids
                    .iter()
                    .map(|&x| {
                        if x == identity {
                            BinaryLabel::Positive
                        } else {
                            BinaryLabel::Negative
                        }
                    })
                    .collect();
                let one_vs_rest =
                    Dataset::with_labels(data.points().to_vec(), Some(labels), None)?;
                let (clustering, _) = run_discriminative(&one_vs_rest, config, None)?;
                let label_view = one_vs_rest.require_binary_labels()?;
                let centres: Vec<Point> = clustering
                    .clusters()
                    .iter()
                    .filter(|c| {
                        let (pos, neg) = c.label_counts(label_view);
                        pos > neg
                    })
                    .map(|c| c.centre().clone())
                    .collect();
                if centres.is_empty() {
                    IdentityModel {
                        identity,
                        centres: vec![centroid_of_members(data, indices)?],
                        algorithm,
                        fallback: true,
                    }
                } else {
                    IdentityModel {
                        identity,
                        centres,
                        algorithm,
                        fallback: false,
                    }
                }
            }
        };
        models.push(model);
    }
    Ok(models)
}

/// Returns the identity owning the centre nearest to the query, across all
/// models. Distance ties go to the smaller identity label, so the result
/// does not depend on model or centre ordering.
pub fn classify(query: &Point, models: &[IdentityModel]) -> Result<usize> {
    if models.is_empty() {
        return Err(Error::InvalidConfig("classify needs at least one model".into()));
    }
    let mut best: Option<(f64, usize)> = None;
    for model in models {
        for centre in &model.centres {
            if centre.dim() != query.dim() {
                return Err(Error::DimensionMismatch {
                    expected: query.dim(),
                    got: centre.dim(),
                });
            }
            let d = sq_dist(query, centre);
            let better = match best {
                None => true,
                Some((bd, bid)) => d < bd || (d == bd && model.identity < bid),
            };
            if better {
                best = Some((d, model.identity));
            }
        }
    }
    best.map(|(_, id)| id)
        .ok_or_else(|| Error::InvalidConfig("classify needs at least one centre".into()))
}

/// Leave-one-out over every point: each query is held out, both model
/// families are trained per identity on the remainder, and the query is
/// classified by each. Both confusion matrices therefore describe the
/// identical sequence of splits, and each record carries the training-set
/// SSD of both families for that split.
pub fn leave_one_out_report(data: &Dataset, config: &Config) -> Result<LooReport> {
    config.validate()?;
    let ids = data.require_identity_labels()?;
    let groups = group_by_identity(ids);
    if groups.len() < 2 {
        return Err(Error::TooFewIdentities);
    }
    for (&identity, indices) in &groups {
        if indices.len() < 2 {
            return Err(Error::IdentityTooSmallForLoo {
                identity,
                points: indices.len(),
            });
        }
    }
    let identities: Vec<usize> = groups.keys().copied().collect();
    let mut classic = ConfusionMatrix::new(identities.clone());
    let mut discriminative = ConfusionMatrix::new(identities);
    let mut records = Vec::with_capacity(data.len());
    for (q, &truth) in ids.iter().enumerate() {
        let keep: Vec<usize> = (0..data.len()).filter(|&i| i != q).collect();
        let rest = data.subset(&keep)?;
        let classic_models = train_identity_models(&rest, Algorithm::Classic, config)?;
        let disc_models = train_identity_models(&rest, Algorithm::Discriminative, config)?;
        let query = data.point(q);
        let pred_classic = classify(query, &classic_models)?;
        let pred_disc = classify(query, &disc_models)?;
        classic.record(truth, pred_classic);
        discriminative.record(truth, pred_disc);
        let benefit = (pred_disc == truth) as i8 - (pred_classic == truth) as i8;
        records.push(SsdRecord {
            query_id: q,
            ssd_classic: ssd_of_models(&rest, &classic_models)?,
            ssd_discriminative: ssd_of_models(&rest, &disc_models)?,
            benefit,
        });
    }
    classic.finalize();
    discriminative.finalize();
    Ok(LooReport {
        classic,
        discriminative,
        records,
    })
}

/// The one-family view of [`leave_one_out_report`].
pub fn leave_one_out(
    data: &Dataset,
    algorithm: Algorithm,
    config: &Config,
) -> Result<(ConfusionMatrix, Vec<SsdRecord>)> {
    let report = leave_one_out_report(data, config)?;
    Ok(match algorithm {
        Algorithm::Classic => (report.classic, report.records),
        Algorithm::Discriminative => (report.discriminative, report.records),
    })
}

/// Sum of squared distances from every point to the nearest centre of its
/// *own* identity's model.
pub fn ssd_of_models(data: &Dataset, models: &[IdentityModel]) -> Result<f64> {
    let ids = data.require_identity_labels()?;
    let by_identity: BTreeMap<usize, &IdentityModel> =
        models.iter().map(|m| (m.identity, m)).collect();
    let mut total = 0.0;
    for (i, point) in data.points().iter().enumerate() {
        let model = by_identity.get(&ids[i]).ok_or_else(|| {
            Error::InvalidConfig(format!("no model for identity {}", ids[i]))
        })?;
        total += nearest_sq_dist(point, &model.centres)?;
    }
    Ok(total)
}

/// Sum of squared distances from every point to its nearest centre in the
/// given set, regardless of labels.
pub fn ssd_to_nearest(data: &Dataset, centres: &[Point]) -> Result<f64> {
    let mut total = 0.0;
    for point in data.points() {
        total += nearest_sq_dist(point, centres)?;
    }
    Ok(total)
}

/// [`ssd_to_nearest`] against a clustering's centres; for a self-consistent
/// clustering this equals its stored objective.
pub fn ssd_of_clustering(data: &Dataset, clustering: &Clustering) -> Result<f64> {
    ssd_to_nearest(data, &clustering.centres())
}

fn nearest_sq_dist(point: &Point, centres: &[Point]) -> Result<f64> {
    let mut best: Option<f64> = None;
    for centre in centres {
        if centre.dim() != point.dim() {
            return Err(Error::DimensionMismatch {
                expected: point.dim(),
                got: centre.dim(),
            });
        }
        let d = sq_dist(point, centre);
        if best.is_none_or(|b| d < b) {
            best = Some(d);
        }
    }
    best.ok_or_else(|| Error::InvalidConfig("need at least one centre".into()))
}

/// Wall-clock samples for training a model set on `data`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimingReport {
    pub algorithm: Algorithm,
    pub samples_secs: Vec<f64>,
    pub median_secs: f64,
}

/// Times model training end to end: per-identity model sets when the data
/// carries identity labels, a single clustering run otherwise. Returns the
/// raw samples plus their median; values are measurements, never asserted
/// against.
pub fn time_to_model(
    data: &Dataset,
    algorithm: Algorithm,
    config: &Config,
    repetitions: usize,
) -> Result<TimingReport> {
    if repetitions == 0 {
        return Err(Error::NoRepetitions);
    }
    let mut samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        if data.identity_labels().is_some() {
            train_identity_models(data, algorithm, config)?;
        } else {
            match algorithm {
                Algorithm::Classic => {
                    run_kmeans(data, config)?;
                }
                Algorithm::Discriminative => {
                    run_discriminative(data, config, None)?;
                }
            }
        }
        samples.push(start.elapsed().as_secs_f64());
    }
    let mut sorted = samples.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("durations are finite"));
    let mid = sorted.len() / 2;
    let median_secs = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    };
    Ok(TimingReport {
        algorithm,
        samples_secs: samples,
        median_secs,
    })
}

fn group_by_identity(ids: &[usize]) -> BTreeMap<usize, Vec<usize>> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &id) in ids.iter().enumerate() {
        groups.entry(id).or_default().push(i);
    }
    groups
}

//! Principal-component projection to 2 or 3 dimensions, used to draw
//! higher-dimensional datasets.
//!
//! The covariance uses the 1/n convention, so the sum of squared
//! reconstruction errors over the dataset equals n times the sum of the
//! trailing eigenvalues. Eigenvalues come back for all d directions in
//! descending order. Each component's sign is fixed so its
//! largest-magnitude coordinate is positive (ties to the lowest index),
//! which makes the projection reproducible across runs.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::types::{Dataset, Point};

/// Relative eigenvalue threshold below which a direction counts as zero.
const RANK_EPS: f64 = 1e-12;

/// A fitted projection: the projected dataset plus everything needed to
/// project further points (e.g. cluster centres) into the same plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PcaProjection {
    /// The input points projected to `dims` coordinates, labels carried over.
    pub data: Dataset,
    /// The `dims` principal directions, each of the original dimension.
    pub components: Vec<Point>,
    /// All d eigenvalues of the covariance, descending.
    pub eigenvalues: Vec<f64>,
    /// Mean of the original data; subtracted before projecting.
    pub mean: Point,
}

impl PcaProjection {
    /// Projects one point of the original dimension into the fitted plane.
    pub fn project_point(&self, point: &Point) -> Result<Point> {
        if point.dim() != self.mean.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.mean.dim(),
                got: point.dim(),
            });
        }
        let centred: Vec<f64> = point
            .coords()
            .iter()
            .zip(self.mean.coords())
            .map(|(x, m)| x - m)
            .collect();
        let coords = self
            .components
            .iter()
            .map(|axis| {
                axis.coords()
                    .iter()
                    .zip(&centred)
                    .map(|(a, c)| a * c)
                    .sum()
            })
            .collect();
        Point::new(coords)
    }
}

/// Projects a dataset onto its top `dims` principal directions (`dims` must
/// be 2 or 3, with more points than that). Errors when the data does not
/// actually span `dims` directions, rather than inventing degenerate axes.
pub fn pca_project(data: &Dataset, dims: usize) -> Result<PcaProjection> {
    if dims != 2 && dims != 3 {
        return Err(Error::BadProjectionDims(dims));
    }
    let n = data.len();
    let d = data.dim();
    if n <= dims {
        return Err(Error::InvalidConfig(format!(
            "projection to {dims} dimensions needs more than {dims} points, got {n}"
        )));
    }
    let mean = crate::types::centroid(data.points().iter())?;
    let mut cov = DMatrix::<f64>::zeros(d, d);
    for p in data.points() {
        for i in 0..d {
            let ci = p[i] - mean[i];
            for j in i..d {
                cov[(i, j)] += ci * (p[j] - mean[j]);
            }
        }
    }
    for i in 0..d {
        for j in i..d {
            cov[(i, j)] /= n as f64;
            cov[(j, i)] = cov[(i, j)];
        }
    }
    let eigen = cov.symmetric_eigen();
    // Stable sort: descending eigenvalue, original column order on ties.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| {
        eigen.eigenvalues[b]
            .partial_cmp(&eigen.eigenvalues[a])
            .expect("symmetric eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eigen.eigenvalues[i]).collect();
    let largest = eigenvalues[0].max(0.0);
    let nonzero = eigenvalues
        .iter()
        .filter(|&&v| v > largest * RANK_EPS && v > 0.0)
        .count();
    if nonzero < dims {
        return Err(Error::RankDeficient { nonzero, dims });
    }
    let components: Vec<Point> = order[..dims]
        .iter()
        .map(|&col| {
            let mut axis: Vec<f64> = (0..d).map(|row| eigen.eigenvectors[(row, col)]).collect();
            let pivot = (0..d)
                .max_by(|&a, &b| {
                    axis[a]
                        .abs()
                        .partial_cmp(&axis[b].abs())
                        .expect("finite")
                        .then(b.cmp(&a))
                })
                .expect("d >= 1");
            if axis[pivot] < 0.0 {
                for v in &mut axis {
                    *v = -*v;
                }
            }
            Point::new(axis)
        })
        .collect::<Result<_>>()?;
    let fitted = PcaProjection {
        data: data.clone(),
        components,
        eigenvalues,
        mean,
    };
    let projected: Vec<Point> = data
        .points()
        .iter()
        .map(|p| fitted.project_point(p))
        .collect::<Result<_>>()?;
    let data = Dataset::with_labels(
        projected,
        data.binary_labels().map(|l| l.to_vec()),
        data.identity_labels().map(|l| l.to_vec()),
    )?;
    Ok(PcaProjection { data, ..fitted })
}

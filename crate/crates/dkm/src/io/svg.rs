//! Deterministic SVG scatter plots: no timestamps, no randomness, fixed
//! number formatting, so the same inputs always emit the same bytes.
//!
//! Points are circles, centres are crosses; counting the circle and
//! `class="centre"` elements in the output recovers the point and centre
//! counts. Data above two dimensions is projected with
//! [`pca_project`](crate::io::pca::pca_project) first, and centres are sent
//! through the same projection as the points.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::Result;
use crate::eval::{IdentityModel, SsdRecord};
use crate::io::pca::pca_project;
use crate::types::{BinaryLabel, Clustering, Dataset, Point};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 42.0;

const POSITIVE_COLOUR: &str = "#2c6fdd";
const NEGATIVE_COLOUR: &str = "#d44a3a";
const NEUTRAL_COLOUR: &str = "#7a7a7a";
const IDENTITY_PALETTE: [&str; 6] = [
    "#2c6fdd", "#d44a3a", "#2e9e4f", "#b06bd4", "#d9902a", "#3ab0a8",
];

struct Frame {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Frame {
    fn around(xy: impl Iterator<Item = (f64, f64)>) -> Self {
        let mut min_x = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for (x, y) in xy {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        if !min_x.is_finite() {
            return Self {
                min_x: 0.0,
                max_x: 1.0,
                min_y: 0.0,
                max_y: 1.0,
            };
        }
        // Pad by 5% of the span, guarding zero-extent axes.
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        Self {
            min_x: min_x - 0.05 * span_x,
            max_x: max_x + 0.05 * span_x,
            min_y: min_y - 0.05 * span_y,
            max_y: max_y + 0.05 * span_y,
        }
    }

    fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let fx = (x - self.min_x) / (self.max_x - self.min_x);
        let fy = (y - self.min_y) / (self.max_y - self.min_y);
        (
            MARGIN + fx * (WIDTH - 2.0 * MARGIN),
            // SVG y grows downward.
            HEIGHT - MARGIN - fy * (HEIGHT - 2.0 * MARGIN),
        )
    }
}

fn svg_open(out: &mut String) {
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect x=\"0.5\" y=\"0.5\" width=\"{}\" height=\"{}\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n",
        WIDTH - 1.0,
        HEIGHT - 1.0
    );
}

fn push_circle(out: &mut String, x: f64, y: f64, colour: &str) {
    let _ = writeln!(
        out,
        "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"{colour}\" fill-opacity=\"0.75\"/>"
    );
}

fn push_cross(out: &mut String, x: f64, y: f64) {
    let _ = writeln!(
        out,
        "<path class=\"centre\" d=\"M {:.2} {:.2} L {:.2} {:.2} M {:.2} {:.2} L {:.2} {:.2}\" \
         stroke=\"#111111\" stroke-width=\"1.8\" fill=\"none\"/>",
        x - 5.0,
        y - 5.0,
        x + 5.0,
        y + 5.0,
        x - 5.0,
        y + 5.0,
        x + 5.0,
        y - 5.0
    );
}

fn push_text(out: &mut String, x: f64, y: f64, text: &str) {
    let _ = writeln!(
        out,
        "<text x=\"{x:.2}\" y=\"{y:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         fill=\"#333333\">{text}</text>"
    );
}

/// Flattens data and centres onto the drawing plane: 1-D gets a zero second
/// coordinate, 2-D passes through, anything higher goes through a shared
/// 2-D principal-component projection.
#[allow(clippy::type_complexity)]
fn to_plane(data: &Dataset, centres: &[Point]) -> Result<(Vec<(f64, f64)>, Vec<(f64, f64)>)> {
    match data.dim() {
        1 => Ok((
            data.points().iter().map(|p| (p[0], 0.0)).collect(),
            centres.iter().map(|c| (c[0], 0.0)).collect(),
        )),
        2 => Ok((
            data.points().iter().map(|p| (p[0], p[1])).collect(),
            centres.iter().map(|c| (c[0], c[1])).collect(),
        )),
        _ => {
            let projection = pca_project(data, 2)?;
            let points = projection.data.points().iter().map(|p| (p[0], p[1])).collect();
            let centres = centres
                .iter()
                .map(|c| projection.project_point(c).map(|p| (p[0], p[1])))
                .collect::<Result<_>>()?;
            Ok((points, centres))
        }
    }
}

/// One colour per point: binary labels beat identity labels beat neutral.
fn point_colours(data: &Dataset) -> Vec<&'static str> {
    if let Some(labels) = data.binary_labels() {
        labels
            .iter()
            .map(|l| match l {
                BinaryLabel::Positive => POSITIVE_COLOUR,
                BinaryLabel::Negative => NEGATIVE_COLOUR,
            })
            .collect()
    } else if let Some(ids) = data.identity_labels() {
        let mut rank = BTreeMap::new();
        for &id in ids {
            let next = rank.len();
            rank.entry(id).or_insert(next);
        }
        ids.iter()
            .map(|id| IDENTITY_PALETTE[rank[id] % IDENTITY_PALETTE.len()])
            .collect()
    } else {
        vec![NEUTRAL_COLOUR; data.len()]
    }
}

/// Scatter of the dataset with the given centres drawn as crosses.
pub fn emit_points_plot(
    data: &Dataset,
    centres: &[Point],
    caption: &str,
    path: impl AsRef<Path>,
) -> Result<()> {
    let (points, crosses) = to_plane(data, centres)?;
    let frame = Frame::around(points.iter().chain(crosses.iter()).copied());
    let colours = point_colours(data);
    let mut out = String::new();
    svg_open(&mut out);
    for ((x, y), colour) in points.iter().zip(&colours) {
        let (px, py) = frame.to_px(*x, *y);
        push_circle(&mut out, px, py, colour);
    }
    for (x, y) in &crosses {
        let (px, py) = frame.to_px(*x, *y);
        push_cross(&mut out, px, py);
    }
    if !caption.is_empty() {
        push_text(&mut out, MARGIN, HEIGHT - 12.0, caption);
    }
    out.push_str("</svg>\n");
    fs::write(path, out)?;
    Ok(())
}

/// Scatter of a clustering's dataset with its centres.
pub fn emit_clustering_plot(
    data: &Dataset,
    clustering: &Clustering,
    caption: &str,
    path: impl AsRef<Path>,
) -> Result<()> {
    emit_points_plot(data, &clustering.centres(), caption, path)
}

/// Scatter of identity-labelled data with every model centre drawn as a
/// cross, in ascending model order.
pub fn emit_models_plot(
    data: &Dataset,
    models: &[IdentityModel],
    caption: &str,
    path: impl AsRef<Path>,
) -> Result<()> {
    let centres: Vec<Point> = models
        .iter()
        .flat_map(|m| m.centres.iter().cloned())
        .collect();
    emit_points_plot(data, &centres, caption, path)
}

/// Scatter comparing per-split training SSDs: classic on x, discriminative
/// on y, one circle per record, coloured by which family classified the
/// held-out query better. Draws the identity line and the least-squares
/// slope through the origin.
pub fn emit_ssd_plot(records: &[SsdRecord], path: impl AsRef<Path>) -> Result<()> {
    let lo_hi = records
        .iter()
        .flat_map(|r| [r.ssd_classic, r.ssd_discriminative])
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    let (lo, hi) = if lo_hi.0.is_finite() {
        lo_hi
    } else {
        (0.0, 1.0)
    };
    let frame = Frame::around([(lo, lo), (hi, hi)].into_iter());
    let mut out = String::new();
    svg_open(&mut out);
    let (x0, y0) = frame.to_px(lo, lo);
    let (x1, y1) = frame.to_px(hi, hi);
    let _ = writeln!(
        out,
        "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y1:.2}\" \
         stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>"
    );
    let sum_xy: f64 = records
        .iter()
        .map(|r| r.ssd_classic * r.ssd_discriminative)
        .sum();
    let sum_xx: f64 = records.iter().map(|r| r.ssd_classic * r.ssd_classic).sum();
    let slope = if sum_xx > 0.0 { sum_xy / sum_xx } else { 1.0 };
    let (sx0, sy0) = frame.to_px(lo, slope * lo);
    let (sx1, sy1) = frame.to_px(hi, slope * hi);
    let _ = writeln!(
        out,
        "<line x1=\"{sx0:.2}\" y1=\"{sy0:.2}\" x2=\"{sx1:.2}\" y2=\"{sy1:.2}\" \
         stroke=\"#444444\"/>"
    );
    for record in records {
        let (px, py) = frame.to_px(record.ssd_classic, record.ssd_discriminative);
        let colour = match record.benefit {
            1 => POSITIVE_COLOUR,
            -1 => NEGATIVE_COLOUR,
            _ => NEUTRAL_COLOUR,
        };
        push_circle(&mut out, px, py, colour);
    }
    push_text(
        &mut out,
        MARGIN,
        HEIGHT - 12.0,
        &format!("slope through origin ~ {slope:.3}"),
    );
    push_text(&mut out, WIDTH - 160.0, HEIGHT - 26.0, "classic SSD");
    push_text(&mut out, 12.0, MARGIN, "discriminative SSD");
    out.push_str("</svg>\n");
    fs::write(path, out)?;
    Ok(())
}

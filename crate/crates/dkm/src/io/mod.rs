//! File formats and figures: CSV datasets, JSON model files, 2-D/3-D
//! principal-component projection, and deterministic SVG plots.

pub mod csv;
pub mod model;
pub mod pca;
pub mod svg;

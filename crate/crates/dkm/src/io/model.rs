//! JSON model files.
//!
//! A model file records which algorithm produced it, the configuration that
//! ran, the final centres, the split history (discriminative runs only),
//! the objective, and the termination reason. Serialisation is fully
//! deterministic: fixed field order, shortest round-trip numbers. Loading a
//! file and saving it again reproduces the bytes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::discriminative::SplitEvent;
use crate::error::{Error, Result};
use crate::eval::Algorithm;
use crate::types::{Clustering, Config, InitMode, Point, TerminationReason, WeightMode};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightModeRecord {
    DataCount,
    Fixed(f64),
}

impl From<WeightMode> for WeightModeRecord {
    fn from(mode: WeightMode) -> Self {
        match mode {
            WeightMode::DataCount => WeightModeRecord::DataCount,
            WeightMode::Fixed(w) => WeightModeRecord::Fixed(w),
        }
    }
}

impl From<WeightModeRecord> for WeightMode {
    fn from(record: WeightModeRecord) -> Self {
        match record {
            WeightModeRecord::DataCount => WeightMode::DataCount,
            WeightModeRecord::Fixed(w) => WeightMode::Fixed(w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitModeRecord {
    RandomPoints,
    PlusPlus,
}

impl From<InitMode> for InitModeRecord {
    fn from(mode: InitMode) -> Self {
        match mode {
            InitMode::RandomPoints => InitModeRecord::RandomPoints,
            InitMode::PlusPlus => InitModeRecord::PlusPlus,
        }
    }
}

impl From<InitModeRecord> for InitMode {
    fn from(record: InitModeRecord) -> Self {
        match record {
            InitModeRecord::RandomPoints => InitMode::RandomPoints,
            InitModeRecord::PlusPlus => InitMode::PlusPlus,
        }
    }
}

/// Echo of the configuration a model was trained with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub k_max: usize,
    pub tolerance: f64,
    pub max_iterations: usize,
    pub weight_mode: WeightModeRecord,
    pub seed: u64,
    pub init_mode: InitModeRecord,
}

impl From<&Config> for ConfigRecord {
    fn from(config: &Config) -> Self {
        Self {
            k_max: config.k_max,
            tolerance: config.tolerance,
            max_iterations: config.max_iterations,
            weight_mode: config.weight_mode.into(),
            seed: config.seed,
            init_mode: config.init_mode.into(),
        }
    }
}

impl ConfigRecord {
    pub fn to_config(&self) -> Config {
        Config {
            k_max: self.k_max,
            tolerance: self.tolerance,
            max_iterations: self.max_iterations,
            weight_mode: self.weight_mode.clone().into(),
            seed: self.seed,
            init_mode: self.init_mode.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitEventRecord {
    pub iteration: usize,
    pub parent_cluster: usize,
    pub positive_child_centre: Vec<f64>,
    pub negative_child_centre: Vec<f64>,
    pub w_used_positive: f64,
    pub w_used_negative: f64,
    pub positive_count: usize,
    pub negative_count: usize,
    pub degenerate: bool,
}

impl From<&SplitEvent> for SplitEventRecord {
    fn from(event: &SplitEvent) -> Self {
        Self {
            iteration: event.iteration,
            parent_cluster: event.parent_cluster,
            positive_child_centre: event.positive_child_centre.coords().to_vec(),
            negative_child_centre: event.negative_child_centre.coords().to_vec(),
            w_used_positive: event.w_used_positive,
            w_used_negative: event.w_used_negative,
            positive_count: event.positive_count,
            negative_count: event.negative_count,
            degenerate: event.degenerate,
        }
    }
}

/// Serialised clustering model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    /// "classic" or "discriminative".
    pub algorithm: String,
    pub config: ConfigRecord,
    pub centres: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_events: Option<Vec<SplitEventRecord>>,
    pub objective: f64,
    /// "converged", "max_clusters", or "max_iterations".
    pub terminated_by: String,
}

fn termination_str(reason: TerminationReason) -> &'static str {
    match reason {
        TerminationReason::Converged => "converged",
        TerminationReason::MaxClusters => "max_clusters",
        TerminationReason::MaxIterations => "max_iterations",
    }
}

impl ModelFile {
    pub fn from_classic(clustering: &Clustering, config: &Config) -> Self {
        Self {
            algorithm: Algorithm::Classic.to_string(),
            config: config.into(),
            centres: clustering
                .centres()
                .iter()
                .map(|c| c.coords().to_vec())
                .collect(),
            split_events: None,
            objective: clustering.objective(),
            terminated_by: termination_str(clustering.terminated_by()).into(),
        }
    }

    pub fn from_discriminative(
        clustering: &Clustering,
        events: &[SplitEvent],
        config: &Config,
    ) -> Self {
        Self {
            algorithm: Algorithm::Discriminative.to_string(),
            config: config.into(),
            centres: clustering
                .centres()
                .iter()
                .map(|c| c.coords().to_vec())
                .collect(),
            split_events: Some(events.iter().map(SplitEventRecord::from).collect()),
            objective: clustering.objective(),
            terminated_by: termination_str(clustering.terminated_by()).into(),
        }
    }

    pub fn algorithm(&self) -> Result<Algorithm> {
        self.algorithm.parse()
    }

    /// The stored centres as points, e.g. to warm-start another run.
    pub fn centre_points(&self) -> Result<Vec<Point>> {
        self.centres
            .iter()
            .map(|c| Point::new(c.clone()))
            .collect()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text =
            serde_json::to_string_pretty(self).expect("model files always serialise");
        text.push('\n');
        fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|source| Error::ModelParse {
            path: path.into(),
            source,
        })
    }
}

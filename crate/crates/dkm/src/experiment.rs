//! End-to-end runs of the bundled synthetic benchmarks: generate the data,
//! fit a discriminative model, and write the dataset, the model, and
//! per-iteration plots into a directory.
//!
//! Three benchmarks are defined over the layouts in [`crate::synth`]:
//!
//! * `e1` fits the base two-band layout from scratch;
//! * `e2` fits the extended layout (base plus two positive clouds in
//!   negative territory) from scratch;
//! * `e3` fits the extended layout too, but warm-starts from the model `e1`
//!   produces instead of growing from a single cluster, showing that an
//!   existing model adapts to appended data without being rebuilt.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::discriminative::{run_discriminative, run_discriminative_traced, DiscriminativeRun};
use crate::error::{Error, Result};
use crate::io::csv::save_csv;
use crate::io::model::ModelFile;
use crate::io::svg::{emit_clustering_plot, emit_points_plot};
use crate::synth::{experiment_suite, generate};
use crate::types::{Config, Dataset};

/// Which bundled benchmark to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentId {
    E1,
    E2,
    E3,
}

impl ExperimentId {
    fn stem(self) -> &'static str {
        match self {
            ExperimentId::E1 => "e1",
            ExperimentId::E2 => "e2",
            ExperimentId::E3 => "e3",
        }
    }
}

impl fmt::Display for ExperimentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stem())
    }
}

impl std::str::FromStr for ExperimentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e1" => Ok(ExperimentId::E1),
            "e2" => Ok(ExperimentId::E2),
            "e3" => Ok(ExperimentId::E3),
            other => Err(Error::InvalidConfig(format!(
                "unknown experiment {other:?}, expected e1, e2, or e3"
            ))),
        }
    }
}

/// What a benchmark run produced and where it was written.
#[derive(Debug)]
pub struct ExperimentOutcome {
    pub id: ExperimentId,
    pub dataset: Dataset,
    pub run: DiscriminativeRun,
    pub written: Vec<PathBuf>,
}

/// Runs one benchmark, writing `<id>_data.csv`, `<id>_model.json`, one
/// `<id>_iter_NNN.svg` per iteration, and `<id>_final.svg` into `out_dir`.
///
/// `k_max` defaults to the dataset size, which in practice means the run
/// refines until it converges rather than stopping at a budget.
pub fn run_experiment(
    id: ExperimentId,
    seed: u64,
    k_max: Option<usize>,
    out_dir: impl AsRef<Path>,
) -> Result<ExperimentOutcome> {
    let out_dir = out_dir.as_ref();
    std::fs::create_dir_all(out_dir)?;
    let suite = experiment_suite(seed);
    let (dataset, warm) = match id {
        ExperimentId::E1 => (generate(&suite.base)?, None),
        ExperimentId::E2 => (generate(&suite.extended)?, None),
        ExperimentId::E3 => {
            let base_data = generate(&suite.base)?;
            let base_config = Config::new(base_data.len()).with_seed(seed);
            let (base_model, _) = run_discriminative(&base_data, &base_config, None)?;
            (generate(&suite.extended)?, Some(base_model))
        }
    };
    let config = Config::new(k_max.unwrap_or(dataset.len())).with_seed(seed);
    let run = run_discriminative_traced(&dataset, &config, warm.as_ref())?;
    let mut written = Vec::new();
    let stem = id.stem();

    let data_path = out_dir.join(format!("{stem}_data.csv"));
    save_csv(&dataset, &data_path)?;
    written.push(data_path);

    let model = ModelFile::from_discriminative(&run.clustering, &run.split_events, &config);
    let model_path = out_dir.join(format!("{stem}_model.json"));
    model.save(&model_path)?;
    written.push(model_path);

    for (t, snapshot) in run.snapshots.iter().enumerate() {
        let plot_path = out_dir.join(format!("{stem}_iter_{t:03}.svg"));
        emit_points_plot(
            &dataset,
            &snapshot.updated_centres,
            &format!("{stem} iteration {t}: {} centres", snapshot.updated_centres.len()),
            &plot_path,
        )?;
        written.push(plot_path);
    }

    let final_path = out_dir.join(format!("{stem}_final.svg"));
    emit_clustering_plot(
        &dataset,
        &run.clustering,
        &format!(
            "{stem} final: {} clusters, objective {:.3}",
            run.clustering.k(),
            run.clustering.objective()
        ),
        &final_path,
    )?;
    written.push(final_path);

    Ok(ExperimentOutcome {
        id,
        dataset,
        run,
        written,
    })
}

//! Classic k-means on a CSV file, with a model round-trip.
//!
//! Draws one of the bundled synthetic layouts, writes it to disk as CSV,
//! loads it back the way any external dataset would arrive, fits classic
//! k-means with k-means++ seeding, and saves the fitted model as JSON.
//! Loading the model again reproduces the centres exactly: every artefact
//! on disk is a faithful copy of the in-memory value.
//!
//! ```bash
//! cargo run -p dkm --example classic_fit
//! ```

use dkm::io::csv::{load_csv, save_csv};
use dkm::io::model::ModelFile;
use dkm::io::svg::emit_clustering_plot;
use dkm::synth::{experiment_suite, generate};
use dkm::{run_kmeans, Config, InitMode};

fn main() -> dkm::Result<()> {
    let out_dir = std::path::Path::new("target/examples/classic_fit");
    std::fs::create_dir_all(out_dir)?;

    // Seven Gaussian blobs in the plane; the labels the generator attaches
    // are ignored here, classic k-means only sees coordinates.
    let spec = experiment_suite(42).base;
    let drawn = generate(&spec)?;
    let csv_path = out_dir.join("blobs.csv");
    save_csv(&drawn, &csv_path)?;

    let data = load_csv(&csv_path)?;
    assert_eq!(data.points(), drawn.points());
    println!(
        "loaded {} points in {}d from {}",
        data.len(),
        data.dim(),
        csv_path.display()
    );

    let config = Config::new(7)
        .with_seed(42)
        .with_init_mode(InitMode::PlusPlus);
    let clustering = run_kmeans(&data, &config)?;

    println!(
        "fitted k = {} in {} iterations ({:?}), objective {:.4}",
        clustering.k(),
        clustering.iterations_run(),
        clustering.terminated_by(),
        clustering.objective()
    );
    for (i, cluster) in clustering.clusters().iter().enumerate() {
        let c = cluster.centre().coords();
        println!(
            "  cluster {i}: {:>3} points, centre ({:+.3}, {:+.3})",
            cluster.members().len(),
            c[0],
            c[1]
        );
    }

    let model_path = out_dir.join("model.json");
    ModelFile::from_classic(&clustering, &config).save(&model_path)?;
    let reloaded = ModelFile::load(&model_path)?;
    assert_eq!(reloaded.centre_points()?, clustering.centres());
    println!("model round-trips through {}", model_path.display());

    let plot_path = out_dir.join("fit.svg");
    emit_clustering_plot(&data, &clustering, "classic k-means, k = 7", &plot_path)?;
    println!("plot written to {}", plot_path.display());
    Ok(())
}

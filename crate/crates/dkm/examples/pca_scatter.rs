//! Projecting high-dimensional data for plotting.
//!
//! Draws a 5-dimensional dataset whose structure lives in the first two
//! coordinates (three clouds) while the remaining three carry only small
//! noise, projects it onto its two leading principal components, and plots
//! the result. The eigenvalue spectrum shows the split: two dominant
//! components carry the clouds, the rest is noise floor. Fresh points can
//! be dropped into an existing projection, which is how query points are
//! drawn into plots of a trained model.
//!
//! ```bash
//! cargo run -p dkm --example pca_scatter
//! ```

use dkm::io::pca::pca_project;
use dkm::io::svg::emit_points_plot;
use dkm::{Dataset, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> dkm::Result<()> {
    let out_dir = std::path::Path::new("target/examples/pca_scatter");
    std::fs::create_dir_all(out_dir)?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let anchors = [[0.0, 0.0], [4.0, 1.0], [1.5, 4.0]];
    let mut points = Vec::new();
    for anchor in &anchors {
        for _ in 0..40 {
            let mut coords = vec![
                anchor[0] + rng.random_range(-0.6..0.6),
                anchor[1] + rng.random_range(-0.6..0.6),
            ];
            coords.extend((0..3).map(|_| rng.random_range(-0.15..0.15)));
            points.push(Point::new(coords)?);
        }
    }
    let data = Dataset::new(points)?;
    println!("{} points in {}d", data.len(), data.dim());

    let projection = pca_project(&data, 2)?;
    let total: f64 = projection.eigenvalues.iter().sum();
    let captured: f64 = projection.eigenvalues.iter().take(2).sum();
    println!("eigenvalue spectrum:");
    for (i, v) in projection.eigenvalues.iter().enumerate() {
        println!("  component {i}: {v:.4}");
    }
    println!(
        "two components capture {:.1}% of the variance",
        100.0 * captured / total
    );

    // A fresh query lands in the same plane via the stored basis.
    let query = Point::new(vec![4.0, 1.0, 0.0, 0.0, 0.0])?;
    let projected_query = projection.project_point(&query)?;
    let q = projected_query.coords();
    println!("query projects to ({:+.3}, {:+.3})", q[0], q[1]);

    let plot_path = out_dir.join("projection.svg");
    emit_points_plot(
        &projection.data,
        &[projected_query],
        "5d data on two principal components, query as cross",
        &plot_path,
    )?;
    println!("plot written to {}", plot_path.display());
    Ok(())
}

//! Split-and-repel centre updates, iteration by iteration.
//!
//! Runs the discriminative variant on a small handcrafted two-class layout
//! and narrates the trace: which cluster split, how many points of each
//! class it held, which repulsion weights the update used, and where the
//! children landed. The run starts from a single cluster at the global
//! centroid and only ever splits clusters that still mix the two classes,
//! so the final model's clusters are pure by construction.
//!
//! ```bash
//! cargo run -p dkm --example discriminative_split
//! ```

use dkm::{run_discriminative_traced, BinaryLabel, Config, Dataset, Point};

/// Two horizontal strips of lattice points, positives above, negatives
/// below, pushed together so the midline region mixes both classes. No
/// randomness: the lattice makes every run identical.
fn interleaved_strips() -> dkm::Result<Dataset> {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for i in 0..12 {
        let x = f64::from(i) * 0.5;
        let wobble = 0.3 * (f64::from(i) * 1.7).sin();
        points.push(Point::new(vec![x, 1.0 + wobble])?);
        labels.push(BinaryLabel::Positive);
        points.push(Point::new(vec![x + 0.25, -1.0 - wobble])?);
        labels.push(BinaryLabel::Negative);
        // Every fourth column leaks one point across the midline.
        if i % 4 == 0 {
            points.push(Point::new(vec![x, -0.2])?);
            labels.push(BinaryLabel::Positive);
            points.push(Point::new(vec![x + 0.25, 0.2])?);
            labels.push(BinaryLabel::Negative);
        }
    }
    Dataset::with_binary_labels(points, labels)
}

fn main() -> dkm::Result<()> {
    let data = interleaved_strips()?;
    let labels = data.require_binary_labels()?;
    println!(
        "{} points, {} positive / {} negative",
        data.len(),
        labels.iter().filter(|l| **l == BinaryLabel::Positive).count(),
        labels.iter().filter(|l| **l == BinaryLabel::Negative).count()
    );

    // A cluster budget of the dataset size never binds, so the run refines
    // until every cluster is pure.
    let config = Config::new(data.len()).with_seed(0);
    let run = run_discriminative_traced(&data, &config, None)?;

    for (iter, snapshot) in run.snapshots.iter().enumerate() {
        let splits: Vec<_> = run
            .split_events
            .iter()
            .filter(|e| e.iteration == iter)
            .collect();
        println!(
            "iteration {iter}: {} centres, {} split(s)",
            snapshot.centres.len(),
            splits.len()
        );
        for event in splits {
            let pos = event.positive_child_centre.coords();
            let neg = event.negative_child_centre.coords();
            println!(
                "  cluster {} held {}P/{}N, w = ({:.3}, {:.3}){}",
                event.parent_cluster,
                event.positive_count,
                event.negative_count,
                event.w_used_positive,
                event.w_used_negative,
                if event.degenerate { ", degenerate" } else { "" }
            );
            println!(
                "    children at ({:+.3}, {:+.3}) and ({:+.3}, {:+.3})",
                pos[0], pos[1], neg[0], neg[1]
            );
        }
    }

    let clustering = &run.clustering;
    println!(
        "final model: k = {}, terminated by {:?}, objective {:.4}",
        clustering.k(),
        clustering.terminated_by(),
        clustering.objective()
    );
    for (i, cluster) in clustering.clusters().iter().enumerate() {
        let (pos, neg) = cluster.label_counts(labels);
        println!(
            "  cluster {i}: {}P/{}N{}",
            pos,
            neg,
            if cluster.is_mixed(labels) { "  (mixed)" } else { "" }
        );
    }
    assert!(
        clustering.clusters().iter().all(|c| !c.is_mixed(labels)),
        "a converged run leaves no mixed clusters"
    );
    Ok(())
}

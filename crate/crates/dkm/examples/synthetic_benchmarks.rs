//! The bundled benchmark layouts, end to end.
//!
//! Runs the three packaged experiments: the base interleaved layout grown
//! from scratch, the extended layout grown from scratch, and the extended
//! layout warm-started from a model of the base. Each run writes its data
//! as CSV, its model as JSON, and one SVG per iteration, so the growth of
//! the centre set can be flipped through frame by frame. The two
//! recognition-oriented generators are drawn at the end for comparison.
//!
//! ```bash
//! cargo run -p dkm --example synthetic_benchmarks
//! ```

use dkm::experiment::{run_experiment, ExperimentId};
use dkm::synth::{generate, identity_ring, interleaved_two_class};

fn main() -> dkm::Result<()> {
    let out_dir = std::path::Path::new("target/examples/synthetic_benchmarks");
    std::fs::create_dir_all(out_dir)?;
    let seed = 7;

    for id in [ExperimentId::E1, ExperimentId::E2, ExperimentId::E3] {
        let outcome = run_experiment(id, seed, None, out_dir)?;
        println!(
            "{}: {} points -> k = {} in {} iterations, objective {:.4}, {} files",
            outcome.id,
            outcome.dataset.len(),
            outcome.run.clustering.k(),
            outcome.run.clustering.iterations_run(),
            outcome.run.clustering.objective(),
            outcome.written.len()
        );
        for path in outcome.written.iter().take(2) {
            println!("  {}", path.display());
        }
        println!("  ... ({} more)", outcome.written.len().saturating_sub(2));
    }

    let bench = interleaved_two_class(seed);
    let two_class = generate(&bench.spec)?;
    println!(
        "two-class benchmark: {} points, training prefix ends at {}",
        two_class.len(),
        bench.holdout_start
    );

    let ring = identity_ring(seed, 3, 12, 6.0, 1.0)?;
    println!(
        "identity ring: {} points across {} identities",
        ring.len(),
        ring.require_identity_labels()?
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    );
    Ok(())
}

//! Adapting an existing model to appended data.
//!
//! The bundled benchmark suite ships two layouts that share a prefix: the
//! extended one appends new blobs below the base layout's points. This
//! example fits the base layout, then fits the extended data twice: cold
//! from scratch, and warm from the base model's centres. The warm run
//! keeps the centres that still earn points, deletes the rest, and splits
//! where the appended data introduces new class mixture, landing close to
//! the cold run's model at a fraction of the splits.
//!
//! ```bash
//! cargo run -p dkm --example warm_start
//! ```

use dkm::synth::{experiment_suite, generate};
use dkm::{run_discriminative, squared_distance, Clustering, Config, Point};

/// Largest distance from any centre of one model to the nearest centre of
/// the other, in both directions. Zero means identical centre sets.
fn centre_gap(a: &Clustering, b: &Clustering) -> dkm::Result<f64> {
    let one_way = |from: &[Point], to: &[Point]| -> dkm::Result<f64> {
        let mut worst = 0.0_f64;
        for p in from {
            let mut best = f64::INFINITY;
            for q in to {
                best = best.min(squared_distance(p, q)?);
            }
            worst = worst.max(best);
        }
        Ok(worst.sqrt())
    };
    let ab = one_way(&a.centres(), &b.centres())?;
    let ba = one_way(&b.centres(), &a.centres())?;
    Ok(ab.max(ba))
}

fn main() -> dkm::Result<()> {
    let seed = 7;
    let suite = experiment_suite(seed);
    let base_data = generate(&suite.base)?;
    let extended_data = generate(&suite.extended)?;
    assert_eq!(
        &extended_data.points()[..base_data.len()],
        base_data.points(),
        "the extended layout starts with the base points verbatim"
    );

    let config = |n: usize| Config::new(n).with_seed(seed);

    let (base_model, base_events) =
        run_discriminative(&base_data, &config(base_data.len()), None)?;
    println!(
        "base:  {} points, k = {} after {} splits",
        base_data.len(),
        base_model.k(),
        base_events.len()
    );

    let (cold, cold_events) =
        run_discriminative(&extended_data, &config(extended_data.len()), None)?;
    let (warm, warm_events) = run_discriminative(
        &extended_data,
        &config(extended_data.len()),
        Some(&base_model),
    )?;

    println!(
        "cold:  {} points, k = {} after {} splits, {} iterations",
        extended_data.len(),
        cold.k(),
        cold_events.len(),
        cold.iterations_run()
    );
    println!(
        "warm:  {} points, k = {} after {} splits, {} iterations",
        extended_data.len(),
        warm.k(),
        warm_events.len(),
        warm.iterations_run()
    );
    assert!(
        warm_events.len() < cold_events.len(),
        "warm start re-uses base structure instead of re-growing it"
    );

    let gap = centre_gap(&cold, &warm)?;
    println!("largest centre disagreement: {gap:.3}");
    println!(
        "objectives: cold {:.4}, warm {:.4}",
        cold.objective(),
        warm.objective()
    );
    Ok(())
}

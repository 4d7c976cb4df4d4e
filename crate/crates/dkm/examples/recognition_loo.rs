//! Leave-one-out identity recognition, both model families.
//!
//! Loads the bundled three-identity dataset and runs the full leave-one-out
//! protocol: for every point, models for all identities are trained on the
//! remaining points, the held-out point is classified by nearest centre,
//! and both families (classic and discriminative) see the identical
//! splits. Prints both confusion matrices and the per-split training SSD
//! comparison that shows the discriminative family buying its separation
//! with a looser fit of the training data.
//!
//! ```bash
//! cargo run -p dkm --example recognition_loo
//! ```

use dkm::io::csv::load_csv;
use dkm::io::svg::emit_ssd_plot;
use dkm::{leave_one_out_report, Config, ConfusionMatrix};

fn print_confusion(name: &str, m: &ConfusionMatrix) {
    println!("{name} confusion ({} queries):", m.total());
    print!("  true\\pred ");
    for id in m.identities() {
        print!("{id:>6}");
    }
    println!("  marginalized");
    for (row, counts) in m.counts().iter().enumerate() {
        print!("  {:>9} ", m.identities()[row]);
        for c in counts {
            print!("{c:>6}");
        }
        println!("  {:>12.3}", m.marginalized()[row]);
    }
    println!("  overall error {:.3}", m.overall_error());
}

fn main() -> dkm::Result<()> {
    let out_dir = std::path::Path::new("target/examples/recognition_loo");
    std::fs::create_dir_all(out_dir)?;

    let data_path =
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/identities3.csv");
    let data = load_csv(&data_path)?;
    println!(
        "loaded {} points in {}d from {}",
        data.len(),
        data.dim(),
        data_path.display()
    );

    let config = Config::new(2).with_seed(7);
    let report = leave_one_out_report(&data, &config)?;

    print_confusion("classic", &report.classic);
    print_confusion("discriminative", &report.discriminative);

    let looser = report
        .records
        .iter()
        .filter(|r| r.ssd_discriminative >= r.ssd_classic)
        .count();
    println!(
        "discriminative training SSD >= classic on {looser} of {} splits",
        report.records.len()
    );

    let plot_path = out_dir.join("ssd_scatter.svg");
    emit_ssd_plot(&report.records, &plot_path)?;
    println!("SSD scatter written to {}", plot_path.display());
    Ok(())
}

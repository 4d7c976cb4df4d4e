//! Thin command-line front end. All real work lives in the library; this
//! binary parses arguments, resolves defaults (flags beat the DKMEANS_SEED
//! and DKMEANS_OUT environment variables, which beat built-in defaults),
//! and writes the requested files.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dkm::error::{Error, Result};
use dkm::eval::{leave_one_out_report, time_to_model, Algorithm};
use dkm::experiment::{run_experiment, ExperimentId};
use dkm::io::csv::{load_csv, save_csv};
use dkm::io::model::ModelFile;
use dkm::io::svg::emit_ssd_plot;
use dkm::synth::{experiment_suite, generate, identity_ring, interleaved_two_class, CANONICAL_SEED};
use dkm::types::{Config, InitMode, WeightMode};

#[derive(Parser)]
#[command(
    name = "dkm",
    version,
    about = "Two-class discriminative k-means, classic k-means, and a recognition harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit classic k-means to a CSV dataset and write a JSON model
    Kmeans(KmeansArgs),
    /// Fit discriminative k-means to a pos/neg-labelled CSV dataset
    Dkmeans(DkmeansArgs),
    /// Write the bundled synthetic datasets as CSV files
    Synth(SynthArgs),
    /// Run a bundled benchmark end to end (data, model, iteration plots)
    Experiment(ExperimentArgs),
    /// Leave-one-out recognition comparison on identity-labelled CSV data
    Loo(LooArgs),
}

#[derive(Args)]
struct FitOpts {
    /// Cluster budget (default 8)
    #[arg(long)]
    k: Option<usize>,
    /// Convergence tolerance on centre displacement (default 1e-9)
    #[arg(long)]
    tol: Option<f64>,
    /// Iteration cap (default 1000)
    #[arg(long = "max-iter")]
    max_iter: Option<usize>,
    /// RNG seed (default: DKMEANS_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Split weighting: "datacount" or "fixed:W" (default datacount)
    #[arg(long = "weight-mode")]
    weight_mode: Option<String>,
}

impl FitOpts {
    fn to_config(&self, default_seed: u64) -> Result<Config> {
        let mut config = Config::new(self.k.unwrap_or(8));
        if let Some(tol) = self.tol {
            config.tolerance = tol;
        }
        if let Some(max_iter) = self.max_iter {
            config.max_iterations = max_iter;
        }
        config.seed = resolve_seed(self.seed, default_seed)?;
        if let Some(mode) = &self.weight_mode {
            config.weight_mode = parse_weight_mode(mode)?;
        }
        config.validate()?;
        Ok(config)
    }
}

#[derive(Args)]
struct KmeansArgs {
    /// Input dataset (CSV)
    input: PathBuf,
    #[command(flatten)]
    fit: FitOpts,
    /// Initialisation: "random" or "plusplus" (default random)
    #[arg(long)]
    init: Option<String>,
    /// Model file to write (default: DKMEANS_OUT, then model.json)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DkmeansArgs {
    /// Input dataset (CSV with a pos/neg "label" column)
    input: PathBuf,
    #[command(flatten)]
    fit: FitOpts,
    /// Start from the centres of an existing model file
    #[arg(long = "warm-start")]
    warm_start: Option<PathBuf>,
    /// Model file to write (default: DKMEANS_OUT, then model.json)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SynthArgs {
    /// RNG seed (default: DKMEANS_SEED, then the bundled canonical seed)
    #[arg(long)]
    seed: Option<u64>,
    /// Directory to write into (default: DKMEANS_OUT, then .)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Which benchmark: e1, e2, or e3
    which: String,
    /// Cluster budget (default: dataset size, i.e. run to convergence)
    #[arg(long)]
    k: Option<usize>,
    /// RNG seed (default: DKMEANS_SEED, then the bundled canonical seed)
    #[arg(long)]
    seed: Option<u64>,
    /// Directory to write into (default: DKMEANS_OUT, then .)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LooArgs {
    /// Input dataset (CSV with an "identity" column)
    input: PathBuf,
    #[command(flatten)]
    fit: FitOpts,
    /// Also time model training with this many repetitions and write
    /// timing.json (timings vary run to run, so 0 keeps output deterministic)
    #[arg(long = "timing-reps", default_value_t = 0)]
    timing_reps: usize,
    /// Directory to write into (default: DKMEANS_OUT, then .)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn resolve_seed(flag: Option<u64>, fallback: u64) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("DKMEANS_SEED") {
        Ok(raw) => raw.parse().map_err(|_| {
            Error::InvalidConfig(format!("DKMEANS_SEED={raw:?} is not a valid seed"))
        }),
        Err(_) => Ok(fallback),
    }
}

fn resolve_out(flag: Option<PathBuf>, fallback: &str) -> PathBuf {
    flag.or_else(|| std::env::var_os("DKMEANS_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(fallback))
}

fn parse_weight_mode(raw: &str) -> Result<WeightMode> {
    if raw == "datacount" {
        return Ok(WeightMode::DataCount);
    }
    if let Some(w) = raw.strip_prefix("fixed:") {
        let w: f64 = w.parse().map_err(|_| {
            Error::InvalidConfig(format!("cannot parse fixed weight from {raw:?}"))
        })?;
        return Ok(WeightMode::Fixed(w));
    }
    Err(Error::InvalidConfig(format!(
        "weight mode must be \"datacount\" or \"fixed:W\", got {raw:?}"
    )))
}

fn parse_init_mode(raw: &str) -> Result<InitMode> {
    match raw {
        "random" => Ok(InitMode::RandomPoints),
        "plusplus" => Ok(InitMode::PlusPlus),
        other => Err(Error::InvalidConfig(format!(
            "init must be \"random\" or \"plusplus\", got {other:?}"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Kmeans(args) => cmd_kmeans(args),
        Command::Dkmeans(args) => cmd_dkmeans(args),
        Command::Synth(args) => cmd_synth(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Loo(args) => cmd_loo(args),
    }
}

fn cmd_kmeans(args: KmeansArgs) -> Result<()> {
    let mut config = args.fit.to_config(0)?;
    if let Some(init) = &args.init {
        config.init_mode = parse_init_mode(init)?;
    }
    let data = load_csv(&args.input)?;
    let clustering = dkm::run_kmeans(&data, &config)?;
    let out = resolve_out(args.out, "model.json");
    ModelFile::from_classic(&clustering, &config).save(&out)?;
    println!(
        "classic: k={} objective={} iterations={} terminated_by={} -> {}",
        clustering.k(),
        clustering.objective(),
        clustering.iterations_run(),
        reason_str(clustering.terminated_by()),
        out.display()
    );
    Ok(())
}

fn cmd_dkmeans(args: DkmeansArgs) -> Result<()> {
    let config = args.fit.to_config(0)?;
    let data = load_csv(&args.input)?;
    let (clustering, events) = match &args.warm_start {
        Some(path) => {
            let warm = ModelFile::load(path)?;
            dkm::run_discriminative_from_centres(&data, &config, &warm.centre_points()?)?
        }
        None => dkm::run_discriminative(&data, &config, None)?,
    };
    let out = resolve_out(args.out, "model.json");
    ModelFile::from_discriminative(&clustering, &events, &config).save(&out)?;
    println!(
        "discriminative: k={} objective={} iterations={} splits={} terminated_by={} -> {}",
        clustering.k(),
        clustering.objective(),
        clustering.iterations_run(),
        events.len(),
        reason_str(clustering.terminated_by()),
        out.display()
    );
    Ok(())
}

fn cmd_synth(args: SynthArgs) -> Result<()> {
    let seed = resolve_seed(args.seed, CANONICAL_SEED)?;
    let out = resolve_out(args.out, ".");
    std::fs::create_dir_all(&out)?;
    let suite = experiment_suite(seed);
    let files = [
        ("e1.csv", generate(&suite.base)?),
        ("e2.csv", generate(&suite.extended)?),
        ("interleaved.csv", generate(&interleaved_two_class(seed).spec)?),
        ("identities.csv", identity_ring(seed, 3, 12, 6.0, 1.0)?),
    ];
    for (name, data) in &files {
        let path = out.join(name);
        save_csv(data, &path)?;
        println!("wrote {} ({} points)", path.display(), data.len());
    }
    Ok(())
}

fn cmd_experiment(args: ExperimentArgs) -> Result<()> {
    let id: ExperimentId = args.which.parse()?;
    let seed = resolve_seed(args.seed, CANONICAL_SEED)?;
    let out = resolve_out(args.out, ".");
    let outcome = run_experiment(id, seed, args.k, &out)?;
    println!(
        "{}: {} points, {} clusters, {} splits, objective={}, terminated_by={}",
        id,
        outcome.dataset.len(),
        outcome.run.clustering.k(),
        outcome.run.split_events.len(),
        outcome.run.clustering.objective(),
        reason_str(outcome.run.clustering.terminated_by())
    );
    for path in &outcome.written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_loo(args: LooArgs) -> Result<()> {
    let config = args.fit.to_config(0)?;
    let data = load_csv(&args.input)?;
    let out = resolve_out(args.out, ".");
    std::fs::create_dir_all(&out)?;
    let report = leave_one_out_report(&data, &config)?;

    for (name, confusion) in [
        ("confusion_classic.csv", &report.classic),
        ("confusion_discriminative.csv", &report.discriminative),
    ] {
        let path = out.join(name);
        let mut text = String::from("identity");
        for id in confusion.identities() {
            text.push_str(&format!(",pred_{id}"));
        }
        text.push_str(",marginalized\n");
        for (row, counts) in confusion.counts().iter().enumerate() {
            text.push_str(&confusion.identities()[row].to_string());
            for c in counts {
                text.push_str(&format!(",{c}"));
            }
            text.push_str(&format!(",{}\n", confusion.marginalized()[row]));
        }
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
    }

    let records_path = out.join("ssd_records.csv");
    let mut text = String::from("query_id,ssd_classic,ssd_discriminative,benefit\n");
    for r in &report.records {
        text.push_str(&format!(
            "{},{},{},{}\n",
            r.query_id, r.ssd_classic, r.ssd_discriminative, r.benefit
        ));
    }
    std::fs::write(&records_path, text)?;
    println!("wrote {}", records_path.display());

    let scatter_path = out.join("ssd_scatter.svg");
    emit_ssd_plot(&report.records, &scatter_path)?;
    println!("wrote {}", scatter_path.display());

    let summary = serde_json::json!({
        "k_max": config.k_max,
        "tolerance": config.tolerance,
        "max_iterations": config.max_iterations,
        "weight_mode": match config.weight_mode {
            WeightMode::DataCount => "datacount".to_string(),
            WeightMode::Fixed(w) => format!("fixed:{w}"),
        },
        "seed": config.seed,
        "queries": report.records.len(),
        "identities": report.classic.identities(),
        "overall_error_classic": report.classic.overall_error(),
        "overall_error_discriminative": report.discriminative.overall_error(),
    });
    let report_path = out.join("report.json");
    std::fs::write(
        &report_path,
        serde_json::to_string_pretty(&summary).expect("summary serialises") + "\n",
    )?;
    println!("wrote {}", report_path.display());
    println!(
        "overall error: classic={} discriminative={}",
        report.classic.overall_error(),
        report.discriminative.overall_error()
    );

    if args.timing_reps > 0 {
        let classic = time_to_model(&data, Algorithm::Classic, &config, args.timing_reps)?;
        let disc = time_to_model(&data, Algorithm::Discriminative, &config, args.timing_reps)?;
        let reduction = if classic.median_secs > 0.0 {
            1.0 - disc.median_secs / classic.median_secs
        } else {
            0.0
        };
        let timing = serde_json::json!({
            "repetitions": args.timing_reps,
            "classic": {
                "samples_secs": classic.samples_secs,
                "median_secs": classic.median_secs,
            },
            "discriminative": {
                "samples_secs": disc.samples_secs,
                "median_secs": disc.median_secs,
            },
            "median_reduction_vs_classic": reduction,
        });
        let timing_path = out.join("timing.json");
        std::fs::write(
            &timing_path,
            serde_json::to_string_pretty(&timing).expect("timing serialises") + "\n",
        )?;
        println!("wrote {}", timing_path.display());
    }
    Ok(())
}

fn reason_str(reason: dkm::TerminationReason) -> &'static str {
    match reason {
        dkm::TerminationReason::Converged => "converged",
        dkm::TerminationReason::MaxClusters => "max_clusters",
        dkm::TerminationReason::MaxIterations => "max_iterations",
    }
}

//! `entfid` — measure two-qubit entanglement, sweep states through noise
//! channels, and reproduce the fidelity rank-correlation experiment.

mod csvio;
mod manifest;
mod plot;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use entfid_core::channels::ChannelFamily;
use entfid_core::harness::{
    initial_measure_histogram, run_ensemble, run_sweep, EnsembleConfig, PMode, SweepConfig,
    TauRecord,
};
use entfid_core::measures::{concurrence, entanglement_of_formation, negativity};
use entfid_core::linalg::hs_inner;
use entfid_core::state::{BellState, PureState, StateSampler};
use entfid_core::statefile::{load_state, StateFile};
use entfid_core::stats::{kendall_tau, kendall_tau_with_tolerance, PairedSample};
use entfid_core::wire::format_sig12;
use entfid_core::{DensityMatrix64, PureState64};

use manifest::RunManifest;

/// Seed used by `reproduce` so published figure data is one command away.
const REPRODUCE_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "entfid", version, about = "Two-qubit entanglement fidelities and their rank correlations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print concurrence, entanglement of formation, negativity and purity of a state file
    Measure {
        /// JSON state file (pure: re/im arrays; density: rho_re/rho_im 4x4)
        state_file: PathBuf,
    },
    /// Sweep one state through a channel family and write the fidelity table
    Sweep(SweepArgs),
    /// Correlate fidelities over an ensemble of random initial states
    Ensemble(EnsembleArgs),
    /// Kendall tau between two CSV columns
    Tau(TauArgs),
    /// Run all three noise families and emit the full figure-data bundle
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Initial state: a JSON file path, `bell:<phi+|phi-|psi+|psi->`, or `random:<seed>,<index>`
    #[arg(long)]
    state: String,
    /// Channel family name
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelFamily,
    /// Number of p values
    #[arg(long, default_value_t = 100)]
    steps: usize,
    /// How p values are produced
    #[arg(long = "p-mode", value_parser = parse_p_mode, default_value = "grid")]
    p_mode: PMode,
    /// Seed for random p draws
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Output CSV path (manifest written alongside)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EnsembleArgs {
    #[arg(long, value_parser = parse_channel)]
    channel: ChannelFamily,
    /// Ensemble size
    #[arg(long, default_value_t = 500)]
    states: usize,
    /// Number of p values per sweep
    #[arg(long, default_value_t = 100)]
    steps: usize,
    #[arg(long = "p-mode", value_parser = parse_p_mode, default_value = "grid")]
    p_mode: PMode,
    /// Master seed for state sampling and p draws
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Histogram bin count
    #[arg(long, default_value_t = 20)]
    bins: usize,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TauArgs {
    /// CSV file with a header row
    #[arg(long)]
    input: PathBuf,
    /// Column name for x
    #[arg(long)]
    x: String,
    /// Column name for y
    #[arg(long)]
    y: String,
    /// Treat |difference| <= this as a tie (sensitivity analysis only)
    #[arg(long = "tie-tol", default_value_t = 0.0)]
    tie_tol: f64,
}

#[derive(Args)]
struct ReproduceArgs {
    /// desk: 500 states x 100 steps; paper: 5000 x 200
    #[arg(long, default_value = "desk")]
    scale: String,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
}

fn parse_channel(name: &str) -> Result<ChannelFamily, String> {
    ChannelFamily::from_name(name).map_err(|_| {
        let names: Vec<&str> = ChannelFamily::ALL.iter().map(|f| f.name()).collect();
        format!("unknown channel '{name}'; valid names: {}", names.join(", "))
    })
}

fn parse_p_mode(name: &str) -> Result<PMode, String> {
    PMode::from_name(name).ok_or_else(|| format!("unknown p-mode '{name}'; use grid or random"))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Measure { state_file } => cmd_measure(&state_file),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Ensemble(args) => cmd_ensemble(args),
        Command::Tau(args) => cmd_tau(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    }
}

fn cmd_measure(path: &Path) -> Result<()> {
    let rho: DensityMatrix64 = match load_state(path)
        .with_context(|| format!("loading state file {}", path.display()))?
    {
        StateFile::Pure(psi) => psi.density(),
        StateFile::Density(rho) => rho,
    };
    let c = concurrence(&rho)?;
    let e = entanglement_of_formation(&rho)?;
    let n = negativity(&rho)?;
    let purity = hs_inner(rho.matrix(), rho.matrix())?.re;
    println!("concurrence,{}", format_sig12(c));
    println!("entanglement_of_formation,{}", format_sig12(e));
    println!("negativity,{}", format_sig12(n));
    println!("purity,{}", format_sig12(purity));
    Ok(())
}

/// `path`, `bell:phi+` or `random:seed,index`.
fn parse_state_spec(spec: &str) -> Result<PureState64> {
    if let Some(name) = spec.strip_prefix("bell:") {
        return Ok(PureState::bell(BellState::from_name(name)?));
    }
    if let Some(rest) = spec.strip_prefix("random:") {
        let (seed, index) = rest
            .split_once(',')
            .ok_or_else(|| anyhow!("random state spec must be random:<seed>,<index>"))?;
        let seed: u64 = seed.trim().parse().context("random state seed")?;
        let index: u64 = index.trim().parse().context("random state index")?;
        return Ok(StateSampler::new(seed).sample(index));
    }
    match load_state(Path::new(spec)).with_context(|| format!("loading state file {spec}"))? {
        StateFile::Pure(psi) => Ok(psi),
        StateFile::Density(_) => bail!("sweep requires a pure state, {spec} holds a density matrix"),
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let psi = parse_state_spec(&args.state)?;
    let config = SweepConfig::new(args.channel, args.steps, args.p_mode, args.seed)?;
    let records = run_sweep(&psi, &config)?;
    std::fs::write(&args.out, csvio::sweep_csv(&records))
        .with_context(|| format!("writing {}", args.out.display()))?;

    let mut manifest = RunManifest::new("sweep");
    manifest.state = Some(args.state.clone());
    manifest.channel = Some(args.channel.name().to_string());
    manifest.num_p = Some(args.steps);
    manifest.p_mode = Some(args.p_mode.name().to_string());
    manifest.master_seed = Some(args.seed);
    manifest.write(&args.out.with_extension("manifest.json"))?;
    Ok(())
}

fn write_ensemble_outputs(
    dir: &Path,
    records: &[TauRecord<f64>],
    histogram: Option<&entfid_core::Histogram64>,
    fig2_pair: bool,
) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    std::fs::write(dir.join("tau.csv"), csvio::tau_csv(records))
        .with_context(|| format!("writing {}", dir.join("tau.csv").display()))?;

    let column = |get: fn(&TauRecord<f64>) -> f64| -> Vec<f64> { records.iter().map(get).collect() };
    let scatter = |file: &str, title: &str, label: &str, values: &[f64]| -> Result<()> {
        std::fs::write(dir.join(file), plot::tau_scatter_svg(title, label, values))
            .with_context(|| format!("writing {}", dir.join(file).display()))
    };
    scatter("tau_e_c.svg", "Kendall tau: F_e vs F_c", "tau(F_e, F_c)", &column(|r| r.tau_e_c))?;
    scatter("tau_e_n.svg", "Kendall tau: F_e vs F_n", "tau(F_e, F_n)", &column(|r| r.tau_e_n))?;
    if fig2_pair {
        scatter("tau_c_n.svg", "Kendall tau: F_c vs F_n", "tau(F_c, F_n)", &column(|r| r.tau_c_n))?;
    }
    if let Some(hist) = histogram {
        std::fs::write(dir.join("histogram.csv"), csvio::histogram_csv(hist))
            .with_context(|| format!("writing {}", dir.join("histogram.csv").display()))?;
        std::fs::write(
            dir.join("histogram.svg"),
            plot::histogram_svg("Initial concurrence distribution", "concurrence", &hist.edges, &hist.counts),
        )
        .with_context(|| format!("writing {}", dir.join("histogram.svg").display()))?;
    }
    Ok(())
}

fn cmd_ensemble(args: EnsembleArgs) -> Result<()> {
    if args.bins < 1 {
        bail!("--bins must be at least 1");
    }
    let sweep = SweepConfig::new(args.channel, args.steps, args.p_mode, args.seed)?;
    let config = EnsembleConfig::new(sweep, args.states, args.seed)?;
    let records = run_ensemble::<f64>(&config)?;
    let histogram = initial_measure_histogram::<f64>(&config, args.bins);
    write_ensemble_outputs(&args.out, &records, Some(&histogram), true)?;

    let mut manifest = RunManifest::new("ensemble");
    manifest.channel = Some(args.channel.name().to_string());
    manifest.num_p = Some(args.steps);
    manifest.p_mode = Some(args.p_mode.name().to_string());
    manifest.num_states = Some(args.states);
    manifest.master_seed = Some(args.seed);
    manifest.bins = Some(args.bins);
    manifest.write(&args.out.join("manifest.json"))?;
    Ok(())
}

fn cmd_tau(args: TauArgs) -> Result<()> {
    let (xs, ys) = csvio::read_two_columns(&args.input, &args.x, &args.y)?;
    let sample = PairedSample::new(&xs, &ys)?;
    let tau = if args.tie_tol > 0.0 {
        kendall_tau_with_tolerance(&sample, args.tie_tol)
    } else {
        kendall_tau(&sample)
    };
    println!("{}", format_sig12(tau));
    Ok(())
}

fn cmd_reproduce(args: ReproduceArgs) -> Result<()> {
    let (num_states, num_p) = match args.scale.as_str() {
        "desk" => (500, 100),
        "paper" => (5000, 200),
        other => bail!("unknown scale '{other}'; use desk or paper"),
    };
    let families = [ChannelFamily::AmplitudeDamping, ChannelFamily::BitFlip, ChannelFamily::PhaseFlip];
    std::fs::create_dir_all(&args.out)
        .with_context(|| format!("creating {}", args.out.display()))?;

    // same sample of initial states for every family
    let mut summary = String::from(
        "channel,pair,mean_tau,mean_abs_tau,frac_abs_le_0_05,frac_abs_le_0_15,frac_abs_lt_0_99\n",
    );
    let mut all_records = Vec::new();
    for family in families {
        let sweep = SweepConfig::new(family, num_p, PMode::Grid, REPRODUCE_SEED)
            .with_context(|| format!("stage {}: config", family.name()))?;
        let config = EnsembleConfig::new(sweep, num_states, REPRODUCE_SEED)
            .with_context(|| format!("stage {}: config", family.name()))?;
        let records = run_ensemble::<f64>(&config)
            .with_context(|| format!("stage {}: ensemble", family.name()))?;
        let fig2 = family == ChannelFamily::AmplitudeDamping;
        write_ensemble_outputs(&args.out.join(family.name()), &records, None, fig2)
            .with_context(|| format!("stage {}: outputs", family.name()))?;
        println!("{}: {} states x {} steps done", family.name(), num_states, num_p);
        all_records.push((family, records));
    }

    for (family, records) in &all_records {
        for (pair, get) in [
            ("tau_e_c", (|r: &TauRecord<f64>| r.tau_e_c) as fn(&TauRecord<f64>) -> f64),
            ("tau_e_n", |r| r.tau_e_n),
            ("tau_c_n", |r| r.tau_c_n),
        ] {
            let values: Vec<f64> = records.iter().map(get).collect();
            let n = values.len() as f64;
            let mean = values.iter().sum::<f64>() / n;
            let mean_abs = values.iter().map(|v| v.abs()).sum::<f64>() / n;
            let frac = |pred: fn(f64) -> bool| -> f64 {
                values.iter().filter(|v| pred(v.abs())).count() as f64 / n
            };
            summary.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                family.name(),
                pair,
                format_sig12(mean),
                format_sig12(mean_abs),
                format_sig12(frac(|a| a <= 0.05)),
                format_sig12(frac(|a| a <= 0.15)),
                format_sig12(frac(|a| a < 0.99)),
            ));
        }
    }
    std::fs::write(args.out.join("summary.csv"), summary)
        .with_context(|| "stage summary: writing summary.csv")?;

    // the state ensemble is family-independent, so the histogram is emitted once
    let hist_config = EnsembleConfig::new(
        SweepConfig::new(ChannelFamily::Identity, num_p, PMode::Grid, REPRODUCE_SEED)?,
        num_states,
        REPRODUCE_SEED,
    )?;
    let histogram = initial_measure_histogram::<f64>(&hist_config, 20);
    std::fs::write(args.out.join("histogram.csv"), csvio::histogram_csv(&histogram))
        .with_context(|| "stage histogram: writing histogram.csv")?;
    std::fs::write(
        args.out.join("histogram.svg"),
        plot::histogram_svg("Initial concurrence distribution", "concurrence", &histogram.edges, &histogram.counts),
    )
    .with_context(|| "stage histogram: writing histogram.svg")?;

    let mut manifest = RunManifest::new("reproduce");
    manifest.channels = Some(families.iter().map(|f| f.name().to_string()).collect());
    manifest.num_p = Some(num_p);
    manifest.p_mode = Some("grid".to_string());
    manifest.num_states = Some(num_states);
    manifest.master_seed = Some(REPRODUCE_SEED);
    manifest.bins = Some(20);
    manifest.scale = Some(args.scale.clone());
    manifest.write(&args.out.join("manifest.json"))?;
    println!("bundle written to {}", args.out.display());
    Ok(())
}

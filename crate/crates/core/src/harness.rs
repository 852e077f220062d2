//! The correlation experiment: per-state p-sweeps of the four fidelities,
//! per-state Kendall taus across an ensemble of random initial states, and
//! the initial-concurrence histogram.
//!
//! Determinism contract: a config fully determines every output byte. State
//! i always comes from substream `(master_seed, i)`, random p values from a
//! dedicated substream of the sweep seed, and ensemble evaluation
//! parallelizes over state indices only, with results assembled in index
//! order — so worker count cannot influence results.
//!
//! Taus are computed over the sweep columns quantized to the 12-digit wire
//! precision. The emitted CSVs are the ground truth for these runs, and
//! quantizing first means a tau recomputed from a CSV agrees with the
//! recorded one exactly, not just approximately.

use rayon::prelude::*;

use crate::channels::ChannelFamily;
use crate::error::{Error, Result};
use crate::fidelities::Prepared;
use crate::measures::concurrence_pure;
use crate::rng::Stream;
use crate::scalar::Scalar;
use crate::state::{PureState, StateSampler};
use crate::stats::{kendall_tau, PairedSample};
use crate::wire::round_scalar;

/// Substream index reserved for drawing random p values, far outside any
/// realistic state index.
const P_STREAM_INDEX: u64 = u64::MAX;

/// How the p values of a sweep are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PMode {
    /// Evenly spaced grid over [0, 1], endpoints included. The default.
    Grid,
    /// Seeded i.i.d. uniforms, sorted ascending.
    RandomUniform,
}

impl PMode {
    pub fn name(&self) -> &'static str {
        match self {
            PMode::Grid => "grid",
            PMode::RandomUniform => "random",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "grid" => Some(PMode::Grid),
            "random" => Some(PMode::RandomUniform),
            _ => None,
        }
    }
}

/// One p-sweep of a single state through one channel family.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub family: ChannelFamily,
    pub num_p: usize,
    pub p_mode: PMode,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(family: ChannelFamily, num_p: usize, p_mode: PMode, seed: u64) -> Result<Self> {
        if num_p < 2 {
            return Err(Error::TooFewSteps { num_p });
        }
        Ok(SweepConfig { family, num_p, p_mode, seed })
    }
}

/// A sweep repeated over an ensemble of sampled initial states.
#[derive(Debug, Clone, Copy)]
pub struct EnsembleConfig {
    pub sweep: SweepConfig,
    pub num_states: usize,
    pub master_seed: u64,
}

impl EnsembleConfig {
    pub fn new(sweep: SweepConfig, num_states: usize, master_seed: u64) -> Result<Self> {
        if num_states < 1 {
            return Err(Error::TooFewStates { num_states });
        }
        Ok(EnsembleConfig { sweep, num_states, master_seed })
    }
}

/// Fidelities at one p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord<T> {
    pub p: T,
    pub f_e: T,
    pub f_ef: T,
    pub f_c: T,
    pub f_n: T,
}

/// Per-state correlation triple plus the state's initial concurrence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauRecord<T> {
    pub state_index: u64,
    pub tau_e_c: T,
    pub tau_e_n: T,
    pub tau_c_n: T,
    pub initial_concurrence: T,
}

/// Equal-width histogram over [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram<T> {
    /// bins + 1 edges, from 0 to 1
    pub edges: Vec<T>,
    pub counts: Vec<u64>,
}

/// The p values of a sweep, in evaluation order (ascending).
pub fn p_values<T: Scalar>(config: &SweepConfig) -> Vec<T> {
    match config.p_mode {
        PMode::Grid => {
            let steps = T::of((config.num_p - 1) as f64);
            (0..config.num_p).map(|k| T::of(k as f64) / steps).collect()
        }
        PMode::RandomUniform => {
            let mut stream = Stream::substream(config.seed, P_STREAM_INDEX);
            let mut ps: Vec<T> = (0..config.num_p).map(|_| T::of(stream.next_f64())).collect();
            ps.sort_by(|a, b| a.partial_cmp(b).expect("uniforms are finite"));
            ps
        }
    }
}

/// Evaluates the fidelity quadruple of `psi` at every p. Initial-state
/// measures are prepared once; failures carry the offending p.
pub fn run_sweep<T: Scalar>(psi: &PureState<T>, config: &SweepConfig) -> Result<Vec<SweepRecord<T>>> {
    let prepared = Prepared::new(psi)?;
    run_sweep_prepared(&prepared, config)
}

fn run_sweep_prepared<T: Scalar>(
    prepared: &Prepared<T>,
    config: &SweepConfig,
) -> Result<Vec<SweepRecord<T>>> {
    p_values(config)
        .into_iter()
        .map(|p| {
            let step = || -> Result<SweepRecord<T>> {
                let channel = config.family.channel(p)?;
                let q = prepared.quadruple(&channel)?;
                Ok(SweepRecord { p, f_e: q.f_e, f_ef: q.f_ef, f_c: q.f_c, f_n: q.f_n })
            };
            step().map_err(|e| e.at_p(p.to_f64().unwrap_or(f64::NAN)))
        })
        .collect()
}

/// Runs the sweep for every sampled state and correlates the fidelity
/// columns pairwise. Results are ordered by state index regardless of how
/// the evaluation was scheduled.
pub fn run_ensemble<T: Scalar>(config: &EnsembleConfig) -> Result<Vec<TauRecord<T>>> {
    let sampler = StateSampler::new(config.master_seed);
    (0..config.num_states as u64)
        .into_par_iter()
        .map(|index| {
            evaluate_state(&sampler, index, &config.sweep).map_err(|e| e.at_state(index))
        })
        .collect()
}

fn evaluate_state<T: Scalar>(
    sampler: &StateSampler,
    index: u64,
    sweep: &SweepConfig,
) -> Result<TauRecord<T>> {
    let psi = sampler.sample::<T>(index);
    let prepared = Prepared::new(&psi)?;
    let records = run_sweep_prepared(&prepared, sweep)?;
    let quantize = |get: fn(&SweepRecord<T>) -> T| -> Vec<T> {
        records.iter().map(|r| round_scalar(get(r))).collect()
    };
    let f_e = quantize(|r| r.f_e);
    let f_c = quantize(|r| r.f_c);
    let f_n = quantize(|r| r.f_n);
    Ok(TauRecord {
        state_index: index,
        tau_e_c: kendall_tau(&PairedSample::new(&f_e, &f_c)?),
        tau_e_n: kendall_tau(&PairedSample::new(&f_e, &f_n)?),
        tau_c_n: kendall_tau(&PairedSample::new(&f_c, &f_n)?),
        initial_concurrence: concurrence_pure(&psi),
    })
}

/// Histogram of the initial concurrence over the sampled ensemble; counts
/// sum to `num_states`.
pub fn initial_measure_histogram<T: Scalar>(config: &EnsembleConfig, bins: usize) -> Histogram<T> {
    assert!(bins >= 1, "histogram needs at least one bin");
    let sampler = StateSampler::new(config.master_seed);
    let mut counts = vec![0u64; bins];
    for index in 0..config.num_states as u64 {
        let c = concurrence_pure(&sampler.sample::<T>(index));
        let slot = ((c.to_f64().unwrap_or(0.0) * bins as f64) as usize).min(bins - 1);
        counts[slot] += 1;
    }
    let edges = (0..=bins).map(|k| T::of(k as f64 / bins as f64)).collect();
    Histogram { edges, counts }
}

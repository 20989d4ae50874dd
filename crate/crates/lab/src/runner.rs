//! Round-parallel execution. Every round owns its random stream, so results
//! are identical for any thread count.

use std::env;

use pingpong_core::analysis::{sweep_point, SweepRow};
use pingpong_core::attacks::AttackStrategy;
use pingpong_core::protocol::{dpd_trial, run_round, DpdCheck, ProtocolConfig, RoundRecord, SessionStats};
use rayon::prelude::*;

use crate::{LabError, LabResult};

/// Name of the variable that caps worker threads.
pub const THREADS_VAR: &str = "PINGPONG_THREADS";

/// Worker count from `PINGPONG_THREADS`, or `None` for rayon's default.
pub fn threads_from_env() -> Option<usize> {
    env::var(THREADS_VAR).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

fn pool(threads: Option<usize>) -> LabResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| LabError::Usage(format!("cannot start worker threads: {e}")))
}

pub fn run_session_parallel<A: AttackStrategy + ?Sized>(
    config: &ProtocolConfig,
    attack: &A,
    threads: Option<usize>,
) -> LabResult<(SessionStats, Vec<RoundRecord>)> {
    config.validate()?;
    let records = pool(threads)?.install(|| {
        (0..config.rounds)
            .into_par_iter()
            .map(|i| run_round(config, attack, i))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let stats = SessionStats::from_records(config, attack, &records)?;
    Ok((stats, records))
}

pub fn sweep_parallel(p0s: &[f64], ds: &[f64], threads: Option<usize>) -> LabResult<Vec<SweepRow>> {
    if p0s.is_empty() || ds.is_empty() {
        return Err(LabError::Usage("sweep grids must be nonempty".into()));
    }
    let points: Vec<(f64, f64)> = p0s.iter().flat_map(|&p| ds.iter().map(move |&d| (p, d))).collect();
    let rows = pool(threads)?.install(|| {
        points
            .par_iter()
            .map(|&(p0, d)| sweep_point(p0, d))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(rows)
}

/// Clicks over `rounds` forced false-photon `Z^1` rounds.
pub fn dpd_clicks<A: AttackStrategy + ?Sized>(
    attack: &A,
    seed: u64,
    rounds: u64,
    threads: Option<usize>,
) -> LabResult<u64> {
    let clicks = pool(threads)?.install(|| {
        (0..rounds)
            .into_par_iter()
            .map(|i| dpd_trial(attack, seed, i).map(|c| (c == DpdCheck::Click) as u64))
            .try_reduce(|| 0, |a, b| Ok(a + b))
    })?;
    Ok(clicks)
}

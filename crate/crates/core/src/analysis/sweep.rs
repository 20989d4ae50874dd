use alloc::vec::Vec;

use super::{translucent_closed_form, translucent_exact_engine};
use crate::{Error, Result};

/// One point of the `(p0, D)` grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p0: f64,
    pub d: f64,
    pub q_formula: f64,
    pub q_exact: f64,
    pub i_ab: f64,
    pub i_ae: f64,
    pub p_i: f64,
    pub p_z: f64,
    pub control_detection: f64,
}

/// `{0, 0.1, ..., 1.0}`.
pub fn default_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

/// Evaluates every grid point, `p0`-major. Information measures and
/// probabilities come from the closed form; `q_exact` from the exact engine.
pub fn sweep(p0s: &[f64], ds: &[f64]) -> Result<Vec<SweepRow>> {
    if p0s.is_empty() || ds.is_empty() {
        return Err(Error::InvalidConfig("sweep grids must be nonempty"));
    }
    let mut rows = Vec::with_capacity(p0s.len() * ds.len());
    for &p0 in p0s {
        for &d in ds {
            rows.push(sweep_point(p0, d)?);
        }
    }
    Ok(rows)
}

/// Single grid point of [`sweep`].
pub fn sweep_point(p0: f64, d: f64) -> Result<SweepRow> {
    let closed = translucent_closed_form(p0, d)?;
    let exact = translucent_exact_engine(p0, d)?;
    Ok(SweepRow {
        p0,
        d,
        q_formula: closed.qber_fidelity,
        q_exact: exact.qber_fidelity,
        i_ab: closed.i_ab,
        i_ae: closed.i_ae,
        p_i: closed.p_i,
        p_z: closed.p_z,
        control_detection: closed.control_detection,
    })
}

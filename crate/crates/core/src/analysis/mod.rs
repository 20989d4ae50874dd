//! Closed-form security analysis, an independent exact density-matrix engine
//! that re-derives it from the attack operators, and `(p0, D)` grid sweeps.
//!
//! Matrix layouts: `(travel, ancilla)` for `ρ_at`, `(home, travel, ancilla)`
//! for the full three-qubit state and `(home, travel)` for `ρ_ht`.

mod closed;
mod dpd;
mod empirical;
mod exact;
mod sweep;

pub use closed::{
    encoded_state, opaque_closed_form, translucent_closed_form, translucent_qber, OpaqueReport,
    TranslucentReport,
};
pub use dpd::{dpd_click_probability, dpd_click_probability_for};
pub use empirical::empirical_mutual_information;
pub use exact::translucent_exact_engine;
pub use sweep::{default_grid, sweep, sweep_point, SweepRow};

use crate::Error;

fn check_probability(x: f64) -> Result<f64, Error> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(Error::InvalidProbability(x))
    }
}

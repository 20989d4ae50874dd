use super::{outcome_index, AttackContext, AttackStrategy};
use crate::protocol::RoundRng;
use crate::quantum::{measure, MeasurementBasis, Outcome, Role, StateVector};
use crate::{Error, Result};

/// Intercept-resend: Eve measures the travel photon in `B_z` on the way to
/// Alice and forwards a fresh photon in the state she found, then measures
/// again on the way back.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct OpaqueAttack;

fn measure_travel(state: &StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<(Outcome, StateVector)> {
    let dim = state
        .layout()
        .dim_of(Role::Travel)
        .ok_or(Error::UnknownLabel(Role::Travel))?;
    let basis = MeasurementBasis::computational(Role::Travel, dim)?;
    let m = measure(state, &basis, rng)?;
    ctx.record(outcome_index(m.outcome, basis.len()));
    Ok((m.outcome, m.state))
}

impl AttackStrategy for OpaqueAttack {
    fn name(&self) -> &'static str {
        "opaque"
    }

    fn on_b_to_a(&self, state: StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<StateVector> {
        // the collapsed travel photon is exactly the fresh |k> she resends
        measure_travel(&state, ctx, rng).map(|(_, s)| s)
    }

    fn on_a_to_b(&self, state: StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<StateVector> {
        let (outcome, post) = measure_travel(&state, ctx, rng)?;
        if let Outcome::Index(k) = outcome {
            ctx.set_guess(k as u8)?;
        }
        Ok(post)
    }

    fn fidelity_qber(&self, p0: f64) -> Option<f64> {
        crate::analysis::opaque_closed_form(p0).ok().map(|r| r.q)
    }
}

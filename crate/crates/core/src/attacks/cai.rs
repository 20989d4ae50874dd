use super::{outcome_index, AttackContext, AttackStrategy};
use crate::protocol::RoundRng;
use crate::quantum::{measure, MeasurementBasis, Outcome, Role, StateVector};
use crate::{Error, Result};

/// Eve leaves the outgoing photon alone and measures the returning one in
/// `B_z` in every message round, forwarding the collapsed photon to Bob.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CaiMeasureAttack;

impl AttackStrategy for CaiMeasureAttack {
    fn name(&self) -> &'static str {
        "cai"
    }

    fn on_b_to_a(&self, state: StateVector, _: &mut AttackContext, _: &mut RoundRng) -> Result<StateVector> {
        Ok(state)
    }

    fn on_a_to_b(&self, state: StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<StateVector> {
        let dim = state
            .layout()
            .dim_of(Role::Travel)
            .ok_or(Error::UnknownLabel(Role::Travel))?;
        let basis = MeasurementBasis::computational(Role::Travel, dim)?;
        let m = measure(&state, &basis, rng)?;
        ctx.record(outcome_index(m.outcome, basis.len()));
        if let Outcome::Index(k) = m.outcome {
            ctx.set_guess(k as u8)?;
        }
        Ok(m.state)
    }
}

use core::f64::consts::FRAC_1_SQRT_2;

use super::{outcome_index, AttackContext, AttackStrategy};
use crate::protocol::RoundRng;
use crate::quantum::{measure, Layout, Matrix, MeasurementBasis, Operator, Outcome, Role, StateVector};
use crate::{Error, Result};

/// Ancilla attack parameterized by the disturbance `D` (with `F = 1 - D`).
///
/// On the way to Alice, Eve couples the travel qubit to an ancilla prepared
/// in `|χ0>`:
///
/// ```text
/// |0>_t|χ> -> √F |0>_t|χ0> + √D |1>_t|χ1>
/// |1>_t|χ> -> √F |1>_t|χ1> + √D |0>_t|χ0>
/// ```
///
/// The two images overlap by `2√(DF)`, so the map is not an isometry; it is
/// applied as a linear map followed by renormalization. Acting on the travel
/// half of `|ψ+>` it is norm-preserving. On the way back she measures
/// `(travel, ancilla)` in `{φ^I, φ^Z}` and guesses `Z^0` on `φ^I`, `Z^1` on
/// `φ^Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslucentAttack {
    disturbance: f64,
}

impl TranslucentAttack {
    pub fn new(disturbance: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&disturbance) {
            return Err(Error::InvalidProbability(disturbance));
        }
        Ok(Self { disturbance })
    }

    pub fn disturbance(&self) -> f64 {
        self.disturbance
    }

    /// Interaction on `(travel, ancilla)`, basis `|t χ>` with index `2t + χ`.
    /// Columns for an input ancilla in `|χ1>` are zero.
    pub fn interaction(&self) -> Operator {
        let d = libm::sqrt(self.disturbance);
        let f = libm::sqrt(1.0 - self.disturbance);
        #[rustfmt::skip]
        let m = [
            f,   0.0, d,   0.0,
            0.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 0.0, 0.0,
            d,   0.0, f,   0.0,
        ];
        Operator::linear(Matrix::from_real(4, &m).expect("4x4 interaction"))
    }

    /// `|χ0>` on the ancilla.
    pub fn fresh_ancilla() -> StateVector {
        StateVector::basis(Layout::qubit(Role::Ancilla), &[0]).expect("ancilla ket")
    }

    /// `{φ^I, φ^Z}` with `φ^{I/Z} = (|0>_t|χ0> ± |1>_t|χ1>)/√2`; the rest of
    /// the two-qubit space is the residual outcome.
    pub fn eve_basis() -> MeasurementBasis {
        let layout = Layout::of(&[(Role::Travel, 2), (Role::Ancilla, 2)]).expect("static layout");
        let h = FRAC_1_SQRT_2;
        let phi_i = StateVector::from_real(layout.clone(), &[h, 0.0, 0.0, h]).expect("normalized");
        let phi_z = StateVector::from_real(layout.clone(), &[h, 0.0, 0.0, -h]).expect("normalized");
        MeasurementBasis::new(layout, alloc::vec![phi_i, phi_z]).expect("orthonormal")
    }

    fn fault(&self, reason: &'static str) -> Error {
        Error::AttackFault {
            attack: "translucent",
            reason,
        }
    }
}

impl AttackStrategy for TranslucentAttack {
    fn name(&self) -> &'static str {
        "translucent"
    }

    fn on_b_to_a(&self, state: StateVector, _: &mut AttackContext, _: &mut RoundRng) -> Result<StateVector> {
        if state.layout().dim_of(Role::Travel) != Some(2) {
            return Err(self.fault("needs a qubit travel photon"));
        }
        let joined = state.tensor(&Self::fresh_ancilla())?;
        joined.apply_on(&self.interaction(), &[Role::Travel, Role::Ancilla])
    }

    fn on_a_to_b(&self, state: StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<StateVector> {
        if !state.layout().contains(Role::Ancilla) {
            return Err(self.fault("ancilla missing on the return trip"));
        }
        let basis = Self::eve_basis();
        let m = measure(&state, &basis, rng)?;
        ctx.record(outcome_index(m.outcome, basis.len()));
        match m.outcome {
            Outcome::Index(k) => ctx.set_guess(k as u8)?,
            Outcome::Residual => return Err(self.fault("measurement left the {φ^I, φ^Z} span")),
        }
        Ok(m.state)
    }

    fn fidelity_qber(&self, p0: f64) -> Option<f64> {
        Some(crate::analysis::translucent_qber(p0, self.disturbance))
    }
}

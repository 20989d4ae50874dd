use alloc::vec::Vec;

use super::check_probability;
use super::closed::{encoded_state, TranslucentReport};
use crate::attacks::TranslucentAttack;
use crate::protocol::{alice_encode, bob_prepare, PhotonKind};
use crate::quantum::{binary_capacity, DensityOperator, Role, StateVector, C64};
use crate::{Error, Result};

/// Re-derives every [`TranslucentReport`] field from the attack's interaction
/// operator and the quantum primitives, without using any closed form.
///
/// The three-qubit matrix is the classical mixture over Alice's operation.
/// The `(travel, ancilla)` matrix, Eve's outcome probabilities and the
/// `(home, travel)` matrix come from the coherent superposition
/// `(√p0 Z^0 + √p1 Z^1)_t |ψ(1)>`, with Eve's measurement averaged over
/// outcomes.
pub fn translucent_exact_engine(p0: f64, d: f64) -> Result<TranslucentReport> {
    let p0 = check_probability(p0)?;
    let p1 = 1.0 - p0;
    let attack = TranslucentAttack::new(d)?;

    let joined = bob_prepare(PhotonKind::True).tensor(&TranslucentAttack::fresh_ancilla())?;
    let psi1 = joined.apply_on(&attack.interaction(), &[Role::Travel, Role::Ancilla])?;
    let at = [Role::Travel, Role::Ancilla];
    let rho_at1 = psi1.to_density().partial_trace(&at)?;
    let control_detection = same_value_weight(&psi1)?;

    let branch0 = alice_encode(&psi1, 0)?;
    let branch1 = alice_encode(&psi1, 1)?;
    let rho_full = DensityOperator::mixture(&[(p0, branch0.to_density()), (p1, branch1.to_density())])?;

    let (w0, w1) = (libm::sqrt(p0), libm::sqrt(p1));
    let amps: Vec<C64> = branch0
        .amps()
        .iter()
        .zip(branch1.amps())
        .map(|(a, b)| a * w0 + b * w1)
        .collect();
    let psi2 = StateVector::new(psi1.layout().clone(), amps)?;
    let rho_at2 = psi2.to_density().partial_trace(&at)?;

    let spectrum = rho_at2.eigenvalues()?;
    let mut eigenvalues = [0.0; 4];
    eigenvalues.copy_from_slice(&spectrum);
    let i_ae = rho_at2.entropy()?;

    let basis = TranslucentAttack::eve_basis();
    let mut weights = Vec::new();
    let mut residual = 0.0;
    for branch in basis.branches(&psi2)? {
        match (branch.outcome, branch.state) {
            (crate::quantum::Outcome::Index(_), Some(s)) => {
                let ht = s.to_density().partial_trace(&[Role::Home, Role::Travel])?;
                weights.push((branch.probability, ht));
            }
            (crate::quantum::Outcome::Index(_), None) => {}
            (crate::quantum::Outcome::Residual, _) => residual += branch.probability,
        }
    }
    if residual > crate::quantum::TOL {
        return Err(Error::AttackFault {
            attack: "translucent",
            reason: "Eve's measurement has weight outside {φ^I, φ^Z}",
        });
    }
    let rho_ht3 = DensityOperator::mixture(&weights)?;

    let phi_i = basis.vector(0).expect("two-vector basis");
    let phi_z = basis.vector(1).expect("two-vector basis");
    let p_i = rho_at2.born_weight(&phi_i)?;
    let p_z = rho_at2.born_weight(&phi_z)?;

    let qber_fidelity = 1.0 - rho_ht3.born_weight(&encoded_state(p0)?)?;

    Ok(TranslucentReport {
        p0,
        d,
        rho_at1,
        rho_at2,
        eigenvalues,
        i_ae,
        rho_full,
        p_i,
        p_z,
        rho_ht3,
        qber_fidelity,
        i_ab: binary_capacity(qber_fidelity)?,
        control_detection,
    })
}

/// Probability that `B_z` on home and travel agree, i.e. a control-mode
/// mismatch.
fn same_value_weight(state: &StateVector) -> Result<f64> {
    let ht = state.to_density().partial_trace(&[Role::Home, Role::Travel])?;
    let mut total = 0.0;
    for b in 0..2 {
        total += ht.born_weight(&StateVector::basis(ht.layout().clone(), &[b, b])?)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::translucent_closed_form;

    #[test]
    fn matches_closed_form_at_sample_points() {
        for (p0, d) in [(0.5, 0.0), (0.3, 0.1), (0.9, 0.5), (0.1, 0.9), (1.0, 1.0), (0.0, 0.4)] {
            let exact = translucent_exact_engine(p0, d).unwrap();
            let closed = translucent_closed_form(p0, d).unwrap();
            for (field, dev) in exact.deviations(&closed).unwrap() {
                assert!(dev < 1e-10, "({p0}, {d}) {field}: {dev:e}");
            }
        }
    }

    #[test]
    fn balanced_encoding_hides_everything() {
        for d in [0.0, 0.25, 0.6, 1.0] {
            let r = translucent_exact_engine(0.5, d).unwrap();
            assert!((r.eigenvalues[0] - 1.0).abs() < 1e-12);
            assert!(r.i_ae.abs() < 1e-12);
        }
        assert!(translucent_exact_engine(0.7, 0.0).unwrap().control_detection.abs() < 1e-15);
    }
}

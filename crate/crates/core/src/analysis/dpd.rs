use crate::attacks::WojcikAttack;
use crate::protocol::{alice_encode, bob_prepare, plus_state, PhotonKind};
use crate::quantum::{Role, StateVector};
use crate::Result;

const TXY: [Role; 3] = [Role::Travel, Role::ModeX, Role::ModeY];

/// Exact `P+` click probability for a false photon that Alice flipped with `Z^1`.
pub fn dpd_click_probability(eve_present: bool) -> Result<f64> {
    Ok(dpd_click_probability_for(eve_present, 1)?.unwrap_or(0.0))
}

/// As [`dpd_click_probability`] for either operation; `None` when Alice
/// applied `Z^0` and Bob discards the photon.
pub fn dpd_click_probability_for(eve_present: bool, alice_op: u8) -> Result<Option<f64>> {
    if alice_op == 0 {
        return Ok(None);
    }
    let mut state = bob_prepare(PhotonKind::False);
    if eve_present {
        state = state
            .promote_to_mode(Role::Travel)?
            .tensor(&WojcikAttack::fresh_modes())?
            .apply_on(&WojcikAttack::q_operator(), &TXY)?;
    }
    state = alice_encode(&state, alice_op)?;
    if eve_present {
        state = state.apply_on(&WojcikAttack::q_inverse(), &TXY)?;
    }
    returned_click(&state).map(Some)
}

fn returned_click(state: &StateVector) -> Result<f64> {
    let rho_t = state.to_density().partial_trace(&[Role::Travel])?;
    let dim = rho_t.dim();
    rho_t.born_weight(&plus_state(dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn click_probabilities() {
        assert_eq!(dpd_click_probability(false).unwrap(), 0.0);
        assert!((dpd_click_probability(true).unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(dpd_click_probability_for(true, 0).unwrap(), None);
    }
}

use core::f64::consts::FRAC_1_SQRT_2;

use super::{AttackContext, AttackStrategy};
use crate::protocol::RoundRng;
use crate::quantum::{Layout, Matrix, Operator, OperatorKind, Role, StateVector, C64};
use crate::{Error, Result};

/// Level indices of a three-level mode.
const VAC: usize = 0;
const ZERO: usize = 1;
const ONE: usize = 2;

/// Basis index of `|t>|x>|y>` over three three-level modes.
fn txy(t: usize, x: usize, y: usize) -> usize {
    9 * t + 3 * x + y
}

/// Eve's two-mode attack with auxiliary modes `x` (starts empty) and `y`
/// (starts in `|0>`).
///
/// `Q` is defined on the two generators Eve ever sees and extended linearly:
///
/// ```text
/// |0>_t|vac>_x|0>_y -> (|0,0,vac> + |vac,0,1>)/√2
/// |1>_t|vac>_x|0>_y -> (|vac,1,0> + |1,1,vac>)/√2
/// ```
///
/// `Q⁻¹` inverts both images and also maps `(|vac,1,0> - |1,1,vac>)/√2`, the
/// image after Alice's `Z^1`, to `|1>_t|vac>_x|1>_y`. Both are partial
/// isometries; a state outside their support is an attack fault.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct WojcikAttack;

impl WojcikAttack {
    pub fn layout() -> Layout {
        Layout::of(&[(Role::Travel, 3), (Role::ModeX, 3), (Role::ModeY, 3)]).expect("static layout")
    }

    /// `|vac>_x |0>_y`.
    pub fn fresh_modes() -> StateVector {
        let l = Layout::of(&[(Role::ModeX, 3), (Role::ModeY, 3)]).expect("static layout");
        StateVector::basis(l, &[VAC, ZERO]).expect("mode ket")
    }

    /// Pairs `(input, image)` defining `Q`.
    fn q_pairs() -> [(usize, [(usize, f64); 2]); 2] {
        let h = FRAC_1_SQRT_2;
        [
            (txy(ZERO, VAC, ZERO), [(txy(ZERO, ZERO, VAC), h), (txy(VAC, ZERO, ONE), h)]),
            (txy(ONE, VAC, ZERO), [(txy(VAC, ONE, ZERO), h), (txy(ONE, ONE, VAC), h)]),
        ]
    }

    /// B→A operation on `(travel, x, y)`.
    pub fn q_operator() -> Operator {
        let mut m = Matrix::zeros(27);
        for (input, image) in Self::q_pairs() {
            for (row, amp) in image {
                m[(row, input)] = C64::new(amp, 0.0);
            }
        }
        Operator::trusted(m, OperatorKind::PartialIsometry)
    }

    /// A→B operation on `(travel, x, y)`.
    pub fn q_inverse() -> Operator {
        let h = FRAC_1_SQRT_2;
        let mut m = Matrix::zeros(27);
        for (input, image) in Self::q_pairs() {
            for (col, amp) in image {
                m[(input, col)] = C64::new(amp, 0.0);
            }
        }
        let target = txy(ONE, VAC, ONE);
        m[(target, txy(VAC, ONE, ZERO))] = C64::new(h, 0.0);
        m[(target, txy(ONE, ONE, VAC))] = C64::new(-h, 0.0);
        Operator::trusted(m, OperatorKind::PartialIsometry)
    }

    fn targets() -> [Role; 3] {
        [Role::Travel, Role::ModeX, Role::ModeY]
    }

    fn lift(err: Error) -> Error {
        match err {
            Error::OutsideDomain(_) => Error::AttackFault {
                attack: "wojcik",
                reason: "state outside the domain of Q",
            },
            other => other,
        }
    }
}

impl AttackStrategy for WojcikAttack {
    fn name(&self) -> &'static str {
        "wojcik"
    }

    fn on_b_to_a(&self, state: StateVector, _: &mut AttackContext, _: &mut RoundRng) -> Result<StateVector> {
        let moded = state.promote_to_mode(Role::Travel)?;
        let joined = moded.tensor(&Self::fresh_modes())?;
        joined
            .apply_on(&Self::q_operator(), &Self::targets())
            .map_err(Self::lift)
    }

    fn on_a_to_b(&self, state: StateVector, _: &mut AttackContext, _: &mut RoundRng) -> Result<StateVector> {
        if !state.layout().contains(Role::ModeX) {
            return Err(Error::AttackFault {
                attack: "wojcik",
                reason: "auxiliary modes missing on the return trip",
            });
        }
        state
            .apply_on(&Self::q_inverse(), &Self::targets())
            .map_err(Self::lift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::{plus_state, round_rng, z_power};
    use alloc::vec::Vec;

    const H: f64 = FRAC_1_SQRT_2;

    fn ket(t: usize, x: usize, y: usize) -> StateVector {
        StateVector::basis(WojcikAttack::layout(), &[t, x, y]).unwrap()
    }

    fn combo(terms: &[(f64, (usize, usize, usize))]) -> StateVector {
        let mut amps = alloc::vec![C64::new(0.0, 0.0); 27];
        for &(a, (t, x, y)) in terms {
            amps[txy(t, x, y)] += C64::new(a, 0.0);
        }
        StateVector::new(WojcikAttack::layout(), amps).unwrap()
    }

    fn b_to_a_on_plus() -> StateVector {
        WojcikAttack
            .on_b_to_a(plus_state(2), &mut AttackContext::default(), &mut round_rng(0, 0))
            .unwrap()
    }

    #[test]
    fn tables_are_partial_isometries() {
        for op in [WojcikAttack::q_operator(), WojcikAttack::q_inverse()] {
            assert!(Operator::partial_isometry(op.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn q_on_false_photon() {
        let want = combo(&[
            (0.5, (ZERO, ZERO, VAC)),
            (0.5, (VAC, ZERO, ONE)),
            (0.5, (VAC, ONE, ZERO)),
            (0.5, (ONE, ONE, VAC)),
        ]);
        let got = b_to_a_on_plus();
        assert!(got.amps().iter().zip(want.amps()).all(|(a, b)| (a - b).norm() < 1e-15));
    }

    #[test]
    fn identity_branch_restores_plus() {
        let back = WojcikAttack
            .on_a_to_b(b_to_a_on_plus(), &mut AttackContext::default(), &mut round_rng(0, 0))
            .unwrap();
        let want = combo(&[(H, (ZERO, VAC, ZERO)), (H, (ONE, VAC, ZERO))]);
        assert!((back.fidelity(&want).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn phase_branch_entangles_y() {
        let flipped = b_to_a_on_plus().apply_on(&z_power(3, 1), &[Role::Travel]).unwrap();
        let back = WojcikAttack
            .on_a_to_b(flipped, &mut AttackContext::default(), &mut round_rng(0, 0))
            .unwrap();
        let want = combo(&[(H, (ZERO, VAC, ZERO)), (H, (ONE, VAC, ONE))]);
        assert!((back.fidelity(&want).unwrap() - 1.0).abs() < 1e-15);
        let rho = back.to_density().partial_trace(&[Role::Travel]).unwrap();
        assert!(rho.matrix().max_abs_diff(&Matrix::from_diagonal(&[0.0, 0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn q_is_isometric_on_generators() {
        let q = WojcikAttack::q_operator();
        let qi = WojcikAttack::q_inverse();
        let gens = [ket(ZERO, VAC, ZERO), ket(ONE, VAC, ZERO)];
        let images: Vec<StateVector> = gens
            .iter()
            .map(|g| g.apply_on(&q, &WojcikAttack::targets()).unwrap())
            .collect();
        for i in 0..2 {
            for j in 0..2 {
                let before = gens[i].inner(&gens[j]).unwrap();
                let after = images[i].inner(&images[j]).unwrap();
                assert!((before - after).norm() < 1e-12);
            }
            let round_trip = images[i].apply_on(&qi, &WojcikAttack::targets()).unwrap();
            assert!(round_trip.amps().iter().zip(gens[i].amps()).all(|(a, b)| (a - b).norm() < 1e-12));
        }
    }

    #[test]
    fn outside_domain_is_a_fault() {
        let stray = ket(VAC, VAC, VAC);
        assert!(matches!(
            stray.apply_on(&WojcikAttack::q_operator(), &WojcikAttack::targets()).map_err(WojcikAttack::lift),
            Err(Error::AttackFault { attack: "wojcik", .. })
        ));
    }
}

//! Alice's and Bob's local operations.

use core::f64::consts::FRAC_1_SQRT_2;

use rand::Rng;

use crate::quantum::{
    measure, qubit_level, Layout, Matrix, MeasurementBasis, Operator, Outcome, Role, StateVector,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoundMode {
    Control,
    Message,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhotonKind {
    /// Travel half of an EPR pair.
    True,
    /// Single photon in `|+>` disguised as a travel photon.
    False,
}

/// Alice's public control-mode announcement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Announcement {
    Bit(u8),
    /// The travel mode was found empty.
    Loss,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ControlCheck {
    /// Bob's `B_z` result on the home qubit.
    pub home: Option<u8>,
    /// True when Alice's and Bob's results are *not* anti-correlated.
    pub mismatch: Option<bool>,
    pub lost: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellDecode {
    Bit(u8),
    /// `φ±` outcome: the pair left the `ψ±` subspace.
    Tamper,
    /// The travel mode came back empty.
    Lost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DpdCheck {
    Click,
    NoClick,
    /// Alice applied `Z^0`; Bob ignores the photon.
    Discard,
}

/// `|ψ+> = (|01> + |10>)/√2` on `(home, travel)` for a true photon, or `|+>`
/// on `travel` alone for a false one.
pub fn bob_prepare(kind: PhotonKind) -> StateVector {
    let h = FRAC_1_SQRT_2;
    let built = match kind {
        PhotonKind::True => StateVector::from_real(
            Layout::of(&[(Role::Home, 2), (Role::Travel, 2)]).expect("static layout"),
            &[0.0, h, h, 0.0],
        ),
        PhotonKind::False => StateVector::from_real(Layout::qubit(Role::Travel), &[h, h]),
    };
    built.expect("prepared states are normalized")
}

/// `Z^j = |0><0| + (-1)^j |1><1|` on a subsystem of dimension `dim`; on a
/// three-level mode the vacuum is left fixed.
pub fn z_power(dim: usize, j: u8) -> Operator {
    let sign = if j == 0 { 1.0 } else { -1.0 };
    let mut diag = alloc::vec![1.0; dim];
    diag[qubit_level(dim, 1)] = sign;
    Operator::unitary(Matrix::from_diagonal(&diag)).expect("diagonal sign matrix is unitary")
}

fn travel_dim(state: &StateVector) -> Result<usize> {
    state
        .layout()
        .dim_of(Role::Travel)
        .ok_or(Error::UnknownLabel(Role::Travel))
}

/// Applies `Z^j` to the travel subsystem.
pub fn alice_encode(state: &StateVector, j: u8) -> Result<StateVector> {
    let dim = travel_dim(state)?;
    state.apply_on(&z_power(dim, j), &[Role::Travel])
}

/// Measures the travel subsystem in `B_z` and announces the result.
pub fn alice_control<R: Rng + ?Sized>(
    state: &StateVector,
    rng: &mut R,
) -> Result<(Announcement, StateVector)> {
    let dim = travel_dim(state)?;
    let m = measure(state, &MeasurementBasis::computational(Role::Travel, dim)?, rng)?;
    let ann = match m.outcome {
        Outcome::Index(k) => Announcement::Bit(k as u8),
        Outcome::Residual => Announcement::Loss,
    };
    Ok((ann, m.state))
}

/// Measures the home qubit in `B_z` and compares with Alice's announcement.
pub fn bob_control_check<R: Rng + ?Sized>(
    state: &StateVector,
    announcement: Announcement,
    rng: &mut R,
) -> Result<ControlCheck> {
    let alice = match announcement {
        Announcement::Loss => {
            return Ok(ControlCheck {
                home: None,
                mismatch: None,
                lost: true,
            })
        }
        Announcement::Bit(b) => b,
    };
    let m = measure(state, &MeasurementBasis::computational(Role::Home, 2)?, rng)?;
    let home = match m.outcome {
        Outcome::Index(k) => k as u8,
        Outcome::Residual => unreachable!("B_z is complete on a qubit"),
    };
    Ok(ControlCheck {
        home: Some(home),
        mismatch: Some(home == alice),
        lost: false,
    })
}

/// Bell measurement on `(home, travel)`: `ψ+ -> 0`, `ψ- -> 1`, `φ± -> tamper`.
pub fn bob_decode_bell<R: Rng + ?Sized>(state: &StateVector, rng: &mut R) -> Result<BellDecode> {
    let dim = travel_dim(state)?;
    let m = measure(state, &MeasurementBasis::bell(dim)?, rng)?;
    Ok(match m.outcome {
        Outcome::Index(0) => BellDecode::Bit(0),
        Outcome::Index(1) => BellDecode::Bit(1),
        Outcome::Index(_) => BellDecode::Tamper,
        Outcome::Residual => BellDecode::Lost,
    })
}

/// `|+>` on a travel subsystem of dimension `dim`.
pub fn plus_state(dim: usize) -> StateVector {
    let mut amps = alloc::vec![0.0; dim];
    amps[qubit_level(dim, 0)] = FRAC_1_SQRT_2;
    amps[qubit_level(dim, 1)] = FRAC_1_SQRT_2;
    let layout = Layout::of(&[(Role::Travel, dim)]).expect("travel dimension is 2 or 3");
    StateVector::from_real(layout, &amps).expect("|+> is normalized")
}

/// False-photon test: after `Z^1` Bob projects onto `|+>`; a click means the
/// photon was disturbed. After `Z^0` the photon is discarded.
pub fn bob_dpd_check<R: Rng + ?Sized>(
    state: &StateVector,
    alice_op: u8,
    rng: &mut R,
) -> Result<DpdCheck> {
    if alice_op == 0 {
        return Ok(DpdCheck::Discard);
    }
    let dim = travel_dim(state)?;
    let m = measure(state, &MeasurementBasis::projector(plus_state(dim))?, rng)?;
    Ok(match m.outcome {
        Outcome::Index(_) => DpdCheck::Click,
        Outcome::Residual => DpdCheck::NoClick,
    })
}

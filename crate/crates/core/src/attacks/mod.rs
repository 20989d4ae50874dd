//! Eavesdropping strategies.
//!
//! A strategy sees the joint state twice per round: once on the way from Bob
//! to Alice and once on the way back (message mode only). Hooks may append
//! Eve-owned subsystems (ancilla, auxiliary modes) to the joint state; those
//! subsystems ride along until the end of the round, so the joint state is
//! where Eve keeps her quantum memory between the two hooks.

mod cai;
mod opaque;
mod translucent;
mod wojcik;

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use cai::CaiMeasureAttack;
pub use opaque::OpaqueAttack;
pub use translucent::TranslucentAttack;
pub use wojcik::WojcikAttack;

use crate::protocol::RoundRng;
use crate::quantum::{Outcome, StateVector};
use crate::{Error, Result};

/// Eve's classical per-round memory.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AttackContext {
    guess: Option<u8>,
    ledger: Vec<usize>,
}

impl AttackContext {
    /// Eve's inferred value of Alice's operation; set at most once per round.
    pub fn set_guess(&mut self, bit: u8) -> Result<()> {
        if self.guess.is_some() {
            return Err(Error::GuessAlreadySet);
        }
        self.guess = Some(bit);
        Ok(())
    }

    pub fn guess(&self) -> Option<u8> {
        self.guess
    }

    /// Records one of Eve's measurement results (basis index; the residual
    /// outcome is recorded as the basis size).
    pub fn record(&mut self, outcome: usize) {
        self.ledger.push(outcome);
    }

    pub fn ledger(&self) -> &[usize] {
        &self.ledger
    }

    pub fn into_ledger(self) -> Vec<usize> {
        self.ledger
    }
}

pub(crate) fn outcome_index(outcome: Outcome, basis_len: usize) -> usize {
    match outcome {
        Outcome::Index(k) => k,
        Outcome::Residual => basis_len,
    }
}

/// Channel hooks of an eavesdropping strategy.
///
/// Strategies hold no per-round state; everything Eve remembers lives in the
/// [`AttackContext`] and in the subsystems she appends to the joint state.
/// Both hooks must return a normalized state and must not act on the home
/// qubit.
pub trait AttackStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Intercepts the travel photon on its way from Bob to Alice.
    fn on_b_to_a(
        &self,
        state: StateVector,
        ctx: &mut AttackContext,
        rng: &mut RoundRng,
    ) -> Result<StateVector>;

    /// Intercepts the travel photon on its way back from Alice to Bob.
    fn on_a_to_b(
        &self,
        state: StateVector,
        ctx: &mut AttackContext,
        rng: &mut RoundRng,
    ) -> Result<StateVector>;

    /// Fidelity-convention QBER `1 - <ψ''|ρ_ht|ψ''>` for this attack at
    /// encoding bias `p0`, when an exact analysis exists.
    fn fidelity_qber(&self, _p0: f64) -> Option<f64> {
        None
    }
}

/// Identity channel.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NoAttack;

impl AttackStrategy for NoAttack {
    fn name(&self) -> &'static str {
        "none"
    }

    fn on_b_to_a(&self, state: StateVector, _: &mut AttackContext, _: &mut RoundRng) -> Result<StateVector> {
        Ok(state)
    }

    fn on_a_to_b(&self, state: StateVector, _: &mut AttackContext, _: &mut RoundRng) -> Result<StateVector> {
        Ok(state)
    }
}

/// Attack selected by name: `none | opaque | translucent:D=<float> | wojcik | cai`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Attack {
    None(NoAttack),
    Opaque(OpaqueAttack),
    Translucent(TranslucentAttack),
    Wojcik(WojcikAttack),
    Cai(CaiMeasureAttack),
}

impl Attack {
    fn strategy(&self) -> &dyn AttackStrategy {
        match self {
            Attack::None(a) => a,
            Attack::Opaque(a) => a,
            Attack::Translucent(a) => a,
            Attack::Wojcik(a) => a,
            Attack::Cai(a) => a,
        }
    }
}

impl AttackStrategy for Attack {
    fn name(&self) -> &'static str {
        self.strategy().name()
    }

    fn on_b_to_a(&self, state: StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<StateVector> {
        self.strategy().on_b_to_a(state, ctx, rng)
    }

    fn on_a_to_b(&self, state: StateVector, ctx: &mut AttackContext, rng: &mut RoundRng) -> Result<StateVector> {
        self.strategy().on_a_to_b(state, ctx, rng)
    }

    fn fidelity_qber(&self, p0: f64) -> Option<f64> {
        self.strategy().fidelity_qber(p0)
    }
}

impl FromStr for Attack {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownAttack(s.to_string());
        match s {
            "none" => Ok(Attack::None(NoAttack)),
            "opaque" => Ok(Attack::Opaque(OpaqueAttack)),
            "wojcik" => Ok(Attack::Wojcik(WojcikAttack)),
            "cai" => Ok(Attack::Cai(CaiMeasureAttack)),
            _ => {
                let d = s.strip_prefix("translucent:D=").ok_or_else(unknown)?;
                let d: f64 = d.parse().map_err(|_| unknown())?;
                Ok(Attack::Translucent(TranslucentAttack::new(d)?))
            }
        }
    }
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attack::Translucent(t) => write!(f, "translucent:D={}", t.disturbance()),
            other => f.write_str(other.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn parses_every_name() {
        for name in ["none", "opaque", "translucent:D=0.2", "wojcik", "cai"] {
            let a: Attack = name.parse().unwrap();
            assert_eq!(format!("{a}"), name);
        }
        assert!(matches!("eve".parse::<Attack>(), Err(Error::UnknownAttack(_))));
        assert!(matches!("translucent".parse::<Attack>(), Err(Error::UnknownAttack(_))));
        assert!(matches!("translucent:D=x".parse::<Attack>(), Err(Error::UnknownAttack(_))));
        assert!(matches!("translucent:D=1.5".parse::<Attack>(), Err(Error::InvalidProbability(_))));
    }

    #[test]
    fn guess_is_set_once() {
        let mut ctx = AttackContext::default();
        ctx.set_guess(1).unwrap();
        assert_eq!(ctx.set_guess(0), Err(Error::GuessAlreadySet));
        assert_eq!(ctx.guess(), Some(1));
    }
}

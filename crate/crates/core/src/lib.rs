//! Simulation core for the Ping-Pong quantum key distribution protocol.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised in four layers:
//!
//! * [`quantum`]: dense complex state vectors and density operators over
//!   small composite systems (qubits and three-level photon modes), Born-rule
//!   measurement, partial trace, a Jacobi eigen-solver and the entropy /
//!   channel-capacity measures.
//! * [`protocol`]: the Alice/Bob state machine, including the disguised
//!   (false) photon variant, control-mode checks and key-sample authentication.
//! * [`attacks`]: eavesdropping strategies plugged into the two channel hooks
//!   of a round.
//! * [`analysis`]: closed-form security formulas, an exact density-matrix
//!   engine that re-derives them, and parameter sweeps.
//!
//! IO, file formats and the command-line front end live in the companion
//! `pingpong-lab` crate.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod attacks;
mod error;
pub mod protocol;
pub mod quantum;

pub use error::{Error, Result};

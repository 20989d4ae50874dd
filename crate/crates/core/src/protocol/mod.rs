//! Ping-Pong protocol state machine.
//!
//! A round runs: Bob prepares a pair (or, in the disguised variant, a single
//! `|+>` false photon) -> Eve's B→A hook -> Alice picks control or message
//! mode. In control mode Alice measures in `B_z` and announces, and Bob
//! checks anti-correlation on his home qubit; false-photon control rounds are
//! discarded. In message mode Alice applies `Z^j` -> Eve's A→B hook -> Bob
//! either Bell-decodes (true photon) or runs the `P+` test (false photon,
//! `j = 1`).

mod auth;
mod config;
mod parties;
mod rng;
mod session;

pub use auth::{authenticate, final_key, AuthReport};
pub use config::{ProtocolConfig, QberConvention};
pub use parties::{
    alice_control, alice_encode, bob_control_check, bob_decode_bell, bob_dpd_check, bob_prepare,
    plus_state, z_power, Announcement, BellDecode, ControlCheck, DpdCheck, PhotonKind, RoundMode,
};
pub use rng::{auth_rng, round_rng, RoundRng, AUTH_STREAM};
pub use session::{dpd_trial, run_round, run_session, RoundRecord, SessionStats, Tally};

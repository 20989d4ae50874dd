//! Round execution and session statistics.

use alloc::vec::Vec;

use rand::Rng;

use super::{
    alice_control, alice_encode, auth_rng, authenticate, bob_control_check, bob_decode_bell,
    bob_dpd_check, bob_prepare, round_rng, Announcement, AuthReport, BellDecode, DpdCheck,
    PhotonKind, ProtocolConfig, QberConvention, RoundMode, RoundRng,
};
use crate::attacks::{AttackContext, AttackStrategy};
use crate::quantum::{binary_capacity, StateVector, TOL};
use crate::{Error, Result};

/// Transcript of one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundRecord {
    pub index: u64,
    pub mode: RoundMode,
    pub kind: PhotonKind,
    /// Alice's operation `j` (message mode only).
    pub alice_bit: Option<u8>,
    /// Bob's Bell-decoded bit (true-photon message rounds).
    pub bob_decoded_bit: Option<u8>,
    /// Bob's Bell measurement landed in `φ±`.
    pub bob_tamper: bool,
    pub control_alice: Option<Announcement>,
    pub control_bob: Option<u8>,
    /// True when the control outcomes are not anti-correlated.
    pub control_mismatch: Option<bool>,
    pub dpd_click: Option<bool>,
    pub photon_lost: bool,
    pub discarded: bool,
    pub eve_guess: Option<u8>,
    pub eve_outcomes: Vec<usize>,
}

impl RoundRecord {
    fn new(index: u64, mode: RoundMode, kind: PhotonKind) -> Self {
        Self {
            index,
            mode,
            kind,
            alice_bit: None,
            bob_decoded_bit: None,
            bob_tamper: false,
            control_alice: None,
            control_bob: None,
            control_mismatch: None,
            dpd_click: None,
            photon_lost: false,
            discarded: false,
            eve_guess: None,
            eve_outcomes: Vec::new(),
        }
    }

    /// True-photon message round where both Alice and Bob hold a bit.
    pub fn key_bits(&self) -> Option<(u8, u8)> {
        match (self.kind, self.mode, self.alice_bit, self.bob_decoded_bit) {
            (PhotonKind::True, RoundMode::Message, Some(a), Some(b)) if !self.discarded => Some((a, b)),
            _ => None,
        }
    }
}

/// Per-category round counts. Merging is associative and commutative.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub rounds: u64,
    pub discarded: u64,
    /// Non-discarded rounds where a photon was expected but vacuum was found.
    pub lost: u64,
    /// Checked control rounds (true photon, not lost).
    pub control: u64,
    pub control_mismatches: u64,
    pub message: u64,
    pub message_false: u64,
    pub message_lost: u64,
    /// Rounds contributing to the Bell-decode QBER.
    pub qber_rounds: u64,
    pub qber_errors: u64,
    pub tamper: u64,
    pub dpd_tests: u64,
    pub dpd_clicks: u64,
    /// Message rounds where Eve committed to a guess.
    pub guesses: u64,
    pub correct_guesses: u64,
}

impl Tally {
    pub fn of(record: &RoundRecord) -> Self {
        let mut t = Tally {
            rounds: 1,
            ..Tally::default()
        };
        if record.discarded {
            t.discarded = 1;
        } else if record.photon_lost {
            t.lost = 1;
        }
        match record.mode {
            RoundMode::Control => {
                if let Some(m) = record.control_mismatch {
                    t.control = 1;
                    t.control_mismatches = m as u64;
                }
            }
            RoundMode::Message => {
                t.message = 1;
                match record.kind {
                    PhotonKind::False => {
                        t.message_false = 1;
                        if let Some(click) = record.dpd_click {
                            t.dpd_tests = 1;
                            t.dpd_clicks = click as u64;
                        }
                    }
                    PhotonKind::True if record.photon_lost => t.message_lost = 1,
                    PhotonKind::True => {
                        t.qber_rounds = 1;
                        t.tamper = record.bob_tamper as u64;
                        let wrong = record.bob_tamper || record.bob_decoded_bit != record.alice_bit;
                        t.qber_errors = wrong as u64;
                    }
                }
                if let (Some(g), Some(a)) = (record.eve_guess, record.alice_bit) {
                    t.guesses = 1;
                    t.correct_guesses = (g == a) as u64;
                }
            }
        }
        t
    }

    pub fn merge(self, o: Tally) -> Tally {
        Tally {
            rounds: self.rounds + o.rounds,
            discarded: self.discarded + o.discarded,
            lost: self.lost + o.lost,
            control: self.control + o.control,
            control_mismatches: self.control_mismatches + o.control_mismatches,
            message: self.message + o.message,
            message_false: self.message_false + o.message_false,
            message_lost: self.message_lost + o.message_lost,
            qber_rounds: self.qber_rounds + o.qber_rounds,
            qber_errors: self.qber_errors + o.qber_errors,
            tamper: self.tamper + o.tamper,
            dpd_tests: self.dpd_tests + o.dpd_tests,
            dpd_clicks: self.dpd_clicks + o.dpd_clicks,
            guesses: self.guesses + o.guesses,
            correct_guesses: self.correct_guesses + o.correct_guesses,
        }
    }
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

/// Aggregated session figures; rates are `None` when nothing was measured.
#[derive(Debug, Clone, PartialEq)]
pub struct SessionStats {
    pub tally: Tally,
    /// Operational error rate of Bob's Bell decode.
    pub qber_bell: Option<f64>,
    /// Fidelity-convention QBER from the attack's exact analysis.
    pub qber_fidelity: Option<f64>,
    pub i_ab: Option<f64>,
    /// Convention that actually fed `i_ab` (falls back to Bell decode when
    /// the attack has no fidelity analysis).
    pub i_ab_convention: QberConvention,
    pub control_detection_rate: Option<f64>,
    pub dpd_click_rate: Option<f64>,
    pub auth: Option<AuthReport>,
    pub auth_mismatch: Option<f64>,
    /// Raw key length before authentication.
    pub raw_key_length: usize,
    /// Key length after the disclosed sample is removed.
    pub key_length: usize,
    pub eve_accuracy: Option<f64>,
    pub loss_rate: f64,
}

impl SessionStats {
    /// Aggregates records given in round order.
    pub fn from_records<A: AttackStrategy + ?Sized>(
        config: &ProtocolConfig,
        attack: &A,
        records: &[RoundRecord],
    ) -> Result<Self> {
        let tally = records.iter().map(Tally::of).fold(Tally::default(), Tally::merge);
        let (alice, bob): (Vec<u8>, Vec<u8>) = records.iter().filter_map(RoundRecord::key_bits).unzip();
        let auth = if alice.is_empty() {
            None
        } else {
            Some(authenticate(&alice, &bob, config.sample_fraction, &mut auth_rng(config.master_seed))?)
        };

        let qber_bell = ratio(tally.qber_errors, tally.qber_rounds);
        let qber_fidelity = attack.fidelity_qber(config.p0);
        let (i_ab_convention, q) = match (config.qber_convention, qber_fidelity) {
            (QberConvention::Fidelity, Some(q)) => (QberConvention::Fidelity, Some(q)),
            _ => (QberConvention::BellDecode, qber_bell),
        };
        let i_ab = q.map(binary_capacity).transpose()?;

        Ok(SessionStats {
            tally,
            qber_bell,
            qber_fidelity,
            i_ab,
            i_ab_convention,
            control_detection_rate: ratio(tally.control_mismatches, tally.control),
            dpd_click_rate: ratio(tally.dpd_clicks, tally.dpd_tests),
            auth_mismatch: auth.as_ref().map(|a| a.mismatch_rate),
            raw_key_length: alice.len(),
            key_length: auth.as_ref().map_or(0, |a| alice.len() - a.sampled.len()),
            auth,
            eve_accuracy: ratio(tally.correct_guesses, tally.guesses),
            loss_rate: tally.lost as f64 / tally.rounds.max(1) as f64,
        })
    }
}

fn check_hook<A: AttackStrategy + ?Sized>(attack: &A, state: &StateVector) -> Result<()> {
    if (state.norm() - 1.0).abs() > TOL {
        return Err(Error::AttackFault {
            attack: attack.name(),
            reason: "hook returned a non-normalized state",
        });
    }
    Ok(())
}

fn coin(rng: &mut RoundRng, p: f64) -> bool {
    rng.gen::<f64>() < p
}

/// Runs round `index` with its own random stream.
pub fn run_round<A: AttackStrategy + ?Sized>(
    config: &ProtocolConfig,
    attack: &A,
    index: u64,
) -> Result<RoundRecord> {
    let mut rng = round_rng(config.master_seed, index);
    let mut ctx = AttackContext::default();

    let kind = if coin(&mut rng, config.false_prob) {
        PhotonKind::False
    } else {
        PhotonKind::True
    };
    let state = attack.on_b_to_a(bob_prepare(kind), &mut ctx, &mut rng)?;
    check_hook(attack, &state)?;

    let mode = if coin(&mut rng, config.control_prob) {
        RoundMode::Control
    } else {
        RoundMode::Message
    };
    let mut rec = RoundRecord::new(index, mode, kind);

    match mode {
        RoundMode::Control => {
            let (ann, post) = alice_control(&state, &mut rng)?;
            rec.control_alice = Some(ann);
            if kind == PhotonKind::False {
                rec.discarded = true;
            } else {
                let check = bob_control_check(&post, ann, &mut rng)?;
                rec.control_bob = check.home;
                rec.control_mismatch = check.mismatch;
                rec.photon_lost = check.lost;
            }
        }
        RoundMode::Message => {
            let j = if coin(&mut rng, config.p0) { 0 } else { 1 };
            rec.alice_bit = Some(j);
            let encoded = alice_encode(&state, j)?;
            let back = attack.on_a_to_b(encoded, &mut ctx, &mut rng)?;
            check_hook(attack, &back)?;
            match kind {
                PhotonKind::True => match bob_decode_bell(&back, &mut rng)? {
                    BellDecode::Bit(b) => rec.bob_decoded_bit = Some(b),
                    BellDecode::Tamper => rec.bob_tamper = true,
                    BellDecode::Lost => rec.photon_lost = true,
                },
                PhotonKind::False => match bob_dpd_check(&back, j, &mut rng)? {
                    DpdCheck::Discard => rec.discarded = true,
                    DpdCheck::Click => rec.dpd_click = Some(true),
                    DpdCheck::NoClick => rec.dpd_click = Some(false),
                },
            }
        }
    }

    rec.eve_guess = ctx.guess();
    rec.eve_outcomes = ctx.into_ledger();
    Ok(rec)
}

/// Runs `config.rounds` rounds in order and aggregates them.
pub fn run_session<A: AttackStrategy + ?Sized>(
    config: &ProtocolConfig,
    attack: &A,
) -> Result<(SessionStats, Vec<RoundRecord>)> {
    config.validate()?;
    let records = (0..config.rounds)
        .map(|i| run_round(config, attack, i))
        .collect::<Result<Vec<_>>>()?;
    let stats = SessionStats::from_records(config, attack, &records)?;
    Ok((stats, records))
}

/// One false-photon message round with `Z^1` forced: B→A hook, encoding,
/// A→B hook, `P+` test.
pub fn dpd_trial<A: AttackStrategy + ?Sized>(attack: &A, seed: u64, index: u64) -> Result<DpdCheck> {
    let mut rng = round_rng(seed, index);
    let mut ctx = AttackContext::default();
    let state = attack.on_b_to_a(bob_prepare(PhotonKind::False), &mut ctx, &mut rng)?;
    check_hook(attack, &state)?;
    let back = attack.on_a_to_b(alice_encode(&state, 1)?, &mut ctx, &mut rng)?;
    check_hook(attack, &back)?;
    bob_dpd_check(&back, 1, &mut rng)
}

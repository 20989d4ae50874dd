use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Which QBER statistic feeds the Alice–Bob information estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QberConvention {
    /// Operational rate of Bell decodes that differ from Alice's bit.
    BellDecode,
    /// `1 - <ψ''|ρ_ht|ψ''>` from the exact engine; only defined for the
    /// opaque and translucent attacks.
    #[default]
    Fidelity,
}

impl FromStr for QberConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bell-decode" | "bell" => Ok(Self::BellDecode),
            "fidelity" => Ok(Self::Fidelity),
            _ => Err(Error::InvalidConfig("qber convention must be bell-decode or fidelity")),
        }
    }
}

impl fmt::Display for QberConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::BellDecode => "bell-decode",
            Self::Fidelity => "fidelity",
        })
    }
}

/// Parameters of a simulated session.
#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolConfig {
    /// Probability that Alice encodes bit 0 (applies `Z^0`).
    pub p0: f64,
    /// Probability that Alice picks control mode.
    pub control_prob: f64,
    /// Probability that Bob sends a false photon; 0 gives the original protocol.
    pub false_prob: f64,
    pub rounds: u64,
    pub master_seed: u64,
    pub qber_convention: QberConvention,
    /// Fraction of the raw key disclosed for authentication, in `(0, 1]`.
    pub sample_fraction: f64,
}

impl Default for ProtocolConfig {
    fn default() -> Self {
        Self {
            p0: 0.5,
            control_prob: 0.5,
            false_prob: 0.25,
            rounds: 10_000,
            master_seed: 0,
            qber_convention: QberConvention::default(),
            sample_fraction: 0.5,
        }
    }
}

impl ProtocolConfig {
    pub fn validate(&self) -> Result<()> {
        let prob = |x: f64| (0.0..=1.0).contains(&x);
        if !prob(self.p0) {
            return Err(Error::InvalidConfig("p0 must lie in [0, 1]"));
        }
        if !prob(self.control_prob) {
            return Err(Error::InvalidConfig("control probability must lie in [0, 1]"));
        }
        if !prob(self.false_prob) {
            return Err(Error::InvalidConfig("false-photon probability must lie in [0, 1]"));
        }
        if self.rounds == 0 {
            return Err(Error::InvalidConfig("rounds must be at least 1"));
        }
        if !(self.sample_fraction > 0.0 && self.sample_fraction <= 1.0) {
            return Err(Error::InvalidConfig("sample fraction must lie in (0, 1]"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        ProtocolConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_range() {
        let bad = [
            ProtocolConfig { p0: 1.2, ..Default::default() },
            ProtocolConfig { control_prob: -0.1, ..Default::default() },
            ProtocolConfig { false_prob: f64::NAN, ..Default::default() },
            ProtocolConfig { rounds: 0, ..Default::default() },
            ProtocolConfig { sample_fraction: 0.0, ..Default::default() },
        ];
        for c in bad {
            assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))), "{c:?}");
        }
    }

    #[test]
    fn convention_parses() {
        assert_eq!("fidelity".parse::<QberConvention>().unwrap(), QberConvention::Fidelity);
        assert_eq!("bell-decode".parse::<QberConvention>().unwrap(), QberConvention::BellDecode);
        assert!("other".parse::<QberConvention>().is_err());
    }
}

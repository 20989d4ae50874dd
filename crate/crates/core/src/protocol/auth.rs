use alloc::vec::Vec;

use rand::Rng;

use crate::{Error, Result};

/// Outcome of the classical key-sample comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct AuthReport {
    /// Fraction of sampled positions where Alice and Bob disagree.
    pub mismatch_rate: f64,
    /// Disclosed positions, ascending; they are dropped from the final key.
    pub sampled: Vec<usize>,
}

/// Compares `⌈fraction · len⌉` positions drawn without replacement.
pub fn authenticate<R: Rng + ?Sized>(
    alice: &[u8],
    bob: &[u8],
    sample_fraction: f64,
    rng: &mut R,
) -> Result<AuthReport> {
    if alice.len() != bob.len() {
        return Err(Error::KeyLengthMismatch(alice.len(), bob.len()));
    }
    if alice.is_empty() {
        return Err(Error::EmptyKey);
    }
    if !(sample_fraction > 0.0 && sample_fraction <= 1.0) {
        return Err(Error::InvalidConfig("sample fraction must lie in (0, 1]"));
    }
    let n = alice.len();
    let amount = (libm::ceil(sample_fraction * n as f64) as usize).clamp(1, n);
    let mut sampled = rand::seq::index::sample(rng, n, amount).into_vec();
    sampled.sort_unstable();
    let mismatches = sampled.iter().filter(|&&i| alice[i] != bob[i]).count();
    Ok(AuthReport {
        mismatch_rate: mismatches as f64 / amount as f64,
        sampled,
    })
}

/// Key bits left after removing the disclosed positions.
pub fn final_key(bits: &[u8], sampled: &[usize]) -> Vec<u8> {
    bits.iter()
        .enumerate()
        .filter(|(i, _)| sampled.binary_search(i).is_err())
        .map(|(_, &b)| b)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::round_rng;
    use alloc::vec;

    #[test]
    fn identical_and_complementary() {
        let a = vec![0, 1, 1, 0, 1, 0, 0, 1];
        let b: Vec<u8> = a.iter().map(|x| 1 - x).collect();
        let mut rng = round_rng(1, 0);
        assert_eq!(authenticate(&a, &a, 0.5, &mut rng).unwrap().mismatch_rate, 0.0);
        assert_eq!(authenticate(&a, &b, 0.5, &mut rng).unwrap().mismatch_rate, 1.0);
    }

    #[test]
    fn samples_ceiling_without_replacement() {
        let a = vec![0u8; 10];
        let r = authenticate(&a, &a, 0.25, &mut round_rng(2, 0)).unwrap();
        assert_eq!(r.sampled.len(), 3);
        assert!(r.sampled.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(final_key(&a, &r.sampled).len(), 7);
        let all = authenticate(&a, &a, 1.0, &mut round_rng(2, 0)).unwrap();
        assert_eq!(all.sampled, (0..10).collect::<Vec<_>>());
        assert!(final_key(&a, &all.sampled).is_empty());
    }

    #[test]
    fn errors() {
        let mut rng = round_rng(0, 0);
        assert_eq!(authenticate(&[], &[], 0.5, &mut rng), Err(Error::EmptyKey));
        assert_eq!(
            authenticate(&[0], &[0, 1], 0.5, &mut rng),
            Err(Error::KeyLengthMismatch(1, 2))
        );
        assert!(authenticate(&[0], &[0], 0.0, &mut rng).is_err());
    }
}

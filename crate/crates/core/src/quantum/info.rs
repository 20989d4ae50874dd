use super::{DensityOperator, PSD_TOL};
use crate::{Error, Result};

/// `-x log2 x` with `0 log2 0 = 0`.
fn surprisal(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        -x * libm::log2(x)
    }
}

/// Shannon entropy (bits) of a spectrum; entries in `[-PSD_TOL, 0)` count as 0.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> Result<f64> {
    let mut h = 0.0;
    for &l in eigenvalues {
        if l < -PSD_TOL {
            return Err(Error::NotPositive(l));
        }
        h += surprisal(l.max(0.0));
    }
    Ok(h)
}

/// `S(ρ) = -Σ λ log2 λ`, in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> Result<f64> {
    spectrum_entropy(&rho.eigenvalues()?)
}

/// Capacity of a binary symmetric channel with crossover `q`:
/// `1 + q log2 q + (1-q) log2 (1-q)`.
///
/// The two terms are summed smaller-argument first so that `q` and `1 - q`
/// give bit-identical results whenever `1 - q` is exact.
pub fn binary_capacity(q: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidProbability(q));
    }
    let other = 1.0 - q;
    let (lo, hi) = if q <= other { (q, other) } else { (other, q) };
    Ok(1.0 - (surprisal(lo) + surprisal(hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity_fixed_points() {
        assert_eq!(binary_capacity(0.5).unwrap(), 0.0);
        assert_eq!(binary_capacity(0.0).unwrap(), 1.0);
        assert_eq!(binary_capacity(1.0).unwrap(), 1.0);
        assert!(binary_capacity(1.5).is_err());
        assert!(binary_capacity(-0.1).is_err());
        assert!(binary_capacity(f64::NAN).is_err());
    }

    #[test]
    fn capacity_at_quarter() {
        // mpmath, 30 digits: 0.188721875540867...
        let c = binary_capacity(0.25).unwrap();
        assert!((c - 0.188_721_875_540_867_1).abs() < 1e-15, "{c}");
    }

    #[test]
    fn entropy_clamps_jitter() {
        assert_eq!(spectrum_entropy(&[1.0, -1e-12]).unwrap(), 0.0);
        assert!(spectrum_entropy(&[1.0, -1e-6]).is_err());
        assert_eq!(spectrum_entropy(&[0.5, 0.5]).unwrap(), 1.0);
    }
}

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::layout::Split;
use super::{c, norm_sqr, qubit_level, Layout, Role, StateVector, C64, TOL, ZERO};
use crate::{Error, Result};

/// Result label of a projective measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Projection onto the basis vector with this index.
    Index(usize),
    /// Projection onto the orthogonal complement of an incomplete basis.
    Residual,
}

/// Orthonormal set of vectors on a group of subsystems. When the set does not
/// span the space, the orthogonal complement is an extra [`Outcome::Residual`].
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementBasis {
    layout: Layout,
    vectors: Vec<Vec<C64>>,
}

/// One outcome of a measurement with its exact Born weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub outcome: Outcome,
    pub probability: f64,
    /// Post-measurement state, absent when the probability is zero.
    pub state: Option<StateVector>,
}

/// Sampled measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Measured {
    pub outcome: Outcome,
    pub probability: f64,
    pub state: StateVector,
}

impl MeasurementBasis {
    pub fn new(layout: Layout, vectors: Vec<StateVector>) -> Result<Self> {
        let mut raw = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.layout() != &layout {
                return Err(Error::LayoutMismatch);
            }
            raw.push(v.amps().to_vec());
        }
        if raw.is_empty() || raw.len() > layout.dim() {
            return Err(Error::DimensionMismatch {
                expected: layout.dim(),
                found: raw.len(),
            });
        }
        let mut defect = 0.0f64;
        for (i, a) in raw.iter().enumerate() {
            for (j, b) in raw.iter().enumerate() {
                let ip: C64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((ip - want).norm());
            }
        }
        if defect > TOL {
            return Err(Error::NotOrthonormal(defect));
        }
        Ok(Self {
            layout,
            vectors: raw,
        })
    }

    /// `B_z = {|0>, |1>}` on one subsystem; on a three-level mode the vacuum
    /// is the residual outcome.
    pub fn computational(role: Role, dim: usize) -> Result<Self> {
        let layout = Layout::of(&[(role, dim)])?;
        let vectors = (0..2)
            .map(|b| StateVector::basis(layout.clone(), &[qubit_level(dim, b)]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(layout, vectors)
    }

    /// Bell basis on `(home, travel)`, ordered `ψ+, ψ-, φ+, φ-` with
    /// `ψ± = (|01> ± |10>)/√2` and `φ± = (|00> ± |11>)/√2`. A three-level
    /// travel mode leaves its vacuum in the residual outcome.
    pub fn bell(travel_dim: usize) -> Result<Self> {
        let layout = Layout::of(&[(Role::Home, 2), (Role::Travel, travel_dim)])?;
        let idx = |h: usize, t: usize| h * travel_dim + qubit_level(travel_dim, t);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let pair = |a: (usize, usize), b: (usize, usize), sign: f64| {
            let mut amps = vec![ZERO; layout.dim()];
            amps[idx(a.0, a.1)] = c(h);
            amps[idx(b.0, b.1)] = c(sign * h);
            StateVector::new(layout.clone(), amps)
        };
        let vectors = vec![
            pair((0, 1), (1, 0), 1.0)?,
            pair((0, 1), (1, 0), -1.0)?,
            pair((0, 0), (1, 1), 1.0)?,
            pair((0, 0), (1, 1), -1.0)?,
        ];
        Self::new(layout, vectors)
    }

    /// Two-outcome measurement `{|v><v|, I - |v><v|}`.
    pub fn projector(v: StateVector) -> Result<Self> {
        let layout = v.layout().clone();
        Self::new(layout, vec![v])
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.vectors.len() == self.layout.dim()
    }

    pub fn vector(&self, i: usize) -> Option<StateVector> {
        self.vectors
            .get(i)
            .map(|v| StateVector::new(self.layout.clone(), v.clone()).expect("validated basis vector"))
    }

    fn targets(&self) -> Vec<Role> {
        self.layout.roles().collect()
    }

    fn check_state(&self, state: &StateVector) -> Result<Split> {
        for p in self.layout.parts() {
            match state.layout().dim_of(p.role) {
                None => return Err(Error::UnknownLabel(p.role)),
                Some(d) if d != p.dim => {
                    return Err(Error::DimensionMismatch {
                        expected: p.dim,
                        found: d,
                    })
                }
                Some(_) => {}
            }
        }
        state.layout().split(&self.targets())
    }

    /// Unnormalized rest-space amplitudes `c_k[r] = Σ_t conj(v_k[t]) ψ[t, r]`
    /// and the unnormalized residual.
    fn project(&self, split: &Split, amps: &[C64]) -> (Vec<Vec<C64>>, Option<Vec<C64>>) {
        let rd = split.rest_dim;
        let coeffs: Vec<Vec<C64>> = self
            .vectors
            .iter()
            .map(|v| {
                (0..rd)
                    .map(|r| {
                        v.iter()
                            .enumerate()
                            .map(|(t, vt)| vt.conj() * amps[split.full[t * rd + r]])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let residual = (!self.is_complete()).then(|| {
            let mut res = amps.to_vec();
            for (v, ck) in self.vectors.iter().zip(&coeffs) {
                for (t, vt) in v.iter().enumerate() {
                    for (r, cr) in ck.iter().enumerate() {
                        res[split.full[t * rd + r]] -= vt * cr;
                    }
                }
            }
            res
        });
        (coeffs, residual)
    }

    fn assemble(&self, split: &Split, k: usize, ck: &[C64], len: usize) -> Vec<C64> {
        let rd = split.rest_dim;
        let mut out = vec![ZERO; len];
        for (t, vt) in self.vectors[k].iter().enumerate() {
            for (r, cr) in ck.iter().enumerate() {
                out[split.full[t * rd + r]] = vt * cr;
            }
        }
        out
    }

    /// Every outcome with its exact Born weight and post-measurement state.
    pub fn branches(&self, state: &StateVector) -> Result<Vec<Branch>> {
        let split = self.check_state(state)?;
        let (coeffs, residual) = self.project(&split, state.amps());
        let mut out = Vec::with_capacity(coeffs.len() + 1);
        for (k, ck) in coeffs.iter().enumerate() {
            let probability = norm_sqr(ck);
            let post = if probability > 0.0 {
                let amps = self.assemble(&split, k, ck, state.dim());
                Some(StateVector::normalized(state.layout().clone(), amps)?)
            } else {
                None
            };
            out.push(Branch {
                outcome: Outcome::Index(k),
                probability: probability.min(1.0),
                state: post,
            });
        }
        if let Some(res) = residual {
            let probability = norm_sqr(&res);
            let post = if probability > 0.0 {
                Some(StateVector::normalized(state.layout().clone(), res)?)
            } else {
                None
            };
            out.push(Branch {
                outcome: Outcome::Residual,
                probability: probability.min(1.0),
                state: post,
            });
        }
        Ok(out)
    }
}

/// Samples one outcome by the Born rule and returns the renormalized post state.
pub fn measure<R: Rng + ?Sized>(
    state: &StateVector,
    basis: &MeasurementBasis,
    rng: &mut R,
) -> Result<Measured> {
    let split = basis.check_state(state)?;
    let (coeffs, residual) = basis.project(&split, state.amps());
    let mut probs: Vec<f64> = coeffs.iter().map(|ck| norm_sqr(ck)).collect();
    if let Some(res) = &residual {
        probs.push(norm_sqr(res));
    }

    let u: f64 = rng.gen();
    let total: f64 = probs.iter().sum();
    let mut acc = 0.0;
    let mut chosen = None;
    for (k, &p) in probs.iter().enumerate() {
        acc += p / total;
        if u < acc {
            chosen = Some(k);
            break;
        }
    }
    // rounding can leave u just above the final partial sum
    let k = chosen
        .or_else(|| probs.iter().rposition(|&p| p > 0.0))
        .ok_or(Error::ZeroNorm)?;
    let probability = probs[k];
    if probability <= 0.0 {
        return Err(Error::ZeroProbabilityBranch);
    }

    let (outcome, amps) = if k < coeffs.len() {
        (Outcome::Index(k), basis.assemble(&split, k, &coeffs[k], state.dim()))
    } else {
        (Outcome::Residual, residual.unwrap_or_default())
    };
    Ok(Measured {
        outcome,
        probability: probability.min(1.0),
        state: StateVector::normalized(state.layout().clone(), amps)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_1_SQRT_2 as H;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ht() -> Layout {
        Layout::of(&[(Role::Home, 2), (Role::Travel, 2)]).unwrap()
    }

    #[test]
    fn bell_pair_in_bz_is_anticorrelated() {
        let psi = StateVector::from_real(ht(), &[0.0, H, H, 0.0]).unwrap();
        let bz = MeasurementBasis::computational(Role::Travel, 2).unwrap();
        let branches = bz.branches(&psi).unwrap();
        assert_eq!(branches.len(), 2);
        for (b, home) in branches.iter().zip([1usize, 0]) {
            assert!((b.probability - 0.5).abs() < 1e-15);
            let post = b.state.as_ref().unwrap();
            let bit = if let Outcome::Index(k) = b.outcome { k } else { unreachable!() };
            let expect = StateVector::basis(ht(), &[home, bit]).unwrap();
            assert!((post.fidelity(&expect).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn minus_never_clicks_plus_projector() {
        let l = Layout::qubit(Role::Travel);
        let plus = StateVector::from_real(l.clone(), &[H, H]).unwrap();
        let minus = StateVector::from_real(l, &[H, -H]).unwrap();
        let p = MeasurementBasis::projector(plus).unwrap();
        let br = p.branches(&minus).unwrap();
        assert_eq!(br[0].probability, 0.0);
        assert!(br[0].state.is_none());
        assert!((br[1].probability - 1.0).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert_eq!(measure(&minus, &p, &mut rng).unwrap().outcome, Outcome::Residual);
        }
    }

    #[test]
    fn ket_10_in_bell_basis() {
        // |10> = (ψ+ - ψ-)/√2
        let s = StateVector::basis(ht(), &[1, 0]).unwrap();
        let probs: Vec<f64> = MeasurementBasis::bell(2)
            .unwrap()
            .branches(&s)
            .unwrap()
            .iter()
            .map(|b| b.probability)
            .collect();
        for (p, want) in probs.iter().zip([0.5, 0.5, 0.0, 0.0]) {
            assert!((p - want).abs() < 1e-15);
        }
    }

    #[test]
    fn vacuum_is_residual_on_modes() {
        let l = Layout::mode(Role::Travel);
        let s = StateVector::from_real(l, &[H, 0.5, 0.5]).unwrap();
        let br = MeasurementBasis::computational(Role::Travel, 3)
            .unwrap()
            .branches(&s)
            .unwrap();
        assert_eq!(br.len(), 3);
        assert_eq!(br[2].outcome, Outcome::Residual);
        assert!((br[2].probability - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_orthonormal_and_foreign_targets() {
        let l = Layout::qubit(Role::Travel);
        let a = StateVector::basis(l.clone(), &[0]).unwrap();
        let b = StateVector::from_real(l, &[H, H]).unwrap();
        assert!(matches!(
            MeasurementBasis::new(a.layout().clone(), vec![a.clone(), b]),
            Err(Error::NotOrthonormal(_))
        ));
        let bz = MeasurementBasis::computational(Role::Ancilla, 2).unwrap();
        assert_eq!(bz.branches(&a).err(), Some(Error::UnknownLabel(Role::Ancilla)));
    }
}

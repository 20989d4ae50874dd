use alloc::vec;
use alloc::vec::Vec;

use super::layout::Split;
use super::{norm_sqr, DensityOperator, Layout, Operator, OperatorKind, Role, C64, TOL, ZERO};
use crate::{Error, Result};

/// Normalized pure state of a composite system.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    layout: Layout,
    amps: Vec<C64>,
}

impl StateVector {
    /// Builds a state, requiring unit norm within [`TOL`].
    pub fn new(layout: Layout, amps: Vec<C64>) -> Result<Self> {
        check_amps(&layout, &amps)?;
        let norm = libm::sqrt(norm_sqr(&amps));
        if (norm - 1.0).abs() > TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { layout, amps })
    }

    /// Builds a state from real amplitudes, requiring unit norm.
    pub fn from_real(layout: Layout, amps: &[f64]) -> Result<Self> {
        Self::new(layout, amps.iter().map(|&a| C64::new(a, 0.0)).collect())
    }

    /// Builds a state by rescaling `amps` to unit norm.
    pub fn normalized(layout: Layout, mut amps: Vec<C64>) -> Result<Self> {
        check_amps(&layout, &amps)?;
        let norm = libm::sqrt(norm_sqr(&amps));
        if norm == 0.0 {
            return Err(Error::ZeroNorm);
        }
        for a in &mut amps {
            *a /= norm;
        }
        Ok(Self { layout, amps })
    }

    /// Computational basis state with the given per-subsystem levels.
    pub fn basis(layout: Layout, levels: &[usize]) -> Result<Self> {
        if levels.len() != layout.parts().len() {
            return Err(Error::DimensionMismatch {
                expected: layout.parts().len(),
                found: levels.len(),
            });
        }
        for (p, &l) in layout.parts().iter().zip(levels) {
            if l >= p.dim {
                return Err(Error::DimensionMismatch {
                    expected: p.dim,
                    found: l + 1,
                });
            }
        }
        let mut amps = vec![ZERO; layout.dim()];
        amps[layout.index_of(levels)] = C64::new(1.0, 0.0);
        Ok(Self { layout, amps })
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(norm_sqr(&self.amps))
    }

    /// `self ⊗ other`; labels must be disjoint.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let layout = self.layout.concat(&other.layout)?;
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(StateVector { layout, amps })
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch);
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|<self|other>|²`.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        self.inner(other).map(|z| z.norm_sqr())
    }

    pub fn to_density(&self) -> DensityOperator {
        DensityOperator::from_pure(self)
    }

    /// Applies `op` to `targets` (in the given order) and the identity elsewhere.
    pub fn apply_on(&self, op: &Operator, targets: &[Role]) -> Result<StateVector> {
        let split = self.layout.split(targets)?;
        if op.dim() != split.target_dim {
            return Err(Error::DimensionMismatch {
                expected: split.target_dim,
                found: op.dim(),
            });
        }
        let out = apply_split(op, &split, &self.amps);
        match op.kind() {
            OperatorKind::Unitary => Ok(StateVector {
                layout: self.layout.clone(),
                amps: out,
            }),
            OperatorKind::PartialIsometry => {
                let kept = norm_sqr(&out);
                if (kept - 1.0).abs() > TOL {
                    return Err(Error::OutsideDomain(1.0 - kept));
                }
                Ok(StateVector {
                    layout: self.layout.clone(),
                    amps: out,
                })
            }
            OperatorKind::Linear => StateVector::normalized(self.layout.clone(), out),
        }
    }

    /// Re-embeds a qubit subsystem as a three-level photon mode, mapping
    /// `|0>, |1>` onto the occupied levels and leaving the vacuum empty.
    pub fn promote_to_mode(&self, role: Role) -> Result<StateVector> {
        match self.layout.dim_of(role) {
            None => return Err(Error::UnknownLabel(role)),
            Some(3) => return Ok(self.clone()),
            Some(_) => {}
        }
        let pos = self.layout.position(role).unwrap_or_default();
        let layout = self.layout.with_dim(role, 3)?;
        let mut amps = vec![ZERO; layout.dim()];
        let mut digits = vec![0; layout.parts().len()];
        for (i, a) in self.amps.iter().enumerate() {
            self.layout.digits(i, &mut digits);
            digits[pos] += 1;
            amps[layout.index_of(&digits)] = *a;
        }
        Ok(StateVector { layout, amps })
    }
}

fn check_amps(layout: &Layout, amps: &[C64]) -> Result<()> {
    if amps.len() != layout.dim() {
        return Err(Error::DimensionMismatch {
            expected: layout.dim(),
            found: amps.len(),
        });
    }
    if amps.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

pub(crate) fn apply_split(op: &Operator, split: &Split, amps: &[C64]) -> Vec<C64> {
    let m = op.matrix();
    let mut out = vec![ZERO; amps.len()];
    for (full, &(t, r)) in split.pairs.iter().enumerate() {
        let a = amps[full];
        if a == ZERO {
            continue;
        }
        // column t of the operator spreads a over target rows
        for row in 0..split.target_dim {
            let mt = m[(row, t)];
            if mt != ZERO {
                out[split.full[row * split.rest_dim + r]] += mt * a;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::Matrix;
    use core::f64::consts::FRAC_1_SQRT_2 as H;

    fn z_gate() -> Operator {
        Operator::unitary(Matrix::from_diagonal(&[1.0, -1.0])).unwrap()
    }

    #[test]
    fn tensor_of_basis_states() {
        let a = StateVector::basis(Layout::qubit(Role::Home), &[0]).unwrap();
        let b = StateVector::basis(Layout::qubit(Role::Travel), &[1]).unwrap();
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab.dim(), 4);
        assert_eq!(ab.amps()[1], C64::new(1.0, 0.0));
        assert!((ab.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn tensor_of_superposition() {
        let a = StateVector::from_real(Layout::qubit(Role::Home), &[H, H]).unwrap();
        let b = StateVector::basis(Layout::qubit(Role::Travel), &[0]).unwrap();
        let amps: Vec<f64> = a.tensor(&b).unwrap().amps().iter().map(|z| z.re).collect();
        assert_eq!(amps, [H, 0.0, H, 0.0]);
    }

    #[test]
    fn tensor_rejects_label_collision() {
        let a = StateVector::basis(Layout::qubit(Role::Home), &[0]).unwrap();
        assert_eq!(a.tensor(&a), Err(Error::DuplicateLabel(Role::Home)));
    }

    #[test]
    fn bell_pair_from_basis_products() {
        let l = Layout::of(&[(Role::Home, 2), (Role::Travel, 2)]).unwrap();
        let psi_plus = StateVector::from_real(l.clone(), &[0.0, H, H, 0.0]).unwrap();
        let k01 = StateVector::basis(l.clone(), &[0, 1]).unwrap();
        let k10 = StateVector::basis(l, &[1, 0]).unwrap();
        let sum: Vec<C64> = k01
            .amps()
            .iter()
            .zip(k10.amps())
            .map(|(a, b)| (a + b) * H)
            .collect();
        assert_eq!(sum, psi_plus.amps());
    }

    #[test]
    fn z_on_travel_is_an_involution() {
        let l = Layout::of(&[(Role::Home, 2), (Role::Travel, 2)]).unwrap();
        let psi = StateVector::from_real(l, &[0.0, H, H, 0.0]).unwrap();
        let once = psi.apply_on(&z_gate(), &[Role::Travel]).unwrap();
        let twice = once.apply_on(&z_gate(), &[Role::Travel]).unwrap();
        assert_eq!(twice, psi);
        let id = Operator::unitary(Matrix::identity(2)).unwrap();
        assert_eq!(psi.apply_on(&id, &[Role::Travel]).unwrap(), psi);
    }

    #[test]
    fn apply_on_checks_dimensions() {
        let psi = StateVector::basis(Layout::qubit(Role::Travel), &[0]).unwrap();
        let big = Operator::unitary(Matrix::identity(4)).unwrap();
        assert!(matches!(
            psi.apply_on(&big, &[Role::Travel]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn partial_isometry_rejects_states_outside_domain() {
        // |0><0| keeps |0> and annihilates |1>.
        let p = Operator::partial_isometry(Matrix::from_diagonal(&[1.0, 0.0])).unwrap();
        let zero = StateVector::basis(Layout::qubit(Role::Travel), &[0]).unwrap();
        let one = StateVector::basis(Layout::qubit(Role::Travel), &[1]).unwrap();
        assert!(zero.apply_on(&p, &[Role::Travel]).is_ok());
        assert!(matches!(
            one.apply_on(&p, &[Role::Travel]),
            Err(Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn promote_shifts_past_vacuum() {
        let l = Layout::of(&[(Role::Home, 2), (Role::Travel, 2)]).unwrap();
        let psi = StateVector::from_real(l, &[0.0, H, H, 0.0]).unwrap();
        let m = psi.promote_to_mode(Role::Travel).unwrap();
        assert_eq!(m.layout().dim_of(Role::Travel), Some(3));
        // |0>_h|1>_t -> index 0*3 + 2, |1>_h|0>_t -> index 1*3 + 1
        assert_eq!(m.amps()[2].re, H);
        assert_eq!(m.amps()[4].re, H);
        assert!((m.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn new_rejects_unnormalized() {
        assert!(matches!(
            StateVector::from_real(Layout::qubit(Role::Home), &[1.0, 1.0]),
            Err(Error::NotNormalized(_))
        ));
        assert_eq!(
            StateVector::normalized(Layout::qubit(Role::Home), vec![ZERO, ZERO]),
            Err(Error::ZeroNorm)
        );
    }
}

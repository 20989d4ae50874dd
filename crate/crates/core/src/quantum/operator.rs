use super::{Matrix, TOL};
use crate::{Error, Result};

/// How an [`Operator`] may be applied to a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// `U†U = I`; norm is preserved for every input.
    Unitary,
    /// `M†M` is a projector; inputs must lie in its support, anything else
    /// is reported as [`Error::OutsideDomain`].
    PartialIsometry,
    /// Arbitrary linear map; the image is renormalized.
    Linear,
}

/// Square operator acting on a set of target subsystems.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    matrix: Matrix,
    kind: OperatorKind,
}

impl Operator {
    pub fn unitary(matrix: Matrix) -> Result<Self> {
        let defect = matrix
            .adjoint()
            .mul(&matrix)
            .max_abs_diff(&Matrix::identity(matrix.n()));
        if defect > TOL {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self {
            matrix,
            kind: OperatorKind::Unitary,
        })
    }

    pub fn partial_isometry(matrix: Matrix) -> Result<Self> {
        let p = matrix.adjoint().mul(&matrix);
        let defect = p.mul(&p).max_abs_diff(&p).max(p.hermiticity_defect());
        if defect > TOL {
            return Err(Error::NotPartialIsometry(defect));
        }
        Ok(Self {
            matrix,
            kind: OperatorKind::PartialIsometry,
        })
    }

    pub fn linear(matrix: Matrix) -> Self {
        Self {
            matrix,
            kind: OperatorKind::Linear,
        }
    }

    /// Fixed tables whose kind is checked by unit tests instead of on every
    /// construction.
    pub(crate) fn trusted(matrix: Matrix, kind: OperatorKind) -> Self {
        Self { matrix, kind }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.matrix.n()
    }

    /// Product `self · other` (apply `other` first). Unitarity is kept when
    /// both factors are unitary; anything else becomes [`OperatorKind::Linear`].
    pub fn then_after(&self, other: &Operator) -> Operator {
        let matrix = self.matrix.mul(&other.matrix);
        let kind = match (self.kind, other.kind) {
            (OperatorKind::Unitary, OperatorKind::Unitary) => OperatorKind::Unitary,
            _ => OperatorKind::Linear,
        };
        Operator { matrix, kind }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::C64;
    use alloc::vec;

    #[test]
    fn classifies_operators() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!(Operator::unitary(Matrix::from_real(2, &[h, h, h, -h]).unwrap()).is_ok());
        assert!(matches!(
            Operator::unitary(Matrix::from_real(2, &[1.0, 1.0, 0.0, 1.0]).unwrap()),
            Err(Error::NotUnitary(_))
        ));
        // |0><1| is a partial isometry, not a unitary.
        let m = Matrix::from_rows(2, vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
        assert!(Operator::partial_isometry(m.clone()).is_ok());
        assert!(Operator::unitary(m).is_err());
        assert!(matches!(
            Operator::partial_isometry(Matrix::from_real(2, &[2.0, 0.0, 0.0, 0.0]).unwrap()),
            Err(Error::NotPartialIsometry(_))
        ));
    }
}

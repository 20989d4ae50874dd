use alloc::vec::Vec;

use super::{eigvals_hermitian, von_neumann_entropy, Layout, Matrix, Operator, Role, StateVector, C64, PSD_TOL, TOL, ZERO};
use crate::{Error, Result};

/// Hermitian, unit-trace, positive-semidefinite operator on a composite system.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    layout: Layout,
    matrix: Matrix,
}

impl DensityOperator {
    /// Validates Hermiticity, unit trace and positivity before accepting `matrix`.
    pub fn new(layout: Layout, matrix: Matrix) -> Result<Self> {
        if matrix.n() != layout.dim() {
            return Err(Error::DimensionMismatch {
                expected: layout.dim(),
                found: matrix.n(),
            });
        }
        let defect = matrix.hermiticity_defect();
        if defect > TOL {
            return Err(Error::NotHermitian(defect));
        }
        let tr = matrix.trace().re;
        if (tr - 1.0).abs() > TOL {
            return Err(Error::BadTrace(tr));
        }
        let smallest = eigvals_hermitian(&matrix)?
            .last()
            .copied()
            .unwrap_or(0.0);
        if smallest < -PSD_TOL {
            return Err(Error::NotPositive(smallest));
        }
        Ok(Self { layout, matrix })
    }

    pub fn from_pure(state: &StateVector) -> Self {
        Self {
            layout: state.layout().clone(),
            matrix: Matrix::outer(state.amps(), state.amps()),
        }
    }

    /// Convex combination `Σ w_k ρ_k`; weights must be non-negative and sum to 1.
    pub fn mixture(parts: &[(f64, DensityOperator)]) -> Result<Self> {
        let (_, first) = parts.first().ok_or(Error::EmptyLabels)?;
        let mut total = 0.0;
        let mut matrix = Matrix::zeros(first.matrix.n());
        for (w, rho) in parts {
            if !(0.0..=1.0 + TOL).contains(w) {
                return Err(Error::InvalidProbability(*w));
            }
            if rho.layout != first.layout {
                return Err(Error::LayoutMismatch);
            }
            total += w;
            matrix = matrix.add(&rho.matrix.scale(*w));
        }
        if (total - 1.0).abs() > TOL {
            return Err(Error::BadTrace(total));
        }
        Ok(Self {
            layout: first.layout.clone(),
            matrix,
        })
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.n()
    }

    pub fn tensor(&self, other: &DensityOperator) -> Result<Self> {
        Ok(Self {
            layout: self.layout.concat(&other.layout)?,
            matrix: self.matrix.kron(&other.matrix),
        })
    }

    /// Reduced operator on `keep`; the result keeps the original subsystem order.
    pub fn partial_trace(&self, keep: &[Role]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptyLabels);
        }
        for &k in keep {
            if !self.layout.contains(k) {
                return Err(Error::UnknownLabel(k));
            }
        }
        let ordered: Vec<Role> = self.layout.roles().filter(|r| keep.contains(r)).collect();
        let layout = self.layout.select(&ordered)?;
        let split = self.layout.split(&ordered)?;
        let (kd, rd) = (split.target_dim, split.rest_dim);
        let mut out = Matrix::zeros(kd);
        for i in 0..kd {
            for j in 0..kd {
                let mut s = ZERO;
                for r in 0..rd {
                    s += self.matrix[(split.full[i * rd + r], split.full[j * rd + r])];
                }
                out[(i, j)] = s;
            }
        }
        Ok(Self {
            layout,
            matrix: out,
        })
    }

    /// `<v|ρ|v>` clamped to `[0, 1]`.
    pub fn born_weight(&self, v: &StateVector) -> Result<f64> {
        if v.layout() != &self.layout {
            return Err(Error::LayoutMismatch);
        }
        let rv = self.matrix.mul_vec(v.amps());
        let w: C64 = v.amps().iter().zip(&rv).map(|(a, b)| a.conj() * b).sum();
        Ok(w.re.clamp(0.0, 1.0))
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eigvals_hermitian(&self.matrix)
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }

    /// `tr ρ²`
    pub fn purity(&self) -> f64 {
        self.matrix.mul(&self.matrix).trace().re
    }

    /// `U ρ U†` for a unitary acting on the whole system.
    pub fn conjugate(&self, u: &Operator) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.dim(),
            });
        }
        if u.kind() != super::OperatorKind::Unitary {
            return Err(Error::NotUnitary(f64::NAN));
        }
        let m = u.matrix().mul(&self.matrix).mul(&u.matrix().adjoint());
        Ok(Self {
            layout: self.layout.clone(),
            matrix: m,
        })
    }

    /// Largest entrywise distance; layouts must match.
    pub fn max_abs_diff(&self, other: &DensityOperator) -> Result<f64> {
        if self.layout != other.layout {
            return Err(Error::LayoutMismatch);
        }
        Ok(self.matrix.max_abs_diff(&other.matrix))
    }
}

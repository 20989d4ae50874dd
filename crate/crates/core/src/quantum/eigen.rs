//! Cyclic Jacobi diagonalization of small dense Hermitian matrices.

use alloc::vec::Vec;

use super::{Matrix, C64, TOL};
use crate::{Error, Result};

/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Hard cap on full Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix, in descending order.
pub fn eigvals_hermitian(m: &Matrix) -> Result<Vec<f64>> {
    let defect = m.hermiticity_defect();
    if defect > TOL {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.n();
    // work on the exactly Hermitian part
    let mut a = m.add(&m.adjoint()).scale(0.5);

    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a) < OFF_DIAGONAL_TOL {
            let mut vals: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
            vals.sort_by(|x, y| y.total_cmp(x));
            return Ok(vals);
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

/// Zeroes `a[p][q]` with `a <- J† a J`, where `J` first rotates the phase of
/// the pivot to make it real and then applies a real Givens rotation.
fn rotate(a: &mut Matrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g < f64::MIN_POSITIVE {
        return;
    }
    let phase = apq / g;
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * g);
    let t = theta.signum() / (theta.abs() + libm::hypot(theta, 1.0));
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;

    let j_pp = C64::new(c, 0.0);
    let j_pq = C64::new(s, 0.0);
    let j_qp = -phase.conj() * s;
    let j_qq = phase.conj() * c;

    let n = a.n();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
}

use alloc::vec::Vec;
use core::f64::consts::FRAC_1_SQRT_2;

use super::check_probability;
use crate::quantum::{binary_capacity, spectrum_entropy, DensityOperator, Layout, Matrix, Role, StateVector};
use crate::Result;

/// `|ψ''> = √p0 |ψ+> + √p1 |ψ->` on `(home, travel)`, with amplitudes
/// `(0, √p0 + √p1, √p0 - √p1, 0)/√2`.
pub fn encoded_state(p0: f64) -> Result<StateVector> {
    let p0 = check_probability(p0)?;
    let (a, b) = (libm::sqrt(p0), libm::sqrt(1.0 - p0));
    let h = FRAC_1_SQRT_2;
    StateVector::normalized(
        ht_layout(),
        [0.0, (a + b) * h, (a - b) * h, 0.0].iter().map(|&x| x.into()).collect(),
    )
}

/// Intercept-resend figures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpaqueReport {
    pub p0: f64,
    /// QBER when Eve read 0 (pair ends in `|10>`).
    pub q0: f64,
    /// QBER when Eve read 1 (pair ends in `|01>`).
    pub q1: f64,
    pub q: f64,
    pub i_ab: f64,
}

/// `q_k = 1 - |<ψ''|final pair>|²`, averaged over Eve's two equally likely
/// results.
///
/// `|ψ''>` lies in the span of `|01>` and `|10>`, so the two overlaps are
/// complementary Born weights; the second is taken as the complement of the
/// first, which keeps `q0 + q1 = 1` free of rounding.
pub fn opaque_closed_form(p0: f64) -> Result<OpaqueReport> {
    let psi = encoded_state(p0)?;
    let w10 = psi.fidelity(&StateVector::basis(ht_layout(), &[1, 0])?)?;
    let w01 = 1.0 - w10;
    let q0 = 1.0 - w10;
    let q1 = 1.0 - w01;
    let q = 0.5 * (q0 + q1);
    Ok(OpaqueReport {
        p0,
        q0,
        q1,
        q,
        i_ab: binary_capacity(q)?,
    })
}

/// Every statistic of the ancilla attack at one `(p0, D)` point.
#[derive(Debug, Clone, PartialEq)]
pub struct TranslucentReport {
    pub p0: f64,
    pub d: f64,
    /// `(travel, ancilla)` after Eve's interaction.
    pub rho_at1: DensityOperator,
    /// `(travel, ancilla)` after Alice's encoding.
    pub rho_at2: DensityOperator,
    /// Spectrum of `rho_at2`, descending.
    pub eigenvalues: [f64; 4],
    pub i_ae: f64,
    /// `(home, travel, ancilla)` after Alice's encoding.
    pub rho_full: DensityOperator,
    pub p_i: f64,
    pub p_z: f64,
    /// `(home, travel)` averaged over Eve's Bell outcomes.
    pub rho_ht3: DensityOperator,
    pub qber_fidelity: f64,
    pub i_ab: f64,
    pub control_detection: f64,
}

impl TranslucentReport {
    /// Largest absolute difference per field, matrices compared entrywise.
    pub fn deviations(&self, other: &TranslucentReport) -> Result<Vec<(&'static str, f64)>> {
        let eig = self
            .eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        Ok(alloc::vec![
            ("rho_at1", self.rho_at1.max_abs_diff(&other.rho_at1)?),
            ("rho_at2", self.rho_at2.max_abs_diff(&other.rho_at2)?),
            ("eigenvalues", eig),
            ("i_ae", (self.i_ae - other.i_ae).abs()),
            ("rho_full", self.rho_full.max_abs_diff(&other.rho_full)?),
            ("p_i", (self.p_i - other.p_i).abs()),
            ("p_z", (self.p_z - other.p_z).abs()),
            ("rho_ht3", self.rho_ht3.max_abs_diff(&other.rho_ht3)?),
            ("qber_fidelity", (self.qber_fidelity - other.qber_fidelity).abs()),
            ("i_ab", (self.i_ab - other.i_ab).abs()),
            ("control_detection", (self.control_detection - other.control_detection).abs()),
        ])
    }

    pub fn max_deviation(&self, other: &TranslucentReport) -> Result<f64> {
        Ok(self
            .deviations(other)?
            .into_iter()
            .map(|(_, v)| v)
            .fold(0.0, f64::max))
    }
}

/// `q = 3/4 - p0 (1 - p0) (2D - 1)`.
pub fn translucent_qber(p0: f64, d: f64) -> f64 {
    0.75 - p0 * (1.0 - p0) * (2.0 * d - 1.0)
}

pub(crate) fn ht_layout() -> Layout {
    Layout::of(&[(Role::Home, 2), (Role::Travel, 2)]).expect("static layout")
}

pub(crate) fn at_layout() -> Layout {
    Layout::of(&[(Role::Travel, 2), (Role::Ancilla, 2)]).expect("static layout")
}

pub(crate) fn hta_layout() -> Layout {
    Layout::of(&[(Role::Home, 2), (Role::Travel, 2), (Role::Ancilla, 2)]).expect("static layout")
}

/// The printed formulas, entry by entry.
pub fn translucent_closed_form(p0: f64, d: f64) -> Result<TranslucentReport> {
    let p0 = check_probability(p0)?;
    let d = check_probability(d)?;
    let p1 = 1.0 - p0;
    let f = 1.0 - d;
    let x = libm::sqrt(d * f);
    let s = libm::sqrt(p0 * p1);
    let dp = p0 - p1;

    #[rustfmt::skip]
    let at1 = [
        0.5, 0.0, 0.0, x,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        x,   0.0, 0.0, 0.5,
    ];
    #[rustfmt::skip]
    let at2 = [
        0.5 + s, 0.0, 0.0, dp * x,
        0.0,     0.0, 0.0, 0.0,
        0.0,     0.0, 0.0, 0.0,
        dp * x,  0.0, 0.0, 0.5 - s,
    ];
    let r = libm::sqrt(p0 * p1 + dp * dp * d * f);
    let (l3, l4) = (0.5 + r, 0.5 - r);
    let eigenvalues = [l3, l4.max(0.0), 0.0, 0.0];

    let mut full = [0.0; 64];
    {
        let mut set = |i: usize, j: usize, v: f64| {
            full[8 * i + j] = 0.5 * v;
            full[8 * j + i] = 0.5 * v;
        };
        set(0, 0, d);
        set(0, 3, dp * x);
        set(0, 4, x);
        set(0, 7, dp * d);
        set(3, 3, f);
        set(3, 4, dp * f);
        set(3, 7, x);
        set(4, 4, f);
        set(4, 7, dp * x);
        set(7, 7, d);
    }

    let g = 0.5 * s * (2.0 * d - 1.0);
    #[rustfmt::skip]
    let ht3 = [
        0.25 + g, 0.0,      0.5 * x,  0.0,
        0.0,      0.25 + g, 0.0,      0.5 * x,
        0.5 * x,  0.0,      0.25 - g, 0.0,
        0.0,      0.5 * x,  0.0,      0.25 - g,
    ];

    let q = translucent_qber(p0, d);
    Ok(TranslucentReport {
        p0,
        d,
        rho_at1: DensityOperator::new(at_layout(), Matrix::from_real(4, &at1)?)?,
        rho_at2: DensityOperator::new(at_layout(), Matrix::from_real(4, &at2)?)?,
        eigenvalues,
        i_ae: spectrum_entropy(&[l3, l4])?,
        rho_full: DensityOperator::new(hta_layout(), Matrix::from_real(8, &full)?)?,
        p_i: 0.5 + dp * x,
        p_z: 0.5 - dp * x,
        rho_ht3: DensityOperator::new(ht_layout(), Matrix::from_real(4, &ht3)?)?,
        qber_fidelity: q,
        i_ab: binary_capacity(q)?,
        control_detection: d,
    })
}

use pingpong_core::analysis::{
    default_grid, opaque_closed_form, sweep, translucent_closed_form, translucent_exact_engine,
};
use pingpong_core::quantum::eigvals_hermitian;

#[test]
fn exact_engine_matches_closed_form_on_grid() {
    let grid = default_grid();
    for &p0 in &grid {
        for &d in &grid {
            let exact = translucent_exact_engine(p0, d).unwrap();
            let closed = translucent_closed_form(p0, d).unwrap();
            for (field, dev) in exact.deviations(&closed).unwrap() {
                assert!(dev < 1e-10, "p0={p0} d={d} {field}: {dev:e}");
            }
        }
    }
}

#[test]
fn eigenvalue_formula_matches_solver() {
    for &p0 in &default_grid() {
        for &d in &default_grid() {
            let closed = translucent_closed_form(p0, d).unwrap();
            let solved = eigvals_hermitian(closed.rho_at2.matrix()).unwrap();
            for (a, b) in solved.iter().zip(&closed.eigenvalues) {
                assert!((a - b).abs() < 1e-10, "p0={p0} d={d}");
            }
        }
    }
    // independent numeric evaluation at (0.3, 0.1)
    let r = translucent_exact_engine(0.3, 0.1).unwrap();
    let root = (0.21f64 + 0.16 * 0.09).sqrt();
    assert!((r.eigenvalues[0] - (0.5 + root)).abs() < 1e-12);
    assert!((r.eigenvalues[1] - (0.5 - root)).abs() < 1e-12);
}

#[test]
fn balanced_encoding_fixed_points() {
    for &d in &default_grid() {
        let r = translucent_closed_form(0.5, d).unwrap();
        assert!(r.i_ae.abs() < 1e-12);
        assert!(r.i_ab >= r.i_ae);
        assert!((r.p_i - 0.5).abs() < 1e-15 && (r.p_z - 0.5).abs() < 1e-15);
    }
    let r = translucent_closed_form(0.5, 0.0).unwrap();
    assert!((r.i_ab - 1.0).abs() < 1e-12);
}

#[test]
fn sweep_rows_are_symmetric_in_p0() {
    let g = default_grid();
    let rows = sweep(&g, &g).unwrap();
    for row in &rows {
        assert!((row.q_formula - row.q_exact).abs() < 1e-10);
        assert!((row.p_i + row.p_z - 1.0).abs() < 1e-12);
        let mirror = rows
            .iter()
            .find(|r| (r.p0 - (1.0 - row.p0)).abs() < 1e-12 && r.d == row.d)
            .unwrap();
        assert!((row.q_formula - mirror.q_formula).abs() < 1e-12);
        assert!((row.i_ab - mirror.i_ab).abs() < 1e-12);
        assert!((row.i_ae - mirror.i_ae).abs() < 1e-12);
    }
}

#[test]
fn opaque_is_exactly_uninformative() {
    for &p0 in &default_grid() {
        let r = opaque_closed_form(p0).unwrap();
        assert_eq!(r.q, 0.5);
        assert_eq!(r.i_ab, 0.0);
        assert_eq!(r.q, (r.q0 + r.q1) / 2.0);
    }
}

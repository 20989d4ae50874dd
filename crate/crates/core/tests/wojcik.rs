use pingpong_core::analysis::{dpd_click_probability, dpd_click_probability_for};
use pingpong_core::attacks::{AttackContext, AttackStrategy, WojcikAttack};
use pingpong_core::protocol::{
    alice_control, alice_encode, bob_prepare, plus_state, round_rng, Announcement, PhotonKind,
};
use pingpong_core::quantum::{Layout, Role, StateVector};
use pingpong_core::Error;

const TXY: [Role; 3] = [Role::Travel, Role::ModeX, Role::ModeY];

fn generator(t: usize) -> StateVector {
    StateVector::basis(WojcikAttack::layout(), &[t, 0, 1]).unwrap()
}

#[test]
fn q_is_an_isometry_on_generators_and_inverted_by_q_inverse() {
    let q = WojcikAttack::q_operator();
    let qi = WojcikAttack::q_inverse();
    let gens = [generator(1), generator(2)];
    let images: Vec<_> = gens.iter().map(|g| g.apply_on(&q, &TXY).unwrap()).collect();
    for i in 0..2 {
        for j in 0..2 {
            let d = gens[i].inner(&gens[j]).unwrap() - images[i].inner(&images[j]).unwrap();
            assert!(d.norm() < 1e-12);
        }
        let back = images[i].apply_on(&qi, &TXY).unwrap();
        assert!((back.fidelity(&gens[i]).unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn identity_branch_returns_plus() {
    let mut ctx = AttackContext::default();
    let mut rng = round_rng(0, 0);
    let s = WojcikAttack.on_b_to_a(bob_prepare(PhotonKind::False), &mut ctx, &mut rng).unwrap();
    let back = WojcikAttack.on_a_to_b(alice_encode(&s, 0).unwrap(), &mut ctx, &mut rng).unwrap();
    let plus = plus_state(3).tensor(&WojcikAttack::fresh_modes()).unwrap();
    assert!((back.fidelity(&plus).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn false_photon_reduction_after_phase_flip() {
    let mut ctx = AttackContext::default();
    let mut rng = round_rng(0, 0);
    let s = WojcikAttack.on_b_to_a(bob_prepare(PhotonKind::False), &mut ctx, &mut rng).unwrap();
    let back = WojcikAttack.on_a_to_b(alice_encode(&s, 1).unwrap(), &mut ctx, &mut rng).unwrap();
    let rho = back.to_density().partial_trace(&[Role::Travel]).unwrap();
    let m = rho.matrix();
    assert!(m[(0, 0)].norm() < 1e-15);
    assert!((m[(1, 1)].re - 0.5).abs() < 1e-15 && (m[(2, 2)].re - 0.5).abs() < 1e-15);
    assert!(m[(1, 2)].norm() < 1e-15);
    assert!((dpd_click_probability(true).unwrap() - 0.5).abs() < 1e-12);
    assert_eq!(dpd_click_probability(false).unwrap(), 0.0);
    assert_eq!(dpd_click_probability_for(false, 0).unwrap(), None);
}

#[test]
fn control_mode_sees_vacuum_half_the_time() {
    // travel of |B-A>: vac with weight 1/2, |0> and |1> with 1/4 each
    let s = WojcikAttack
        .on_b_to_a(bob_prepare(PhotonKind::False), &mut AttackContext::default(), &mut round_rng(0, 0))
        .unwrap();
    let rho = s.to_density().partial_trace(&[Role::Travel]).unwrap();
    let diag: Vec<f64> = (0..3).map(|i| rho.matrix()[(i, i)].re).collect();
    for (got, want) in diag.iter().zip([0.5, 0.25, 0.25]) {
        assert!((got - want).abs() < 1e-15);
    }
    let n = 4000u64;
    let lost = (0..n)
        .filter(|&r| alice_control(&s, &mut round_rng(8, r)).unwrap().0 == Announcement::Loss)
        .count() as f64;
    // 5σ for binomial(4000, 1/2) ≈ 158
    assert!((lost - 2000.0).abs() < 158.0, "{lost}");
}

#[test]
fn state_outside_domain_is_a_fault() {
    let stray = StateVector::basis(Layout::of(&[(Role::Travel, 3)]).unwrap(), &[0]).unwrap();
    let err = WojcikAttack.on_b_to_a(stray, &mut AttackContext::default(), &mut round_rng(0, 0));
    assert!(matches!(err, Err(Error::AttackFault { attack: "wojcik", .. })));
}

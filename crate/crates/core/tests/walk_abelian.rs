use std::f64::consts::PI;

use anyonwalk::walk_abelian::*;
use anyonwalk::walk_nonabelian::{baseline_quantum, Coin, CoinState};
use approx::assert_abs_diff_eq;
use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64 as C;
use proptest::prelude::*;

fn evolve(phi: f64, t: usize) -> SpinorField {
    simulate(&AbelianConfig::new(phi, t, default_spin()).unwrap())
}

fn position_marginal(field: &SpinorField) -> Vec<(i64, f64)> {
    field.probabilities()
}

#[test]
fn single_step_marginal_ignores_phase() {
    let base = position_marginal(&evolve(0.0, 1));
    for phi in [0.3, 1.0, PI / 2.0, 2.5, 5.9] {
        let p = position_marginal(&evolve(phi, 1));
        for (a, b) in base.iter().zip(&p) {
            assert_eq!(a.0, b.0);
            assert_abs_diff_eq!(a.1, b.1, epsilon = 1e-15);
        }
    }
}

#[test]
fn norm_after_a_hundred_steps() {
    for phi in [0.0, 0.7, 2.2] {
        let mut s = SpinorField::localized(default_spin());
        for _ in 0..100 {
            s = abelian_step(&s, phi);
            assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
        }
    }
}

#[test]
fn support_parity_and_range() {
    for t in [1usize, 6, 13] {
        let f = evolve(0.9, t);
        for (s, p) in f.probabilities() {
            assert!(s.unsigned_abs() as usize <= t);
            if (s + t as i64) % 2 != 0 {
                assert_eq!(p, 0.0, "s = {s}, t = {t}");
            }
        }
    }
}

#[test]
fn momentum_operator_is_unitary() {
    for phi in [0.0, 0.4, PI / 2.0, 3.0] {
        for k in [-PI, -1.0, 0.0, 0.5, 2.9] {
            let m = momentum_operator(phi, k).matrix;
            assert_abs_diff_eq!((m.adjoint() * m - Matrix4::identity()).norm(), 0.0, epsilon = 1e-12);
        }
    }
}

fn sorted_phases(m: &Matrix4<C>) -> Vec<f64> {
    let (_, t) = m.schur().unpack();
    let mut ph: Vec<f64> = (0..4).map(|i| t[(i, i)].arg().abs()).collect();
    ph.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ph
}

#[test]
fn eigenphases_follow_beta() {
    for phi in [0.0, 0.3, 1.1, PI / 2.0, 2.4] {
        for k in [-2.7, -1.0, 0.2, 0.9, 1.8, 3.0] {
            let (bp, bm) = beta(phi, k);
            let mut expect = vec![bp, bp, bm, bm];
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got = sorted_phases(&momentum_operator(phi, k).matrix);
            for (g, e) in got.iter().zip(&expect) {
                assert_abs_diff_eq!(g, e, epsilon = 1e-7);
            }
        }
    }
}

#[test]
fn analytic_moments_match_simulation() {
    let t = 30;
    for phi in [0.0, 0.3, PI / 2.0] {
        let (m1, m2) = evolve(phi, t).moments();
        let a1 = moments_analytic(phi, t, 1, &default_spin()).unwrap();
        let a2 = moments_analytic(phi, t, 2, &default_spin()).unwrap();
        assert!((a2 - m2).abs() / m2 < 1e-8, "φ = {phi}: {a2} vs {m2}");
        assert_abs_diff_eq!(a1, m1, epsilon = 1e-8);
    }
}

#[test]
fn leading_coefficient_tracks_second_moment() {
    let c = asymptotic_coefficients(0.0, &default_spin()).unwrap();
    let t = 400;
    let m2 = moments_analytic(0.0, t, 2, &default_spin()).unwrap();
    let ratio = m2 / (t as f64).powi(2);
    assert!((ratio - c.c2).abs() < 0.01, "{ratio} vs {}", c.c2);
}

fn two_state_variance(coin: Matrix2<C>, t: usize) -> f64 {
    baseline_quantum(t, &Coin::custom("u", coin).unwrap(), &CoinState::basis(0)).variance()
}

fn half_beam_splitter() -> Matrix2<C> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Matrix2::new(C::new(s, 0.0), C::new(0.0, s), C::new(0.0, s), C::new(s, 0.0))
}

#[test]
fn trivial_phases_reduce_to_a_two_state_walk() {
    let t = 60;
    let u = half_beam_splitter();
    let zu = Matrix2::new(C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(-1.0, 0.0)) * u;
    for (phi, coin) in [(0.0, u), (PI / 2.0, zu), (PI, u), (3.0 * PI / 2.0, zu)] {
        let v4 = evolve(phi, t).variance();
        let v2 = two_state_variance(coin, t);
        assert!((v4 - v2).abs() / v2 < 0.01, "φ = {phi}: {v4} vs {v2}");
    }
}

#[test]
fn trivial_phase_coefficient_matches_product_walk() {
    let c = asymptotic_coefficients(0.0, &default_spin()).unwrap();
    let t = 400;
    let v2 = two_state_variance(half_beam_splitter(), t) / (t as f64).powi(2);
    assert!((c.c2 - c.c1 * c.c1 - v2).abs() < 0.01, "{} vs {v2}", c.c2 - c.c1 * c.c1);
}

#[test]
fn generic_phase_lowers_spread() {
    let c0 = asymptotic_coefficients(0.0, &default_spin()).unwrap();
    let c = asymptotic_coefficients(0.7, &default_spin()).unwrap();
    assert!(c.c2 < c0.c2, "{} vs {}", c.c2, c0.c2);
}

#[test]
fn spread_is_positive_for_every_phase() {
    for j in 0..64 {
        let phi = 2.0 * PI * j as f64 / 64.0;
        let c = asymptotic_coefficients(phi, &default_spin()).unwrap();
        assert!(c.c2 > 0.0, "φ = {phi}");
    }
}

#[test]
fn surface_is_symmetric_under_phase_conjugation() {
    let phis: Vec<f64> = (0..9).map(|j| 2.0 * PI * j as f64 / 9.0).collect();
    let mirrored: Vec<f64> = phis.iter().map(|p| 2.0 * PI - p).collect();
    let ts = [5, 20, 40];
    let a = variance_surface(&phis, &ts, &default_spin(), false).unwrap();
    let b = variance_surface(&mirrored, &ts, &default_spin(), false).unwrap();
    for (x, y) in a.rows.iter().zip(&b.rows) {
        assert_abs_diff_eq!(x.v_sim, y.v_sim, epsilon = 1e-10);
    }
}

#[test]
fn variance_grows_quadratically() {
    let ts: Vec<usize> = (50..=200).step_by(10).collect();
    for j in 0..16 {
        let phi = 2.0 * PI * j as f64 / 16.0;
        let traj = variance_trajectory(phi, 200, default_spin());
        let vs: Vec<f64> = ts.iter().map(|&t| traj[t - 1]).collect();
        let e = fit_exponent(&ts, &vs);
        assert!((1.9..=2.0).contains(&e), "φ = {phi}: exponent {e}");
    }
}

#[test]
fn surface_rows_are_ordered_and_complete() {
    let s = variance_surface(&[0.1, 0.2], &[3, 1], &default_spin(), true).unwrap();
    let keys: Vec<(usize, f64)> = s.rows.iter().map(|r| (r.t, r.phi)).collect();
    assert_eq!(keys, vec![(3, 0.1), (3, 0.2), (1, 0.1), (1, 0.2)]);
    assert!(s.rows.iter().all(|r| r.v_analytic.is_some()));
    assert!(variance_surface(&[], &[1], &default_spin(), false).is_err());
}

#[test]
fn reflection_leaves_variance_unchanged() {
    // swapping the x labels mirrors the walk through the origin
    let t = 25;
    let phi = 0.8;
    let start = Vector4::new(C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(0.0, 0.0));
    let a = evolve(phi, t);
    let b = simulate(&AbelianConfig::new(phi, t, start).unwrap());
    assert_abs_diff_eq!(a.variance(), b.variance(), epsilon = 1e-9);
    let (ma, _) = a.moments();
    let (mb, _) = b.moments();
    assert_abs_diff_eq!(ma, -mb, epsilon = 1e-9);
}

#[test]
fn momentum_space_evolution_matches_position_space() {
    let t = 50;
    let phi = 1.3;
    let k_points = 1 << 12;
    let direct = evolve(phi, t);
    let spin = default_spin();
    let evolved: Vec<(f64, Vector4<C>)> = (0..k_points)
        .map(|j| {
            let k = -PI + 2.0 * PI * j as f64 / k_points as f64;
            let m = momentum_operator(phi, k).matrix;
            let mut v = spin;
            for _ in 0..t {
                v = m * v;
            }
            (k, v)
        })
        .collect();
    for s in -(t as i64)..=t as i64 {
        let mut amp = Vector4::<C>::zeros();
        for (k, v) in &evolved {
            amp += v * C::from_polar(1.0, k * s as f64);
        }
        amp /= C::new(k_points as f64, 0.0);
        assert_abs_diff_eq!(amp.norm_squared(), direct.get(s).norm_squared(), epsilon = 1e-8);
    }
}

fn schmidt_defect(field: &SpinorField) -> f64 {
    // weighted mean of the smaller Schmidt coefficient squared
    let mut acc = 0.0;
    for (_, v) in field.sites() {
        let m = Matrix2::new(v[0], v[1], v[2], v[3]);
        let sv = m.singular_values();
        acc += sv.min().powi(2);
    }
    acc
}

#[test]
fn trivial_phases_keep_the_die_unentangled() {
    for phi in [0.0, PI / 2.0, PI, 3.0 * PI / 2.0] {
        assert!(schmidt_defect(&evolve(phi, 40)) < 1e-20, "φ = {phi}");
    }
    assert!(schmidt_defect(&evolve(0.7, 40)) > 1e-3);
}

#[test]
fn leading_order_agrees_with_simulation_off_the_special_phases() {
    for phi in [PI / 4.0, 3.0 * PI / 4.0, 1.0, 2.0] {
        let c = asymptotic_coefficients(phi, &default_spin()).unwrap();
        let v = evolve(phi, 100).variance();
        assert!((c.variance(100) - v).abs() / v < 0.05, "φ = {phi}: {} vs {v}", c.variance(100));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unitary_for_random_die_states(re in prop::array::uniform4(-1.0f64..1.0), im in prop::array::uniform4(-1.0f64..1.0), phi in 0.0f64..std::f64::consts::TAU, t in 1usize..40) {
        let v = Vector4::from_fn(|i, _| C::new(re[i], im[i]));
        prop_assume!(v.norm() > 1e-3);
        let spin = v / C::new(v.norm(), 0.0);
        let f = simulate(&AbelianConfig::new(phi, t, spin).unwrap());
        prop_assert!((f.norm_sqr() - 1.0).abs() < 1e-12);
        for (s, p) in f.probabilities() {
            if (s + t as i64) % 2 != 0 {
                prop_assert!(p == 0.0);
            }
        }
    }

    #[test]
    fn analytic_second_moment_matches_for_random_phases(phi in 0.0f64..std::f64::consts::TAU, t in 1usize..25) {
        let m2 = evolve(phi, t).moments().1;
        let a2 = moments_analytic(phi, t, 2, &default_spin()).unwrap();
        prop_assert!((a2 - m2).abs() <= 1e-8 * m2.max(1.0));
    }
}

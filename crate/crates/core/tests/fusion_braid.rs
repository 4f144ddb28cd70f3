use anyonwalk::fusion_braid::*;
use anyonwalk::kauffman_tl::catalan;
use anyonwalk::walk_nonabelian::{
    distance, distribution_dense_with, Coin, CoinState, WalkGeometry, DEFAULT_AMPLITUDE_BUDGET,
};
use anyonwalk::{build_su2k, Error};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-10;
const LEVELS: [i64; 3] = [2, 3, 5];

fn e(space: &FusionSpace, i: usize) -> DMatrix<Complex64> {
    tl_generator(space, i).unwrap().to_dense_complex()
}

fn b(space: &FusionSpace, i: usize) -> DMatrix<Complex64> {
    braid_generator(space, i).unwrap().matrix.to_dense()
}

fn spaces() -> impl Iterator<Item = FusionSpace> {
    LEVELS.into_iter().flat_map(|k| {
        let m = build_su2k(k).unwrap();
        (4..=10).step_by(2).map(move |n| enumerate_fusion_basis(&m, n).unwrap())
    })
}

/// Paths `0 = h_0, h_1, ..., h_n = 0` with unit steps and `0 <= h <= k`.
fn count_bounded_paths(n: usize, k: usize) -> u64 {
    let mut count = 0;
    for code in 0u64..(1 << n) {
        let mut h: i64 = 0;
        let mut ok = true;
        for j in 0..n {
            h += if code >> j & 1 == 1 { 1 } else { -1 };
            if h < 0 || h > k as i64 {
                ok = false;
                break;
            }
        }
        if ok && h == 0 {
            count += 1;
        }
    }
    count
}

#[test]
fn twenty_two_strands_at_high_level() {
    let m = build_su2k(11).unwrap();
    let s = enumerate_fusion_basis(&m, 22).unwrap();
    assert_eq!(s.dim(), 58786);
    assert_eq!(count_bounded_paths(22, 11), 58786);
}

#[test]
fn dimensions_match_path_count() {
    for k in 2..=7 {
        let m = build_su2k(k as i64).unwrap();
        for n in (4..=14).step_by(2) {
            let expect = count_bounded_paths(n, k);
            assert_eq!(enumerate_fusion_basis(&m, n).unwrap().dim() as u64, expect, "k = {k}, n = {n}");
            assert_eq!(fusion_dimension(&m, n), expect as u128);
        }
    }
}

#[test]
fn dimension_grows_with_level_and_saturates() {
    for n in (4..=16).step_by(2) {
        let dims: Vec<usize> =
            (2..=12).map(|k| enumerate_fusion_basis(&build_su2k(k).unwrap(), n).unwrap().dim()).collect();
        assert!(dims.windows(2).all(|w| w[0] <= w[1]), "n = {n}: {dims:?}");
        for k in n / 2..=12 {
            let d = enumerate_fusion_basis(&build_su2k(k as i64).unwrap(), n).unwrap().dim();
            assert_eq!(d as u64, catalan(n / 2));
        }
    }
}

#[test]
fn odd_strand_count_is_rejected() {
    let m = build_su2k(4).unwrap();
    assert!(matches!(enumerate_fusion_basis(&m, 7), Err(Error::InvalidConfiguration(_))));
}

#[test]
fn vacuum_pairs_have_no_psi_channel() {
    let m = build_su2k(2).unwrap();
    let s = enumerate_fusion_basis(&m, 8).unwrap();
    let v = vacuum_pair_state(&s).unwrap();
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    assert!((norm - 1.0).abs() < 1e-15);
    for (path, amp) in s.basis().iter().zip(&v) {
        if path.outcomes[0] != 0 {
            assert_eq!(*amp, Complex64::new(0.0, 0.0));
        }
    }
}

#[test]
fn temperley_lieb_relations() {
    for s in spaces() {
        let n = s.n();
        let d = s.model().d();
        for i in 1..n {
            let ei = e(&s, i);
            assert!((&ei * &ei - &ei * Complex64::new(d, 0.0)).norm() < TOL);
            assert!((&ei - ei.adjoint()).norm() < TOL);
            if i + 1 < n {
                let ej = e(&s, i + 1);
                assert!((&ei * &ej * &ei - &ei).norm() < TOL);
                assert!((&ej * &ei * &ej - &ej).norm() < TOL);
            }
            for j in i + 2..n {
                let ej = e(&s, j);
                assert!((&ei * &ej - &ej * &ei).norm() < TOL);
            }
        }
    }
}

#[test]
fn braid_relations_and_unitarity() {
    for s in spaces() {
        let n = s.n();
        let id = DMatrix::<Complex64>::identity(s.dim(), s.dim());
        for i in 1..n {
            let bi = b(&s, i);
            assert!((&bi * bi.adjoint() - &id).norm() < TOL);
            let inv = braid_generator_inverse(&s, i).unwrap().matrix.to_dense();
            assert!((&bi * &inv - &id).norm() < TOL);
            if i + 1 < n {
                let bj = b(&s, i + 1);
                assert!((&bi * &bj * &bi - &bj * &bi * &bj).norm() < TOL, "k = {}, n = {n}, i = {i}", s.model().level());
            }
            for j in i + 2..n {
                let bj = b(&s, j);
                assert!((&bi * &bj - &bj * &bi).norm() < TOL);
            }
        }
    }
}

#[test]
fn braid_generators_are_sparse() {
    for s in spaces() {
        for i in 1..s.n() {
            assert!(braid_generator(&s, i).unwrap().matrix.column_counts().iter().all(|&c| c <= 2));
        }
    }
}

#[test]
fn qubit_generators_satisfy_braid_relations() {
    for n in [4usize, 6, 8] {
        let m = n / 2 - 1;
        let id = DMatrix::<Complex64>::identity(1 << m, 1 << m);
        let g: Vec<DMatrix<Complex64>> = (1..n).map(|i| su22_qubit_generator(n, i).unwrap()).collect();
        for i in 0..n - 1 {
            assert!((&g[i] * g[i].adjoint() - &id).norm() < TOL);
            if i + 1 < n - 1 {
                assert!((&g[i] * &g[i + 1] * &g[i] - &g[i + 1] * &g[i] * &g[i + 1]).norm() < TOL, "n = {n}, i = {}", i + 1);
            }
            for j in i + 2..n - 1 {
                assert!((&g[i] * &g[j] - &g[j] * &g[i]).norm() < TOL);
            }
        }
    }
    assert!(su22_qubit_generator(6, 6).is_err());
}

fn sorted_eigenphases(m: &DMatrix<Complex64>) -> Vec<f64> {
    let (_, t) = m.clone().schur().unpack();
    let mut v: Vec<f64> = (0..t.nrows()).map(|i| t[(i, i)].arg()).collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

#[test]
fn qubit_and_path_spectra_agree_up_to_phase() {
    let model = build_su2k(2).unwrap();
    for n in [4usize, 6, 8] {
        let s = enumerate_fusion_basis(&model, n).unwrap();
        for i in 1..n {
            let q = su22_qubit_generator(n, i).unwrap();
            let p = b(&s, i);
            // compare spectra after removing the phase of one eigenvalue each
            let pq = sorted_eigenphases(&q);
            let pp = sorted_eigenphases(&p);
            let ratio_q: Vec<f64> = pq.iter().map(|x| (x - pq[0]).rem_euclid(std::f64::consts::TAU)).collect();
            let mut found = false;
            for shift in &pp {
                let mut r: Vec<f64> = pp.iter().map(|x| (x - shift).rem_euclid(std::f64::consts::TAU)).collect();
                r.sort_by(|a, b| a.partial_cmp(b).unwrap());
                let mut rq = ratio_q.clone();
                rq.sort_by(|a, b| a.partial_cmp(b).unwrap());
                if r.iter().zip(&rq).all(|(a, b)| (a - b).abs() < 1e-8) {
                    found = true;
                }
            }
            assert!(found, "n = {n}, i = {i}");
        }
    }
}

#[test]
fn qubit_and_path_walks_agree() {
    let model = build_su2k(2).unwrap();
    for t in 1..=4 {
        for n in (2 * t + 2..=10).step_by(2) {
            let geom = WalkGeometry::centered(n).unwrap();
            if geom.check_steps(t).is_err() {
                continue;
            }
            let tl = TlRepresentation::new(&model, n).unwrap();
            let qb = QubitRepresentation::new(n).unwrap();
            for coin in [Coin::hadamard(), Coin::balanced_u()] {
                for psi in [CoinState::basis(0), CoinState::basis(1)] {
                    let a = distribution_dense_with(&tl, &geom, t, &coin, &psi, DEFAULT_AMPLITUDE_BUDGET).unwrap();
                    let b = distribution_dense_with(&qb, &geom, t, &coin, &psi, DEFAULT_AMPLITUDE_BUDGET).unwrap();
                    assert!(distance(&a, &b) < TOL, "t = {t}, n = {n}");
                }
            }
        }
    }
}

#[test]
fn trivial_representation_is_the_plain_walk() {
    let geom = WalkGeometry::minimal(5);
    let rep = TrivialRepresentation { n: geom.n };
    let d = distribution_dense_with(&rep, &geom, 5, &Coin::hadamard(), &CoinState::basis(0), DEFAULT_AMPLITUDE_BUDGET)
        .unwrap();
    let base = anyonwalk::walk_nonabelian::baseline_quantum(5, &Coin::hadamard(), &CoinState::basis(0));
    assert!(distance(&d, &base) < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_braids_preserve_norm(k in 2i64..8, half in 2usize..6, letters in prop::collection::vec(1usize..11, 1..30)) {
        let n = 2 * half;
        let rep = TlRepresentation::new(&build_su2k(k).unwrap(), n).unwrap();
        let mut x = rep.initial_state();
        let mut y = vec![Complex64::new(0.0, 0.0); rep.dim()];
        for &i in letters.iter().filter(|&&i| i < n) {
            rep.apply(i, &x, &mut y);
            std::mem::swap(&mut x, &mut y);
        }
        let norm: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
    }
}

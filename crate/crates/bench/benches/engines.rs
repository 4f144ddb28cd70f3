use anyonwalk::kauffman_tl::{markov_bracket_exact, PlatEvaluator};
use anyonwalk::quantum_double::double_walk_distribution;
use anyonwalk::walk_abelian::{default_spin, moments_analytic, simulate};
use anyonwalk::walk_nonabelian::{distribution_dense, distribution_pathsum, path_braid_word, PathVector};
use anyonwalk::{build_su2k, AbelianConfig, BraidWord, Coin, CoinState, WalkGeometry};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn su2k_engines(c: &mut Criterion) {
    let model = build_su2k(5).unwrap();
    let (coin, psi) = (Coin::hadamard(), CoinState::basis(0));
    let mut group = c.benchmark_group("su2k");
    for t in [4usize, 6, 8] {
        let geom = WalkGeometry::minimal(t);
        group.bench_with_input(BenchmarkId::new("dense", t), &t, |b, &t| {
            b.iter(|| distribution_dense(&model, &geom, t, &coin, &psi).unwrap())
        });
    }
    for t in [4usize, 5] {
        let geom = WalkGeometry::minimal(t);
        group.bench_with_input(BenchmarkId::new("pathsum", t), &t, |b, &t| {
            b.iter(|| distribution_pathsum(&model, &geom, t, &coin, &psi).unwrap())
        });
    }
    group.finish();
}

fn brackets(c: &mut Criterion) {
    let w = BraidWord::parse(6, "1 2 -3 4 5 -1 2 3 -4 5 1 -2").unwrap();
    c.bench_function("markov_bracket_exact/12_letters", |b| b.iter(|| markov_bracket_exact(black_box(&w))));

    let model = build_su2k(4).unwrap();
    let geom = WalkGeometry::minimal(5);
    let a = path_braid_word(&geom, &PathVector::new(vec![0, 1, 1, 0, 1]).unwrap()).unwrap();
    let ap = path_braid_word(&geom, &PathVector::new(vec![1, 0, 1, 0, 1]).unwrap()).unwrap();
    let mut ev = PlatEvaluator::for_model(&model, geom.n).unwrap();
    c.bench_function("anyon_trace/t5", |b| b.iter(|| ev.anyon_trace(black_box(&a), black_box(&ap)).unwrap()));
}

fn abelian(c: &mut Criterion) {
    let cfg = AbelianConfig::new(0.7, 200, default_spin()).unwrap();
    c.bench_function("abelian/simulate_t200", |b| b.iter(|| simulate(black_box(&cfg))));
    c.bench_function("abelian/moments_t200", |b| {
        b.iter(|| moments_analytic(black_box(0.7), 200, 2, &default_spin()).unwrap())
    });
}

fn quantum_double(c: &mut Criterion) {
    c.bench_function("dsn/N5_t4", |b| b.iter(|| double_walk_distribution(black_box(5), 4).unwrap()));
}

criterion_group!(benches, su2k_engines, brackets, abelian, quantum_double);
criterion_main!(benches);

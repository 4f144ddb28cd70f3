use anyonwalk::io::*;
use anyonwalk::quantum_double::double_walk_distribution;
use anyonwalk::walk_abelian::{default_spin, variance_surface};
use anyonwalk::walk_nonabelian::{baseline_quantum, level_sweep, Coin, CoinState, Engine, WalkGeometry};
use anyonwalk::{build_su2k, BraidWord, Closure, Error};
use proptest::prelude::*;

fn envelope(payload: Payload) -> ResultEnvelope {
    ResultEnvelope { payload, meta: EnvelopeMeta::new(serde_json::json!({ "t": 4 }), Some("dense".into()), 0.25) }
}

fn payloads() -> Vec<Payload> {
    let geom = WalkGeometry::minimal(3);
    let bracket = anyonwalk::kauffman_tl::markov_bracket_exact(&BraidWord::parse(2, "1 1 1").unwrap());
    vec![
        Payload::Distribution(baseline_quantum(7, &Coin::hadamard(), &CoinState::basis(0))),
        Payload::Distribution(double_walk_distribution(5, 4).unwrap()),
        Payload::Surface(variance_surface(&[0.3, 1.1], &[5, 9], &default_spin(), true).unwrap()),
        Payload::Sweep(
            level_sweep(&[2, 3], &geom, 3, &Coin::hadamard(), &CoinState::basis(0), Engine::Dense).unwrap(),
        ),
        Payload::Polynomial(BracketReport {
            strands: 2,
            word: "1 1 1".into(),
            closure: Closure::Markov,
            level: None,
            exact: Some(bracket.to_string()),
            value: None,
        }),
    ]
}

#[test]
fn json_round_trip_is_lossless() {
    for p in payloads() {
        let env = envelope(p);
        let text = to_json(&env).unwrap();
        assert_eq!(from_json(&text).unwrap(), env);
    }
}

#[test]
fn csv_tables_carry_every_value() {
    let p = payloads();
    let Payload::Distribution(d) = &p[0] else { unreachable!() };
    let text = to_csv(&p[0]).unwrap();
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(r.headers().unwrap(), vec!["s", "P"]);
    let rows: Vec<(i64, f64)> = r.deserialize().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), d.positions.len());
    for ((s, pr), (s2, p2)) in rows.iter().zip(d.positions.iter().zip(&d.probs)) {
        assert_eq!((s, pr), (s2, p2));
    }

    let text = to_csv(&p[2]).unwrap();
    assert!(text.starts_with("t,phi,v_sim,v_analytic\n"));
    assert_eq!(text.lines().count(), 5);

    let text = to_csv(&p[1]).unwrap();
    assert!(text.starts_with("s,P,P_exact\n-4,0.0625,1/16\n"));
}

#[test]
fn payload_bytes_are_deterministic() {
    let a: Vec<String> = payloads().iter().map(|p| to_csv(p).unwrap()).collect();
    let b: Vec<String> = payloads().iter().map(|p| to_csv(p).unwrap()).collect();
    assert_eq!(a, b);
    let ja = serde_json::to_string(&payloads()[3]).unwrap();
    let jb = serde_json::to_string(&payloads()[3]).unwrap();
    assert_eq!(ja, jb);
}

#[test]
fn json_payload_is_tagged() {
    let v: serde_json::Value = serde_json::from_str(&to_json(&envelope(payloads().remove(3))).unwrap()).unwrap();
    assert_eq!(v["payload"]["kind"], "sweep");
    assert_eq!(v["payload"]["data"][0]["k"], 2);
    assert!(v["meta"]["tool_version"].is_string());
}

#[test]
fn generator_dump_lists_nonzeros() {
    let space = anyonwalk::fusion_braid::enumerate_fusion_basis(&build_su2k(3).unwrap(), 6).unwrap();
    let g = anyonwalk::fusion_braid::braid_generator(&space, 2).unwrap();
    let text = generator_triplets_csv(&g.matrix).unwrap();
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<(usize, usize, f64, f64)> = r.deserialize().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), g.matrix.nnz());
    for (i, j, re, im) in rows {
        let z = g.matrix.get(i, j);
        assert_eq!((z.re, z.im), (re, im));
    }
}

#[test]
fn unwritable_sink_is_an_io_error() {
    struct Broken;
    impl std::io::Write for Broken {
        fn write(&mut self, _: &[u8]) -> std::io::Result<usize> {
            Err(std::io::Error::other("closed"))
        }
        fn flush(&mut self) -> std::io::Result<()> {
            Ok(())
        }
    }
    let env = envelope(payloads().remove(0));
    assert!(matches!(write_envelope(&env, Format::Csv, &mut Broken), Err(Error::Io(_))));
}

proptest! {
    #[test]
    fn floats_survive_json(xs in prop::collection::vec(-1e300f64..1e300, 1..20), tiny in 1e-300f64..1e-200) {
        let rows: Vec<_> = xs.iter().enumerate().map(|(i, &x)| anyonwalk::walk_nonabelian::SweepRow { k: i as i64 + 2, d_q: x, d_c: tiny }).collect();
        let env = envelope(Payload::Sweep(rows));
        prop_assert_eq!(from_json(&to_json(&env).unwrap()).unwrap(), env);
    }
}

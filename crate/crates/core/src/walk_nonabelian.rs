//! Single-coin walk of a σ anyon through a line of vacuum pairs.
//!
//! Sites are the anyons `1..=n`. The walker starts at `s0`, all other anyons
//! form nearest-neighbour vacuum pairs `(1,2)(3,4)…`. A step applies the coin,
//! then for coin bit 0 braids with the left neighbour (`b_{p-1}`) and moves
//! left, and for bit 1 braids with the right neighbour (`b_p`) and moves
//! right. All exchanges are counterclockwise.
//!
//! Two engines compute the position distribution:
//!
//! * [`distribution_dense`] evolves coin ⊗ position ⊗ fusion space,
//! * [`distribution_pathsum`] sums coin traces times anyon traces over
//!   pairs of paths with a common endpoint, the latter taken from plat
//!   closures of braid words.
//!
//! Reported positions are relative to `s0`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix2, Vector2};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::anyon_models::AnyonModel;
use crate::error::{Error, Result};
use crate::fusion_braid::{BraidRepresentation, TlRepresentation};
use crate::kauffman_tl::{BraidWord, Letter, PlatEvaluator};

/// Largest dense state, in complex amplitudes, before the dense engine
/// refuses to run.
pub const DEFAULT_AMPLITUDE_BUDGET: usize = 1 << 26;

/// Imaginary part tolerated in a path-pair sum before it is discarded.
pub const IMAGINARY_RESIDUE_TOL: f64 = 1e-9;

/// Exact rational probability, serialized as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(pub BigRational);

impl Fraction {
    pub fn new(num: i64, den: i64) -> Self {
        Fraction(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Fraction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not a fraction p/q"));
        let (p, q) = s.split_once('/').unwrap_or((s, "1"));
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Fraction(BigRational::new(p, q)))
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Steps of one walker history, `0` = left, `1` = right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathVector {
    bits: Vec<u8>,
}

impl PathVector {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidConfiguration("path bits must be 0 or 1".into()));
        }
        Ok(PathVector { bits })
    }

    /// Path whose `r`-th step is bit `r` of `code`.
    pub fn from_code(t: usize, code: u64) -> Self {
        PathVector { bits: (0..t).map(|r| ((code >> r) & 1) as u8).collect() }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Net displacement `Σ(2a_r - 1)`.
    pub fn displacement(&self) -> i64 {
        self.bits.iter().map(|&b| 2 * i64::from(b) - 1).sum()
    }

    pub fn last(&self) -> Option<u8> {
        self.bits.last().copied()
    }

    pub fn all(t: usize) -> Vec<PathVector> {
        (0..1u64 << t).map(|c| PathVector::from_code(t, c)).collect()
    }
}

/// Two paths with the same endpoint and the same final coin bit; all other
/// pairs have zero weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopPair {
    pub a: PathVector,
    pub ap: PathVector,
}

impl LoopPair {
    pub fn new(a: PathVector, ap: PathVector) -> Result<Self> {
        if a.len() != ap.len() || a.displacement() != ap.displacement() || a.last() != ap.last() {
            return Err(Error::InvalidConfiguration("paths differ in endpoint or final coin bit".into()));
        }
        Ok(LoopPair { a, ap })
    }
}

/// All ordered loop pairs of `t`-step paths.
pub fn loop_pairs(t: usize) -> Vec<LoopPair> {
    let mut groups: std::collections::BTreeMap<(i64, Option<u8>), Vec<PathVector>> = Default::default();
    for p in PathVector::all(t) {
        groups.entry((p.displacement(), p.last())).or_default().push(p);
    }
    let mut out = Vec::new();
    for paths in groups.values() {
        for a in paths {
            for ap in paths {
                out.push(LoopPair { a: a.clone(), ap: ap.clone() });
            }
        }
    }
    out
}

/// Anyon count and starting site of the walker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkGeometry {
    pub n: usize,
    pub s0: usize,
}

impl WalkGeometry {
    pub fn new(n: usize, s0: usize) -> Result<Self> {
        if n % 2 == 1 || n < 4 {
            return Err(Error::InvalidConfiguration(format!("anyon count must be even and at least 4, got {n}")));
        }
        if s0 == 0 || s0 > n {
            return Err(Error::InvalidConfiguration(format!("start site {s0} outside 1..={n}")));
        }
        Ok(WalkGeometry { n, s0 })
    }

    /// `n` anyons with the walker at the left end of the central pair.
    pub fn centered(n: usize) -> Result<Self> {
        WalkGeometry::new(n, default_start(n))
    }

    /// The smallest boundary-free geometry for `t` steps, `n = 2t + 2`.
    pub fn minimal(t: usize) -> Self {
        let n = 2 * t + 2;
        WalkGeometry { n: n.max(4), s0: default_start(n.max(4)) }
    }

    /// Errors unless every `t`-step path stays on braid letters `1..n-1`.
    pub fn check_steps(&self, t: usize) -> Result<()> {
        if t == 0 {
            return Ok(());
        }
        if self.s0 < t + 1 || self.s0 + t > self.n {
            return Err(Error::Boundary(format!(
                "{t} steps from site {} need sites {}..={} inside 1..={}",
                self.s0,
                self.s0 as i64 - t as i64,
                self.s0 + t,
                self.n
            )));
        }
        Ok(())
    }
}

/// `n/2` when odd, else `n/2 + 1`: the walker is the left anyon of a
/// vacuum pair.
pub fn default_start(n: usize) -> usize {
    let half = n / 2;
    if half % 2 == 1 {
        half
    } else {
        half + 1
    }
}

/// The braid traced out by path `a`, first step first.
pub fn path_braid_word(geom: &WalkGeometry, a: &PathVector) -> Result<BraidWord> {
    let mut word = BraidWord::identity(geom.n);
    let mut p = geom.s0 as i64;
    for &bit in a.bits() {
        let index = p + i64::from(bit) - 1;
        if index < 1 || index >= geom.n as i64 {
            return Err(Error::Boundary(format!("path leaves the strand range at site {p}")));
        }
        word.push(Letter::new(index as usize, 1))?;
        p += 2 * i64::from(bit) - 1;
    }
    Ok(word)
}

/// A 2×2 unitary coin.
#[derive(Debug, Clone, PartialEq)]
pub struct Coin {
    name: String,
    matrix: Matrix2<Complex64>,
}

impl Coin {
    pub fn hadamard() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Coin { name: "H".into(), matrix: Matrix2::new(s, s, s, -s) }
    }

    /// `(1/√2)[[1, i], [i, 1]]`.
    pub fn balanced_u() -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let one = Complex64::new(s, 0.0);
        let i = Complex64::new(0.0, s);
        Coin { name: "U".into(), matrix: Matrix2::new(one, i, i, one) }
    }

    pub fn custom(name: &str, matrix: Matrix2<Complex64>) -> Result<Self> {
        let defect = (matrix.adjoint() * matrix - Matrix2::identity()).norm();
        if defect > 1e-10 {
            return Err(Error::InvalidConfiguration(format!("coin is not unitary (defect {defect:.2e})")));
        }
        Ok(Coin { name: name.to_string(), matrix })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.matrix
    }

    /// `⟨to|coin|from⟩`.
    pub fn entry(&self, to: u8, from: u8) -> Complex64 {
        self.matrix[(to as usize, from as usize)]
    }

    fn is_hadamard(&self) -> bool {
        (self.matrix - Coin::hadamard().matrix).norm() < 1e-15
    }
}

impl FromStr for Coin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(Coin::hadamard()),
            "U" | "u" => Ok(Coin::balanced_u()),
            other => Err(Error::Parse(format!("unknown coin `{other}`; expected H or U"))),
        }
    }
}

/// Normalized initial coin state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinState(pub Vector2<Complex64>);

impl CoinState {
    pub fn basis(bit: u8) -> Self {
        let mut v = Vector2::zeros();
        v[bit as usize & 1] = Complex64::one();
        CoinState(v)
    }

    pub fn new(v: Vector2<Complex64>) -> Result<Self> {
        let norm = v.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidConfiguration(format!("coin state has norm {norm}")));
        }
        Ok(CoinState(v))
    }

    pub fn label(&self) -> String {
        let v = &self.0;
        if v[1].is_zero() && v[0] == Complex64::one() {
            "|0>".into()
        } else if v[0].is_zero() && v[1] == Complex64::one() {
            "|1>".into()
        } else {
            format!("[{}, {}]", v[0], v[1])
        }
    }
}

impl Default for CoinState {
    fn default() -> Self {
        CoinState::basis(0)
    }
}

/// Coin amplitude of one history: `(Uψ)[a_1] · Π_{r≥2} U[a_r][a_{r-1}]`.
pub fn coin_amplitude(a: &PathVector, coin: &Coin, psi: &CoinState) -> Complex64 {
    let bits = a.bits();
    let Some(&first) = bits.first() else {
        return Complex64::one();
    };
    let start = coin.entry(first, 0) * psi.0[0] + coin.entry(first, 1) * psi.0[1];
    bits.windows(2).fold(start, |acc, w| acc * coin.entry(w[1], w[0]))
}

/// `c_a · conj(c_ap)` when the final bits agree, else 0.
pub fn coin_trace(a: &PathVector, ap: &PathVector, coin: &Coin, psi: &CoinState) -> Complex64 {
    if a.last() != ap.last() {
        return Complex64::zero();
    }
    coin_amplitude(a, coin, psi) * coin_amplitude(ap, coin, psi).conj()
}

/// Hadamard coin from `|0⟩`: `(-1)^z / 2^t` with `z` the number of
/// successive `11` pairs in the two paths.
pub fn hadamard_coin_trace(a: &PathVector, ap: &PathVector) -> f64 {
    if a.last() != ap.last() {
        return 0.0;
    }
    let ones = |p: &PathVector| p.bits().windows(2).filter(|w| w[0] == 1 && w[1] == 1).count();
    let sign = if (ones(a) + ones(ap)) % 2 == 0 { 1.0 } else { -1.0 };
    sign * 0.5f64.powi(a.len() as i32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Dense,
    Pathsum,
}

impl Engine {
    /// Dense from six steps on, where path sums get expensive.
    pub fn default_for(t: usize) -> Self {
        if t >= 6 {
            Engine::Dense
        } else {
            Engine::Pathsum
        }
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Engine::Dense),
            "pathsum" => Ok(Engine::Pathsum),
            other => Err(Error::Parse(format!("unknown engine `{other}`; expected dense or pathsum"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Dense => "dense",
            Engine::Pathsum => "pathsum",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionMeta {
    pub engine: String,
    pub model: String,
    pub t: usize,
    pub n: Option<usize>,
    pub s0: Option<usize>,
    pub coin: Option<String>,
    pub initial: Option<String>,
}

impl DistributionMeta {
    fn walk(engine: &str, model: String, t: usize, geom: Option<&WalkGeometry>, coin: &Coin, psi: &CoinState) -> Self {
        DistributionMeta {
            engine: engine.to_string(),
            model,
            t,
            n: geom.map(|g| g.n),
            s0: geom.map(|g| g.s0),
            coin: Some(coin.name().to_string()),
            initial: Some(psi.label()),
        }
    }
}

/// Position distribution at a fixed time, positions relative to the start.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    pub positions: Vec<i64>,
    pub probs: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<Fraction>>,
    pub meta: DistributionMeta,
}

impl Distribution {
    pub fn get(&self, s: i64) -> f64 {
        self.positions.iter().position(|&p| p == s).map_or(0.0, |i| self.probs[i])
    }

    pub fn total(&self) -> f64 {
        pairwise_sum(&self.probs)
    }

    pub fn mean(&self) -> f64 {
        let terms: Vec<f64> = self.positions.iter().zip(&self.probs).map(|(&s, &p)| s as f64 * p).collect();
        pairwise_sum(&terms)
    }

    pub fn variance(&self) -> f64 {
        let terms: Vec<f64> = self.positions.iter().zip(&self.probs).map(|(&s, &p)| (s * s) as f64 * p).collect();
        let m = self.mean();
        pairwise_sum(&terms) - m * m
    }

    /// Normalization within 1e-9 and no probability below -1e-12.
    pub fn validate(&self) -> Result<()> {
        if let Some((s, p)) = self.positions.iter().zip(&self.probs).find(|(_, &p)| p < -1e-12) {
            return Err(Error::Numeric(format!("negative probability {p:e} at s = {s}")));
        }
        let total = self.total();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Numeric(format!("probabilities sum to {total}")));
        }
        Ok(())
    }

    /// Keeps positions `-t..=t` of the parity of `t`, filling zeros.
    fn on_lattice(t: usize, values: impl Fn(i64) -> f64, meta: DistributionMeta) -> Self {
        let positions: Vec<i64> = (0..=t).map(|j| 2 * j as i64 - t as i64).collect();
        let probs = positions.iter().map(|&s| values(s)).collect();
        Distribution { positions, probs, exact: None, meta }
    }
}

/// Euclidean distance on the union of supports.
pub fn distance(p: &Distribution, q: &Distribution) -> f64 {
    let mut support: Vec<i64> = p.positions.iter().chain(&q.positions).copied().collect();
    support.sort_unstable();
    support.dedup();
    let sq: Vec<f64> = support.iter().map(|&s| (p.get(s) - q.get(s)).powi(2)).collect();
    pairwise_sum(&sq).sqrt()
}

/// Order-fixed pairwise summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n if n <= 8 => xs.iter().sum(),
        n => pairwise_sum(&xs[..n / 2]) + pairwise_sum(&xs[n / 2..]),
    }
}

fn pairwise_sum_complex(xs: &[Complex64]) -> Complex64 {
    match xs.len() {
        0 => Complex64::zero(),
        n if n <= 8 => xs.iter().sum(),
        n => pairwise_sum_complex(&xs[..n / 2]) + pairwise_sum_complex(&xs[n / 2..]),
    }
}

/// Walk distribution from the path-pair expansion.
pub fn distribution_pathsum(
    model: &AnyonModel,
    geom: &WalkGeometry,
    t: usize,
    coin: &Coin,
    psi: &CoinState,
) -> Result<Distribution> {
    geom.check_steps(t)?;
    if t > 20 {
        return Err(Error::InvalidConfiguration(format!("{t} steps is far beyond the path-sum range")));
    }
    let pairs = loop_pairs(t);
    let words: HashMap<PathVector, BraidWord> = PathVector::all(t)
        .into_iter()
        .map(|p| path_braid_word(geom, &p).map(|w| (p, w)))
        .collect::<Result<_>>()?;
    let fast_coin = coin.is_hadamard() && *psi == CoinState::basis(0);
    let contributions: Vec<(i64, Complex64)> = pairs
        .par_iter()
        .map_init(
            || (PlatEvaluator::for_model(model, geom.n), HashMap::<BraidWord, Complex64>::new()),
            |(evaluator, memo), pair| -> Result<(i64, Complex64)> {
                let c = if fast_coin {
                    Complex64::new(hadamard_coin_trace(&pair.a, &pair.ap), 0.0)
                } else {
                    coin_trace(&pair.a, &pair.ap, coin, psi)
                };
                let s = pair.a.displacement();
                if c.is_zero() {
                    return Ok((s, c));
                }
                let w = words[&pair.a].then(&words[&pair.ap].inverse())?.free_reduce();
                let trace = match memo.get(&w) {
                    Some(&v) => v,
                    None => {
                        let ev = evaluator.as_mut().map_err(|e| e.clone())?;
                        let v = ev.anyon_trace(&w, &BraidWord::identity(geom.n))?;
                        memo.insert(w, v);
                        v
                    }
                };
                Ok((s, c * trace))
            },
        )
        .collect::<Result<_>>()?;
    let mut by_site: std::collections::BTreeMap<i64, Vec<Complex64>> = Default::default();
    for (s, v) in contributions {
        by_site.entry(s).or_default().push(v);
    }
    let mut probs: HashMap<i64, f64> = HashMap::new();
    for (s, vals) in by_site {
        let p = pairwise_sum_complex(&vals);
        if p.im.abs() > IMAGINARY_RESIDUE_TOL {
            return Err(Error::Numeric(format!("path-pair sum at s = {s} has imaginary part {:e}", p.im)));
        }
        probs.insert(s, p.re);
    }
    let meta = DistributionMeta::walk("pathsum", model.name(), t, Some(geom), coin, psi);
    let dist = Distribution::on_lattice(t, |s| probs.get(&s).copied().unwrap_or(0.0), meta);
    dist.validate()?;
    Ok(dist)
}

/// Walk distribution by evolving the full state with the Temperley-Lieb
/// representation of `model`.
pub fn distribution_dense(
    model: &AnyonModel,
    geom: &WalkGeometry,
    t: usize,
    coin: &Coin,
    psi: &CoinState,
) -> Result<Distribution> {
    geom.check_steps(t)?;
    let dim = usize::try_from(crate::fusion_braid::fusion_dimension(model, geom.n)).unwrap_or(usize::MAX);
    check_budget(dim, geom, DEFAULT_AMPLITUDE_BUDGET)?;
    let rep = TlRepresentation::new(model, geom.n)?;
    let mut dist = distribution_dense_with(&rep, geom, t, coin, psi, DEFAULT_AMPLITUDE_BUDGET)?;
    dist.meta.model = model.name();
    Ok(dist)
}

fn check_budget(dim: usize, geom: &WalkGeometry, budget: usize) -> Result<()> {
    let required = dim.saturating_mul(geom.n + 1).saturating_mul(2);
    if required > budget {
        return Err(Error::MemoryBudget { required, budget });
    }
    Ok(())
}

/// Dense evolution in any braid representation.
pub fn distribution_dense_with<R: BraidRepresentation>(
    rep: &R,
    geom: &WalkGeometry,
    t: usize,
    coin: &Coin,
    psi: &CoinState,
    budget: usize,
) -> Result<Distribution> {
    if rep.strands() != geom.n {
        return Err(Error::StrandMismatch { left: geom.n, right: rep.strands() });
    }
    geom.check_steps(t)?;
    check_budget(rep.dim(), geom, budget)?;
    let dim = rep.dim();
    let alpha = rep.initial_state();
    // state[p] = (coin 0 component, coin 1 component) at site p
    let mut state: Vec<Option<[Vec<Complex64>; 2]>> = vec![None; geom.n + 1];
    state[geom.s0] = Some([
        alpha.iter().map(|&z| z * psi.0[0]).collect(),
        alpha.iter().map(|&z| z * psi.0[1]).collect(),
    ]);
    let u = coin.matrix();
    for _ in 0..t {
        let moves: Vec<(usize, u8, Vec<Complex64>)> = state
            .par_iter()
            .enumerate()
            .filter_map(|(p, slot)| slot.as_ref().map(|v| (p, v)))
            .flat_map_iter(|(p, [v0, v1])| {
                let mut out = Vec::with_capacity(2);
                for bit in 0..2u8 {
                    let (c0, c1) = (u[(bit as usize, 0)], u[(bit as usize, 1)]);
                    let mixed: Vec<Complex64> = v0.iter().zip(v1).map(|(&x, &y)| c0 * x + c1 * y).collect();
                    let mut braided = vec![Complex64::zero(); dim];
                    rep.apply(p + bit as usize - 1, &mixed, &mut braided);
                    let target = if bit == 0 { p - 1 } else { p + 1 };
                    out.push((target, bit, braided));
                }
                out
            })
            .collect();
        let mut next: Vec<Option<[Vec<Complex64>; 2]>> = vec![None; geom.n + 1];
        for (p, bit, v) in moves {
            let slot = next[p].get_or_insert_with(|| [vec![Complex64::zero(); dim], vec![Complex64::zero(); dim]]);
            slot[bit as usize] = v;
        }
        state = next;
    }
    let probs_by_site: HashMap<i64, f64> = state
        .iter()
        .enumerate()
        .filter_map(|(p, slot)| {
            slot.as_ref().map(|[v0, v1]| {
                let sq: Vec<f64> = v0.iter().chain(v1).map(|z| z.norm_sqr()).collect();
                (p as i64 - geom.s0 as i64, pairwise_sum(&sq))
            })
        })
        .collect();
    let meta = DistributionMeta::walk("dense", rep.name(), t, Some(geom), coin, psi);
    let dist = Distribution::on_lattice(t, |s| probs_by_site.get(&s).copied().unwrap_or(0.0), meta);
    dist.validate()?;
    Ok(dist)
}

/// Dispatches to the chosen engine.
pub fn distribution(
    model: &AnyonModel,
    geom: &WalkGeometry,
    t: usize,
    coin: &Coin,
    psi: &CoinState,
    engine: Engine,
) -> Result<Distribution> {
    match engine {
        Engine::Dense => distribution_dense(model, geom, t, coin, psi),
        Engine::Pathsum => distribution_pathsum(model, geom, t, coin, psi),
    }
}

/// The standard two-state coined walk on the line, bit 0 moving left.
pub fn baseline_quantum(t: usize, coin: &Coin, psi: &CoinState) -> Distribution {
    let width = 2 * t + 1;
    let mut amp = vec![[Complex64::zero(); 2]; width];
    amp[t] = [psi.0[0], psi.0[1]];
    let u = coin.matrix();
    for _ in 0..t {
        let mut next = vec![[Complex64::zero(); 2]; width];
        for (x, [v0, v1]) in amp.iter().enumerate() {
            if v0.is_zero() && v1.is_zero() {
                continue;
            }
            next[x - 1][0] += u[(0, 0)] * v0 + u[(0, 1)] * v1;
            next[x + 1][1] += u[(1, 0)] * v0 + u[(1, 1)] * v1;
        }
        amp = next;
    }
    let meta = DistributionMeta {
        engine: "baseline-quantum".into(),
        model: "none".into(),
        t,
        n: None,
        s0: None,
        coin: Some(coin.name().to_string()),
        initial: Some(psi.label()),
    };
    Distribution::on_lattice(t, |s| amp[(s + t as i64) as usize].iter().map(|z| z.norm_sqr()).sum(), meta)
}

/// Binomial distribution `P(2j - t) = C(t, j) / 2^t`, with exact values.
pub fn baseline_classical(t: usize) -> Distribution {
    let denom = BigInt::one() << t;
    let mut binom = BigInt::one();
    let mut exact = Vec::with_capacity(t + 1);
    for j in 0..=t {
        exact.push(Fraction(BigRational::new(binom.clone(), denom.clone())));
        binom = binom * BigInt::from(t - j) / BigInt::from(j + 1);
    }
    let positions: Vec<i64> = (0..=t).map(|j| 2 * j as i64 - t as i64).collect();
    let probs = exact.iter().map(Fraction::to_f64).collect();
    let meta = DistributionMeta {
        engine: "baseline-classical".into(),
        model: "none".into(),
        t,
        n: None,
        s0: None,
        coin: None,
        initial: None,
    };
    Distribution { positions, probs, exact: Some(exact), meta }
}

/// Sum of exact probabilities, if present.
pub fn exact_total(d: &Distribution) -> Option<BigRational> {
    d.exact.as_ref().map(|v| v.iter().fold(BigRational::zero(), |acc, f| acc + &f.0))
}

/// True when every exact value is non-negative.
pub fn exact_nonnegative(d: &Distribution) -> bool {
    d.exact.as_ref().is_none_or(|v| v.iter().all(|f| !f.0.is_negative()))
}

/// Distances of one level's distribution to the plain quantum and
/// classical walks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k: i64,
    pub d_q: f64,
    pub d_c: f64,
}

/// `d_q` and `d_c` for each level in `levels`, in order.
pub fn level_sweep(
    levels: &[i64],
    geom: &WalkGeometry,
    t: usize,
    coin: &Coin,
    psi: &CoinState,
    engine: Engine,
) -> Result<Vec<SweepRow>> {
    let quantum = baseline_quantum(t, coin, psi);
    let classical = baseline_classical(t);
    levels
        .iter()
        .map(|&k| {
            let model = crate::anyon_models::build_su2k(k)?;
            let p = distribution(&model, geom, t, coin, psi, engine)?;
            log::info!("k = {k} done");
            Ok(SweepRow { k, d_q: distance(&p, &quantum), d_c: distance(&p, &classical) })
        })
        .collect()
}

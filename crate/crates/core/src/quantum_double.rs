//! Markov traces for the (2,1) anyon of D(S_N) and the resulting walk.
//!
//! For a canonical word, in which every generator occurs in a single block
//! `b_i^m`, the closure is a connected sum of `(2, m)` torus links and the
//! link polynomial factorizes. General words are first brought to that form
//! by a rewrite search using free and cyclic reduction, far commutation,
//! braid relations and Markov destabilization.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::anyon_models::{build_dsn, DoubleIrrepParams};
use crate::error::{Error, Result};
use crate::kauffman_tl::BraidWord;
use crate::walk_nonabelian::{
    coin_trace, loop_pairs, path_braid_word, Coin, CoinState, Distribution, DistributionMeta, Fraction, PathVector,
    WalkGeometry,
};

/// States explored by one rewrite search before giving up.
pub const REWRITE_STATE_CAP: usize = 20_000;

/// Blocks `(i, m)` with pairwise distinct generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalWord {
    factors: Vec<(usize, i64)>,
}

impl CanonicalWord {
    pub fn new(factors: Vec<(usize, i64)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(i, m) in &factors {
            if !seen.insert(i) {
                return Err(Error::NonCanonical(i));
            }
            if m == 0 {
                return Err(Error::InvalidConfiguration(format!("factor b_{i}^0 has zero power")));
            }
        }
        Ok(CanonicalWord { factors })
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.factors
    }
}

/// `1 + (2/3)(N-2)[1 + 2cos(2mπ/3)] + (1/4)(N-2)(N-3)[1 + (-1)^m]`.
fn torus_factor(order: u32, m: i64) -> BigRational {
    let n = BigInt::from(order);
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let mut f = BigInt::one();
    if m % 3 == 0 {
        f += &two * (&n - &two);
    }
    if m % 2 == 0 {
        f += (&n - &two) * (&n - &three) / &two;
    }
    BigRational::from_integer(f)
}

/// Link polynomial of the Markov closure of a canonical word.
pub fn canonical_link_polynomial(order: i64, w: &CanonicalWord) -> Result<BigRational> {
    let params = build_dsn(order)?;
    Ok(w.factors.iter().map(|&(_, m)| torus_factor(params.order(), m)).product())
}

/// A Markov trace value with the rewrite steps that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarkovValue {
    pub value: Fraction,
    pub trace: Vec<String>,
}

type Blocks = Vec<(usize, i64)>;

fn fmt_blocks(b: &[(usize, i64)]) -> String {
    if b.is_empty() {
        return "1".into();
    }
    b.iter().map(|(i, m)| format!("b{i}^{m}")).collect::<Vec<_>>().join(" ")
}

/// Merges equal neighbours cyclically and drops zero powers.
fn normalize(blocks: &[(usize, i64)]) -> Blocks {
    let mut out: Blocks = Vec::with_capacity(blocks.len());
    for &(i, m) in blocks {
        if m == 0 {
            continue;
        }
        match out.last_mut() {
            Some((j, p)) if *j == i => {
                *p += m;
                if *p == 0 {
                    out.pop();
                }
            }
            _ => out.push((i, m)),
        }
    }
    while out.len() >= 2 && out[0].0 == out[out.len() - 1].0 {
        let (_, m) = out.pop().unwrap();
        out[0].1 += m;
        if out[0].1 == 0 {
            out.remove(0);
        }
    }
    out
}

/// Lexicographically least rotation, used as the dedupe key.
fn rotation_key(blocks: &[(usize, i64)]) -> Blocks {
    (0..blocks.len().max(1))
        .map(|r| {
            let mut v = blocks.to_vec();
            if !v.is_empty() {
                v.rotate_left(r);
            }
            v
        })
        .min()
        .unwrap_or_default()
}

fn letter_count(blocks: &[(usize, i64)]) -> u64 {
    blocks.iter().map(|(_, m)| m.unsigned_abs()).sum()
}

fn is_canonical(blocks: &[(usize, i64)]) -> bool {
    let mut seen = HashSet::new();
    blocks.iter().all(|&(i, _)| seen.insert(i))
}

/// Splits into sub-words on disjoint strand ranges, preserving order.
fn components(blocks: &[(usize, i64)]) -> Vec<Blocks> {
    let mut idx: Vec<usize> = blocks.iter().map(|&(i, _)| i).collect();
    idx.sort_unstable();
    idx.dedup();
    let mut ranges: Vec<(usize, usize)> = Vec::new();
    for i in idx {
        match ranges.last_mut() {
            Some((_, hi)) if i <= *hi + 1 => *hi = i,
            _ => ranges.push((i, i)),
        }
    }
    ranges
        .iter()
        .map(|&(lo, hi)| blocks.iter().copied().filter(|&(i, _)| i >= lo && i <= hi).collect())
        .collect()
}

/// Removes a lone `b_i^{±1}` at the top or bottom of the index range.
fn destabilize(blocks: &[(usize, i64)]) -> Option<(Blocks, usize)> {
    let lo = blocks.iter().map(|b| b.0).min()?;
    let hi = blocks.iter().map(|b| b.0).max()?;
    for extreme in [hi, lo] {
        let hits: Vec<usize> = (0..blocks.len()).filter(|&k| blocks[k].0 == extreme).collect();
        if hits.len() == 1 && blocks[hits[0]].1.abs() == 1 {
            let mut rest = blocks.to_vec();
            rest.remove(hits[0]);
            return Some((normalize(&rest), extreme));
        }
    }
    None
}

/// One-move neighbours under far commutation and the braid relations
/// `b_i^ε b_j^m b_i^-ε = b_j^-ε b_i^m b_j^ε` and `b_i b_j b_i = b_j b_i b_j`.
fn neighbours(blocks: &[(usize, i64)]) -> Vec<Blocks> {
    let len = blocks.len();
    let mut out = Vec::new();
    if len < 2 {
        return out;
    }
    for k in 0..len {
        let mut v = blocks.to_vec();
        v.rotate_left(k);
        let (x, y) = (v[0], v[1]);
        if x.0.abs_diff(y.0) >= 2 {
            let mut w = v.clone();
            w.swap(0, 1);
            out.push(normalize(&w));
        }
        if len < 3 {
            continue;
        }
        let z = v[2];
        if x.0 != z.0 || x.0.abs_diff(y.0) != 1 {
            continue;
        }
        let (i, j) = (x.0, y.0);
        let eps = x.1.signum();
        let tail = &v[3..];
        if z.1.signum() == -eps {
            let mut w = vec![(i, x.1 - eps), (j, -eps), (i, y.1), (j, eps), (i, z.1 + eps)];
            w.extend_from_slice(tail);
            out.push(normalize(&w));
        }
        if z.1.signum() == eps && y.1 == eps {
            let mut w = vec![(i, x.1 - eps), (j, eps), (i, eps), (j, eps), (i, z.1 - eps)];
            w.extend_from_slice(tail);
            out.push(normalize(&w));
        }
    }
    out
}

struct Reducer<'a> {
    params: &'a DoubleIrrepParams,
    memo: HashMap<Blocks, BigRational>,
    trace: Vec<String>,
}

impl Reducer<'_> {
    fn z(&self) -> BigRational {
        let z = self.params.z();
        BigRational::new(BigInt::from(*z.numer()), BigInt::from(*z.denom()))
    }

    fn eval(&mut self, blocks: &[(usize, i64)]) -> Result<BigRational> {
        let w = normalize(blocks);
        if w.is_empty() {
            return Ok(BigRational::one());
        }
        let key = rotation_key(&w);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let v = self.eval_uncached(&w)?;
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn eval_uncached(&mut self, w: &[(usize, i64)]) -> Result<BigRational> {
        let parts = components(w);
        if parts.len() > 1 {
            self.trace.push(format!("split {} into {} factors", fmt_blocks(w), parts.len()));
            let mut v = BigRational::one();
            for p in parts {
                v *= self.eval(&p)?;
            }
            return Ok(v);
        }
        if is_canonical(w) {
            let d = BigRational::from_integer(BigInt::from(self.params.dim()));
            let v = w
                .iter()
                .map(|&(_, m)| torus_factor(self.params.order(), m) / &d)
                .product::<BigRational>();
            self.trace.push(format!("canonical {} = {}", fmt_blocks(w), Fraction(v.clone())));
            return Ok(v);
        }
        if let Some((rest, i)) = destabilize(w) {
            self.trace.push(format!("destabilize b{i} in {}", fmt_blocks(w)));
            return Ok(self.z() * self.eval(&rest)?);
        }
        let target = self.search(w)?;
        self.trace.push(format!("rewrite {} -> {}", fmt_blocks(w), fmt_blocks(&target)));
        self.eval(&target)
    }

    /// Breadth-first search for an equivalent word that is shorter, splits,
    /// is canonical, or can be destabilized.
    fn search(&self, start: &[(usize, i64)]) -> Result<Blocks> {
        let length = letter_count(start);
        let mut seen: HashSet<Blocks> = HashSet::new();
        let mut queue: VecDeque<Blocks> = VecDeque::new();
        seen.insert(rotation_key(start));
        queue.push_back(start.to_vec());
        while let Some(w) = queue.pop_front() {
            for next in neighbours(&w) {
                let progress = letter_count(&next) < length
                    || is_canonical(&next)
                    || components(&next).len() > 1
                    || destabilize(&next).is_some();
                if progress {
                    return Ok(next);
                }
                if seen.insert(rotation_key(&next)) {
                    if seen.len() > REWRITE_STATE_CAP {
                        return Err(Error::IrreducibleWord(format!(
                            "{} (no canonical form within {REWRITE_STATE_CAP} rewrite states)",
                            fmt_blocks(start)
                        )));
                    }
                    queue.push_back(next);
                }
            }
        }
        Err(Error::IrreducibleWord(format!("{} (rewrite orbit exhausted)", fmt_blocks(start))))
    }
}

/// Markov trace `φ(w)` of the (2,1) irrep, `φ(identity) = 1`.
pub fn markov_trace_word(order: i64, w: &BraidWord) -> Result<MarkovValue> {
    let params = build_dsn(order)?;
    let mut r = Reducer { params: &params, memo: HashMap::new(), trace: Vec::new() };
    let value = r.eval(&w.blocks())?;
    Ok(MarkovValue { value: Fraction(value), trace: r.trace })
}

/// `φ` of a canonical word: the link polynomial over `d^(factors)`.
pub fn markov_trace_canonical(order: i64, w: &CanonicalWord) -> Result<BigRational> {
    let params = build_dsn(order)?;
    let d = BigRational::from_integer(BigInt::from(params.dim()));
    let mut v = canonical_link_polynomial(order, w)?;
    for _ in 0..w.factors.len() {
        v /= &d;
    }
    Ok(v)
}

/// Coin trace times `2^t` as an exact integer.
fn exact_coin_weight(a: &PathVector, ap: &PathVector, coin: &Coin, psi: &CoinState) -> Result<BigInt> {
    let z = coin_trace(a, ap, coin, psi) * 2f64.powi(a.len() as i32);
    let re = z.re.round();
    if (z.re - re).abs() > 1e-9 || z.im.abs() > 1e-9 {
        return Err(Error::Numeric(format!(
            "coin trace {z} times 2^t is not an integer; exact mode supports H and U from basis states"
        )));
    }
    Ok(BigInt::from(re as i64))
}

/// Walk distribution with coin `U` from `|0⟩`, exact.
pub fn double_walk_distribution(order: i64, t: usize) -> Result<Distribution> {
    double_walk_distribution_with(order, t, &Coin::balanced_u(), &CoinState::basis(0))
}

pub fn double_walk_distribution_with(order: i64, t: usize, coin: &Coin, psi: &CoinState) -> Result<Distribution> {
    let params = build_dsn(order)?;
    if t > 12 {
        return Err(Error::InvalidConfiguration(format!("{t} steps is far beyond the path-sum range")));
    }
    let geom = WalkGeometry::minimal(t);
    let words: HashMap<PathVector, BraidWord> = PathVector::all(t)
        .into_iter()
        .map(|p| path_braid_word(&geom, &p).map(|w| (p, w)))
        .collect::<Result<_>>()?;
    let pairs = loop_pairs(t);
    let terms: Vec<(i64, BigRational)> = pairs
        .par_iter()
        .map_init(HashMap::<Blocks, BigRational>::new, |memo, pair| -> Result<(i64, BigRational)> {
            let s = pair.a.displacement();
            let c = exact_coin_weight(&pair.a, &pair.ap, coin, psi)?;
            if c.is_zero() {
                return Ok((s, BigRational::zero()));
            }
            let w = words[&pair.a].then(&words[&pair.ap].inverse())?.free_reduce();
            let key = rotation_key(&normalize(&w.blocks()));
            let phi = match memo.get(&key) {
                Some(v) => v.clone(),
                None => {
                    let mut r = Reducer { params: &params, memo: HashMap::new(), trace: Vec::new() };
                    let v = r.eval(&key)?;
                    memo.insert(key, v.clone());
                    v
                }
            };
            Ok((s, BigRational::from_integer(c) * phi))
        })
        .collect::<Result<_>>()?;
    let scale = BigRational::from_integer(BigInt::one() << t);
    let positions: Vec<i64> = (0..=t).map(|j| 2 * j as i64 - t as i64).collect();
    let mut exact: Vec<BigRational> = vec![BigRational::zero(); positions.len()];
    for (s, v) in terms {
        exact[((s + t as i64) / 2) as usize] += v;
    }
    let exact: Vec<Fraction> = exact.into_iter().map(|v| Fraction(v / &scale)).collect();
    let meta = DistributionMeta {
        engine: "markov".into(),
        model: params.name(),
        t,
        n: Some(geom.n),
        s0: Some(geom.s0),
        coin: Some(coin.name().to_string()),
        initial: Some(psi.label()),
    };
    let probs = exact.iter().map(Fraction::to_f64).collect();
    let dist = Distribution { positions, probs, exact: Some(exact), meta };
    dist.validate()?;
    Ok(dist)
}

impl fmt::Display for MarkovValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

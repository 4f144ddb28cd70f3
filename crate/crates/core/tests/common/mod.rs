//! Reference implementations used only by tests. They avoid every code path
//! of the library they check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use anyonwalk::{BraidWord, Closure, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub type Poly = BTreeMap<i32, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn loop_poly() -> Poly {
    Poly::from([(2, -1), (-2, -1)])
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
    fn components(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Bracket of a closed braid by the full `2^c` state sum, each state
/// weighted by `d^(loops - 1)`.
pub fn state_sum_bracket(w: &BraidWord, closure: Closure) -> Poly {
    let n = w.strands();
    let letters = w.letters();
    let c = letters.len();
    assert!(c <= 20, "state sum over {c} crossings is too large");
    let node = |level: usize, pos: usize| level * n + pos;
    let mut total = Poly::new();
    for state in 0u32..(1 << c) {
        let mut dsu = Dsu::new(n * (c + 1));
        let mut exp = 0i32;
        for (level, l) in letters.iter().enumerate() {
            let p = l.index - 1;
            let smooth_vertical = state >> level & 1 == 0;
            // vertical smoothing carries A^power, horizontal A^-power
            exp += if smooth_vertical { l.power as i32 } else { -(l.power as i32) };
            for q in 0..n {
                if q != p && q != p + 1 {
                    dsu.union(node(level, q), node(level + 1, q));
                }
            }
            if smooth_vertical {
                dsu.union(node(level, p), node(level + 1, p));
                dsu.union(node(level, p + 1), node(level + 1, p + 1));
            } else {
                dsu.union(node(level, p), node(level, p + 1));
                dsu.union(node(level + 1, p), node(level + 1, p + 1));
            }
        }
        match closure {
            Closure::Markov => {
                for q in 0..n {
                    dsu.union(node(0, q), node(c, q));
                }
            }
            Closure::Plat => {
                for j in (0..n).step_by(2) {
                    dsu.union(node(0, j), node(0, j + 1));
                    dsu.union(node(c, j), node(c, j + 1));
                }
            }
        }
        let loops = dsu.components();
        let mut term = Poly::from([(exp, 1)]);
        for _ in 1..loops {
            term = poly_mul(&term, &loop_poly());
        }
        for (e, k) in term {
            *total.entry(e).or_insert(0) += k;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

pub fn to_poly(p: &LaurentPoly) -> Poly {
    p.terms().collect()
}

/// Transpositions of `S_order` and the conjugation table `g h g`.
pub struct Transpositions {
    pub count: usize,
    conj: Vec<Vec<usize>>,
}

impl Transpositions {
    pub fn new(order: usize) -> Self {
        let mut pairs = Vec::new();
        for a in 0..order {
            for b in a + 1..order {
                pairs.push((a, b));
            }
        }
        let index: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let swap = |(a, b): (usize, usize), x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        let conj = pairs
            .iter()
            .map(|&g| {
                pairs
                    .iter()
                    .map(|&h| {
                        let (x, y) = (swap(g, h.0), swap(g, h.1));
                        index[&(x.min(y), x.max(y))]
                    })
                    .collect()
            })
            .collect();
        Transpositions { count: pairs.len(), conj }
    }
}

/// Markov trace of the flux-transposition irrep by counting fixed points of
/// the permutation action on transposition tuples over the strands the word
/// touches.
pub fn permutation_trace(order: usize, w: &BraidWord) -> BigRational {
    let letters = w.letters();
    if letters.is_empty() {
        return BigRational::from_integer(1.into());
    }
    let lo = letters.iter().map(|l| l.index).min().unwrap();
    let hi = letters.iter().map(|l| l.index).max().unwrap();
    let m = hi - lo + 2;
    let tr = Transpositions::new(order);
    let d = tr.count;
    let total = d.pow(m as u32);
    assert!(total <= 2_000_000, "{m} strands is too many for the permutation oracle");
    let mut fixed = 0u64;
    let mut tuple = vec![0usize; m];
    let mut start = vec![0usize; m];
    for code in 0..total {
        let mut x = code;
        for s in start.iter_mut() {
            *s = x % d;
            x /= d;
        }
        tuple.copy_from_slice(&start);
        for l in letters {
            let p = l.index - lo;
            let (g, h) = (tuple[p], tuple[p + 1]);
            if l.power > 0 {
                tuple[p] = tr.conj[g][h];
                tuple[p + 1] = g;
            } else {
                tuple[p] = h;
                tuple[p + 1] = tr.conj[h][g];
            }
        }
        if tuple == start {
            fixed += 1;
        }
    }
    BigRational::new(BigInt::from(fixed), BigInt::from(d).pow(m as u32))
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| anyonwalk::Letter::new(rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

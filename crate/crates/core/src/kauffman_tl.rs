//! Kauffman brackets of braid closures through the Temperley-Lieb algebra.
//!
//! Braid words are time ordered: the first letter is the lowest crossing and
//! is applied to a state first. A word is skein-expanded into a linear
//! combination of planar diagrams, then closed either as a plat (adjacent
//! pairs capped top and bottom) or as a Markov trace (top `j` joined to
//! bottom `j`). Brackets are normalized so that a single unknot has value 1.
//!
//! Coefficients are either exact [`LaurentPoly`]s, where the loop value is
//! the polynomial `-A² - A⁻²`, or complex numbers at a fixed `A`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::anyon_models::AnyonModel;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A planar matching of `2n` boundary points.
///
/// Point `j < n` is the `j`-th bottom point from the left and point `n + j`
/// the `j`-th top point. `partner[p]` is the other end of the arc at `p`;
/// the partner array is itself the canonical encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    partner: Vec<u16>,
}

impl TLDiagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u16).collect();
        TLDiagram { partner }
    }

    /// Generator `e_i`, `1 <= i < n`: caps strands `i` and `i+1` (1-based)
    /// at the bottom and top.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut d = TLDiagram::identity(n);
        let (l, r) = (i - 1, i);
        d.partner[l] = r as u16;
        d.partner[r] = l as u16;
        d.partner[n + l] = (n + r) as u16;
        d.partner[n + r] = (n + l) as u16;
        Ok(d)
    }

    pub fn from_partners(partner: Vec<u16>) -> Result<Self> {
        let m = partner.len();
        if m % 2 == 1 {
            return Err(Error::InvalidConfiguration("a diagram needs an even number of points".into()));
        }
        let ok = partner.iter().enumerate().all(|(p, &q)| {
            (q as usize) < m && q as usize != p && partner[q as usize] as usize == p
        });
        if !ok {
            return Err(Error::InvalidConfiguration("partner array is not a perfect matching".into()));
        }
        let d = TLDiagram { partner };
        if !d.is_planar() {
            return Err(Error::InvalidConfiguration("matching has crossing arcs".into()));
        }
        Ok(d)
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    /// Arcs as sorted endpoint pairs.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&p| p < self.partner(p)).map(|p| (p, self.partner(p))).collect()
    }

    /// Position of point `p` on the boundary circle read counterclockwise:
    /// bottom points left to right, then top points right to left.
    fn boundary_position(&self, p: usize) -> usize {
        let n = self.strands();
        if p < n {
            p
        } else {
            2 * n - 1 - (p - n)
        }
    }

    pub fn is_planar(&self) -> bool {
        let arcs: Vec<(usize, usize)> = self
            .arcs()
            .into_iter()
            .map(|(p, q)| {
                let (x, y) = (self.boundary_position(p), self.boundary_position(q));
                (x.min(y), x.max(y))
            })
            .collect();
        arcs.iter().all(|&(a, b)| arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Stacks `above` on top of `self`, returning the result and the number
    /// of closed loops removed.
    pub fn compose(&self, above: &TLDiagram) -> Result<(TLDiagram, usize)> {
        let n = self.strands();
        if above.strands() != n {
            return Err(Error::StrandMismatch { left: n, right: above.strands() });
        }
        Ok(compose_raw(&self.partner, &above.partner, n))
    }
}

fn compose_raw(lower: &[u16], upper: &[u16], n: usize) -> (TLDiagram, usize) {
    let mut out = vec![0u16; 2 * n];
    let mut seen = vec![false; n];
    // follow an arc entering the middle row at lower-top point `m`
    let walk = |mut m: usize, seen: &mut Vec<bool>| -> usize {
        loop {
            seen[m] = true;
            let q = upper[m] as usize;
            if q >= n {
                return q;
            }
            seen[q] = true;
            let r = lower[n + q] as usize;
            if r < n {
                return r + 2 * n;
            }
            m = r - n;
        }
    };
    // exits are encoded as: lower bottom j -> j + 2n, upper top j -> n + j
    let resolve = |code: usize| -> usize { if code >= 2 * n { code - 2 * n } else { code } };
    for j in 0..n {
        let q = lower[j] as usize;
        let end = if q < n { q } else { resolve(walk(q - n, &mut seen)) };
        out[j] = end as u16;
    }
    for j in 0..n {
        let q = upper[j + n] as usize;
        let end = if q >= n {
            q
        } else {
            // enter the middle row from above at upper-bottom point q
            seen[q] = true;
            let r = lower[n + q] as usize;
            if r < n {
                r
            } else {
                resolve(walk(r - n, &mut seen))
            }
        };
        out[n + j] = end as u16;
    }
    let mut loops = 0;
    for m in 0..n {
        if seen[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            seen[cur] = true;
            let q = upper[cur] as usize;
            seen[q] = true;
            let r = lower[n + q] as usize - n;
            if r == m {
                break;
            }
            cur = r;
        }
    }
    (TLDiagram { partner: out }, loops)
}

/// A braid letter `b_index^power` with `power = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub power: i8,
}

impl Letter {
    pub fn new(index: usize, power: i8) -> Self {
        debug_assert!(power == 1 || power == -1);
        Letter { index, power }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, power: -self.power }
    }
}

/// A word in the braid group `B_n`, first letter applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexOutOfRange { index: l.index, max: strands.saturating_sub(1) });
            }
            if l.power != 1 && l.power != -1 {
                return Err(Error::InvalidConfiguration(format!("letter power {} is not ±1", l.power)));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// Expands `(i, m)` blocks into `|m|` letters each.
    pub fn from_powers(strands: usize, blocks: &[(usize, i64)]) -> Result<Self> {
        let mut letters = Vec::new();
        for &(i, m) in blocks {
            let p = if m < 0 { -1 } else { 1 };
            letters.extend(std::iter::repeat_n(Letter::new(i, p), m.unsigned_abs() as usize));
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter powers.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.power)).sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &BraidWord) -> Result<Self> {
        if self.strands != next.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: next.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&next.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.index == 0 || letter.index >= self.strands {
            return Err(Error::IndexOutOfRange { index: letter.index, max: self.strands - 1 });
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    /// Free reduction followed by cancellation across the ends.
    pub fn cyclic_reduce(&self) -> Self {
        let mut w = self.free_reduce().letters;
        while w.len() >= 2 && w[0] == w[w.len() - 1].inverse() {
            w.pop();
            w.remove(0);
        }
        BraidWord { strands: self.strands, letters: w }
    }

    /// Moves the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The same word on `extra` additional strands to the right.
    pub fn widen(&self, extra: usize) -> Self {
        BraidWord { strands: self.strands + extra, letters: self.letters.clone() }
    }

    /// The word with every index shifted right by `by` on `strands + by` strands.
    pub fn shift(&self, by: usize) -> Self {
        BraidWord {
            strands: self.strands + by,
            letters: self.letters.iter().map(|l| Letter::new(l.index + by, l.power)).collect(),
        }
    }

    /// Run-length blocks `(index, power)`.
    pub fn blocks(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((i, m)) if *i == l.index => *m += i64::from(l.power),
                _ => out.push((l.index, i64::from(l.power))),
            }
        }
        out.retain(|&(_, m)| m != 0);
        out
    }

    /// Parses whitespace-separated signed indices such as `"1 -2 1"`.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v: i64 = tok
                .replace('\u{2212}', "-")
                .parse()
                .map_err(|_| Error::Parse(format!("braid letter `{tok}` is not a signed integer")))?;
            if v == 0 {
                return Err(Error::Parse("braid letter 0 is not a generator".into()));
            }
            letters.push(Letter::new(v.unsigned_abs() as usize, if v < 0 { -1 } else { 1 }));
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| (l.index as i64 * i64::from(l.power)).to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Coefficient ring for skein expansion.
pub trait SkeinCoefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, rhs: &Self);
    fn mul(&self, rhs: &Self) -> Self;
}

impl SkeinCoefficient for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl SkeinCoefficient for Complex64 {
    fn zero() -> Self {
        <Complex64 as Zero>::zero()
    }
    fn one() -> Self {
        <Complex64 as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// `A`, `A⁻¹` and the loop value `d` in a coefficient ring.
#[derive(Debug, Clone)]
pub struct SkeinWeights<V> {
    pub a: V,
    pub a_inv: V,
    pub d: V,
}

impl SkeinWeights<LaurentPoly> {
    pub fn exact() -> Self {
        SkeinWeights { a: LaurentPoly::monomial(1, 1), a_inv: LaurentPoly::monomial(1, -1), d: LaurentPoly::loop_value() }
    }
}

impl SkeinWeights<Complex64> {
    pub fn at(a: Complex64) -> Self {
        let a_inv = a.inv();
        SkeinWeights { a, a_inv, d: -(a * a) - a_inv * a_inv }
    }

    pub fn for_model(model: &AnyonModel) -> Self {
        let a = model.a();
        SkeinWeights { a: a.value(), a_inv: a.pow(-1), d: -a.pow(2) - a.pow(-2) }
    }
}

/// Linear combination of diagrams on a fixed strand count.
#[derive(Debug, Clone, PartialEq)]
pub struct TLElement<V> {
    strands: usize,
    terms: BTreeMap<TLDiagram, V>,
}

impl<V: SkeinCoefficient> TLElement<V> {
    pub fn identity(strands: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(TLDiagram::identity(strands), V::one());
        TLElement { strands, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn support(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: &TLDiagram) -> Option<&V> {
        self.terms.get(d)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &V)> {
        self.terms.iter()
    }
}

pub fn tl_compose(x: &TLDiagram, y: &TLDiagram) -> Result<(TLDiagram, usize)> {
    x.compose(y)
}

/// Catalan number `C_m`, saturating at `u64::MAX`.
pub fn catalan(m: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// Interned diagrams and memoized `diagram · e_i` products for one strand
/// count. Not shared between threads; use one per worker.
#[derive(Debug)]
pub struct SkeinEngine {
    strands: usize,
    diagrams: Vec<TLDiagram>,
    ids: HashMap<TLDiagram, u32>,
    products: HashMap<(u32, u16), (u32, u32)>,
    generators: Vec<TLDiagram>,
}

impl SkeinEngine {
    pub fn new(strands: usize) -> Self {
        let generators = (1..strands).map(|i| TLDiagram::generator(strands, i).expect("index in range")).collect();
        let mut engine = SkeinEngine { strands, diagrams: Vec::new(), ids: HashMap::new(), products: HashMap::new(), generators };
        engine.intern(TLDiagram::identity(strands));
        engine
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    fn intern(&mut self, d: TLDiagram) -> u32 {
        if let Some(&id) = self.ids.get(&d) {
            return id;
        }
        let id = self.diagrams.len() as u32;
        self.ids.insert(d.clone(), id);
        self.diagrams.push(d);
        id
    }

    fn times_generator(&mut self, id: u32, i: usize) -> (u32, u32) {
        if let Some(&hit) = self.products.get(&(id, i as u16)) {
            return hit;
        }
        let (d, loops) = compose_raw(&self.diagrams[id as usize].partner, &self.generators[i - 1].partner, self.strands);
        let out = (self.intern(d), loops as u32);
        self.products.insert((id, i as u16), out);
        out
    }

    /// Skein expansion: `b_i ↦ A + A⁻¹e_i`, `b_i⁻¹ ↦ A⁻¹ + A e_i`.
    pub fn expand<V: SkeinCoefficient>(&mut self, w: &BraidWord, weights: &SkeinWeights<V>) -> Result<TLElement<V>> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: w.strands() });
        }
        let bound = catalan(self.strands);
        let mut current: BTreeMap<u32, V> = BTreeMap::new();
        current.insert(0, V::one());
        let mut d_powers: Vec<V> = vec![V::one()];
        for letter in w.letters() {
            let (id_coeff, e_coeff) = if letter.power > 0 { (&weights.a, &weights.a_inv) } else { (&weights.a_inv, &weights.a) };
            let mut next: BTreeMap<u32, V> = BTreeMap::new();
            for (&diag, coeff) in &current {
                accumulate(&mut next, diag, coeff.mul(id_coeff));
                let (prod, loops) = self.times_generator(diag, letter.index);
                while d_powers.len() <= loops as usize {
                    let last = d_powers.last().unwrap().mul(&weights.d);
                    d_powers.push(last);
                }
                accumulate(&mut next, prod, coeff.mul(e_coeff).mul(&d_powers[loops as usize]));
            }
            assert!(next.len() as u64 <= bound, "TL support {} exceeds Catalan bound {bound}", next.len());
            current = next;
        }
        let terms = current.into_iter().map(|(id, v)| (self.diagrams[id as usize].clone(), v)).collect();
        Ok(TLElement { strands: self.strands, terms })
    }
}

fn accumulate<V: SkeinCoefficient>(map: &mut BTreeMap<u32, V>, key: u32, value: V) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            v.add_assign(&value);
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

pub fn skein_expand(w: &BraidWord) -> TLElement<LaurentPoly> {
    SkeinEngine::new(w.strands()).expand(w, &SkeinWeights::exact()).expect("strand counts agree")
}

pub fn skein_expand_at(w: &BraidWord, a: Complex64) -> TLElement<Complex64> {
    SkeinEngine::new(w.strands()).expand(w, &SkeinWeights::at(a)).expect("strand counts agree")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    Plat,
    Markov,
}

impl FromStr for Closure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plat" => Ok(Closure::Plat),
            "markov" => Ok(Closure::Markov),
            other => Err(Error::Parse(format!("unknown closure `{other}`; expected plat or markov"))),
        }
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Closure::Plat => "plat",
            Closure::Markov => "markov",
        })
    }
}

/// Loops formed when `d` is closed.
pub fn closure_loops(d: &TLDiagram, closure: Closure) -> usize {
    let n = d.strands();
    let close = |p: usize| -> usize {
        match closure {
            Closure::Plat => {
                let (base, j) = if p < n { (0, p) } else { (n, p - n) };
                base + (j ^ 1)
            }
            Closure::Markov => (p + n) % (2 * n),
        }
    };
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d.partner(p);
            seen[q] = true;
            p = close(q);
            if p == start {
                break;
            }
        }
    }
    loops
}

/// Closes every diagram and divides by one factor of `d`.
pub fn close_element<V: SkeinCoefficient>(x: &TLElement<V>, closure: Closure, d: &V) -> V {
    let mut d_powers: Vec<V> = vec![V::one()];
    let mut total = V::zero();
    for (diag, coeff) in x.terms() {
        let loops = closure_loops(diag, closure);
        while d_powers.len() < loops {
            let last = d_powers.last().unwrap().mul(d);
            d_powers.push(last);
        }
        total.add_assign(&coeff.mul(&d_powers[loops - 1]));
    }
    total
}

fn check_plat(w: &BraidWord) -> Result<()> {
    if w.strands() % 2 == 1 {
        return Err(Error::OddStrandCount(w.strands()));
    }
    Ok(())
}

/// Exact or numeric bracket value.
#[derive(Debug, Clone, PartialEq)]
pub enum BracketValue {
    Exact(LaurentPoly),
    Numeric(Complex64),
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketValue::Exact(p) => write!(f, "{p}"),
            BracketValue::Numeric(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

pub fn bracket(w: &BraidWord, closure: Closure, at: Option<Complex64>) -> Result<BracketValue> {
    if closure == Closure::Plat {
        check_plat(w)?;
    }
    Ok(match at {
        None => BracketValue::Exact(close_element(&skein_expand(w), closure, &LaurentPoly::loop_value())),
        Some(a) => {
            let weights = SkeinWeights::at(a);
            BracketValue::Numeric(close_element(&skein_expand_at(w, a), closure, &weights.d))
        }
    })
}

pub fn plat_bracket(w: &BraidWord, at: Option<Complex64>) -> Result<BracketValue> {
    bracket(w, Closure::Plat, at)
}

pub fn markov_bracket(w: &BraidWord, at: Option<Complex64>) -> Result<BracketValue> {
    bracket(w, Closure::Markov, at)
}

pub fn plat_bracket_exact(w: &BraidWord) -> Result<LaurentPoly> {
    check_plat(w)?;
    Ok(close_element(&skein_expand(w), Closure::Plat, &LaurentPoly::loop_value()))
}

pub fn markov_bracket_exact(w: &BraidWord) -> LaurentPoly {
    close_element(&skein_expand(w), Closure::Markov, &LaurentPoly::loop_value())
}

/// Plat-closure evaluator at a fixed `A` with a reusable diagram cache.
#[derive(Debug)]
pub struct PlatEvaluator {
    engine: SkeinEngine,
    weights: SkeinWeights<Complex64>,
}

impl PlatEvaluator {
    pub fn new(strands: usize, weights: SkeinWeights<Complex64>) -> Result<Self> {
        if strands % 2 == 1 {
            return Err(Error::OddStrandCount(strands));
        }
        Ok(PlatEvaluator { engine: SkeinEngine::new(strands), weights })
    }

    pub fn for_model(model: &AnyonModel, strands: usize) -> Result<Self> {
        PlatEvaluator::new(strands, SkeinWeights::for_model(model))
    }

    pub fn plat(&mut self, w: &BraidWord) -> Result<Complex64> {
        let x = self.engine.expand(w, &self.weights)?;
        Ok(close_element(&x, Closure::Plat, &self.weights.d))
    }

    /// `⟨α| M(Bp)† M(B) |α⟩ = ⟨(B then Bp⁻¹)^plat⟩ / d^{n/2-1}`.
    pub fn anyon_trace(&mut self, b: &BraidWord, bp: &BraidWord) -> Result<Complex64> {
        let w = b.then(&bp.inverse())?.free_reduce();
        let n = self.engine.strands();
        let scale = self.weights.d.powi(n as i32 / 2 - 1);
        Ok(self.plat(&w)? / scale)
    }
}

/// Overlap of the vacuum-pair state under `B` and `Bp`, via the plat
/// closure of `B` followed by `Bp⁻¹`. Equal to 1 when the two words agree.
pub fn anyon_trace(model: &AnyonModel, n: usize, b: &BraidWord, bp: &BraidWord) -> Result<Complex64> {
    if b.strands() != n {
        return Err(Error::StrandMismatch { left: n, right: b.strands() });
    }
    PlatEvaluator::for_model(model, n)?.anyon_trace(b, bp)
}

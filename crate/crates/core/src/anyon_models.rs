//! Anyon model data: labels, fusion rules, quantum dimensions and the
//! Kauffman parameter used by both walk engines.
//!
//! SU(2)_k labels are stored by twice their spin (`id = 2j`), so the vacuum
//! is id 0 and the spin-1/2 anyon `σ` is id 1 at every level. Only SU(2)_2
//! carries explicit F and R data; all other levels braid through the
//! Temperley-Lieb path representation in [`crate::fusion_braid`].

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const VACUUM: usize = 0;
pub const SIGMA: usize = 1;
pub const PSI: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnyonLabel {
    pub id: usize,
    pub name: String,
}

/// A unit-modulus parameter stored as `exp(iπ·angle)` with a rational angle.
///
/// Keeping the angle rational lets Laurent polynomials in `A` be evaluated
/// by reducing exponents modulo 2 exactly before calling into `sin`/`cos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitPhase {
    angle: Rational64,
}

impl UnitPhase {
    pub fn from_pi_fraction(angle: Rational64) -> Self {
        UnitPhase { angle: reduce_mod_two(angle) }
    }

    /// The angle in units of π, reduced into `[0, 2)`.
    pub fn pi_fraction(&self) -> Rational64 {
        self.angle
    }

    pub fn value(&self) -> Complex64 {
        self.pow(1)
    }

    /// `A^e`, with the exponent folded into the rational angle first.
    pub fn pow(&self, e: i64) -> Complex64 {
        let angle = reduce_mod_two(self.angle * Rational64::from_integer(e));
        let theta = PI * angle.to_f64().unwrap_or(0.0);
        Complex64::from_polar(1.0, theta)
    }

    pub fn conj(&self) -> Self {
        UnitPhase::from_pi_fraction(-self.angle)
    }
}

fn reduce_mod_two(x: Rational64) -> Rational64 {
    let two = Rational64::from_integer(2);
    let mut r = x % two;
    if r.is_negative() {
        r += two;
    }
    r
}

/// Fusion rules, quantum dimension of `σ`, and Kauffman parameter.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct AnyonModel {
    labels: Vec<AnyonLabel>,
    fusion: Vec<bool>,
    d: f64,
    a: UnitPhase,
    level: u32,
}

impl AnyonModel {
    pub fn labels(&self) -> &[AnyonLabel] {
        &self.labels
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, id: usize) -> Option<&AnyonLabel> {
        self.labels.get(id)
    }

    pub fn label_by_name(&self, name: &str) -> Option<&AnyonLabel> {
        self.labels.iter().find(|l| l.name == name)
    }

    /// Multiplicity `N_{ab}^c`, always 0 or 1 for the supported models.
    pub fn fusion(&self, a: usize, b: usize, c: usize) -> u8 {
        let n = self.labels.len();
        if a >= n || b >= n || c >= n {
            return 0;
        }
        self.fusion[(a * n + b) * n + c] as u8
    }

    /// Admissible channels of `a × b` in ascending id order.
    pub fn channels(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.labels.len()).filter(|&c| self.fusion(a, b, c) == 1).collect()
    }

    /// Quantum dimension of `σ`.
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Kauffman parameter `A`.
    pub fn a(&self) -> UnitPhase {
        self.a
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn name(&self) -> String {
        format!("su2k:{}", self.level)
    }

    /// Whether explicit F and R data are available (SU(2)_2 only).
    pub fn has_explicit_data(&self) -> bool {
        self.level == 2
    }

    /// Loop weight of the label with id `h` (= 2j): the quantum integer
    /// `[h+1]_q = sin(π(h+1)/(k+2)) / sin(π/(k+2))`.
    pub fn loop_weight(&self, h: usize) -> f64 {
        let kp2 = f64::from(self.level + 2);
        (PI * (h as f64 + 1.0) / kp2).sin() / (PI / kp2).sin()
    }
}

/// SU(2)_k with `σ` the spin-1/2 label.
///
/// `d = 2cos(π/(k+2))` and `A = i·exp(iπ/(2(k+2)))`, so that
/// `d = -A² - A⁻²` holds identically.
pub fn build_su2k(k: i64) -> Result<AnyonModel> {
    if k < 2 {
        return Err(Error::InvalidLevel(k));
    }
    if k > 4096 {
        return Err(Error::InvalidConfiguration(format!("level k = {k} is unreasonably large")));
    }
    let k_us = k as usize;
    let n = k_us + 1;
    let labels = (0..n)
        .map(|id| AnyonLabel { id, name: su2k_label_name(k_us, id) })
        .collect();
    let mut fusion = vec![false; n * n * n];
    for a in 0..n {
        for b in 0..n {
            let lo = a.abs_diff(b);
            let hi = (a + b).min(2 * k_us - a - b);
            let mut c = lo;
            while c <= hi {
                fusion[(a * n + b) * n + c] = true;
                c += 2;
            }
        }
    }
    let d = 2.0 * (PI / (k as f64 + 2.0)).cos();
    // i·exp(iπ/(2(k+2))) = exp(iπ·(k+3)/(2(k+2)))
    let a = UnitPhase::from_pi_fraction(Rational64::new(k + 3, 2 * (k + 2)));
    Ok(AnyonModel { labels, fusion, d, a, level: k as u32 })
}

fn su2k_label_name(k: usize, id: usize) -> String {
    match (k, id) {
        (_, 0) => "1".to_string(),
        (_, 1) => "σ".to_string(),
        (2, 2) => "ψ".to_string(),
        (_, h) if h % 2 == 0 => format!("j={}", h / 2),
        (_, h) => format!("j={h}/2"),
    }
}

/// Parameters of the (2,1) irrep of the quantum double D(S_N): transposition
/// flux with trivial centralizer charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleIrrepParams {
    order: u32,
    dim: u64,
}

impl DoubleIrrepParams {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `d[2,1] = N(N-1)/2`.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Normalized character `⟨g⟩ = χ(g)/|α|`, equal to 1 for the trivial
    /// centralizer irrep.
    pub fn gchar(&self) -> Rational64 {
        Rational64::one()
    }

    /// Markov parameter `z = ⟨g⟩/d`.
    pub fn z(&self) -> Rational64 {
        self.gchar() / Rational64::from_integer(self.dim as i64)
    }

    /// Markov parameter `z̄ = ⟨g⁻¹⟩/d`.
    pub fn zbar(&self) -> Rational64 {
        self.z()
    }

    pub fn name(&self) -> String {
        format!("dsn:{}", self.order)
    }
}

pub fn build_dsn(n: i64) -> Result<DoubleIrrepParams> {
    if n < 5 {
        return Err(Error::InvalidGroupOrder(n));
    }
    if n > 100_000 {
        return Err(Error::InvalidConfiguration(format!("N = {n} is unreasonably large")));
    }
    let order = n as u32;
    let dim = (n as u64) * (n as u64 - 1) / 2;
    Ok(DoubleIrrepParams { order, dim })
}

/// Model selector as written on the command line: `su2k:<k>` or `dsn:<N>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelSpec {
    Su2k(i64),
    Dsn(i64),
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("model `{s}` is not of the form su2k:<k> or dsn:<N>")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("model parameter `{value}` is not an integer")))?;
        match kind.trim() {
            "su2k" => Ok(ModelSpec::Su2k(value)),
            "dsn" => Ok(ModelSpec::Dsn(value)),
            other => Err(Error::Parse(format!("unknown model family `{other}`"))),
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Su2k(k) => write!(f, "su2k:{k}"),
            ModelSpec::Dsn(n) => write!(f, "dsn:{n}"),
        }
    }
}

/// F move `(F_{abc}^d)_e^f` between the bases `((ab)_e c)_d` and `(a(bc)_f)_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct FMatrix {
    /// Intermediate channels `e ∈ a×b` with `d ∈ e×c`; row labels.
    pub left: Vec<usize>,
    /// Intermediate channels `f ∈ b×c` with `d ∈ a×f`; column labels.
    pub right: Vec<usize>,
    pub matrix: DMatrix<Complex64>,
}

fn require_explicit(model: &AnyonModel) -> Result<()> {
    if model.has_explicit_data() {
        Ok(())
    } else {
        Err(Error::UnsupportedModel(format!(
            "explicit F/R data exist only for SU(2)_2, got {}; use the Temperley-Lieb generators",
            model.name()
        )))
    }
}

pub fn f_matrix(model: &AnyonModel, a: usize, b: usize, c: usize, d: usize) -> Result<FMatrix> {
    require_explicit(model)?;
    let n = model.label_count();
    if [a, b, c, d].iter().any(|&x| x >= n) {
        return Err(Error::Fusion(format!("label out of range in F_({a},{b},{c})^{d}")));
    }
    let left: Vec<usize> = model
        .channels(a, b)
        .into_iter()
        .filter(|&e| model.fusion(e, c, d) == 1)
        .collect();
    let right: Vec<usize> = model
        .channels(b, c)
        .into_iter()
        .filter(|&f| model.fusion(a, f, d) == 1)
        .collect();
    if left.is_empty() || left.len() != right.len() {
        return Err(Error::Fusion(format!(
            "({}, {}, {}) cannot fuse to {}",
            model.labels[a].name, model.labels[b].name, model.labels[c].name, model.labels[d].name
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let matrix = if (a, b, c, d) == (SIGMA, SIGMA, SIGMA, SIGMA) {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        DMatrix::from_row_slice(2, 2, &[one * s, one * s, one * s, -one * s])
    } else if (a, b, c, d) == (SIGMA, PSI, SIGMA, PSI) || (a, b, c, d) == (PSI, SIGMA, PSI, SIGMA) {
        DMatrix::from_element(1, 1, -one)
    } else {
        DMatrix::identity(left.len(), right.len())
    };
    Ok(FMatrix { left, right, matrix })
}

/// Braiding eigenvalue `R_{ab}^c` in the gauge where `R_σσ = diag(1, i)`.
pub fn r_phase(model: &AnyonModel, a: usize, b: usize, c: usize) -> Result<Complex64> {
    require_explicit(model)?;
    if model.fusion(a, b, c) != 1 {
        return Err(Error::Fusion(format!("{c} is not a channel of {a} × {b}")));
    }
    let i = Complex64::i();
    let one = Complex64::one();
    Ok(match (a, b, c) {
        (VACUUM, _, _) | (_, VACUUM, _) => one,
        (SIGMA, SIGMA, VACUUM) => one,
        (SIGMA, SIGMA, PSI) => i,
        (SIGMA, PSI, SIGMA) | (PSI, SIGMA, SIGMA) => -i,
        (PSI, PSI, VACUUM) => -one,
        _ => unreachable!("all admissible SU(2)_2 channels are listed"),
    })
}

impl fmt::Display for AnyonModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SU(2)_{} (d = {:.7})", self.level, self.d)
    }
}

//! Walk of an Abelian anyon with a four-state die.
//!
//! The die is a pair of qubits `x, y`, indexed `2x + y`. One step applies
//! `U = e^{iπ/4 (X_x + X_y)}`, the statistical phase `e^{iφ Z_x Z_y}`, and a
//! shift that moves `x = 0` right and `x = 1` left. In momentum space a step
//! is `M_k = e^{-ik Z_x} e^{iφ Z_x Z_y} U`.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::walk_nonabelian::pairwise_sum;

/// Smallest trapezoid grid for momentum integrals.
pub const MIN_QUADRATURE_POINTS: usize = 1024;

/// Eigenvalue gap below which a momentum point counts as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-8;

type C = Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct AbelianConfig {
    pub phi: f64,
    pub t: usize,
    pub initial_spin: Vector4<C>,
}

impl AbelianConfig {
    pub fn new(phi: f64, t: usize, initial_spin: Vector4<C>) -> Result<Self> {
        let norm = initial_spin.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidConfiguration(format!("die state has norm {norm}")));
        }
        Ok(AbelianConfig { phi: phi.rem_euclid(2.0 * PI), t, initial_spin })
    }
}

/// `|0⟩_x |0⟩_y`.
pub fn default_spin() -> Vector4<C> {
    Vector4::new(C::new(1.0, 0.0), C::zero(), C::zero(), C::zero())
}

/// Four-component amplitudes on a contiguous window of sites.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    origin: i64,
    amps: Vec<Vector4<C>>,
}

impl SpinorField {
    /// Walker at `s = 0` with the given die state.
    pub fn localized(spin: Vector4<C>) -> Self {
        SpinorField { origin: 0, amps: vec![spin] }
    }

    /// Leftmost site of the window.
    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn get(&self, s: i64) -> Vector4<C> {
        let i = s - self.origin;
        if i < 0 || i as usize >= self.amps.len() {
            Vector4::zeros()
        } else {
            self.amps[i as usize]
        }
    }

    pub fn sites(&self) -> impl Iterator<Item = (i64, &Vector4<C>)> {
        self.amps.iter().enumerate().map(move |(i, v)| (self.origin + i as i64, v))
    }

    pub fn norm_sqr(&self) -> f64 {
        let v: Vec<f64> = self.amps.iter().map(|a| a.norm_squared()).collect();
        pairwise_sum(&v)
    }

    pub fn probabilities(&self) -> Vec<(i64, f64)> {
        self.sites().map(|(s, v)| (s, v.norm_squared())).collect()
    }

    /// `(⟨s⟩, ⟨s²⟩)`.
    pub fn moments(&self) -> (f64, f64) {
        let p = self.probabilities();
        let m1: Vec<f64> = p.iter().map(|&(s, q)| s as f64 * q).collect();
        let m2: Vec<f64> = p.iter().map(|&(s, q)| (s * s) as f64 * q).collect();
        (pairwise_sum(&m1), pairwise_sum(&m2))
    }

    pub fn variance(&self) -> f64 {
        let (m1, m2) = self.moments();
        m2 - m1 * m1
    }
}

fn beam_splitter() -> Matrix2<C> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Matrix2::new(C::new(s, 0.0), C::new(0.0, s), C::new(0.0, s), C::new(s, 0.0))
}

/// `e^{iπ/4 (X_x + X_y)} = u ⊗ u` with `u = e^{iπ/4 X}`.
pub fn die_coin() -> Matrix4<C> {
    let u = beam_splitter();
    u.kronecker(&u)
}

/// Diagonal of `e^{iφ Z_x Z_y}`.
fn phase_diagonal(phi: f64) -> [C; 4] {
    let p = C::from_polar(1.0, phi);
    let m = p.conj();
    [p, m, m, p]
}

/// Coin and phase, before the shift.
fn local_step(phi: f64) -> Matrix4<C> {
    let d = phase_diagonal(phi);
    let mut m = die_coin();
    for r in 0..4 {
        for c in 0..4 {
            m[(r, c)] *= d[r];
        }
    }
    m
}

/// One step of the walk.
pub fn abelian_step(state: &SpinorField, phi: f64) -> SpinorField {
    let w = local_step(phi);
    let mut amps = vec![Vector4::zeros(); state.amps.len() + 2];
    // new index of old site s is s - (origin - 1)
    for (i, v) in state.amps.iter().enumerate() {
        let out = w * v;
        // x = 0 (components 0, 1) moves right, x = 1 (2, 3) left
        amps[i + 2][0] += out[0];
        amps[i + 2][1] += out[1];
        amps[i][2] += out[2];
        amps[i][3] += out[3];
    }
    SpinorField { origin: state.origin - 1, amps }
}

/// Runs `t` steps from `config.initial_spin` at the origin.
pub fn simulate(config: &AbelianConfig) -> SpinorField {
    (0..config.t).fold(SpinorField::localized(config.initial_spin), |s, _| abelian_step(&s, config.phi))
}

/// Variances after each step `1..=t_max`.
pub fn variance_trajectory(phi: f64, t_max: usize, spin: Vector4<C>) -> Vec<f64> {
    let mut state = SpinorField::localized(spin);
    let mut out = Vec::with_capacity(t_max);
    for _ in 0..t_max {
        state = abelian_step(&state, phi);
        out.push(state.variance());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumOperator {
    pub k: f64,
    pub matrix: Matrix4<C>,
}

fn z_x() -> [f64; 4] {
    [1.0, 1.0, -1.0, -1.0]
}

pub fn momentum_operator(phi: f64, k: f64) -> MomentumOperator {
    let mut m = local_step(phi);
    let z = z_x();
    for r in 0..4 {
        let shift = C::from_polar(1.0, -k * z[r]);
        for c in 0..4 {
            m[(r, c)] *= shift;
        }
    }
    MomentumOperator { k, matrix: m }
}

/// `β_±(k) = arccos[(cos k cos φ ± √((cos²φ - 2) cos²k + 2)) / 2]`.
pub fn beta(phi: f64, k: f64) -> (f64, f64) {
    let (ck, cp) = (k.cos(), phi.cos());
    let root = ((cp * cp - 2.0) * ck * ck + 2.0).max(0.0).sqrt();
    let clamp = |x: f64| x.clamp(-1.0, 1.0).acos();
    (clamp((ck * cp + root) / 2.0), clamp((ck * cp - root) / 2.0))
}

/// Eigenvalues and orthonormal eigenvectors of a unitary `M`, from its
/// complex Schur form.
struct Eigen {
    values: [C; 4],
    vectors: Matrix4<C>,
    /// Largest strictly-upper entry of the Schur factor; zero for an exactly
    /// normal matrix.
    off_diagonal: f64,
}

fn eigen_unitary(m: &Matrix4<C>) -> Result<Eigen> {
    let schur = m
        .clone_owned()
        .try_schur(1e-14, 10_000)
        .ok_or_else(|| Error::Numeric("Schur decomposition of M_k did not converge".into()))?;
    let (q, t) = schur.unpack();
    let mut off: f64 = 0.0;
    for r in 0..4 {
        for c in r + 1..4 {
            off = off.max(t[(r, c)].norm());
        }
    }
    Ok(Eigen { values: [t[(0, 0)], t[(1, 1)], t[(2, 2)], t[(3, 3)]], vectors: q, off_diagonal: off })
}

fn min_gap(values: &[C; 4]) -> f64 {
    let mut g = f64::INFINITY;
    for i in 0..4 {
        for j in i + 1..4 {
            g = g.min((values[i] - values[j]).norm());
        }
    }
    g
}

/// `Σ_{j=1}^t r^j`.
fn geometric(r: C, t: usize) -> C {
    if (r - C::new(1.0, 0.0)).norm() < 1e-12 {
        return C::new(t as f64, 0.0);
    }
    r * (C::new(1.0, 0.0) - r.powu(t as u32)) / (C::new(1.0, 0.0) - r)
}

fn quadrature_points(t: usize) -> usize {
    MIN_QUADRATURE_POINTS.max(2 * t + 2)
}

fn grid(points: usize) -> Vec<f64> {
    (0..points).map(|j| -PI + 2.0 * PI * j as f64 / points as f64).collect()
}

/// `(⟨s⟩_t, ⟨s²⟩_t)` integrands at one momentum, by eigendecomposition.
fn moment_integrands(phi: f64, k: f64, t: usize, spin: &Vector4<C>) -> Result<(f64, f64)> {
    let m = momentum_operator(phi, k).matrix;
    let eig = eigen_unitary(&m)?;
    if eig.off_diagonal > 1e-9 {
        log::debug!("k = {k}: Schur factor off-diagonal {:.2e}; summing powers directly", eig.off_diagonal);
        return Ok(moment_integrands_direct(&m, t, spin));
    }
    let v = &eig.vectors;
    let c = v.adjoint() * spin;
    let z = z_x();
    // Z in the eigenbasis
    let mut zm = Matrix4::<C>::zeros();
    for a in 0..4 {
        for b in 0..4 {
            zm[(a, b)] = (0..4).map(|r| v[(r, a)].conj() * z[r] * v[(r, b)]).sum();
        }
    }
    let lam = eig.values;
    let mut first = 0.0;
    for l in 0..4 {
        for mm in 0..4 {
            let g = geometric(lam[l] * lam[mm].conj(), t);
            first += (c[mm].conj() * zm[(mm, l)] * c[l] * g).re;
        }
    }
    let mut second = 0.0;
    for mm in 0..4 {
        let mut acc = C::zero();
        for l in 0..4 {
            acc += c[l] * zm[(mm, l)] * geometric(lam[l] * lam[mm].conj(), t);
        }
        second += acc.norm_sqr();
    }
    Ok((first, second))
}

fn moment_integrands_direct(m: &Matrix4<C>, t: usize, spin: &Vector4<C>) -> (f64, f64) {
    let z = Matrix4::from_diagonal(&Vector4::from(z_x().map(|x| C::new(x, 0.0))));
    let mut powers = Vec::with_capacity(t + 1);
    let mut p = *spin;
    powers.push(p);
    for _ in 0..t {
        p = m * p;
        powers.push(p);
    }
    let mut first = 0.0;
    let mut acc = Vector4::<C>::zeros();
    for (j, pj) in powers.iter().enumerate().skip(1) {
        first += (pj.adjoint() * z * pj)[(0, 0)].re;
        let mut w = z * pj;
        for _ in 0..t - j {
            w = m * w;
        }
        acc += w;
    }
    (first, acc.norm_squared())
}

/// `⟨s^m⟩_t` for `m ∈ {1, 2}` from the momentum-space representation.
pub fn moments_analytic(phi: f64, t: usize, m: u32, spin: &Vector4<C>) -> Result<f64> {
    if t == 0 {
        return Ok(0.0);
    }
    if m != 1 && m != 2 {
        return Err(Error::InvalidConfiguration(format!("moment order {m} is not 1 or 2")));
    }
    let ks = grid(quadrature_points(t));
    let vals: Vec<f64> = ks
        .par_iter()
        .map(|&k| moment_integrands(phi, k, t, spin).map(|(a, b)| if m == 1 { a } else { b }))
        .collect::<Result<_>>()?;
    Ok(pairwise_sum(&vals) / ks.len() as f64)
}

/// Leading coefficients of `⟨s⟩_t ≈ c1 t` and `⟨s²⟩_t ≈ c2 t²`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticCoefficients {
    pub c1: f64,
    pub c2: f64,
    /// Momenta dropped because two eigenvalues of `M_k` nearly coincide.
    pub excluded: Vec<f64>,
}

impl AsymptoticCoefficients {
    /// Leading-order variance `(c2 - c1²) t²`.
    pub fn variance(&self, t: usize) -> f64 {
        (self.c2 - self.c1 * self.c1) * (t as f64).powi(2)
    }
}

pub fn asymptotic_coefficients(phi: f64, spin: &Vector4<C>) -> Result<AsymptoticCoefficients> {
    let ks = grid(MIN_QUADRATURE_POINTS);
    let per_k: Vec<Option<(f64, f64)>> = ks
        .par_iter()
        .map(|&k| -> Result<Option<(f64, f64)>> {
            let eig = eigen_unitary(&momentum_operator(phi, k).matrix)?;
            if min_gap(&eig.values) < DEGENERACY_GAP {
                return Ok(None);
            }
            let c = eig.vectors.adjoint() * spin;
            let z = z_x();
            let (mut a, mut b) = (0.0, 0.0);
            for l in 0..4 {
                let zl: f64 = (0..4).map(|r| eig.vectors[(r, l)].norm_sqr() * z[r]).sum();
                let w = c[l].norm_sqr();
                a += w * zl;
                b += w * zl * zl;
            }
            Ok(Some((a, b)))
        })
        .collect::<Result<_>>()?;
    let excluded: Vec<f64> = ks.iter().zip(&per_k).filter(|(_, v)| v.is_none()).map(|(&k, _)| k).collect();
    if !excluded.is_empty() {
        log::warn!("φ = {phi}: {} of {} momenta excluded as degenerate", excluded.len(), ks.len());
    }
    let kept: Vec<(f64, f64)> = per_k.into_iter().flatten().collect();
    if kept.is_empty() {
        return Err(Error::Numeric(format!("M_k is degenerate at every momentum for φ = {phi}")));
    }
    let a: Vec<f64> = kept.iter().map(|p| p.0).collect();
    let b: Vec<f64> = kept.iter().map(|p| p.1).collect();
    Ok(AsymptoticCoefficients { c1: pairwise_sum(&a) / kept.len() as f64, c2: pairwise_sum(&b) / kept.len() as f64, excluded })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarianceRow {
    pub t: usize,
    pub phi: f64,
    pub v_sim: f64,
    pub v_analytic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarianceSurface {
    pub rows: Vec<VarianceRow>,
}

/// Simulated variance on a `(t, φ)` grid, optionally paired with the
/// leading-order analytic value. Rows are ordered by `t`, then `φ`.
pub fn variance_surface(phi_grid: &[f64], t_grid: &[usize], spin: &Vector4<C>, analytic: bool) -> Result<VarianceSurface> {
    if phi_grid.is_empty() || t_grid.is_empty() {
        return Err(Error::InvalidConfiguration("variance surface needs nonempty φ and t grids".into()));
    }
    let t_max = *t_grid.iter().max().unwrap();
    let columns: Vec<(Vec<f64>, Option<AsymptoticCoefficients>)> = phi_grid
        .par_iter()
        .map(|&phi| -> Result<_> {
            let traj = variance_trajectory(phi, t_max, *spin);
            let coeffs = if analytic { Some(asymptotic_coefficients(phi, spin)?) } else { None };
            Ok((traj, coeffs))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(phi_grid.len() * t_grid.len());
    for &t in t_grid {
        for (&phi, (traj, coeffs)) in phi_grid.iter().zip(&columns) {
            let v_sim = if t == 0 { 0.0 } else { traj[t - 1] };
            rows.push(VarianceRow { t, phi, v_sim, v_analytic: coeffs.as_ref().map(|c| c.variance(t)) });
        }
    }
    Ok(VarianceSurface { rows })
}

/// Least-squares slope of `log v` against `log t`.
pub fn fit_exponent(ts: &[usize], vs: &[f64]) -> f64 {
    let xs: Vec<f64> = ts.iter().map(|&t| (t as f64).ln()).collect();
    let ys: Vec<f64> = vs.iter().map(|v| v.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

//! Fusion basis of `n` σ-anyons with vacuum total charge, and braid-group
//! generators acting on it.
//!
//! A basis state is a path of fusion outcomes. Internally a path is read as a
//! height sequence `h_0 = 0, h_1 = 1, h_2 = a_1, …, h_{n-1} = a_{n-2}, h_n = 0`
//! where `h_j` is the total charge (in units of 2j) of the first `j` anyons.
//! Generator `E_i` only touches `h_i`, and only when `h_{i-1} = h_{i+1}`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::anyon_models::{AnyonModel, SIGMA, VACUUM};
use crate::error::{Error, Result};
use crate::sparse::CsrMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FusionPath {
    /// Fusion outcomes `(a_1, …, a_{n-2})` as label ids.
    pub outcomes: Vec<u8>,
}

impl FusionPath {
    /// Total charge of the first `j` anyons, `0 <= j <= n`.
    pub fn height(&self, j: usize) -> usize {
        let n = self.outcomes.len() + 2;
        match j {
            0 => VACUUM,
            1 => SIGMA,
            j if j == n => VACUUM,
            j => self.outcomes[j - 2] as usize,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FusionSpace {
    n: usize,
    model: AnyonModel,
    basis: Vec<FusionPath>,
}

impl FusionSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn model(&self) -> &AnyonModel {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FusionPath] {
        &self.basis
    }

    pub fn index_of(&self, path: &FusionPath) -> Option<usize> {
        self.basis.binary_search(path).ok()
    }
}

/// Number of admissible paths, counted without enumerating them. Saturates
/// at `u128::MAX`.
pub fn fusion_dimension(model: &AnyonModel, n: usize) -> u128 {
    // counts[h]: paths over the anyons seen so far ending in charge h
    let mut counts = vec![0u128; model.label_count()];
    counts[VACUUM] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; counts.len()];
        for (h, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for g in model.channels(h, SIGMA) {
                next[g] = next[g].saturating_add(c);
            }
        }
        counts = next;
    }
    counts[VACUUM]
}

/// Enumerates admissible paths in lexicographic order of `(a_1, …, a_{n-2})`.
pub fn enumerate_fusion_basis(model: &AnyonModel, n: usize) -> Result<FusionSpace> {
    if n % 2 == 1 {
        return Err(Error::InvalidConfiguration(format!(
            "{n} σ-anyons cannot fuse to the vacuum; n must be even"
        )));
    }
    if n < 4 {
        return Err(Error::InvalidConfiguration(format!("need at least 4 anyons, got {n}")));
    }
    if n > 255 {
        return Err(Error::InvalidConfiguration(format!("{n} anyons is beyond the supported range")));
    }
    let mut basis = Vec::new();
    let mut heights = Vec::with_capacity(n - 2);
    extend_paths(model, n, SIGMA, &mut heights, &mut basis);
    if basis.is_empty() {
        return Err(Error::EmptySpace(format!("no vacuum-charge fusion path for n = {n} in {}", model.name())));
    }
    Ok(FusionSpace { n, model: model.clone(), basis })
}

fn extend_paths(model: &AnyonModel, n: usize, current: usize, heights: &mut Vec<u8>, out: &mut Vec<FusionPath>) {
    // heights holds a_1..a_j; `current` is the charge after j+1 anyons
    if heights.len() == n - 2 {
        if model.fusion(current, SIGMA, VACUUM) == 1 {
            out.push(FusionPath { outcomes: heights.clone() });
        }
        return;
    }
    // anyons still to come after the next one: n - (heights.len() + 2)
    let remaining = n - heights.len() - 2;
    for next in model.channels(current, SIGMA) {
        if next > remaining {
            continue;
        }
        heights.push(next as u8);
        extend_paths(model, n, next, heights, out);
        heights.pop();
    }
}

/// The state with nearest-neighbour vacuum pairs, `Ψ(1, σ, 1, σ, …, 1, σ)`.
pub fn vacuum_pair_state(space: &FusionSpace) -> Result<Vec<Complex64>> {
    let path = vacuum_pair_path(space.n);
    let idx = space
        .index_of(&path)
        .ok_or_else(|| Error::Fusion("the vacuum-pair path is not admissible".into()))?;
    let mut state = vec![Complex64::zero(); space.dim()];
    state[idx] = Complex64::one();
    Ok(state)
}

fn vacuum_pair_path(n: usize) -> FusionPath {
    FusionPath {
        outcomes: (0..n - 2).map(|j| if j % 2 == 0 { VACUUM as u8 } else { SIGMA as u8 }).collect(),
    }
}

fn check_index(space: &FusionSpace, i: usize) -> Result<()> {
    if i == 0 || i >= space.n {
        return Err(Error::IndexOutOfRange { index: i, max: space.n - 1 });
    }
    Ok(())
}

/// Temperley-Lieb generator `E_i` in the path representation.
pub fn tl_generator(space: &FusionSpace, i: usize) -> Result<CsrMatrix<f64>> {
    check_index(space, i)?;
    let model = &space.model;
    let k = model.level() as usize;
    let mut triplets = Vec::new();
    let mut scratch = FusionPath { outcomes: Vec::new() };
    for (col, path) in space.basis.iter().enumerate() {
        let below = path.height(i - 1);
        if below != path.height(i + 1) {
            continue;
        }
        let h = path.height(i);
        // i ranges over 1..n-1, so h_i is an outcome slot unless i == 1 or i == n-1,
        // where it is pinned to σ and the only partner is itself
        for hp in [below.wrapping_sub(1), below + 1] {
            if hp > k {
                continue;
            }
            let row = if hp == h {
                col
            } else if i == 1 || i == space.n - 1 {
                continue;
            } else {
                scratch.outcomes.clone_from(&path.outcomes);
                scratch.outcomes[i - 2] = hp as u8;
                match space.index_of(&scratch) {
                    Some(r) => r,
                    None => continue,
                }
            };
            let w = (model.loop_weight(h) * model.loop_weight(hp)).sqrt() / model.loop_weight(below);
            triplets.push((row, col, w));
        }
    }
    Ok(CsrMatrix::from_triplets(space.dim(), space.dim(), triplets))
}

/// Unitary braid generator `b_i = A·Id + A⁻¹·E_i`.
#[derive(Debug, Clone)]
pub struct BraidGeneratorMatrix {
    pub index: usize,
    pub matrix: CsrMatrix<Complex64>,
}

pub fn braid_generator(space: &FusionSpace, i: usize) -> Result<BraidGeneratorMatrix> {
    let a = space.model.a();
    let matrix = skein_matrix(space, i, a.value(), a.pow(-1))?;
    Ok(BraidGeneratorMatrix { index: i, matrix })
}

/// `b_i⁻¹ = A⁻¹·Id + A·E_i`.
pub fn braid_generator_inverse(space: &FusionSpace, i: usize) -> Result<BraidGeneratorMatrix> {
    let a = space.model.a();
    let matrix = skein_matrix(space, i, a.pow(-1), a.value())?;
    Ok(BraidGeneratorMatrix { index: i, matrix })
}

fn skein_matrix(space: &FusionSpace, i: usize, id_coeff: Complex64, e_coeff: Complex64) -> Result<CsrMatrix<Complex64>> {
    let e = tl_generator(space, i)?;
    let mut triplets: Vec<(usize, usize, Complex64)> = e.triplets().map(|(r, c, v)| (r, c, e_coeff * v)).collect();
    triplets.extend((0..space.dim()).map(|j| (j, j, id_coeff)));
    Ok(CsrMatrix::from_triplets(space.dim(), space.dim(), triplets))
}

/// Single-qubit blocks of the SU(2)_2 qubit representation.
fn qubit_blocks() -> (DMatrix<Complex64>, DMatrix<Complex64>, DMatrix<Complex64>) {
    let one = Complex64::one();
    let i = Complex64::i();
    let zero = Complex64::zero();
    let r = DMatrix::from_row_slice(2, 2, &[one, zero, zero, i]);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let p = Complex64::from_polar(s, std::f64::consts::FRAC_PI_4);
    let m = Complex64::from_polar(s, -std::f64::consts::FRAC_PI_4);
    let b = DMatrix::from_row_slice(2, 2, &[p, m, m, p]);
    let a = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![one, i, i, one]));
    (r, b, a)
}

fn kron(x: &DMatrix<Complex64>, y: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    x.kronecker(y)
}

fn identity_qubits(count: usize) -> DMatrix<Complex64> {
    DMatrix::identity(1 << count, 1 << count)
}

/// Generator `B_i` of the SU(2)_2 fusion space written on `m = n/2 - 1`
/// qubits, qubit 1 most significant. Qubit `j` holds `a_{2j-1} ∈ {1, ψ}`.
pub fn su22_qubit_generator(n: usize, i: usize) -> Result<DMatrix<Complex64>> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidConfiguration(format!("qubit representation needs even n >= 4, got {n}")));
    }
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n - 1 });
    }
    let m = n / 2 - 1;
    if m > 12 {
        return Err(Error::InvalidConfiguration(format!("{m} qubits is too large for a dense generator")));
    }
    let (r, b, a) = qubit_blocks();
    // (block, first qubit, qubits spanned), qubits counted from 1
    let (block, first, span) = if i == 1 {
        (r, 1, 1)
    } else if i == n - 1 {
        (r, m, 1)
    } else if i.is_multiple_of(2) {
        (b, i / 2, 1)
    } else {
        (a, (i - 1) / 2, 2)
    };
    let left = identity_qubits(first - 1);
    let right = identity_qubits(m + 1 - first - span);
    Ok(kron(&kron(&left, &block), &right))
}

/// A unitary representation of `B_n` together with its vacuum-pair state.
pub trait BraidRepresentation: Sync {
    fn strands(&self) -> usize;
    fn dim(&self) -> usize;
    fn initial_state(&self) -> Vec<Complex64>;
    /// `y = b_i x`.
    fn apply(&self, i: usize, x: &[Complex64], y: &mut [Complex64]);
    fn name(&self) -> String;
}

/// Temperley-Lieb path representation of SU(2)_k.
#[derive(Debug, Clone)]
pub struct TlRepresentation {
    space: FusionSpace,
    generators: Vec<CsrMatrix<Complex64>>,
    initial: Vec<Complex64>,
}

impl TlRepresentation {
    pub fn new(model: &AnyonModel, n: usize) -> Result<Self> {
        let space = enumerate_fusion_basis(model, n)?;
        let generators = (1..n)
            .into_par_iter()
            .map(|i| braid_generator(&space, i).map(|g| g.matrix))
            .collect::<Result<Vec<_>>>()?;
        let initial = vacuum_pair_state(&space)?;
        Ok(TlRepresentation { space, generators, initial })
    }

    pub fn space(&self) -> &FusionSpace {
        &self.space
    }

    pub fn generator(&self, i: usize) -> &CsrMatrix<Complex64> {
        &self.generators[i - 1]
    }
}

impl BraidRepresentation for TlRepresentation {
    fn strands(&self) -> usize {
        self.space.n
    }

    fn dim(&self) -> usize {
        self.space.dim()
    }

    fn initial_state(&self) -> Vec<Complex64> {
        self.initial.clone()
    }

    fn apply(&self, i: usize, x: &[Complex64], y: &mut [Complex64]) {
        self.generators[i - 1].mul_vec_into(x, y);
    }

    fn name(&self) -> String {
        format!("tl:{}", self.space.model.name())
    }
}

/// The explicit SU(2)_2 qubit representation.
#[derive(Debug, Clone)]
pub struct QubitRepresentation {
    n: usize,
    generators: Vec<CsrMatrix<Complex64>>,
}

impl QubitRepresentation {
    pub fn new(n: usize) -> Result<Self> {
        let generators = (1..n)
            .map(|i| su22_qubit_generator(n, i).map(|m| CsrMatrix::from_dense(&m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(QubitRepresentation { n, generators })
    }
}

impl BraidRepresentation for QubitRepresentation {
    fn strands(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        1 << (self.n / 2 - 1)
    }

    fn initial_state(&self) -> Vec<Complex64> {
        let mut v = vec![Complex64::zero(); self.dim()];
        v[0] = Complex64::one();
        v
    }

    fn apply(&self, i: usize, x: &[Complex64], y: &mut [Complex64]) {
        self.generators[i - 1].mul_vec_into(x, y);
    }

    fn name(&self) -> String {
        "qubit:su2k:2".into()
    }
}

/// Every generator acts as the identity; reduces the walk to the plain
/// coined walk.
#[derive(Debug, Clone, Copy)]
pub struct TrivialRepresentation {
    pub n: usize,
}

impl BraidRepresentation for TrivialRepresentation {
    fn strands(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        1
    }

    fn initial_state(&self) -> Vec<Complex64> {
        vec![Complex64::one()]
    }

    fn apply(&self, _i: usize, x: &[Complex64], y: &mut [Complex64]) {
        y.copy_from_slice(x);
    }

    fn name(&self) -> String {
        "trivial".into()
    }
}

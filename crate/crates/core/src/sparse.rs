//! Minimal row-compressed matrix used for braid and Temperley-Lieb generators.

use std::ops::{AddAssign, Mul};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix<T> {
    nrows: usize,
    ncols: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<T>,
}

impl<T> CsrMatrix<T>
where
    T: Copy + Zero + AddAssign,
{
    /// Builds from `(row, col, value)` triplets; duplicates are summed and
    /// exact zeros dropped.
    pub fn from_triplets(nrows: usize, ncols: usize, mut triplets: Vec<(usize, usize, T)>) -> Self {
        triplets.sort_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; nrows + 1];
        let mut col_idx = Vec::with_capacity(triplets.len());
        let mut values: Vec<T> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "triplet ({r}, {c}) outside {nrows}x{ncols}");
            if last == Some((r, c)) {
                *values.last_mut().unwrap() += v;
            } else {
                col_idx.push(c);
                values.push(v);
                row_ptr[r + 1] += 1;
                last = Some((r, c));
            }
        }
        for r in 0..nrows {
            row_ptr[r + 1] += row_ptr[r];
        }
        let mut m = CsrMatrix { nrows, ncols, row_ptr, col_idx, values };
        m.prune();
        m
    }

    fn prune(&mut self) {
        if self.values.iter().all(|v| !v.is_zero()) {
            return;
        }
        let mut row_ptr = vec![0usize; self.nrows + 1];
        let mut col_idx = Vec::with_capacity(self.values.len());
        let mut values = Vec::with_capacity(self.values.len());
        for r in 0..self.nrows {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                if !self.values[k].is_zero() {
                    col_idx.push(self.col_idx[k]);
                    values.push(self.values[k]);
                }
            }
            row_ptr[r + 1] = col_idx.len();
        }
        self.row_ptr = row_ptr;
        self.col_idx = col_idx;
        self.values = values;
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        (0..self.nrows).flat_map(move |r| {
            (self.row_ptr[r]..self.row_ptr[r + 1]).map(move |k| (r, self.col_idx[k], self.values[k]))
        })
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        match self.col_idx[span.clone()].binary_search(&c) {
            Ok(pos) => self.values[span.start + pos],
            Err(_) => T::zero(),
        }
    }

    /// Nonzero count per column.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.ncols];
        for &c in &self.col_idx {
            counts[c] += 1;
        }
        counts
    }

    pub fn map<U, F>(&self, f: F) -> CsrMatrix<U>
    where
        U: Copy + Zero + AddAssign,
        F: Fn(T) -> U,
    {
        let mut m = CsrMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            row_ptr: self.row_ptr.clone(),
            col_idx: self.col_idx.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        };
        m.prune();
        m
    }

    /// `y = self · x`.
    pub fn mul_vec_into<V>(&self, x: &[V], y: &mut [V])
    where
        V: Copy + Zero + AddAssign + Mul<T, Output = V>,
    {
        debug_assert_eq!(x.len(), self.ncols);
        debug_assert_eq!(y.len(), self.nrows);
        for (r, out) in y.iter_mut().enumerate() {
            let mut acc = V::zero();
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += x[self.col_idx[k]] * self.values[k];
            }
            *out = acc;
        }
    }
}

impl CsrMatrix<f64> {
    pub fn to_dense_complex(&self) -> DMatrix<Complex64> {
        self.map(|v| Complex64::new(v, 0.0)).to_dense()
    }
}

impl CsrMatrix<Complex64> {
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.nrows, self.ncols);
        for (r, c, v) in self.triplets() {
            m[(r, c)] += v;
        }
        m
    }

    pub fn from_dense(m: &DMatrix<Complex64>) -> Self {
        let mut triplets = Vec::new();
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                let v = m[(r, c)];
                if v != Complex64::zero() {
                    triplets.push((r, c, v));
                }
            }
        }
        CsrMatrix::from_triplets(m.nrows(), m.ncols(), triplets)
    }
}

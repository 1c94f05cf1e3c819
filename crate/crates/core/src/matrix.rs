// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense row-major complex matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_traits::Float;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major data. Fails if the length is not `rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(alloc::format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// `|v⟩⟨w|`.
    pub fn outer(v: &[Complex64], w: &[Complex64]) -> Self {
        Self::from_fn(v.len(), w.len(), |r, c| v[r] * w[c].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * s).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{}x{} vs {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(alloc::format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|r| self.row(r).iter().zip(v).map(|(&a, &b)| a * b).sum()).collect())
    }

    /// Kronecker product `self ⊗ other`; the right factor's index runs fastest.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == ZERO {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Result<Complex64> {
        if self.cols != other.rows || self.rows != other.cols {
            return Err(Error::DimensionMismatch(alloc::format!(
                "trace of {}x{} times {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            )));
        }
        let mut acc = ZERO;
        for i in 0..self.rows {
            for k in 0..self.cols {
                acc += self.data[i * self.cols + k] * other.data[k * other.cols + i];
            }
        }
        Ok(acc)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self[(r, c)].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
    }

    /// Returns the position of the first NaN or infinite entry.
    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())).map(|i| (i / self.cols, i % self.cols))
    }

    /// Solves `self · X = rhs` by LU decomposition with partial pivoting.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(Error::DimensionMismatch(alloc::format!(
                "solve with {}x{} system and {}x{} right-hand side",
                self.rows,
                self.cols,
                rhs.rows,
                rhs.cols
            )));
        }
        let n = self.rows;
        let mut lu = self.clone();
        let mut x = rhs.clone();
        for k in 0..n {
            let pivot = (k..n).max_by(|&a, &b| lu[(a, k)].norm().total_cmp(&lu[(b, k)].norm())).unwrap_or(k);
            if lu[(pivot, k)].norm() == 0.0 {
                return Err(Error::Singular);
            }
            if pivot != k {
                lu.swap_rows(pivot, k);
                x.swap_rows(pivot, k);
            }
            let inv = ONE / lu[(k, k)];
            for r in k + 1..n {
                let factor = lu[(r, k)] * inv;
                if factor == ZERO {
                    continue;
                }
                lu[(r, k)] = ZERO;
                for c in k + 1..n {
                    let v = lu[(k, c)];
                    lu[(r, c)] -= factor * v;
                }
                for c in 0..x.cols {
                    let v = x[(k, c)];
                    x[(r, c)] -= factor * v;
                }
            }
        }
        for k in (0..n).rev() {
            let inv = ONE / lu[(k, k)];
            for c in 0..x.cols {
                let mut acc = x[(k, c)];
                for j in k + 1..n {
                    acc -= lu[(k, j)] * x[(j, c)];
                }
                x[(k, c)] = acc * inv;
            }
        }
        Ok(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Matrix exponential by scaling and squaring with a degree-13 Padé
    /// approximant (Higham 2005).
    pub fn expm(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(alloc::format!("expm of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        const THETA_13: f64 = 5.371_920_351_148_152;
        const B: [f64; 14] = [
            64_764_752_532_480_000.0,
            32_382_376_266_240_000.0,
            7_771_770_303_897_600.0,
            1_187_353_796_428_800.0,
            129_060_195_264_000.0,
            10_559_470_521_600.0,
            670_442_572_800.0,
            33_522_128_640.0,
            1_323_241_920.0,
            40_840_800.0,
            960_960.0,
            16_380.0,
            182.0,
            1.0,
        ];
        let norm = self.one_norm();
        let squarings = if norm > THETA_13 { (norm / THETA_13).log2().ceil() as i32 } else { 0 };
        let a = self.scale_real(2.0.powi(-squarings));
        let eye = Self::identity(n);
        let a2 = a.matmul(&a)?;
        let a4 = a2.matmul(&a2)?;
        let a6 = a2.matmul(&a4)?;
        let lin = |terms: &[(&Self, f64)]| -> Self {
            let mut out = Self::zeros(n, n);
            for (m, c) in terms {
                for (o, v) in out.data.iter_mut().zip(&m.data) {
                    *o += v * *c;
                }
            }
            out
        };
        let u_inner = a6.matmul(&lin(&[(&a6, B[13]), (&a4, B[11]), (&a2, B[9])]))?;
        let u = a.matmul(&u_inner.add(&lin(&[(&a6, B[7]), (&a4, B[5]), (&a2, B[3]), (&eye, B[1])]))?)?;
        let v_inner = a6.matmul(&lin(&[(&a6, B[12]), (&a4, B[10]), (&a2, B[8])]))?;
        let v = v_inner.add(&lin(&[(&a6, B[6]), (&a4, B[4]), (&a2, B[2]), (&eye, B[0])]))?;
        let mut r = v.sub(&u)?.solve(&v.add(&u)?)?;
        for _ in 0..squarings {
            r = r.matmul(&r)?;
        }
        Ok(r)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// `⟨v|w⟩`.
pub fn inner(v: &[Complex64], w: &[Complex64]) -> Complex64 {
    v.iter().zip(w).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalized(v: &[Complex64]) -> Vec<Complex64> {
    let n = norm(v);
    v.iter().map(|z| z / n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kron_ordering_puts_right_factor_fastest() {
        let a = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let b = ComplexMatrix::from_real_diagonal(&[0.0, 1.0]);
        assert_eq!(a.kron(&b), ComplexMatrix::from_real_diagonal(&[0.0, 1.0, 0.0, 0.0]));
    }

    #[test]
    fn solve_recovers_known_solution() {
        let a = ComplexMatrix::from_row_major(
            3,
            3,
            vec![
                c(2.0, 1.0),
                c(0.0, 0.0),
                c(1.0, -1.0),
                c(0.5, 0.0),
                c(0.0, 3.0),
                c(1.0, 0.0),
                c(0.0, 0.0),
                c(1.0, 1.0),
                c(4.0, 0.0),
            ],
        )
        .unwrap();
        let x = ComplexMatrix::from_row_major(3, 1, vec![c(1.0, 2.0), c(-1.0, 0.5), c(0.25, 0.0)]).unwrap();
        let b = a.matmul(&x).unwrap();
        let got = a.solve(&b).unwrap();
        assert!(got.max_abs_diff(&x).unwrap() < 1e-14);
    }

    #[test]
    fn singular_system_is_rejected() {
        let a = ComplexMatrix::zeros(2, 2);
        assert_eq!(a.solve(&ComplexMatrix::identity(2)), Err(Error::Singular));
    }

    #[test]
    fn expm_of_diagonal_matches_scalar_exponentials() {
        let d = ComplexMatrix::from_fn(3, 3, |r, c_| if r == c_ { c(r as f64 - 1.5, 0.3 * r as f64) } else { ZERO });
        let e = d.expm().unwrap();
        for i in 0..3 {
            assert!((e[(i, i)] - d[(i, i)].exp()).norm() < 1e-13);
        }
    }

    #[test]
    fn expm_matches_taylor_series_oracle() {
        // Large-norm input to exercise the squaring phase.
        let a = ComplexMatrix::from_fn(4, 4, |r, k| {
            c(((r * 7 + k * 3) % 5) as f64 * 0.9 - 1.7, ((r + 2 * k) % 3) as f64 * 0.4)
        });
        let got = a.expm().unwrap();
        // Taylor series on A/2^6 followed by 6 squarings.
        let small = a.scale_real(1.0 / 64.0);
        let mut term = ComplexMatrix::identity(4);
        let mut sum = ComplexMatrix::identity(4);
        for k in 1..40 {
            term = term.matmul(&small).unwrap().scale_real(1.0 / k as f64);
            sum = sum.add(&term).unwrap();
        }
        for _ in 0..6 {
            sum = sum.matmul(&sum).unwrap();
        }
        let rel = got.max_abs_diff(&sum).unwrap() / sum.max_abs();
        assert!(rel < 1e-12, "relative error {rel}");
    }

    #[test]
    fn expm_of_anti_hermitian_is_unitary() {
        let h = ComplexMatrix::from_fn(5, 5, |r, k| c((r + k) as f64 * 0.3, (r as f64 - k as f64) * 0.7));
        let herm = h.add(&h.adjoint()).unwrap();
        let u = herm.scale(c(0.0, 1.3)).expm().unwrap();
        let defect = u.adjoint().matmul(&u).unwrap().max_abs_diff(&ComplexMatrix::identity(5)).unwrap();
        assert!(defect < 1e-12);
    }
}

// Copyright 2026 The nptcert Authors
// SPDX-License-Identifier: Apache-2.0

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::hermitian::{validate_hermitian, DimensionProfile, HermitianOperator};
use crate::matrix::ComplexMatrix;
use crate::{Error, Result};

/// One or two bosonic modes, each truncated to levels `0..=cutoff`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockSpace {
    modes: usize,
    cutoff: usize,
}

pub const DEFAULT_CUTOFF: usize = 30;

impl FockSpace {
    pub fn new(modes: usize, cutoff: usize) -> Result<Self> {
        if !(1..=2).contains(&modes) {
            return Err(Error::ParameterOutOfRange(format!("{modes} modes; expected 1 or 2")));
        }
        if cutoff < 2 {
            return Err(Error::ParameterOutOfRange(format!("cutoff {cutoff} must be ≥ 2")));
        }
        Ok(Self { modes, cutoff })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn levels(&self) -> usize {
        self.cutoff + 1
    }

    pub fn dim(&self) -> usize {
        self.levels().pow(self.modes as u32)
    }

    pub fn profile(&self) -> DimensionProfile {
        DimensionProfile::new(vec![self.levels(); self.modes]).expect("levels ≥ 3")
    }

    /// Row-major index of `|n₁, n₂⟩`.
    pub fn index(&self, n1: usize, n2: usize) -> usize {
        n1 * self.levels() + n2
    }

    pub fn single_mode(&self) -> Self {
        Self { modes: 1, cutoff: self.cutoff }
    }

    pub fn two_mode(&self) -> Self {
        Self { modes: 2, cutoff: self.cutoff }
    }
}

/// Row-compressed complex matrix used for ladder-operator polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOp {
    dim: usize,
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl SparseOp {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self { dim, rows: (0..dim).map(|i| vec![(i, Complex64::new(1.0, 0.0))]).collect() }
    }

    /// Sums duplicate entries and drops exact zeros.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, Complex64)>) -> Self {
        let mut rows = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            rows[r].push((c, v));
        }
        let mut op = Self { dim, rows };
        op.compress();
        op
    }

    fn compress(&mut self) {
        for row in &mut self.rows {
            row.sort_by_key(|&(c, _)| c);
            let mut merged: Vec<(usize, Complex64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|&(_, v)| v != Complex64::new(0.0, 0.0));
            *row = merged;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.rows[r].iter().find(|&&(k, _)| k == c).map_or(Complex64::new(0.0, 0.0), |&(_, v)| v)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("sparse operators of dim {} and {}", self.dim, other.dim)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc = vec![Complex64::new(0.0, 0.0); self.dim];
        let mut touched = Vec::new();
        let mut rows = Vec::with_capacity(self.dim);
        for row in &self.rows {
            for &(k, v) in row {
                for &(c, w) in &other.rows[k] {
                    if acc[c] == Complex64::new(0.0, 0.0) {
                        touched.push(c);
                    }
                    acc[c] += v * w;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::with_capacity(touched.len());
            for &c in &touched {
                if acc[c] != Complex64::new(0.0, 0.0) {
                    out.push((c, acc[c]));
                }
                acc[c] = Complex64::new(0.0, 0.0);
            }
            touched.clear();
            rows.push(out);
        }
        Ok(Self { dim: self.dim, rows })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.dim);
        for _ in 0..k {
            out = out.mul(self).expect("same dim");
        }
        out
    }

    pub fn linear_combination(terms: &[(Complex64, &SparseOp)]) -> Result<Self> {
        let dim = terms.first().map_or(0, |(_, op)| op.dim);
        for (_, op) in terms {
            if op.dim != dim {
                return Err(Error::DimensionMismatch("sparse combination of mixed dims".into()));
            }
        }
        Ok(Self::from_triplets(
            dim,
            terms.iter().flat_map(|(w, op)| op.triplets().map(move |(r, c, v)| (r, c, *w * v))),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let one = Complex64::new(1.0, 0.0);
        Self::linear_combination(&[(one, self), (one, other)])
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::linear_combination(&[(Complex64::new(1.0, 0.0), self), (Complex64::new(-1.0, 0.0), other)])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (r, c, s * v)))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (c, r, v.conj())))
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim;
        Self::from_triplets(
            self.dim * d,
            self.triplets()
                .flat_map(|(r, c, v)| other.triplets().map(move |(r2, c2, w)| (r * d + r2, c * d + c2, v * w))),
        )
    }

    /// `max |S − S†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.adjoint();
        self.sub(&adj).map_or(f64::INFINITY, |d| d.triplets().map(|(_, _, v)| v.norm()).fold(0.0, f64::max))
    }

    /// `Tr{Sρ}` against a dense matrix.
    pub fn expect(&self, rho: &ComplexMatrix) -> Result<Complex64> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "operator dim {} vs state {}x{}",
                self.dim,
                rho.rows(),
                rho.cols()
            )));
        }
        Ok(self.triplets().map(|(r, c, v)| v * rho[(c, r)]).sum())
    }

    pub fn to_dense(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v;
        }
        m
    }

    pub fn to_hermitian(&self, profile: DimensionProfile) -> Result<HermitianOperator> {
        validate_hermitian(self.to_dense(), profile, crate::HERMITICITY_TOL)
    }
}

/// Truncated annihilation operator with `⟨k−1|a|k⟩ = √k`.
pub fn annihilation(cutoff: usize) -> SparseOp {
    SparseOp::from_triplets(cutoff + 1, (1..=cutoff).map(|k| (k - 1, k, Complex64::new((k as f64).sqrt(), 0.0))))
}

/// `a` and `a†` for each mode, embedded in the full space.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderOps {
    pub a: Vec<SparseOp>,
    pub a_dag: Vec<SparseOp>,
}

pub fn ladder_ops(space: FockSpace) -> LadderOps {
    let single = annihilation(space.cutoff());
    let id = SparseOp::identity(space.levels());
    let a: Vec<SparseOp> = match space.modes() {
        1 => vec![single],
        _ => vec![single.kron(&id), id.kron(&single)],
    };
    let a_dag = a.iter().map(SparseOp::adjoint).collect();
    LadderOps { a, a_dag }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn annihilation_at_cutoff_two() {
        let expected = ComplexMatrix::from_row_major(
            3,
            3,
            vec![re(0.), re(1.), re(0.), re(0.), re(0.), re(2f64.sqrt()), re(0.), re(0.), re(0.)],
        )
        .unwrap();
        assert_eq!(annihilation(2).to_dense(), expected);
    }

    #[test]
    fn truncated_commutator_corner() {
        let space = FockSpace::new(1, 5).unwrap();
        let ops = ladder_ops(space);
        let c = ops.a[0].commutator(&ops.a_dag[0]).unwrap().to_dense();
        let mut expected = ComplexMatrix::identity(6);
        expected[(5, 5)] = re(-5.0);
        assert!(c.max_abs_diff(&expected).unwrap() < 1e-14);
    }

    #[test]
    fn annihilation_kills_vacuum() {
        let a = annihilation(4).to_dense();
        let vac: Vec<Complex64> = (0..5).map(|i| re(if i == 0 { 1. } else { 0. })).collect();
        assert!(a.mul_vec(&vac).unwrap().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn sparse_algebra_matches_dense() {
        let space = FockSpace::new(2, 3).unwrap();
        let ops = ladder_ops(space);
        let x = ops.a[0].mul(&ops.a_dag[1]).unwrap().add(&ops.a[1].pow(2)).unwrap();
        let dense = ops.a[0]
            .to_dense()
            .matmul(&ops.a_dag[1].to_dense())
            .unwrap()
            .add(&ops.a[1].to_dense().matmul(&ops.a[1].to_dense()).unwrap())
            .unwrap();
        assert!(x.to_dense().max_abs_diff(&dense).unwrap() < 1e-14);
        assert!(x.adjoint().to_dense().max_abs_diff(&dense.adjoint()).unwrap() < 1e-14);
        let rho = ComplexMatrix::from_fn(16, 16, |r, c| Complex64::new((r + c) as f64, (r as f64) - (c as f64)));
        let lhs = x.expect(&rho).unwrap();
        let rhs = dense.trace_of_product(&rho).unwrap();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn modes_commute() {
        let ops = ladder_ops(FockSpace::new(2, 4).unwrap());
        assert_eq!(ops.a[0].commutator(&ops.a_dag[1]).unwrap().nnz(), 0);
        assert_eq!(ops.a[0].commutator(&ops.a[1]).unwrap().nnz(), 0);
    }

    #[test]
    fn space_validation() {
        assert!(FockSpace::new(3, 5).is_err());
        assert!(FockSpace::new(1, 1).is_err());
        let s = FockSpace::new(2, 30).unwrap();
        assert_eq!((s.dim(), s.index(1, 2)), (961, 33));
    }
}

//! Finitely presented modules over the Laurent ring A and their
//! finite-dimensional (Artinian) realizations.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::ring::{LaurentPoly, QPoly, Rat};

/// Dense matrix with entries in Q[t_1^{±1}, ..., t_n^{±1}].
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            nvars,
            rows,
            cols,
            data: vec![LaurentPoly::zero(nvars); rows * cols],
        }
    }

    pub fn identity(nvars: usize, n: usize) -> Self {
        let mut m = Self::zeros(nvars, n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one(nvars);
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::input("ragged matrix rows"));
        }
        for row in &rows {
            for e in row {
                if e.nvars() != nvars {
                    return Err(Error::VarMismatch(nvars, e.nvars()));
                }
            }
        }
        Ok(PolyMatrix {
            nvars,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.nvars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Transpose with the involution t_i -> t_i^{-1} applied entrywise;
    /// this is the adjoint that turns boundary maps into coboundary maps
    /// under the conjugate module structure.
    pub fn conjugate_transpose(&self) -> Self {
        let mut m = Self::zeros(self.nvars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].bar();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        if self.cols != other.rows {
            return Err(Error::input(format!(
                "matrix dimension mismatch: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = PolyMatrix::zeros(self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let prod = self[(i, k)].try_mul(&other[(k, j)])?;
                    m[(i, j)] = &m[(i, j)] + &prod;
                }
            }
        }
        Ok(m)
    }

    /// Substitute t_i = 1 everywhere.
    pub fn eval_at_one(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].eval_at_one();
            }
        }
        m
    }

    /// Lift a rational matrix to constant Laurent entries.
    pub fn from_qmatrix(nvars: usize, m: &QMatrix) -> Self {
        let mut out = Self::zeros(nvars, m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out[(i, j)] = LaurentPoly::constant(nvars, m[(i, j)].clone());
            }
        }
        out
    }

    /// Determinant by cofactor expansion; intended for the small matrices
    /// that show up in unit checks and tests.
    pub fn det(&self) -> LaurentPoly {
        assert!(self.rows == self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one(self.nvars);
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = LaurentPoly::zero(self.nvars);
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let mut sub = PolyMatrix::zeros(self.nvars, n - 1, n - 1);
            for i in 1..n {
                let mut cc = 0;
                for c in 0..n {
                    if c == j {
                        continue;
                    }
                    sub[(i - 1, cc)] = self[(i, c)].clone();
                    cc += 1;
                }
            }
            let term = &self[(0, j)] * &sub.det();
            if j % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over {} vars [", self.rows, self.cols, self.nvars)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Finitely presented A-module, given as the cokernel of its presentation
/// matrix: generators are the rows, relations are the columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPModule {
    nvars: usize,
    rank: usize,
    presentation: PolyMatrix,
}

impl FPModule {
    pub fn new(nvars: usize, rank: usize, presentation: PolyMatrix) -> Result<Self> {
        if presentation.nrows() != rank {
            return Err(Error::input(format!(
                "presentation has {} rows but the module has {} generators",
                presentation.nrows(),
                rank
            )));
        }
        if presentation.nvars() != nvars {
            return Err(Error::VarMismatch(nvars, presentation.nvars()));
        }
        Ok(FPModule {
            nvars,
            rank,
            presentation,
        })
    }

    /// Free module of the given rank (empty presentation).
    pub fn free(nvars: usize, rank: usize) -> Self {
        FPModule {
            nvars,
            rank,
            presentation: PolyMatrix::zeros(nvars, rank, 0),
        }
    }

    /// Cyclic module A / (p_1, ..., p_k).
    pub fn cyclic(nvars: usize, relations: &[LaurentPoly]) -> Result<Self> {
        let row = relations.to_vec();
        let m = PolyMatrix::from_rows(nvars, vec![row])?;
        FPModule::new(nvars, 1, m)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn presentation(&self) -> &PolyMatrix {
        &self.presentation
    }

    /// Direct sum of presentations.
    pub fn direct_sum(&self, other: &FPModule) -> Result<FPModule> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        let mut m = PolyMatrix::zeros(
            self.nvars,
            self.rank + other.rank,
            self.presentation.ncols() + other.presentation.ncols(),
        );
        for i in 0..self.rank {
            for j in 0..self.presentation.ncols() {
                m[(i, j)] = self.presentation[(i, j)].clone();
            }
        }
        for i in 0..other.rank {
            for j in 0..other.presentation.ncols() {
                m[(self.rank + i, self.presentation.ncols() + j)] =
                    other.presentation[(i, j)].clone();
            }
        }
        FPModule::new(self.nvars, self.rank + other.rank, m)
    }
}

/// Invariant factor data of a finitely presented module over Q[t^{±1}]:
/// the module is A^free_rank ⊕ A/(d_1) ⊕ ... ⊕ A/(d_k) with d_1 | d_2 | ...
/// and every d_i a monic nonunit with nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactorDecomposition {
    pub free_rank: usize,
    pub factors: Vec<QPoly>,
}

impl InvariantFactorDecomposition {
    pub fn torsion_dimension(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.degree().unwrap_or(0))
            .sum()
    }
}

/// Finite-dimensional Q-vector space with n commuting invertible rational
/// operators, the actions of t_1, ..., t_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianModule {
    nvars: usize,
    qdim: usize,
    t_ops: Vec<QMatrix>,
}

impl ArtinianModule {
    pub fn new(nvars: usize, t_ops: Vec<QMatrix>) -> Result<Self> {
        if t_ops.len() != nvars {
            return Err(Error::input(format!(
                "expected {} operators, got {}",
                nvars,
                t_ops.len()
            )));
        }
        let qdim = t_ops.first().map_or(0, |m| m.nrows());
        for (i, m) in t_ops.iter().enumerate() {
            if m.nrows() != qdim || m.ncols() != qdim {
                return Err(Error::input("operators must be square of equal size"));
            }
            if qdim > 0 && m.inverse().is_none() {
                return Err(Error::input(format!("operator t_{} is not invertible", i + 1)));
            }
        }
        for i in 0..t_ops.len() {
            for j in (i + 1)..t_ops.len() {
                if !t_ops[i].commutes_with(&t_ops[j]) {
                    return Err(Error::input(format!(
                        "operators t_{} and t_{} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(ArtinianModule { nvars, qdim, t_ops })
    }

    pub fn zero(nvars: usize) -> Self {
        ArtinianModule {
            nvars,
            qdim: 0,
            t_ops: vec![QMatrix::zeros(0, 0); nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn qdim(&self) -> usize {
        self.qdim
    }

    pub fn t_ops(&self) -> &[QMatrix] {
        &self.t_ops
    }

    pub fn is_zero(&self) -> bool {
        self.qdim == 0
    }

    /// The action of the group element encoded by a word of signed,
    /// 1-based generator indices (negative = inverse); the empty word is
    /// the identity.
    pub fn monodromy_word(&self, word: &[i64]) -> Result<QMatrix> {
        let mut acc = QMatrix::identity(self.qdim);
        for &w in word {
            if w == 0 || w.unsigned_abs() as usize > self.nvars {
                return Err(Error::input(format!("word index {} out of range", w)));
            }
            let i = (w.unsigned_abs() - 1) as usize;
            let m = if w > 0 {
                self.t_ops[i].clone()
            } else {
                self.t_ops[i]
                    .inverse()
                    .ok_or_else(|| Error::internal("operator lost invertibility"))?
            };
            acc = &acc * &m;
        }
        Ok(acc)
    }

    /// Module with every operator inverted (the conjugate structure).
    pub fn inverted(&self) -> Result<ArtinianModule> {
        let mut ops = Vec::with_capacity(self.nvars);
        for m in &self.t_ops {
            ops.push(
                m.inverse()
                    .ok_or_else(|| Error::internal("operator lost invertibility"))?,
            );
        }
        ArtinianModule::new(self.nvars, ops)
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &ArtinianModule) -> Result<ArtinianModule> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        let d = self.qdim + other.qdim;
        let mut ops = vec![];
        for k in 0..self.nvars {
            let mut m = QMatrix::zeros(d, d);
            for i in 0..self.qdim {
                for j in 0..self.qdim {
                    m[(i, j)] = self.t_ops[k][(i, j)].clone();
                }
            }
            for i in 0..other.qdim {
                for j in 0..other.qdim {
                    m[(self.qdim + i, self.qdim + j)] = other.t_ops[k][(i, j)].clone();
                }
            }
            ops.push(m);
        }
        ArtinianModule::new(self.nvars, ops)
    }
}

/// Check that a candidate coefficient is an exactly zero rational.
pub fn rat_is_zero(r: &Rat) -> bool {
    r.is_zero()
}

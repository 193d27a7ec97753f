//! Exact linear algebra over Q: row reduction, kernels, inverses, matrix
//! powers, characteristic polynomials, and subspace calculus on column
//! spans. Everything is rational arithmetic, no rounding anywhere.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{One, Zero};

use crate::ring::{rat, QPoly, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Single column matrix from a vector.
    pub fn column(v: &[Rat]) -> Self {
        QMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn hcat(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = QMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = m[(i, j)].clone() - &f * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, as columns of the returned matrix.
    pub fn kernel_basis(&self) -> QMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut m = QMatrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            m[(fc, k)] = rat(1);
            for (pi, &pc) in pivots.iter().enumerate() {
                m[(pc, k)] = -r[(pi, fc)].clone();
            }
        }
        m
    }

    /// Solve self * x = b for a single column b; None when inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hcat(&QMatrix::column(b));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(pi, self.cols)].clone();
        }
        Some(x)
    }

    /// Solve self * X = B columnwise; None when any column is inconsistent.
    pub fn solve_matrix(&self, b: &QMatrix) -> Option<QMatrix> {
        assert_eq!(b.rows, self.rows);
        let mut out = QMatrix::zeros(self.cols, b.cols);
        for j in 0..b.cols {
            let x = self.solve(&b.col(j))?;
            for i in 0..self.cols {
                out[(i, j)] = x[i].clone();
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let aug = self.hcat(&QMatrix::identity(self.rows));
        let (r, pivots) = aug.rref();
        // pivots must all lie in the left block
        if pivots.len() != self.rows || pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut inv = QMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                inv[(i, j)] = r[(i, self.cols + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn pow(&self, mut k: u64) -> QMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer powers; negative exponents require invertibility.
    pub fn pow_i(&self, k: i64) -> Option<QMatrix> {
        if k >= 0 {
            Some(self.pow(k as u64))
        } else {
            Some(self.inverse()?.pow((-k) as u64))
        }
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
    /// recurrence; exact over Q.
    pub fn char_poly(&self) -> QPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = rat(1);
        let mut m = QMatrix::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -m.trace() / rat(k as i64);
            for i in 0..n {
                m[(i, i)] = &m[(i, i)] + &c;
            }
            coeffs[n - k] = c;
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn commutes_with(&self, other: &QMatrix) -> bool {
        self * other == other * self
    }

    /// Apply a polynomial to the matrix.
    pub fn apply_poly(&self, p: &QPoly) -> QMatrix {
        assert!(self.is_square());
        let mut acc = QMatrix::zeros(self.rows, self.rows);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &QMatrix::identity(self.rows).scale(c);
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut m = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = &m[(i, j)] + &(a * &rhs[(k, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        m
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
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

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// Basis of the column span, as columns (computed from the rref of the
/// transpose, so the result is canonical for a given span).
pub fn column_space_basis(m: &QMatrix) -> QMatrix {
    let (r, pivots) = m.transpose().rref();
    let mut out = QMatrix::zeros(m.nrows(), pivots.len());
    for (k, _) in pivots.iter().enumerate() {
        for i in 0..m.nrows() {
            out[(i, k)] = r[(k, i)].clone();
        }
    }
    out
}

/// Intersection of two column spans inside Q^d.
pub fn subspace_intersect(a: &QMatrix, b: &QMatrix) -> QMatrix {
    assert_eq!(a.nrows(), b.nrows());
    if a.ncols() == 0 || b.ncols() == 0 {
        return QMatrix::zeros(a.nrows(), 0);
    }
    let neg_b = b.scale(&rat(-1));
    let ker = a.hcat(&neg_b).kernel_basis();
    // first block of each kernel vector gives coefficients in a
    let mut vecs = QMatrix::zeros(a.nrows(), ker.ncols());
    for k in 0..ker.ncols() {
        for i in 0..a.nrows() {
            let mut s = Rat::zero();
            for j in 0..a.ncols() {
                s += &a[(i, j)] * &ker[(j, k)];
            }
            vecs[(i, k)] = s;
        }
    }
    column_space_basis(&vecs)
}

/// Sum of two column spans.
pub fn subspace_sum(a: &QMatrix, b: &QMatrix) -> QMatrix {
    column_space_basis(&a.hcat(b))
}

/// Does the column span of `space` contain `v`?
pub fn subspace_contains(space: &QMatrix, v: &[Rat]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    space.solve(v).is_some()
}

pub fn subspace_eq(a: &QMatrix, b: &QMatrix) -> bool {
    a.ncols() == b.ncols()
        && (0..b.ncols()).all(|j| subspace_contains(a, &b.col(j)))
        && (0..a.ncols()).all(|j| subspace_contains(b, &a.col(j)))
}

/// Matrix of `op` restricted to the invariant subspace spanned by the
/// columns of `basis`; None if the subspace is not invariant.
pub fn restrict_operator(basis: &QMatrix, op: &QMatrix) -> Option<QMatrix> {
    basis.solve_matrix(&(op * basis))
}

/// Matrix of the operator induced by `op` on Q^d / span(sub). The quotient
/// is realized on the standard basis vectors complementary to the pivot
/// rows of the subspace.
pub fn quotient_operator(sub: &QMatrix, op: &QMatrix) -> QMatrix {
    let d = op.nrows();
    let basis = column_space_basis(sub);
    let u = basis.ncols();
    // extend to a basis of Q^d with standard vectors
    let mut full = basis.clone();
    for i in 0..d {
        if full.ncols() == d {
            break;
        }
        let mut e = vec![Rat::zero(); d];
        e[i] = rat(1);
        let cand = full.hcat(&QMatrix::column(&e));
        if cand.rank() == full.ncols() + 1 {
            full = cand;
        }
    }
    assert_eq!(full.ncols(), d);
    let inv = full.inverse().expect("basis is invertible");
    let conj = &(&inv * op) * &full;
    // lower-right block is the induced quotient map
    let q = d - u;
    let mut out = QMatrix::zeros(q, q);
    for i in 0..q {
        for j in 0..q {
            out[(i, j)] = conj[(u + i, u + j)].clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    #[test]
    fn rref_and_kernel() {
        let m = QMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.ncols(), 2);
        let prod = &m * &k;
        assert!(prod.is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = QMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(inv[(0, 0)], rat(1));
        assert_eq!(inv[(0, 1)], rat(-1));
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of t^2 - 2t + 1
        let m = QMatrix::from_i64_rows(&[&[0, -1], &[1, 2]]);
        assert_eq!(m.char_poly(), QPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn char_poly_rational_entries() {
        let m = QMatrix::from_rows(vec![vec![ratio(1, 2), rat(0)], vec![rat(0), ratio(1, 3)]]);
        let p = m.char_poly();
        assert_eq!(p.eval(&ratio(1, 2)), rat(0));
        assert_eq!(p.eval(&ratio(1, 3)), rat(0));
    }

    #[test]
    fn subspace_ops() {
        // span{e1, e2} ∩ span{e2, e3} = span{e2}
        let a = QMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0]]);
        let b = QMatrix::from_i64_rows(&[&[0, 0], &[1, 0], &[0, 1]]);
        let i = subspace_intersect(&a, &b);
        assert_eq!(i.ncols(), 1);
        assert!(subspace_contains(&i, &[rat(0), rat(1), rat(0)]));
        let s = subspace_sum(&a, &b);
        assert_eq!(s.ncols(), 3);
    }

    #[test]
    fn quotient_operator_block() {
        // quotient of Q^2 by span{e1} under [[1,1],[0,3]] is multiplication by 3
        let sub = QMatrix::from_i64_rows(&[&[1], &[0]]);
        let op = QMatrix::from_i64_rows(&[&[1, 1], &[0, 3]]);
        let q = quotient_operator(&sub, &op);
        assert_eq!(q.nrows(), 1);
        assert_eq!(q[(0, 0)], rat(3));
    }

    #[test]
    fn restricted_operator() {
        let basis = QMatrix::from_i64_rows(&[&[1], &[0]]);
        let op = QMatrix::from_i64_rows(&[&[5, 1], &[0, 2]]);
        let r = restrict_operator(&basis, &op).unwrap();
        assert_eq!(r[(0, 0)], rat(5));
        // non-invariant subspace
        let bad = QMatrix::from_i64_rows(&[&[0], &[1]]);
        assert!(restrict_operator(&bad, &op).is_none());
    }
}

//! Module theory over Q[t^{±1}], a Euclidean domain: Smith normal form
//! with recorded transformations, invariant factors, and the torsion
//! summary with its explicit t-operator.
//!
//! The elimination works on a dense internal representation (an exponent
//! offset plus a coefficient vector) because the transform matrices see
//! millions of small polynomial operations.

use num::Zero;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::module::{ArtinianModule, FPModule, InvariantFactorDecomposition, PolyMatrix};
use crate::ring::{rat, LaurentPoly, QPoly, Rat};

/// Euclidean division in Q[t^{±1}]: a = q*b + r with the core degree of r
/// strictly below that of b (or r = 0). The size function is the degree of
/// the monic core, so units have size 0.
pub fn laurent_div_rem(a: &LaurentPoly, b: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    if b.is_zero() {
        return Err(Error::input("division by zero"));
    }
    let (q, r) = Dense::from_laurent(a)?.div_rem(&Dense::from_laurent(b)?);
    Ok((q.to_laurent(), r.to_laurent()))
}

/// Does a divide b in Q[t^{±1}]?
pub fn laurent_divides(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    if a.is_zero() {
        return b.is_zero();
    }
    if b.is_zero() {
        return true;
    }
    laurent_div_rem(b, a).map(|(_, r)| r.is_zero()).unwrap_or(false)
}

/// Dense univariate Laurent polynomial: coeffs[i] is the coefficient of
/// t^{off + i}; when nonzero, the first and last coefficients are nonzero.
#[derive(Clone, Debug, PartialEq)]
struct Dense {
    off: i64,
    coeffs: Vec<Rat>,
}

impl Dense {
    fn zero() -> Dense {
        Dense { off: 0, coeffs: vec![] }
    }

    fn one() -> Dense {
        Dense { off: 0, coeffs: vec![rat(1)] }
    }

    fn unit(coeff: Rat, exp: i64) -> Dense {
        if coeff.is_zero() {
            return Dense::zero();
        }
        Dense { off: exp, coeffs: vec![coeff] }
    }

    fn normalize(mut self) -> Dense {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.off += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.off = 0;
        }
        self
    }

    fn from_laurent(p: &LaurentPoly) -> Result<Dense> {
        if p.nvars() != 1 {
            return Err(Error::input("expected univariate entries"));
        }
        if p.is_zero() {
            return Ok(Dense::zero());
        }
        let min = p.min_exponents().unwrap()[0];
        let max = p.max_exponents().unwrap()[0];
        let mut coeffs = vec![Rat::zero(); (max - min + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e[0] - min) as usize] = c.clone();
        }
        Ok(Dense { off: min, coeffs })
    }

    fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &LaurentPoly::uni_term(c.clone(), self.off + i as i64);
            }
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the monic core (the Euclidean size).
    fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn neg(&self) -> Dense {
        Dense {
            off: self.off,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn add(&self, other: &Dense) -> Dense {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let off = self.off.min(other.off);
        let hi = (self.off + self.coeffs.len() as i64).max(other.off + other.coeffs.len() as i64);
        let mut coeffs = vec![Rat::zero(); (hi - off) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.off - off) as usize + i] = c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let k = (other.off - off) as usize + i;
            coeffs[k] += c;
        }
        Dense { off, coeffs }.normalize()
    }

    fn sub(&self, other: &Dense) -> Dense {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Dense) -> Dense {
        if self.is_zero() || other.is_zero() {
            return Dense::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Dense {
            off: self.off + other.off,
            coeffs,
        }
        .normalize()
    }

    fn mul_unit(&self, coeff: &Rat, exp: i64) -> Dense {
        if self.is_zero() || coeff.is_zero() {
            return Dense::zero();
        }
        Dense {
            off: self.off + exp,
            coeffs: self.coeffs.iter().map(|c| c * coeff).collect(),
        }
    }

    /// a = q*b + r with span(r) < span(b) (or r = 0).
    fn div_rem(&self, b: &Dense) -> (Dense, Dense) {
        assert!(!b.is_zero(), "division by zero");
        if self.is_zero() {
            return (Dense::zero(), Dense::zero());
        }
        // polynomial division of the coefficient vectors; offsets are units
        let db = b.coeffs.len() - 1;
        let lb = b.coeffs.last().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); r.len().saturating_sub(db)];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = r.last().unwrap() / &lb;
            if !c.is_zero() {
                for i in 0..=db {
                    let v = r[k + i].clone() - &c * &b.coeffs[i];
                    r[k + i] = v;
                }
                q[k] = c;
            }
            r.pop();
        }
        let quot = Dense {
            off: self.off - b.off,
            coeffs: q,
        }
        .normalize();
        let rem = Dense {
            off: self.off,
            coeffs: r,
        }
        .normalize();
        (quot, rem)
    }

    fn divides(&self, other: &Dense) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Leading coefficient and trailing exponent, so that
    /// self = coeff * t^exp * core with core monic and core(0) != 0.
    fn unit_part(&self) -> (Rat, i64) {
        (
            self.coeffs.last().cloned().unwrap_or_else(Rat::zero),
            self.off,
        )
    }

}

/// Smith normal form data: u * input * v = d, with u and v invertible over
/// Q[t^{±1}] (unit determinants) and d diagonal with a divisibility chain,
/// every nonzero entry a monic polynomial with nonzero constant term.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: PolyMatrix,
    pub uinv: PolyMatrix,
    pub d: PolyMatrix,
    pub v: PolyMatrix,
    pub vinv: PolyMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, in chain order.
    pub fn diagonal(&self) -> Vec<LaurentPoly> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|p| !p.is_zero())
            .collect()
    }

    /// Diagonal entries that are not units, as monic cores.
    pub fn nonunit_factors(&self) -> Vec<QPoly> {
        self.diagonal()
            .iter()
            .filter(|p| !p.is_unit())
            .map(|p| QPoly::from_laurent(p).expect("snf diagonal is polynomial"))
            .collect()
    }
}

struct SnfState {
    m: Vec<Vec<Dense>>,
    u: Vec<Vec<Dense>>,
    uinv: Vec<Vec<Dense>>,
    v: Vec<Vec<Dense>>,
    vinv: Vec<Vec<Dense>>,
}

fn dense_identity(n: usize) -> Vec<Vec<Dense>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Dense::one() } else { Dense::zero() })
                .collect()
        })
        .collect()
}

impl SnfState {
    fn new(input: &PolyMatrix) -> Result<Self> {
        let rows = input.nrows();
        let cols = input.ncols();
        let mut m = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut row = Vec::with_capacity(cols);
            for j in 0..cols {
                row.push(Dense::from_laurent(&input[(i, j)])?);
            }
            m.push(row);
        }
        Ok(SnfState {
            m,
            u: dense_identity(rows),
            uinv: dense_identity(rows),
            v: dense_identity(cols),
            vinv: dense_identity(cols),
        })
    }

    fn rows(&self) -> usize {
        self.m.len()
    }

    fn cols(&self) -> usize {
        self.m.first().map_or(0, |r| r.len())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap(a, b);
        self.u.swap(a, b);
        for row in self.uinv.iter_mut() {
            row.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.m.iter_mut() {
            row.swap(a, b);
        }
        for row in self.v.iter_mut() {
            row.swap(a, b);
        }
        self.vinv.swap(a, b);
    }

    /// row_i -= q * row_k
    fn row_sub(&mut self, i: usize, k: usize, q: &Dense) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols() {
            if self.m[k][j].is_zero() {
                continue;
            }
            let s = self.m[i][j].sub(&q.mul(&self.m[k][j]));
            self.m[i][j] = s;
        }
        let ucols = self.u.first().map_or(0, |r| r.len());
        for j in 0..ucols {
            if self.u[k][j].is_zero() {
                continue;
            }
            let s = self.u[i][j].sub(&q.mul(&self.u[k][j]));
            self.u[i][j] = s;
        }
        for r in 0..self.uinv.len() {
            if self.uinv[r][i].is_zero() {
                continue;
            }
            let s = self.uinv[r][k].add(&q.mul(&self.uinv[r][i]));
            self.uinv[r][k] = s;
        }
    }

    /// col_j -= q * col_k
    fn col_sub(&mut self, j: usize, k: usize, q: &Dense) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows() {
            if self.m[i][k].is_zero() {
                continue;
            }
            let s = self.m[i][j].sub(&q.mul(&self.m[i][k]));
            self.m[i][j] = s;
        }
        for i in 0..self.v.len() {
            if self.v[i][k].is_zero() {
                continue;
            }
            let s = self.v[i][j].sub(&q.mul(&self.v[i][k]));
            self.v[i][j] = s;
        }
        let vicols = self.vinv.first().map_or(0, |r| r.len());
        for c in 0..vicols {
            if self.vinv[j][c].is_zero() {
                continue;
            }
            let s = self.vinv[k][c].add(&q.mul(&self.vinv[j][c]));
            self.vinv[k][c] = s;
        }
    }

    /// row_i *= unit (and the inverse scaling on uinv)
    fn scale_row(&mut self, i: usize, coeff: &Rat, exp: i64) {
        let inv = coeff.recip();
        for j in 0..self.cols() {
            let s = self.m[i][j].mul_unit(coeff, exp);
            self.m[i][j] = s;
        }
        let ucols = self.u.first().map_or(0, |r| r.len());
        for j in 0..ucols {
            let s = self.u[i][j].mul_unit(coeff, exp);
            self.u[i][j] = s;
        }
        for r in 0..self.uinv.len() {
            let s = self.uinv[r][i].mul_unit(&inv, -exp);
            self.uinv[r][i] = s;
        }
    }

    /// Pivot of minimal core degree in the trailing submatrix, ties broken
    /// row-major.
    fn find_pivot(&self, from: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in from..self.rows() {
            for j in from..self.cols() {
                if self.m[i][j].is_zero() {
                    continue;
                }
                let deg = self.m[i][j].span();
                match best {
                    Some((_, _, bd)) if bd <= deg => {}
                    _ => best = Some((i, j, deg)),
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn into_poly_matrix(rows: Vec<Vec<Dense>>, cols: usize) -> PolyMatrix {
        let r = rows.len();
        let mut out = PolyMatrix::zeros(1, r, cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, e) in row.into_iter().enumerate() {
                out[(i, j)] = e.to_laurent();
            }
        }
        out
    }
}

/// Smith normal form over Q[t^{±1}].
pub fn smith_normal_form(input: &PolyMatrix) -> Result<Snf> {
    if input.nvars() != 1 {
        return Err(Error::input("smith normal form requires univariate entries"));
    }
    let mut st = SnfState::new(input)?;
    let steps = st.rows().min(st.cols());
    for k in 0..steps {
        loop {
            let Some((pi, pj)) = st.find_pivot(k) else {
                break;
            };
            st.swap_rows(k, pi);
            st.swap_cols(k, pj);
            let mut dirty = false;
            for i in (k + 1)..st.rows() {
                if st.m[i][k].is_zero() {
                    continue;
                }
                let (q, r) = st.m[i][k].div_rem(&st.m[k][k]);
                st.row_sub(i, k, &q);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            for j in (k + 1)..st.cols() {
                if st.m[k][j].is_zero() {
                    continue;
                }
                let (q, r) = st.m[k][j].div_rem(&st.m[k][k]);
                st.col_sub(j, k, &q);
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // row and column are clear; enforce the divisibility chain
            let mut offender = None;
            'scan: for i in (k + 1)..st.rows() {
                for j in (k + 1)..st.cols() {
                    if !st.m[i][j].is_zero() && !st.m[k][k].divides(&st.m[i][j]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    // pull the offending row up so the pivot shrinks
                    let minus_one = Dense::unit(rat(-1), 0);
                    st.row_sub(k, i, &minus_one);
                }
                None => break,
            }
        }
    }
    // unit-normalize the diagonal
    for k in 0..steps {
        if st.m[k][k].is_zero() {
            continue;
        }
        let (lc, exp) = st.m[k][k].unit_part();
        if !num::One::is_one(&lc) || exp != 0 {
            st.scale_row(k, &lc.recip(), -exp);
        }
    }
    let cols = st.cols();
    let rows = st.rows();
    let SnfState { m, u, uinv, v, vinv } = st;
    Ok(Snf {
        u: SnfState::into_poly_matrix(u, rows),
        uinv: SnfState::into_poly_matrix(uinv, rows),
        d: SnfState::into_poly_matrix(m, cols),
        v: SnfState::into_poly_matrix(v, cols),
        vinv: SnfState::into_poly_matrix(vinv, cols),
    })
}

/// Invariant factor decomposition of a finitely presented Q[t^{±1}]-module.
pub fn invariant_factors(m: &FPModule) -> Result<InvariantFactorDecomposition> {
    if m.nvars() != 1 {
        return Err(Error::input("invariant factors require one variable"));
    }
    if m.presentation().ncols() == 0 {
        return Ok(InvariantFactorDecomposition {
            free_rank: m.rank(),
            factors: vec![],
        });
    }
    let snf = smith_normal_form(m.presentation())?;
    let nonzero = snf.diagonal().len();
    Ok(InvariantFactorDecomposition {
        free_rank: m.rank() - nonzero,
        factors: snf.nonunit_factors(),
    })
}

/// Companion matrix of a monic polynomial: multiplication by t on
/// Q[t]/(p) in the basis 1, t, ..., t^{deg-1}.
pub fn companion(p: &QPoly) -> QMatrix {
    assert!(p.is_monic(), "companion matrix of a non-monic polynomial");
    let n = p.degree().unwrap();
    let mut m = QMatrix::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = rat(1);
    }
    for i in 0..n {
        m[(i, n - 1)] = -p.coeff(i);
    }
    m
}

/// Torsion summary: the torsion part of the module as a finite-dimensional
/// Q-vector space with t acting block-diagonally by companion matrices of
/// the invariant factors, taken in chain order.
pub fn torsion_summary(m: &FPModule) -> Result<ArtinianModule> {
    let dec = invariant_factors(m)?;
    torsion_from_factors(&dec)
}

pub fn torsion_from_factors(dec: &InvariantFactorDecomposition) -> Result<ArtinianModule> {
    let qdim = dec.torsion_dimension();
    let mut t = QMatrix::zeros(qdim, qdim);
    let mut off = 0;
    for f in &dec.factors {
        let c = companion(f);
        let d = c.nrows();
        for i in 0..d {
            for j in 0..d {
                t[(off + i, off + j)] = c[(i, j)].clone();
            }
        }
        off += d;
    }
    ArtinianModule::new(1, vec![t])
}

/// Invariant factors of tI - M, i.e. the similarity invariants of the
/// rational matrix M. Two matrices are conjugate over Q exactly when these
/// lists agree, so this doubles as a rational-canonical-form comparison.
pub fn similarity_invariants(m: &QMatrix) -> Result<Vec<QPoly>> {
    assert!(m.is_square());
    let n = m.nrows();
    let t = LaurentPoly::var(1, 0);
    let mut p = PolyMatrix::zeros(1, n, n);
    for i in 0..n {
        for j in 0..n {
            let c = LaurentPoly::constant(1, m[(i, j)].clone());
            p[(i, j)] = if i == j { &t - &c } else { -&c };
        }
    }
    let snf = smith_normal_form(&p)?;
    Ok(snf.nonunit_factors())
}

/// Minimal polynomial of a rational matrix (monic); 1 for the empty matrix.
pub fn minimal_polynomial(m: &QMatrix) -> Result<QPoly> {
    let inv = similarity_invariants(m)?;
    Ok(inv.last().cloned().unwrap_or_else(QPoly::one))
}

/// Conjugacy test over Q by comparing similarity invariants.
pub fn conjugate_over_q(a: &QMatrix, b: &QMatrix) -> Result<bool> {
    if a.nrows() != b.nrows() {
        return Ok(false);
    }
    Ok(similarity_invariants(a)? == similarity_invariants(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{core_degree, ratio};

    fn t() -> LaurentPoly {
        LaurentPoly::var(1, 0)
    }

    fn tm1() -> LaurentPoly {
        &t() - &LaurentPoly::one(1)
    }

    fn check_snf(input: &PolyMatrix, snf: &Snf) {
        // u * input * v = d exactly
        let prod = snf.u.mul(input).unwrap().mul(&snf.v).unwrap();
        assert_eq!(prod, snf.d);
        // recorded inverses really invert
        assert_eq!(
            snf.u.mul(&snf.uinv).unwrap(),
            PolyMatrix::identity(1, input.nrows())
        );
        assert_eq!(
            snf.v.mul(&snf.vinv).unwrap(),
            PolyMatrix::identity(1, input.ncols())
        );
        // unit determinants
        assert!(snf.u.det().is_unit());
        assert!(snf.v.det().is_unit());
        // divisibility chain
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            assert!(laurent_divides(&w[0], &w[1]));
        }
    }

    #[test]
    fn snf_already_diagonal() {
        let m = PolyMatrix::from_rows(
            1,
            vec![
                vec![tm1(), LaurentPoly::zero(1)],
                vec![LaurentPoly::zero(1), &tm1() * &(&t() + &LaurentPoly::one(1))],
            ],
        )
        .unwrap();
        let snf = smith_normal_form(&m).unwrap();
        check_snf(&m, &snf);
        assert_eq!(
            snf.nonunit_factors(),
            vec![QPoly::from_i64(&[-1, 1]), QPoly::from_i64(&[-1, 0, 1])]
        );
    }

    #[test]
    fn snf_units_collapse() {
        // diag(t, 1) -> diag(1, 1): t is a unit
        let m = PolyMatrix::from_rows(
            1,
            vec![
                vec![t(), LaurentPoly::zero(1)],
                vec![LaurentPoly::zero(1), LaurentPoly::one(1)],
            ],
        )
        .unwrap();
        let snf = smith_normal_form(&m).unwrap();
        check_snf(&m, &snf);
        assert!(snf.nonunit_factors().is_empty());
        assert_eq!(snf.diagonal().len(), 2);
        assert!(snf.d[(0, 0)].is_one());
        assert!(snf.d[(1, 1)].is_one());
    }

    #[test]
    fn snf_upper_triangular_jordan_like() {
        // [[t-1, t], [0, t-1]] -> diag(1, (t-1)^2)
        let m = PolyMatrix::from_rows(
            1,
            vec![vec![tm1(), t()], vec![LaurentPoly::zero(1), tm1()]],
        )
        .unwrap();
        let snf = smith_normal_form(&m).unwrap();
        check_snf(&m, &snf);
        assert_eq!(snf.nonunit_factors(), vec![QPoly::from_i64(&[1, -2, 1])]);
        assert!(snf.d[(0, 0)].is_one());
    }

    #[test]
    fn invariant_factors_local_system_matrix() {
        // presentation [t*M0 - I] with M0 = [[1,1],[0,1]]
        let m = PolyMatrix::from_rows(
            1,
            vec![vec![tm1(), t()], vec![LaurentPoly::zero(1), tm1()]],
        )
        .unwrap();
        let fp = FPModule::new(1, 2, m).unwrap();
        let dec = invariant_factors(&fp).unwrap();
        assert_eq!(dec.free_rank, 0);
        assert_eq!(dec.factors, vec![QPoly::from_i64(&[1, -2, 1])]);
    }

    #[test]
    fn invariant_factors_free_module() {
        let m = PolyMatrix::zeros(1, 1, 1);
        let fp = FPModule::new(1, 1, m).unwrap();
        let dec = invariant_factors(&fp).unwrap();
        assert_eq!(dec.free_rank, 1);
        assert!(dec.factors.is_empty());
    }

    #[test]
    fn invariant_factors_single_relation() {
        let fp = FPModule::cyclic(1, &[tm1()]).unwrap();
        let dec = invariant_factors(&fp).unwrap();
        assert_eq!(dec.free_rank, 0);
        assert_eq!(dec.factors, vec![QPoly::from_i64(&[-1, 1])]);
    }

    #[test]
    fn torsion_summary_companion() {
        // A/((t-1)^2): companion of t^2 - 2t + 1 is [[0,-1],[1,2]]
        let sq = &tm1() * &tm1();
        let fp = FPModule::cyclic(1, &[sq]).unwrap();
        let a = torsion_summary(&fp).unwrap();
        assert_eq!(a.qdim(), 2);
        assert_eq!(a.t_ops()[0], QMatrix::from_i64_rows(&[&[0, -1], &[1, 2]]));
    }

    #[test]
    fn torsion_summary_free_is_zero() {
        let fp = FPModule::free(1, 1);
        let a = torsion_summary(&fp).unwrap();
        assert_eq!(a.qdim(), 0);
    }

    #[test]
    fn torsion_summary_identity_action() {
        let fp = FPModule::cyclic(1, &[tm1()])
            .unwrap()
            .direct_sum(&FPModule::cyclic(1, &[tm1()]).unwrap())
            .unwrap();
        let a = torsion_summary(&fp).unwrap();
        assert_eq!(a.qdim(), 2);
        assert!(a.t_ops()[0].is_identity());
    }

    #[test]
    fn torsion_char_and_min_poly() {
        let d1 = QPoly::from_i64(&[-1, 1]);
        let d2 = QPoly::from_i64(&[1, -2, 1]);
        let dec = InvariantFactorDecomposition {
            free_rank: 0,
            factors: vec![d1.clone(), d2.clone()],
        };
        let a = torsion_from_factors(&dec).unwrap();
        let t = &a.t_ops()[0];
        assert_eq!(t.char_poly(), &d1 * &d2);
        assert_eq!(minimal_polynomial(t).unwrap(), d2);
    }

    #[test]
    fn division_with_rational_units() {
        let a = LaurentPoly::uni_term(ratio(3, 4), -2);
        let b = &t() - &LaurentPoly::one(1);
        let (q, r) = laurent_div_rem(&a, &b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(core_degree(&r).unwrap() < core_degree(&b).unwrap());
    }

    #[test]
    fn dense_roundtrip_and_division() {
        let p = &LaurentPoly::uni_term(ratio(2, 3), -2) + &LaurentPoly::uni_term(rat(5), 3);
        let d = Dense::from_laurent(&p).unwrap();
        assert_eq!(d.to_laurent(), p);
        let b = &t() - &LaurentPoly::one(1);
        let (q, r) = d.div_rem(&Dense::from_laurent(&b).unwrap());
        let back = &(&q.to_laurent() * &b) + &r.to_laurent();
        assert_eq!(back, p);
    }
}

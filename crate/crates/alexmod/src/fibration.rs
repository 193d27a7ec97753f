//! Fibration shortcuts: from loop generators with torus images, normal
//! generators of the kernel, and monodromy matrices on fiber cohomology,
//! compute the subspace fixed by the kernel (with its torus action) and,
//! for one variable, the kernel coinvariants on homology. Also the
//! removal-of-fiber comparison between two presented modules.

use std::collections::BTreeMap;

use crate::cohomology::{fp_artinian_part, fp_free_rank};
use crate::error::{Error, Result};
use crate::linalg::{
    column_space_basis, quotient_operator, restrict_operator, subspace_intersect, subspace_sum,
    QMatrix,
};
use crate::module::{ArtinianModule, FPModule};
use crate::pid;

/// Fibration data: the base group is presented by loop generators with
/// images in Z^n; the kernel of the map to Z^n is described by finitely
/// many normal generators (words in the loop generators). Whether those
/// words really generate the kernel normally is a trust boundary: it is
/// group-theoretic data the library cannot verify.
#[derive(Clone, Debug)]
pub struct FibrationModel {
    n: usize,
    generators: Vec<String>,
    images: Vec<Vec<i64>>,
    kernel_words: Vec<Vec<i64>>,
    degrees: BTreeMap<usize, Vec<QMatrix>>,
    fiber_betti: Vec<usize>,
}

impl FibrationModel {
    pub fn new(
        n: usize,
        generators: Vec<String>,
        images: Vec<Vec<i64>>,
        kernel_words: Vec<Vec<i64>>,
        degrees: BTreeMap<usize, Vec<QMatrix>>,
        fiber_betti: Vec<usize>,
    ) -> Result<Self> {
        if images.len() != generators.len() {
            return Err(Error::input("one image vector per generator is required"));
        }
        for img in &images {
            if img.len() != n {
                return Err(Error::input("image vectors must have length n"));
            }
        }
        let model = FibrationModel {
            n,
            generators,
            images,
            kernel_words,
            degrees,
            fiber_betti,
        };
        for w in &model.kernel_words {
            let img = model.word_image(w)?;
            if img.iter().any(|&x| x != 0) {
                return Err(Error::input(format!(
                    "kernel word {:?} has nonzero image {:?} in Z^n",
                    w, img
                )));
            }
        }
        if !images_generate(&model.images, n) {
            return Err(Error::input(
                "generator images do not generate Z^n",
            ));
        }
        for (deg, mats) in &model.degrees {
            if mats.len() != model.generators.len() {
                return Err(Error::input(format!(
                    "degree {} needs one matrix per generator",
                    deg
                )));
            }
            let size = mats.first().map_or(0, |m| m.nrows());
            if let Some(&b) = model.fiber_betti.get(*deg) {
                if size != b {
                    return Err(Error::input(format!(
                        "degree {} matrices are {}x{} but the fiber Betti number is {}",
                        deg, size, size, b
                    )));
                }
            }
            for m in mats {
                if m.nrows() != size || m.ncols() != size {
                    return Err(Error::input("monodromy matrices must be square of equal size"));
                }
                if size > 0 && m.inverse().is_none() {
                    return Err(Error::input("monodromy matrix is singular"));
                }
            }
        }
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn fiber_betti(&self) -> &[usize] {
        &self.fiber_betti
    }

    /// Image in Z^n of a word of signed 1-based generator indices.
    pub fn word_image(&self, word: &[i64]) -> Result<Vec<i64>> {
        let mut acc = vec![0i64; self.n];
        for &w in word {
            let idx = w.unsigned_abs() as usize;
            if w == 0 || idx > self.generators.len() {
                return Err(Error::input(format!("word index {} out of range", w)));
            }
            let sign = if w > 0 { 1 } else { -1 };
            for k in 0..self.n {
                acc[k] += sign * self.images[idx - 1][k];
            }
        }
        Ok(acc)
    }

    /// Monodromy of a word on the chosen degree.
    pub fn word_matrix(&self, degree: usize, word: &[i64]) -> Result<QMatrix> {
        let mats = self
            .degrees
            .get(&degree)
            .ok_or_else(|| Error::input(format!("no monodromy data in degree {}", degree)))?;
        let size = mats.first().map_or(0, |m| m.nrows());
        let mut acc = QMatrix::identity(size);
        for &w in word {
            let idx = w.unsigned_abs() as usize;
            if w == 0 || idx > mats.len() {
                return Err(Error::input(format!("word index {} out of range", w)));
            }
            let m = if w > 0 {
                mats[idx - 1].clone()
            } else {
                mats[idx - 1]
                    .inverse()
                    .ok_or_else(|| Error::internal("matrix lost invertibility"))?
            };
            acc = &acc * &m;
        }
        Ok(acc)
    }

    /// A word (as exponents per generator) whose image is the i-th
    /// standard basis vector of Z^n.
    fn word_hitting_basis(&self, i: usize) -> Result<Vec<i64>> {
        solve_integer_columns(&self.images, self.n, i).ok_or_else(|| {
            Error::internal("generator images were checked to generate Z^n")
        })
    }
}

fn images_generate(images: &[Vec<i64>], n: usize) -> bool {
    // Smith normal form over Z of the n x k matrix of images as columns
    let k = images.len();
    if k == 0 {
        return n == 0;
    }
    let mut m = vec![vec![0i64; k]; n];
    for (j, img) in images.iter().enumerate() {
        for i in 0..n {
            m[i][j] = img[i];
        }
    }
    let (d, _, _) = integer_smith(m);
    (0..n).all(|i| d[i][i].abs() == 1)
}

/// Integer Smith normal form; returns (D, U, V) with U * M * V = D.
fn integer_smith(mut m: Vec<Vec<i64>>) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut u = vec![vec![0i64; rows]; rows];
    let mut v = vec![vec![0i64; cols]; cols];
    for i in 0..rows {
        u[i][i] = 1;
    }
    for j in 0..cols {
        v[j][j] = 1;
    }
    let steps = rows.min(cols);
    for k in 0..steps {
        loop {
            // find a pivot of minimal absolute value
            let mut best: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if m[i][j] != 0
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            m.swap(k, pi);
            u.swap(k, pi);
            if pj != k {
                for row in m.iter_mut() {
                    row.swap(k, pj);
                }
                for row in v.iter_mut() {
                    row.swap(k, pj);
                }
            }
            let mut clean = true;
            for i in (k + 1)..rows {
                let q = m[i][k].div_euclid(m[k][k]);
                if q != 0 {
                    for j in 0..cols {
                        m[i][j] -= q * m[k][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= q * u[k][j];
                    }
                }
                if m[i][k] != 0 {
                    clean = false;
                }
            }
            for j in (k + 1)..cols {
                let q = m[k][j].div_euclid(m[k][k]);
                if q != 0 {
                    for i in 0..rows {
                        m[i][j] -= q * m[i][k];
                    }
                    for i in 0..cols {
                        v[i][j] -= q * v[i][k];
                    }
                }
                if m[k][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // enforce divisibility into the rest
                let mut fixed = true;
                'outer: for i in (k + 1)..rows {
                    for j in (k + 1)..cols {
                        if m[i][j] % m[k][k] != 0 {
                            for c in 0..cols {
                                m[k][c] += m[i][c];
                            }
                            for c in 0..rows {
                                u[k][c] += u[i][c];
                            }
                            fixed = false;
                            break 'outer;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
        }
    }
    (m, u, v)
}

/// Solve images * c = e_i over the integers, images given as columns.
fn solve_integer_columns(images: &[Vec<i64>], n: usize, basis_index: usize) -> Option<Vec<i64>> {
    let k = images.len();
    let mut m = vec![vec![0i64; k]; n];
    for (j, img) in images.iter().enumerate() {
        for i in 0..n {
            m[i][j] = img[i];
        }
    }
    let (d, u, v) = integer_smith(m);
    // target U e_i = column i of U
    let rhs: Vec<i64> = (0..n).map(|r| u[r][basis_index]).collect();
    let mut y = vec![0i64; k];
    for r in 0..n {
        let dr = if r < k { d[r][r] } else { 0 };
        if dr == 0 {
            if rhs[r] != 0 {
                return None;
            }
        } else {
            if rhs[r] % dr != 0 {
                return None;
            }
            if r < k {
                y[r] = rhs[r] / dr;
            }
        }
    }
    let mut c = vec![0i64; k];
    for i in 0..k {
        for j in 0..k {
            c[i] += v[i][j] * y[j];
        }
    }
    Some(c)
}

/// The largest subspace of the degree-(i - n) fiber cohomology fixed
/// pointwise by every kernel word and invariant under every generator,
/// with the torus acting through any words hitting the standard basis.
pub fn kernel_invariants(model: &FibrationModel, degree_total: usize) -> Result<ArtinianModule> {
    let n = model.n;
    if degree_total < n {
        return Err(Error::input(format!(
            "degree {} is below the torus dimension {}",
            degree_total, n
        )));
    }
    let deg = degree_total - n;
    let mats = model
        .degrees
        .get(&deg)
        .ok_or_else(|| Error::input(format!("no monodromy data in degree {}", deg)))?
        .clone();
    let dim = mats.first().map_or(0, |m| m.nrows());
    if dim == 0 {
        return Ok(ArtinianModule::zero(n));
    }
    // start from the pointwise fixed space of the kernel words
    let mut w = QMatrix::identity(dim);
    for word in &model.kernel_words {
        let rho = model.word_matrix(deg, word)?;
        let fixed = (&rho - &QMatrix::identity(dim)).kernel_basis();
        w = subspace_intersect(&w, &fixed);
    }
    // shrink to the largest subspace invariant under all generators
    loop {
        let before = w.ncols();
        for rho in &mats {
            let rho_inv = rho.inverse().expect("validated invertible");
            let fwd = column_space_basis(&(rho * &w));
            let bwd = column_space_basis(&(&rho_inv * &w));
            w = subspace_intersect(&w, &fwd);
            w = subspace_intersect(&w, &bwd);
        }
        if w.ncols() == before {
            break;
        }
    }
    if w.ncols() == 0 {
        return Ok(ArtinianModule::zero(n));
    }
    // torus action: restrict words mapping to the standard basis of Z^n
    let mut ops = vec![];
    for i in 0..n {
        let exps = model.word_hitting_basis(i)?;
        let mut word = vec![];
        for (j, &e) in exps.iter().enumerate() {
            let idx = (j + 1) as i64;
            for _ in 0..e.abs() {
                word.push(if e > 0 { idx } else { -idx });
            }
        }
        let rho = model.word_matrix(deg, &word)?;
        let restricted = restrict_operator(&w, &rho)
            .ok_or_else(|| Error::internal("fixed subspace is not invariant"))?;
        ops.push(restricted);
    }
    ArtinianModule::new(n, ops)
}

/// Quotient of the degree-i fiber homology by the smallest subspace
/// containing every (rho(w) - 1) v and invariant under all generators;
/// defined for n = 1 only, with t acting through a word of image 1.
pub fn kernel_coinvariants(model: &FibrationModel, degree: usize) -> Result<ArtinianModule> {
    if model.n != 1 {
        return Err(Error::input(
            "kernel coinvariants are defined for the one-variable case only",
        ));
    }
    let mats = model
        .degrees
        .get(&degree)
        .ok_or_else(|| Error::input(format!("no monodromy data in degree {}", degree)))?
        .clone();
    let dim = mats.first().map_or(0, |m| m.nrows());
    if dim == 0 {
        return Ok(ArtinianModule::zero(1));
    }
    let mut u = QMatrix::zeros(dim, 0);
    for word in &model.kernel_words {
        let rho = model.word_matrix(degree, word)?;
        let img = column_space_basis(&(&rho - &QMatrix::identity(dim)));
        u = subspace_sum(&u, &img);
    }
    loop {
        let before = u.ncols();
        for rho in &mats {
            let rho_inv = rho.inverse().expect("validated invertible");
            u = subspace_sum(&u, &column_space_basis(&(rho * &u)));
            u = subspace_sum(&u, &column_space_basis(&(&rho_inv * &u)));
        }
        if u.ncols() == before {
            break;
        }
    }
    let exps = model.word_hitting_basis(0)?;
    let mut word = vec![];
    for (j, &e) in exps.iter().enumerate() {
        let idx = (j + 1) as i64;
        for _ in 0..e.abs() {
            word.push(if e > 0 { idx } else { -idx });
        }
    }
    let rho = model.word_matrix(degree, &word)?;
    let induced = quotient_operator(&u, &rho);
    ArtinianModule::new(1, vec![induced])
}

/// Outcome of the removal-of-fiber comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalCheck {
    pub pass: bool,
    pub detail: String,
}

/// Does H_Y decompose as H_X ⊕ A^fiber_betti? For one variable this is an
/// exact invariant-factor and free-rank comparison; for more variables
/// free ranks are compared by exact matrix rank and the torsion data by
/// the maximal Artinian submodules.
pub fn remove_fiber_check(
    h_x: &FPModule,
    h_y: &FPModule,
    fiber_betti: usize,
) -> Result<RemovalCheck> {
    if h_x.nvars() != h_y.nvars() {
        return Err(Error::VarMismatch(h_x.nvars(), h_y.nvars()));
    }
    if h_x.nvars() == 1 {
        let dx = pid::invariant_factors(h_x)?;
        let dy = pid::invariant_factors(h_y)?;
        if dy.free_rank != dx.free_rank + fiber_betti {
            return Ok(RemovalCheck {
                pass: false,
                detail: format!(
                    "free rank {} differs from {} + {}",
                    dy.free_rank, dx.free_rank, fiber_betti
                ),
            });
        }
        if dy.factors != dx.factors {
            return Ok(RemovalCheck {
                pass: false,
                detail: format!(
                    "invariant factors differ: {:?} vs {:?}",
                    dy.factors, dx.factors
                ),
            });
        }
        return Ok(RemovalCheck {
            pass: true,
            detail: format!(
                "free rank {} = {} + {}, invariant factors match",
                dy.free_rank, dx.free_rank, fiber_betti
            ),
        });
    }
    let fx = fp_free_rank(h_x)?;
    let fy = fp_free_rank(h_y)?;
    if fy != fx + fiber_betti {
        return Ok(RemovalCheck {
            pass: false,
            detail: format!("free rank {} differs from {} + {}", fy, fx, fiber_betti),
        });
    }
    let sx = fp_artinian_part(h_x)?;
    let sy = fp_artinian_part(h_y)?;
    if sx.qdim() != sy.qdim() {
        return Ok(RemovalCheck {
            pass: false,
            detail: format!("artinian parts have qdim {} vs {}", sy.qdim(), sx.qdim()),
        });
    }
    for i in 0..h_x.nvars() {
        if !pid::conjugate_over_q(&sx.t_ops()[i], &sy.t_ops()[i])? {
            return Ok(RemovalCheck {
                pass: false,
                detail: format!("t_{} actions on the artinian parts are not conjugate", i + 1),
            });
        }
    }
    Ok(RemovalCheck {
        pass: true,
        detail: format!(
            "free rank {} = {} + {}, artinian parts agree",
            fy, fx, fiber_betti
        ),
    })
}

/// Monodromy data of the nodal-cubic family over the punctured torus:
/// two loop generators with images 1 and 0, the second normally
/// generating the kernel and acting trivially, the first acting
/// unipotently on the degree-one fiber cohomology by b -> b - a.
pub fn nodal_cubic_family_model() -> Result<FibrationModel> {
    let rho0 = QMatrix::from_i64_rows(&[&[1, -1], &[0, 1]]);
    let rho1 = QMatrix::identity(2);
    let mut degrees = BTreeMap::new();
    degrees.insert(0, vec![QMatrix::identity(1), QMatrix::identity(1)]);
    degrees.insert(1, vec![rho0, rho1]);
    FibrationModel::new(
        1,
        vec!["g0".into(), "g1".into()],
        vec![vec![1], vec![0]],
        vec![vec![2]],
        degrees,
        vec![1, 2],
    )
}

//! Mellin transform of a local system on the affine torus. A rank-r local
//! system is n pairwise-commuting invertible rational matrices; its Mellin
//! transform is concentrated in degree n where it is the stalk with the
//! inverse monodromy action. The Koszul complex on the commuting
//! operators t_i M_i - I computes the same thing from first principles
//! and serves as the independent oracle.

use crate::cohomology::{artinian_realization, cohomology_presentation, fp_is_zero};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::module::{ArtinianModule, FPModule, PolyMatrix};
use crate::pid;
use crate::ring::LaurentPoly;

/// Q-local system on the n-torus: commuting invertible monodromies.
#[derive(Clone, Debug)]
pub struct LocalSystem {
    n: usize,
    rank: usize,
    monodromies: Vec<QMatrix>,
}

impl LocalSystem {
    pub fn new(n: usize, monodromies: Vec<QMatrix>) -> Result<Self> {
        if monodromies.len() != n {
            return Err(Error::input(format!(
                "expected {} monodromy matrices, got {}",
                n,
                monodromies.len()
            )));
        }
        let rank = monodromies.first().map_or(0, |m| m.nrows());
        for m in &monodromies {
            if m.nrows() != rank || m.ncols() != rank {
                return Err(Error::input("monodromies must be square of equal size"));
            }
            if rank > 0 && m.inverse().is_none() {
                return Err(Error::input("monodromy matrix is singular"));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !monodromies[i].commutes_with(&monodromies[j]) {
                    return Err(Error::input(format!(
                        "monodromies {} and {} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(LocalSystem {
            n,
            rank,
            monodromies,
        })
    }

    pub fn trivial(n: usize, rank: usize) -> Self {
        LocalSystem {
            n,
            rank,
            monodromies: vec![QMatrix::identity(rank); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn monodromies(&self) -> &[QMatrix] {
        &self.monodromies
    }
}

/// The Mellin transform of a local system: concentrated in degree n, with
/// the t_i acting by the inverse monodromies.
pub fn mellin_stalk(ls: &LocalSystem) -> Result<(usize, ArtinianModule)> {
    let mut inv = Vec::with_capacity(ls.n);
    for m in &ls.monodromies {
        inv.push(
            m.inverse()
                .ok_or_else(|| Error::internal("monodromy lost invertibility"))?,
        );
    }
    Ok((ls.n, ArtinianModule::new(ls.n, inv)?))
}

/// The Koszul complex on the commuting operators t_i M_i - I acting on
/// A^rank: term p has rank C(n, p) * r, indexed by subsets of {1..n}.
pub struct KoszulMellinComplex {
    n: usize,
    rank: usize,
    /// differentials[p] maps term p to term p+1
    differentials: Vec<PolyMatrix>,
}

impl KoszulMellinComplex {
    pub fn term_rank(&self, p: usize) -> usize {
        binomial(self.n, p) * self.rank
    }

    pub fn differential(&self, p: usize) -> Option<&PolyMatrix> {
        self.differentials.get(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Subsets of {0..n-1} of the given size, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut current = vec![];
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

pub fn koszul_complex(ls: &LocalSystem) -> Result<KoszulMellinComplex> {
    let n = ls.n;
    let r = ls.rank;
    // delta_i = t_i M_i - I over A
    let mut deltas = vec![];
    for (i, m) in ls.monodromies.iter().enumerate() {
        let mut d = PolyMatrix::zeros(n, r, r);
        let t = LaurentPoly::var(n, i);
        for a in 0..r {
            for b in 0..r {
                let mut entry = &t * &LaurentPoly::constant(n, m[(a, b)].clone());
                if a == b {
                    entry = &entry - &LaurentPoly::one(n);
                }
                d[(a, b)] = entry;
            }
        }
        deltas.push(d);
    }
    let mut differentials = vec![];
    for p in 0..n {
        let rows_sets = subsets(n, p + 1);
        let cols_sets = subsets(n, p);
        let mut m = PolyMatrix::zeros(n, rows_sets.len() * r, cols_sets.len() * r);
        for (cj, s) in cols_sets.iter().enumerate() {
            for i in 0..n {
                if s.contains(&i) {
                    continue;
                }
                let mut target = s.clone();
                let insert_at = target.iter().position(|&x| x > i).unwrap_or(target.len());
                target.insert(insert_at, i);
                let ri = rows_sets
                    .iter()
                    .position(|t| *t == target)
                    .expect("subset enumeration is complete");
                let sign = if insert_at % 2 == 0 { 1 } else { -1 };
                for a in 0..r {
                    for b in 0..r {
                        let mut entry = deltas[i][(a, b)].clone();
                        if sign < 0 {
                            entry = -&entry;
                        }
                        m[(ri * r + a, cj * r + b)] = entry;
                    }
                }
            }
        }
        differentials.push(m);
    }
    // squared differential vanishes because the deltas commute
    for w in differentials.windows(2) {
        if !w[1].mul(&w[0])?.is_zero() {
            return Err(Error::internal("koszul differential does not square to zero"));
        }
    }
    Ok(KoszulMellinComplex {
        n,
        rank: r,
        differentials,
    })
}

/// Cohomology of the Koszul complex in one degree, as a finitely
/// presented A-module. Vanishes away from degree n, where it has
/// Q-dimension equal to the rank of the local system.
pub fn koszul_mellin(ls: &LocalSystem, degree: usize) -> Result<FPModule> {
    if degree > ls.n {
        return Err(Error::input(format!(
            "degree {} out of range 0..={}",
            degree, ls.n
        )));
    }
    let complex = koszul_complex(ls)?;
    let d_out = complex.differential(degree);
    let d_in = if degree == 0 {
        None
    } else {
        complex.differential(degree - 1)
    };
    cohomology_presentation(ls.n, complex.term_rank(degree), d_in, d_out)
}

/// Full oracle cross-check: the Koszul cohomology vanishes in degrees
/// below n and in degree n realizes the stalk with operators conjugate to
/// the inverse monodromies.
pub fn mellin_verify(ls: &LocalSystem) -> Result<()> {
    let (deg, stalk) = mellin_stalk(ls)?;
    for i in 0..deg {
        let h = koszul_mellin(ls, i)?;
        if !fp_is_zero(&h)? {
            return Err(Error::internal(format!(
                "koszul cohomology fails to vanish in degree {}",
                i
            )));
        }
    }
    let top = koszul_mellin(ls, deg)?;
    let realized = artinian_realization(&top)?;
    if realized.qdim() != ls.rank() {
        return Err(Error::internal(format!(
            "koszul stalk dimension {} differs from rank {}",
            realized.qdim(),
            ls.rank()
        )));
    }
    for i in 0..ls.n() {
        if !pid::conjugate_over_q(&realized.t_ops()[i], &stalk.t_ops()[i])? {
            return Err(Error::internal(format!(
                "koszul t_{} action is not conjugate to the inverse monodromy",
                i + 1
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    #[test]
    fn stalk_of_unipotent_rank_two() {
        let m = QMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let ls = LocalSystem::new(1, vec![m]).unwrap();
        let (deg, stalk) = mellin_stalk(&ls).unwrap();
        assert_eq!(deg, 1);
        assert_eq!(stalk.qdim(), 2);
        assert_eq!(
            stalk.t_ops()[0],
            QMatrix::from_i64_rows(&[&[1, -1], &[0, 1]])
        );
    }

    #[test]
    fn stalk_of_trivial_system() {
        let ls = LocalSystem::trivial(2, 1);
        let (deg, stalk) = mellin_stalk(&ls).unwrap();
        assert_eq!(deg, 2);
        assert_eq!(stalk.qdim(), 1);
        assert!(stalk.t_ops()[0].is_identity());
        assert!(stalk.t_ops()[1].is_identity());
    }

    #[test]
    fn stalk_inverts_scalars() {
        let m1 = QMatrix::from_i64_rows(&[&[2]]);
        let m2 = QMatrix::from_i64_rows(&[&[3]]);
        let ls = LocalSystem::new(2, vec![m1, m2]).unwrap();
        let (_, stalk) = mellin_stalk(&ls).unwrap();
        assert_eq!(stalk.t_ops()[0][(0, 0)], ratio(1, 2));
        assert_eq!(stalk.t_ops()[1][(0, 0)], ratio(1, 3));
        mellin_verify(&ls).unwrap();
    }

    #[test]
    fn koszul_vanishing_below_top() {
        let m = QMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let ls = LocalSystem::new(1, vec![m.clone()]).unwrap();
        let h0 = koszul_mellin(&ls, 0).unwrap();
        assert!(fp_is_zero(&h0).unwrap());
        let h1 = koszul_mellin(&ls, 1).unwrap();
        let dec = pid::invariant_factors(&h1).unwrap();
        assert_eq!(dec.free_rank, 0);
        assert_eq!(dec.torsion_dimension(), 2);
        mellin_verify(&ls).unwrap();
    }

    #[test]
    fn koszul_two_variables() {
        let b = QMatrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let m1 = &b * &b;
        let m2 = b.scale(&rat(1));
        let ls = LocalSystem::new(2, vec![m1, m2]).unwrap();
        mellin_verify(&ls).unwrap();
    }

    #[test]
    fn rejects_noncommuting() {
        let a = QMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let b = QMatrix::from_i64_rows(&[&[1, 0], &[1, 1]]);
        assert!(LocalSystem::new(2, vec![a, b]).is_err());
    }
}

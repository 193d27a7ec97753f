//! Twisted cellular complexes: a finite simplicial complex with a closed
//! Z^n-valued edge cocycle determines a chain complex of free A-modules,
//! whose cohomology gives the Alexander modules of the pair.
//!
//! Transport convention, fixed once: the boundary of [v_0, ..., v_k] is
//! t^{w(v_0, v_1)} d_0 + sum_{i>=1} (-1)^i d_i, so the face omitting the
//! base vertex carries the monomial of the first edge and every face
//! containing the base vertex carries ±1. Coboundaries are the conjugate
//! transposes (t_i -> t_i^{-1}) of the boundaries.

use std::collections::{BTreeMap, BTreeSet};

use crate::cohomology::{cohomology_presentation, fp_artinian_part};
use crate::error::{Error, Result};
use crate::module::{ArtinianModule, FPModule, PolyMatrix};
use crate::ring::{rat, LaurentPoly};

/// Finite simplicial complex on vertices 0..num_vertices; every face of a
/// listed simplex must be listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    /// simplices grouped by dimension, each sorted lexicographically
    by_dim: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn new(num_vertices: usize, simplices: &[Vec<usize>]) -> Result<Self> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in simplices {
            if s.is_empty() {
                return Err(Error::input("empty simplex"));
            }
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::input(format!(
                    "simplex {:?} is not strictly increasing",
                    s
                )));
            }
            if *s.last().unwrap() >= num_vertices {
                return Err(Error::input(format!(
                    "simplex {:?} has a vertex out of range",
                    s
                )));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::input(format!("duplicate simplex {:?}", s)));
            }
        }
        // closure under faces
        for s in &seen {
            if s.len() == 1 {
                continue;
            }
            for omit in 0..s.len() {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &v)| (i != omit).then_some(v))
                    .collect();
                if !seen.contains(&face) {
                    return Err(Error::input(format!(
                        "face {:?} of {:?} is missing",
                        face, s
                    )));
                }
            }
        }
        let max_dim = seen.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut by_dim = vec![vec![]; max_dim];
        for s in seen {
            by_dim[s.len() - 1].push(s);
        }
        Ok(SimplicialComplex {
            num_vertices,
            by_dim,
        })
    }

    /// Build from maximal simplices, closing under faces.
    pub fn from_maximal(num_vertices: usize, maximal: &[Vec<usize>]) -> Result<Self> {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = maximal.to_vec();
        while let Some(s) = stack.pop() {
            if !all.insert(s.clone()) {
                continue;
            }
            if s.len() > 1 {
                for omit in 0..s.len() {
                    stack.push(
                        s.iter()
                            .enumerate()
                            .filter_map(|(i, &v)| (i != omit).then_some(v))
                            .collect(),
                    );
                }
            }
        }
        let list: Vec<Vec<usize>> = all.into_iter().collect();
        Self::new(num_vertices, &list)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Dimension; None for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.by_dim.get(dim).map_or(&[], |v| v.as_slice())
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.by_dim.iter().flatten()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        self.simplices(1)
    }
}

/// Closed Z^n-valued 1-cocycle on the oriented edges (i, j), i < j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCocycle {
    n: usize,
    values: BTreeMap<(usize, usize), Vec<i64>>,
}

impl TorusCocycle {
    pub fn new(n: usize, values: BTreeMap<(usize, usize), Vec<i64>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("torus dimension must be at least 1"));
        }
        for ((i, j), v) in &values {
            if i >= j {
                return Err(Error::input(format!("edge ({}, {}) is not oriented i < j", i, j)));
            }
            if v.len() != n {
                return Err(Error::input(format!(
                    "edge ({}, {}) has a value of length {}, expected {}",
                    i,
                    j,
                    v.len(),
                    n
                )));
            }
        }
        Ok(TorusCocycle { n, values })
    }

    pub fn from_edges(n: usize, edges: &[((usize, usize), Vec<i64>)]) -> Result<Self> {
        Self::new(n, edges.iter().cloned().collect())
    }

    /// Zero cocycle on the edges of a complex.
    pub fn zero(n: usize, complex: &SimplicialComplex) -> Self {
        let values = complex
            .edges()
            .iter()
            .map(|e| ((e[0], e[1]), vec![0i64; n]))
            .collect();
        TorusCocycle { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, i: usize, j: usize) -> Result<&Vec<i64>> {
        self.values
            .get(&(i, j))
            .ok_or_else(|| Error::input(format!("no cocycle value on edge ({}, {})", i, j)))
    }

    /// Antisymmetric evaluation on an ordered vertex pair (equal vertices
    /// give zero).
    pub fn signed(&self, from: usize, to: usize) -> Result<Vec<i64>> {
        if from == to {
            return Ok(vec![0; self.n]);
        }
        if from < to {
            Ok(self.value(from, to)?.clone())
        } else {
            Ok(self.value(to, from)?.iter().map(|x| -x).collect())
        }
    }

    /// Sum of signed values along a closed or open walk of vertices.
    pub fn integrate(&self, walk: &[usize]) -> Result<Vec<i64>> {
        let mut acc = vec![0i64; self.n];
        for w in walk.windows(2) {
            let v = self.signed(w[0], w[1])?;
            for k in 0..self.n {
                acc[k] += v[k];
            }
        }
        Ok(acc)
    }

    /// Add the coboundary of a vertex potential (test utility for the
    /// cohomologous-invariance suites).
    pub fn plus_coboundary(&self, potential: &[Vec<i64>]) -> Result<TorusCocycle> {
        let mut values = BTreeMap::new();
        for ((i, j), v) in &self.values {
            let mut w = v.clone();
            for k in 0..self.n {
                w[k] += potential[*j][k] - potential[*i][k];
            }
            values.insert((*i, *j), w);
        }
        TorusCocycle::new(self.n, values)
    }
}

/// Check that every edge has a value and the cocycle closes on every
/// 2-simplex; reports the offending simplex otherwise.
pub fn validate_cocycle(complex: &SimplicialComplex, cocycle: &TorusCocycle) -> Result<()> {
    for e in complex.edges() {
        cocycle.value(e[0], e[1])?;
    }
    for t in complex.simplices(2) {
        let (a, b, c) = (t[0], t[1], t[2]);
        let ab = cocycle.value(a, b)?;
        let ac = cocycle.value(a, c)?;
        let bc = cocycle.value(b, c)?;
        for k in 0..cocycle.n() {
            if bc[k] - ac[k] + ab[k] != 0 {
                return Err(Error::input(format!(
                    "cocycle fails to close on 2-simplex {:?}",
                    t
                )));
            }
        }
    }
    Ok(())
}

/// Chain complex of free A-modules with the twisted boundary maps.
#[derive(Clone, Debug)]
pub struct TwistedComplex {
    nvars: usize,
    ranks: Vec<usize>,
    /// boundaries[k] is the map C_{k+1} -> C_k
    boundaries: Vec<PolyMatrix>,
}

impl TwistedComplex {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Rank of C_k.
    pub fn rank(&self, k: usize) -> usize {
        self.ranks.get(k).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The boundary C_{k} -> C_{k-1} (k >= 1).
    pub fn boundary(&self, k: usize) -> Option<&PolyMatrix> {
        if k == 0 {
            None
        } else {
            self.boundaries.get(k - 1)
        }
    }

    /// Top dimension of the complex; None when empty.
    pub fn dim(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    /// The coboundary C^k -> C^{k+1}: conjugate transpose of the
    /// (k+1)-st boundary.
    pub fn coboundary(&self, k: usize) -> Option<PolyMatrix> {
        self.boundary(k + 1).map(|b| b.conjugate_transpose())
    }
}

/// Build the twisted chain complex; the cocycle is validated and the
/// squared boundary is checked to vanish.
pub fn twisted_chain_complex(
    complex: &SimplicialComplex,
    cocycle: &TorusCocycle,
) -> Result<TwistedComplex> {
    validate_cocycle(complex, cocycle)?;
    let n = cocycle.n();
    let dim = match complex.dim() {
        None => {
            return Ok(TwistedComplex {
                nvars: n,
                ranks: vec![],
                boundaries: vec![],
            })
        }
        Some(d) => d,
    };
    let ranks: Vec<usize> = (0..=dim).map(|k| complex.simplices(k).len()).collect();
    let mut index: Vec<BTreeMap<&Vec<usize>, usize>> = vec![];
    for k in 0..=dim {
        index.push(
            complex
                .simplices(k)
                .iter()
                .enumerate()
                .map(|(i, s)| (s, i))
                .collect(),
        );
    }
    let mut boundaries = vec![];
    for k in 1..=dim {
        let mut m = PolyMatrix::zeros(n, ranks[k - 1], ranks[k]);
        for (j, s) in complex.simplices(k).iter().enumerate() {
            for omit in 0..s.len() {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &v)| (i != omit).then_some(v))
                    .collect();
                let row = *index[k - 1].get(&face).expect("faces are present");
                let coeff = if omit == 0 {
                    let w = cocycle.value(s[0], s[1])?;
                    LaurentPoly::monomial(n, w.clone(), rat(1))
                } else if omit % 2 == 0 {
                    LaurentPoly::one(n)
                } else {
                    LaurentPoly::constant(n, rat(-1))
                };
                m[(row, j)] = &m[(row, j)] + &coeff;
            }
        }
        boundaries.push(m);
    }
    for w in boundaries.windows(2) {
        let sq = w[0].mul(&w[1])?;
        if !sq.is_zero() {
            return Err(Error::internal("twisted boundary does not square to zero"));
        }
    }
    Ok(TwistedComplex {
        nvars: n,
        ranks,
        boundaries,
    })
}

/// The i-th cohomology of the twisted cochain complex, as a finitely
/// presented A-module.
pub fn twisted_cohomology(
    complex: &SimplicialComplex,
    cocycle: &TorusCocycle,
    degree: usize,
) -> Result<FPModule> {
    let tc = twisted_chain_complex(complex, cocycle)?;
    let Some(dim) = tc.dim() else {
        return FPModule::new(cocycle.n(), 0, PolyMatrix::zeros(cocycle.n(), 0, 0));
    };
    if degree > dim {
        return Err(Error::input(format!(
            "degree {} out of range 0..={}",
            degree, dim
        )));
    }
    let d_out = tc.coboundary(degree);
    let d_in = if degree == 0 {
        None
    } else {
        tc.coboundary(degree - 1)
    };
    cohomology_presentation(tc.nvars(), tc.rank(degree), d_in.as_ref(), d_out.as_ref())
}

/// Maximal Artinian submodule of the i-th cohomology.
pub fn cohomology_artinian_part(
    complex: &SimplicialComplex,
    cocycle: &TorusCocycle,
    degree: usize,
) -> Result<ArtinianModule> {
    let h = twisted_cohomology(complex, cocycle, degree)?;
    fp_artinian_part(&h)
}

/// Ordinary rational Betti numbers (the untwisted oracle: set t = 1).
pub fn betti_numbers(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    let Some(dim) = complex.dim() else {
        return Ok(vec![]);
    };
    let n = 1;
    let cocycle = TorusCocycle::zero(n, complex);
    let tc = twisted_chain_complex(complex, &cocycle)?;
    let mut betti = vec![];
    for k in 0..=dim {
        let rank_in = tc
            .boundary(k + 1)
            .map_or(0, |b| b.eval_at_one().rank());
        let rank_out = tc.boundary(k).map_or(0, |b| b.eval_at_one().rank());
        betti.push(tc.rank(k) - rank_in - rank_out);
    }
    Ok(betti)
}

/// Ready-made complexes used across the examples and tests.
pub mod models {
    use super::*;

    /// Polygonal circle with `sides` >= 3 vertices and a cocycle of the
    /// given winding vector concentrated on the edge (0, 1).
    pub fn circle(sides: usize, winding: &[i64]) -> Result<(SimplicialComplex, TorusCocycle)> {
        assert!(sides >= 3);
        let n = winding.len();
        let mut maximal = vec![];
        for i in 0..sides {
            let j = (i + 1) % sides;
            maximal.push(vec![i.min(j), i.max(j)]);
        }
        let complex = SimplicialComplex::from_maximal(sides, &maximal)?;
        let mut values = BTreeMap::new();
        for e in complex.edges() {
            let v = if (e[0], e[1]) == (0, 1) {
                winding.to_vec()
            } else {
                vec![0; n]
            };
            values.insert((e[0], e[1]), v);
        }
        Ok((complex, TorusCocycle::new(n, values)?))
    }

    /// Wedge of two polygonal circles joined at vertex 0, with winding
    /// vectors a and b on the two loops.
    pub fn wedge_two_circles(a: &[i64], b: &[i64]) -> Result<(SimplicialComplex, TorusCocycle)> {
        assert_eq!(a.len(), b.len());
        let n = a.len();
        let maximal = vec![
            vec![0, 1],
            vec![1, 2],
            vec![0, 2],
            vec![0, 3],
            vec![3, 4],
            vec![0, 4],
        ];
        let complex = SimplicialComplex::from_maximal(5, &maximal)?;
        let mut values = BTreeMap::new();
        for e in complex.edges() {
            let v = match (e[0], e[1]) {
                (0, 1) => a.to_vec(),
                (0, 3) => b.to_vec(),
                _ => vec![0; n],
            };
            values.insert((e[0], e[1]), v);
        }
        Ok((complex, TorusCocycle::new(n, values)?))
    }

    /// Product of two complexes with the staircase triangulation; the
    /// cocycle is the sum of the pullbacks of the factor cocycles.
    pub fn product(
        k: &SimplicialComplex,
        ck: &TorusCocycle,
        l: &SimplicialComplex,
        cl: &TorusCocycle,
    ) -> Result<(SimplicialComplex, TorusCocycle)> {
        if ck.n() != cl.n() {
            return Err(Error::VarMismatch(ck.n(), cl.n()));
        }
        let n = ck.n();
        let nl = l.num_vertices();
        let pair = |u: usize, w: usize| u * nl + w;
        let mut maximal: Vec<Vec<usize>> = vec![];
        // maximal simplices of the factors
        let max_of = |c: &SimplicialComplex| -> Vec<Vec<usize>> {
            let mut out = vec![];
            let all: BTreeSet<Vec<usize>> = c.all_simplices().cloned().collect();
            for s in c.all_simplices() {
                let mut is_max = true;
                for t in c.all_simplices() {
                    if t.len() == s.len() + 1 && {
                        let ts: BTreeSet<usize> = t.iter().copied().collect();
                        s.iter().all(|v| ts.contains(v))
                    } {
                        is_max = false;
                        break;
                    }
                }
                let _ = &all;
                if is_max {
                    out.push(s.clone());
                }
            }
            out
        };
        for sigma in max_of(k) {
            for tau in max_of(l) {
                // monotone staircase paths through the grid
                let p = sigma.len() - 1;
                let q = tau.len() - 1;
                let mut stack: Vec<(usize, usize, Vec<usize>)> =
                    vec![(0, 0, vec![pair(sigma[0], tau[0])])];
                while let Some((i, j, path)) = stack.pop() {
                    if i == p && j == q {
                        maximal.push(path);
                        continue;
                    }
                    if i < p {
                        let mut next = path.clone();
                        next.push(pair(sigma[i + 1], tau[j]));
                        stack.push((i + 1, j, next));
                    }
                    if j < q {
                        let mut next = path.clone();
                        next.push(pair(sigma[i], tau[j + 1]));
                        stack.push((i, j + 1, next));
                    }
                }
            }
        }
        let complex = SimplicialComplex::from_maximal(k.num_vertices() * nl, &maximal)?;
        let mut values = BTreeMap::new();
        for e in complex.edges() {
            let (u1, w1) = (e[0] / nl, e[0] % nl);
            let (u2, w2) = (e[1] / nl, e[1] % nl);
            let vk = ck.signed(u1, u2)?;
            let vl = cl.signed(w1, w2)?;
            let v: Vec<i64> = (0..n).map(|i| vk[i] + vl[i]).collect();
            values.insert((e[0], e[1]), v);
        }
        Ok((complex, TorusCocycle::new(n, values)?))
    }

    /// The 7-vertex triangulation of the torus (the complete graph K_7 on
    /// the torus) with a closed integer cocycle whose class is primitive.
    /// The cocycle assigns W(d) to the step i -> i+d mod 7 with
    /// W = (1, 0, 1): closedness on both triangle families reduces to
    /// W(1) + W(2) = W(3).
    pub fn seven_vertex_torus() -> Result<(SimplicialComplex, TorusCocycle)> {
        let mut maximal = vec![];
        for i in 0..7usize {
            let mut a = vec![i, (i + 1) % 7, (i + 3) % 7];
            a.sort_unstable();
            let mut b = vec![i, (i + 2) % 7, (i + 3) % 7];
            b.sort_unstable();
            maximal.push(a);
            maximal.push(b);
        }
        let complex = SimplicialComplex::from_maximal(7, &maximal)?;
        let w = |d: usize| -> i64 {
            match d {
                1 => 1,
                2 => 0,
                3 => 1,
                4 => -1,
                5 => 0,
                6 => -1,
                _ => unreachable!(),
            }
        };
        let mut values = BTreeMap::new();
        for e in complex.edges() {
            let d = (e[1] + 7 - e[0]) % 7;
            values.insert((e[0], e[1]), vec![w(d)]);
        }
        Ok((complex, TorusCocycle::new(1, values)?))
    }

    /// Product torus: circle x circle, with the cocycle winding the
    /// requested vectors around the first and second factors.
    pub fn torus_product(
        wind_first: &[i64],
        wind_second: &[i64],
    ) -> Result<(SimplicialComplex, TorusCocycle)> {
        let (c1, w1) = circle(3, wind_first)?;
        let (c2, w2) = circle(3, wind_second)?;
        product(&c1, &w1, &c2, &w2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pid;
    use crate::ring::QPoly;

    #[test]
    fn cocycle_validation() {
        // triangle with closing values
        let complex = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        let good = TorusCocycle::from_edges(
            1,
            &[((0, 1), vec![1]), ((1, 2), vec![1]), ((0, 2), vec![2])],
        )
        .unwrap();
        assert!(validate_cocycle(&complex, &good).is_ok());
        let bad = TorusCocycle::from_edges(
            1,
            &[((0, 1), vec![1]), ((1, 2), vec![1]), ((0, 2), vec![0])],
        )
        .unwrap();
        let err = validate_cocycle(&complex, &bad).unwrap_err();
        assert!(err.to_string().contains("[0, 1, 2]"));
        // hollow triangle has no 2-simplices, so anything closed works
        let hollow =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(validate_cocycle(&hollow, &bad).is_ok());
        // missing edge value
        let missing = TorusCocycle::from_edges(1, &[((0, 1), vec![1])]).unwrap();
        assert!(validate_cocycle(&hollow, &missing).is_err());
    }

    #[test]
    fn closure_is_enforced() {
        assert!(SimplicialComplex::new(3, &[vec![0, 1, 2]]).is_err());
        assert!(SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).is_ok());
    }

    #[test]
    fn untwisted_full_simplex() {
        // full 2-simplex with zero cocycle: contractible
        let complex = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        let zero = TorusCocycle::zero(1, &complex);
        let tc = twisted_chain_complex(&complex, &zero).unwrap();
        assert_eq!(tc.ranks(), &[3, 3, 1]);
        assert_eq!(betti_numbers(&complex).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn circle_cohomology_winding_one() {
        let (complex, cocycle) = models::circle(3, &[1]).unwrap();
        let h0 = twisted_cohomology(&complex, &cocycle, 0).unwrap();
        assert!(crate::cohomology::fp_is_zero(&h0).unwrap());
        let h1 = twisted_cohomology(&complex, &cocycle, 1).unwrap();
        let dec = pid::invariant_factors(&h1).unwrap();
        assert_eq!(dec.free_rank, 0);
        assert_eq!(dec.factors, vec![QPoly::from_i64(&[-1, 1])]);
    }

    #[test]
    fn wedge_cohomology() {
        // wedge of two circles with winding (1, 0): H^1 = A ⊕ A/(t-1)
        let (complex, cocycle) = models::wedge_two_circles(&[1], &[0]).unwrap();
        let h1 = twisted_cohomology(&complex, &cocycle, 1).unwrap();
        let dec = pid::invariant_factors(&h1).unwrap();
        assert_eq!(dec.free_rank, 1);
        assert_eq!(dec.factors, vec![QPoly::from_i64(&[-1, 1])]);
        let s0 = cohomology_artinian_part(&complex, &cocycle, 1).unwrap();
        assert_eq!(s0.qdim(), 1);
        assert!(s0.t_ops()[0].is_identity());
        // degree 0 is trivial
        let s00 = cohomology_artinian_part(&complex, &cocycle, 0).unwrap();
        assert_eq!(s00.qdim(), 0);
    }

    #[test]
    fn seven_vertex_torus_is_a_torus() {
        let (complex, cocycle) = models::seven_vertex_torus().unwrap();
        assert_eq!(complex.simplices(0).len(), 7);
        assert_eq!(complex.simplices(1).len(), 21);
        assert_eq!(complex.simplices(2).len(), 14);
        // boundary squares to zero inside the constructor
        let tc = twisted_chain_complex(&complex, &cocycle).unwrap();
        assert_eq!(tc.dim(), Some(2));
        assert_eq!(betti_numbers(&complex).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn product_torus_cohomology_first_factor() {
        let (complex, cocycle) = models::torus_product(&[1], &[0]).unwrap();
        assert_eq!(betti_numbers(&complex).unwrap(), vec![1, 2, 1]);
        let h1 = pid::invariant_factors(&twisted_cohomology(&complex, &cocycle, 1).unwrap())
            .unwrap();
        assert_eq!(h1.free_rank, 0);
        assert_eq!(h1.factors, vec![QPoly::from_i64(&[-1, 1])]);
        let h2 = pid::invariant_factors(&twisted_cohomology(&complex, &cocycle, 2).unwrap())
            .unwrap();
        assert_eq!(h2.free_rank, 0);
        assert_eq!(h2.factors, vec![QPoly::from_i64(&[-1, 1])]);
        let h0 = twisted_cohomology(&complex, &cocycle, 0).unwrap();
        assert!(crate::cohomology::fp_is_zero(&h0).unwrap());
    }

    #[test]
    fn torus_identity_class_n2() {
        // torus with the identity class to the 2-torus: cohomology
        // concentrated in degree 2 with H^2 = A/(t1 - 1, t2 - 1)
        let (complex, cocycle) = models::torus_product(&[1, 0], &[0, 1]).unwrap();
        for i in 0..2 {
            let h = twisted_cohomology(&complex, &cocycle, i).unwrap();
            assert!(crate::cohomology::fp_is_zero(&h).unwrap(), "degree {}", i);
        }
        let h2 = twisted_cohomology(&complex, &cocycle, 2).unwrap();
        let a = crate::cohomology::fp_artinian_part(&h2).unwrap();
        assert_eq!(a.qdim(), 1);
        assert!(a.t_ops()[0].is_identity());
        assert!(a.t_ops()[1].is_identity());
    }

    #[test]
    fn degree_out_of_range() {
        let (complex, cocycle) = models::circle(3, &[1]).unwrap();
        assert!(twisted_cohomology(&complex, &cocycle, 2).is_err());
    }

    #[test]
    fn homotopy_invariance_circle_triangulations() {
        let (c3, w3) = models::circle(3, &[1]).unwrap();
        let (c4, w4) = models::circle(4, &[1]).unwrap();
        let d3 = pid::invariant_factors(&twisted_cohomology(&c3, &w3, 1).unwrap()).unwrap();
        let d4 = pid::invariant_factors(&twisted_cohomology(&c4, &w4, 1).unwrap()).unwrap();
        assert_eq!(d3, d4);
    }

    #[test]
    fn coboundary_invariance_univariate() {
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let (complex, cocycle) = models::wedge_two_circles(&[1], &[0]).unwrap();
        for _ in 0..5 {
            let potential: Vec<Vec<i64>> = (0..complex.num_vertices())
                .map(|_| vec![rng.gen_range(-2..=2)])
                .collect();
            let moved = cocycle.plus_coboundary(&potential).unwrap();
            let a = pid::invariant_factors(&twisted_cohomology(&complex, &cocycle, 1).unwrap())
                .unwrap();
            let b = pid::invariant_factors(&twisted_cohomology(&complex, &moved, 1).unwrap())
                .unwrap();
            assert_eq!(a, b);
        }
    }
}

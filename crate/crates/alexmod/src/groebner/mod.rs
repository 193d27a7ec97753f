//! Multivariate engine over R = Q[x_1, ..., x_n] and free modules R^k:
//! monomial orders, the division algorithm, Buchberger's algorithm with
//! reduced output, and (in the submodules) syzygies, resolutions, colon
//! and saturation calculus, Ext, and the maximal-Artinian-submodule
//! extraction for Laurent modules.

mod ops;
mod s0;

pub use ops::{
    annihilator, clear_laurent_column, colon_elem_ideal, colon_module_elem, colon_module_ideal,
    columns_from_fp, ext_top, fp_from_columns, free_resolution, ideal_contains_one,
    intersect_ideals, intersect_modules, is_zero_cokernel, kernel_of_map, krull_dim,
    poly_matrix_rank, saturate_ideal, saturate_module, standard_monomials, submodule_eq,
    submodule_member, syzygies, syzygy_module, FreeResolution,
};
pub use s0::{
    artinian_quotient, finite_support_element, maximal_artinian_submodule, s0_pullback_gens,
    S0Result,
};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Rat};

/// Primary comparison on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

impl BaseOrder {
    pub fn cmp_mono(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            BaseOrder::Lex => {
                for i in 0..a.len() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            BaseOrder::GrevLex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for i in (0..a.len()).rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        // smaller trailing exponent means larger
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Monomial order on free-module monomials (position, monomial).
/// `position_primary` gives position-over-term with lower positions
/// ranked higher, which is an elimination order between component blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub base: BaseOrder,
    pub position_primary: bool,
}

impl MonomialOrder {
    pub const IDEAL: MonomialOrder = MonomialOrder {
        base: BaseOrder::GrevLex,
        position_primary: false,
    };

    pub const MODULE: MonomialOrder = MonomialOrder {
        base: BaseOrder::GrevLex,
        position_primary: true,
    };

    pub fn cmp(&self, a: (usize, &[u32]), b: (usize, &[u32])) -> Ordering {
        if self.position_primary {
            match a.0.cmp(&b.0) {
                Ordering::Equal => self.base.cmp_mono(a.1, b.1),
                // lower position is greater
                ord => ord.reverse(),
            }
        } else {
            match self.base.cmp_mono(a.1, b.1) {
                Ordering::Equal => b.0.cmp(&a.0),
                ord => ord,
            }
        }
    }
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_div(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return None;
        }
        out.push(x - y);
    }
    Some(out)
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Polynomial in R = Q[x_1, ..., x_n] with nonnegative exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rat::one())
    }

    /// x_1 * x_2 * ... * x_n, the product of all variables.
    pub fn all_vars_product(nvars: usize) -> Self {
        Self::monomial(nvars, vec![1; nvars], Rat::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(terms: &mut BTreeMap<Vec<u32>, Rat>, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert(&mut terms, e.clone(), c.clone());
        }
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                Self::insert(&mut terms, mono_mul(ea, eb), ca * cb);
            }
        }
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul_term(&self, c: &Rat, mono: &[u32]) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (mono_mul(e, mono), a * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        self.mul_term(c, &vec![0; self.nvars])
    }

    pub fn leading(&self, order: BaseOrder) -> Option<(&Vec<u32>, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_mono(a, b))
    }

    /// Exact division; None if the division leaves a remainder.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero");
        let order = BaseOrder::GrevLex;
        let (dm, dc) = d.leading(order).map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading(order).map(|(e, c)| (e.clone(), c.clone()))?;
            let q = mono_div(&rm, &dm)?;
            let c = &rc / &dc;
            let t = MPoly::monomial(self.nvars, q, c);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Some(quot)
    }

    pub fn pow(&self, k: usize) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Conversion to the Laurent ring (exponents stay nonnegative).
    pub fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let exps: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            p = &p + &LaurentPoly::monomial(self.nvars, exps, c.clone());
        }
        p
    }

    /// Conversion from a Laurent polynomial with no negative exponents.
    pub fn from_laurent(p: &LaurentPoly) -> Result<MPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in p.terms() {
            let mut exps = Vec::with_capacity(e.len());
            for &x in e {
                if x < 0 {
                    return Err(Error::input(
                        "negative exponent where a polynomial was expected",
                    ));
                }
                exps.push(x as u32);
            }
            terms.insert(exps, c.clone());
        }
        Ok(MPoly {
            nvars: p.nvars(),
            terms,
        })
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Element of the free module R^rank; component i is an MPoly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FreeElem {
    comps: Vec<MPoly>,
}

impl FreeElem {
    pub fn zero(nvars: usize, rank: usize) -> Self {
        FreeElem {
            comps: vec![MPoly::zero(nvars); rank],
        }
    }

    pub fn from_comps(comps: Vec<MPoly>) -> Self {
        assert!(!comps.is_empty() || true);
        FreeElem { comps }
    }

    pub fn from_poly(p: MPoly) -> Self {
        FreeElem { comps: vec![p] }
    }

    pub fn std_basis(nvars: usize, rank: usize, i: usize) -> Self {
        let mut e = Self::zero(nvars, rank);
        e.comps[i] = MPoly::one(nvars);
        e
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn nvars(&self) -> usize {
        self.comps.first().map_or(0, |p| p.nvars())
    }

    pub fn comp(&self, i: usize) -> &MPoly {
        &self.comps[i]
    }

    pub fn comps(&self) -> &[MPoly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &FreeElem) -> FreeElem {
        assert_eq!(self.rank(), other.rank());
        FreeElem {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeElem) -> FreeElem {
        assert_eq!(self.rank(), other.rank());
        FreeElem {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> FreeElem {
        FreeElem {
            comps: self.comps.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn mul_poly(&self, p: &MPoly) -> FreeElem {
        FreeElem {
            comps: self.comps.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rat, mono: &[u32]) -> FreeElem {
        FreeElem {
            comps: self.comps.iter().map(|p| p.mul_term(c, mono)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> FreeElem {
        FreeElem {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Leading (position, monomial, coefficient) under the order.
    pub fn leading(&self, order: MonomialOrder) -> Option<(usize, Vec<u32>, Rat)> {
        let mut best: Option<(usize, &Vec<u32>, &Rat)> = None;
        for (pos, p) in self.comps.iter().enumerate() {
            for (e, c) in p.terms() {
                match best {
                    Some((bp, bm, _)) if order.cmp((pos, e), (bp, bm)) != Ordering::Greater => {}
                    _ => best = Some((pos, e, c)),
                }
            }
        }
        best.map(|(p, m, c)| (p, m.clone(), c.clone()))
    }

    /// Remove a single term (used when parking a term in the remainder).
    fn remove_term(&mut self, pos: usize, mono: &[u32], c: &Rat) {
        let p = &self.comps[pos];
        let t = MPoly::monomial(p.nvars(), mono.to_vec(), c.clone());
        self.comps[pos] = p.sub(&t);
    }

    fn add_term(&mut self, pos: usize, mono: Vec<u32>, c: Rat) {
        let p = &self.comps[pos];
        let t = MPoly::monomial(p.nvars(), mono, c);
        self.comps[pos] = p.add(&t);
    }

    pub fn total_degree(&self) -> u64 {
        self.comps.iter().map(|p| p.total_degree()).max().unwrap_or(0)
    }

    /// Restrict to a block of components.
    pub fn slice(&self, from: usize, to: usize) -> FreeElem {
        FreeElem {
            comps: self.comps[from..to].to_vec(),
        }
    }
}

impl fmt::Debug for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", c)?;
        }
        write!(f, ")")
    }
}

/// Full normal form of f with respect to a set of reducers.
pub fn normal_form(f: &FreeElem, basis: &[FreeElem], order: MonomialOrder) -> FreeElem {
    let lts: Vec<Option<(usize, Vec<u32>, Rat)>> =
        basis.iter().map(|g| g.leading(order)).collect();
    let mut work = f.clone();
    let mut rem = FreeElem::zero(f.nvars(), f.rank());
    while let Some((pos, mono, coeff)) = work.leading(order) {
        let mut reduced = false;
        for (g, lt) in basis.iter().zip(&lts) {
            let Some((gp, gm, gc)) = lt else { continue };
            if *gp == pos && mono_divides(gm, &mono) {
                let q = mono_div(&mono, gm).unwrap();
                let c = &coeff / gc;
                work = work.sub(&g.mul_term(&c, &q));
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.add_term(pos, mono.clone(), coeff.clone());
            work.remove_term(pos, &mono, &coeff);
        }
    }
    rem
}

/// Reduced Gröbner basis of a submodule of R^rank (or an ideal when
/// rank = 1), produced by Buchberger's algorithm with the normal pair
/// selection strategy, the coprime criterion (ideals only) and the chain
/// criterion.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub nvars: usize,
    pub rank: usize,
    pub order: MonomialOrder,
    pub elems: Vec<FreeElem>,
}

impl GroebnerBasis {
    pub fn contains(&self, f: &FreeElem) -> bool {
        normal_form(f, &self.elems, self.order).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<(usize, Vec<u32>)> {
        self.elems
            .iter()
            .filter_map(|g| g.leading(self.order).map(|(p, m, _)| (p, m)))
            .collect()
    }
}

pub fn buchberger(gens: &[FreeElem], order: MonomialOrder) -> GroebnerBasis {
    let rank = gens.first().map_or(1, |g| g.rank());
    let nvars = gens.first().map_or(1, |g| g.nvars());
    let mut basis: Vec<FreeElem> = vec![];
    for g in gens {
        assert_eq!(g.rank(), rank, "inconsistent ambient rank");
        if !g.is_zero() {
            let (_, _, c) = g.leading(order).unwrap();
            basis.push(g.scale(&c.recip()));
        }
    }
    let mut pending: Vec<(usize, usize)> = vec![];
    let mut done: std::collections::BTreeSet<(usize, usize)> = Default::default();
    let lead = |b: &FreeElem| b.leading(order).unwrap();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if lead(&basis[i]).0 == lead(&basis[j]).0 {
                pending.push((i, j));
            }
        }
    }
    while !pending.is_empty() {
        // normal selection: smallest lcm in the order
        let mut pick = 0;
        let mut pick_key: Option<(usize, Vec<u32>)> = None;
        for (idx, &(i, j)) in pending.iter().enumerate() {
            let (pi, mi, _) = lead(&basis[i]);
            let (_, mj, _) = lead(&basis[j]);
            let key = (pi, mono_lcm(&mi, &mj));
            let better = match &pick_key {
                None => true,
                Some((kp, km)) => order.cmp((key.0, &key.1), (*kp, km)) == Ordering::Less,
            };
            if better {
                pick = idx;
                pick_key = Some(key);
            }
        }
        let (i, j) = pending.swap_remove(pick);
        done.insert((i, j));
        let (pi, mi, ci) = lead(&basis[i]);
        let (_, mj, cj) = lead(&basis[j]);
        let lcm = mono_lcm(&mi, &mj);
        // coprime criterion is only valid in the ring (rank 1) case
        if rank == 1 && mono_coprime(&mi, &mj) {
            continue;
        }
        // chain criterion
        let mut chained = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let (kp, km, _) = lead(g);
            if kp == pi && mono_divides(&km, &lcm) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if done.contains(&a) && done.contains(&b) {
                    chained = true;
                    break;
                }
            }
        }
        if chained {
            continue;
        }
        let s = basis[i]
            .mul_term(&ci.recip(), &mono_div(&lcm, &mi).unwrap())
            .sub(&basis[j].mul_term(&cj.recip(), &mono_div(&lcm, &mj).unwrap()));
        let nf = normal_form(&s, &basis, order);
        if !nf.is_zero() {
            let (_, _, c) = nf.leading(order).unwrap();
            let new = nf.scale(&c.recip());
            let new_idx = basis.len();
            let (np, _, _) = lead(&new);
            for k in 0..new_idx {
                if lead(&basis[k]).0 == np {
                    pending.push((k, new_idx));
                }
            }
            basis.push(new);
        }
    }
    // minimize: drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (pi, mi, _) = lead(&basis[i]);
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (pj, mj, _) = lead(&basis[j]);
            if pi == pj && mono_divides(&mj, &mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<FreeElem> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail-reduce each element against the others
    let mut reduced = vec![];
    for i in 0..minimal.len() {
        let others: Vec<FreeElem> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let nf = normal_form(&minimal[i], &others, order);
        if !nf.is_zero() {
            let (_, _, c) = nf.leading(order).unwrap();
            reduced.push(nf.scale(&c.recip()));
        }
    }
    reduced.sort_by(|a, b| {
        let (pa, ma, _) = a.leading(order).unwrap();
        let (pb, mb, _) = b.leading(order).unwrap();
        order.cmp((pb, &mb), (pa, &ma))
    });
    GroebnerBasis {
        nvars,
        rank,
        order,
        elems: reduced,
    }
}

/// Gröbner basis of an ideal given by ring elements.
pub fn ideal_groebner(gens: &[MPoly]) -> GroebnerBasis {
    let elems: Vec<FreeElem> = gens.iter().map(|p| FreeElem::from_poly(p.clone())).collect();
    buchberger(&elems, MonomialOrder::IDEAL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn x() -> MPoly {
        MPoly::var(2, 0)
    }

    fn y() -> MPoly {
        MPoly::var(2, 1)
    }

    #[test]
    fn grevlex_ordering() {
        let o = BaseOrder::GrevLex;
        // x^2 > xy > y^2 > x > y > 1
        assert_eq!(o.cmp_mono(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(o.cmp_mono(&[1, 1], &[0, 2]), Ordering::Greater);
        assert_eq!(o.cmp_mono(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(o.cmp_mono(&[0, 1], &[0, 0]), Ordering::Greater);
    }

    #[test]
    fn lex_ordering() {
        let o = BaseOrder::Lex;
        assert_eq!(o.cmp_mono(&[1, 0], &[0, 5]), Ordering::Greater);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gb = ideal_groebner(&[x(), y()]);
        assert_eq!(gb.elems.len(), 2);
        assert!(gb.contains(&FreeElem::from_poly(x().mul(&y()))));
        assert!(!gb.contains(&FreeElem::from_poly(MPoly::one(2))));
    }

    #[test]
    fn unit_ideal_collapses() {
        // {x - 1, x} generates the unit ideal
        let gb = ideal_groebner(&[x().sub(&MPoly::one(2)), x()]);
        assert_eq!(gb.elems.len(), 1);
        assert!(gb.elems[0].comp(0).is_constant());
    }

    #[test]
    fn coprime_leading_terms_lex() {
        // {y - x^2, x^3} with lex y > x: already a basis
        // variables ordered (y, x) so lex prefers y
        let yv = MPoly::var(2, 0);
        let xv = MPoly::var(2, 1);
        let g1 = yv.sub(&xv.pow(2));
        let g2 = xv.pow(3);
        let order = MonomialOrder {
            base: BaseOrder::Lex,
            position_primary: false,
        };
        let gb = buchberger(
            &[FreeElem::from_poly(g1.clone()), FreeElem::from_poly(g2.clone())],
            order,
        );
        assert_eq!(gb.elems.len(), 2);
        // S-polynomial reduces to zero
        let s = g1.mul(&xv.pow(3)).sub(&g2.mul(&yv.sub(&xv.pow(2))));
        assert!(gb.contains(&FreeElem::from_poly(s)));
    }

    #[test]
    fn buchberger_criterion_posthoc() {
        // every S-pair of the output reduces to zero
        let gens = vec![
            FreeElem::from_poly(x().pow(2).add(&y())),
            FreeElem::from_poly(x().mul(&y()).sub(&MPoly::one(2))),
        ];
        let gb = buchberger(&gens, MonomialOrder::IDEAL);
        for i in 0..gb.elems.len() {
            for j in (i + 1)..gb.elems.len() {
                let (pi, mi, ci) = gb.elems[i].leading(gb.order).unwrap();
                let (pj, mj, cj) = gb.elems[j].leading(gb.order).unwrap();
                if pi != pj {
                    continue;
                }
                let l = mono_lcm(&mi, &mj);
                let s = gb.elems[i]
                    .mul_term(&ci.recip(), &mono_div(&l, &mi).unwrap())
                    .sub(&gb.elems[j].mul_term(&cj.recip(), &mono_div(&l, &mj).unwrap()));
                assert!(normal_form(&s, &gb.elems, gb.order).is_zero());
            }
        }
    }

    #[test]
    fn exact_division() {
        let p = x().pow(2).sub(&y().pow(2));
        let d = x().add(&y());
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, x().sub(&y()));
        assert!(x().exact_div(&y()).is_none());
    }

    #[test]
    fn normal_form_is_canonical() {
        let gb = ideal_groebner(&[x().pow(2), y()]);
        let f = x().pow(3).add(&x().mul(&y())).add(&x()).add(&MPoly::constant(2, rat(7)));
        let nf = normal_form(&FreeElem::from_poly(f), &gb.elems, gb.order);
        let expected = x().add(&MPoly::constant(2, rat(7)));
        assert_eq!(nf.comp(0), &expected);
    }
}

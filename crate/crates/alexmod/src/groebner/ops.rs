//! Syzygies, free resolutions, colon and saturation calculus, annihilators,
//! Krull dimension and top Ext over R = Q[x_1, ..., x_n].
//!
//! Kernels and colons all reduce to one syzygy computation: the syzygy
//! module of a list of columns is read off a Gröbner basis of the
//! augmented module [columns | bookkeeping identity] under a
//! position-over-term order, which eliminates the main block.



use crate::error::{Error, Result};
use crate::module::FPModule;
use crate::ring::LaurentPoly;

use super::{buchberger, mono_divides, FreeElem, GroebnerBasis, MPoly, MonomialOrder};

/// Syzygies of a list of elements of R^rank: generators of
/// { c in R^s : sum c_i gens_i = 0 }, s = gens.len().
pub fn syzygies(gens: &[FreeElem], rank: usize, nvars: usize) -> Vec<FreeElem> {
    let s = gens.len();
    if s == 0 {
        return vec![];
    }
    let mut aug = Vec::with_capacity(s);
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g.rank(), rank);
        let mut comps = g.comps().to_vec();
        for j in 0..s {
            comps.push(if i == j {
                MPoly::one(nvars)
            } else {
                MPoly::zero(nvars)
            });
        }
        aug.push(FreeElem::from_comps(comps));
    }
    let gb = buchberger(&aug, MonomialOrder::MODULE);
    let mut out: Vec<FreeElem> = gb
        .elems
        .iter()
        .filter(|e| (0..rank).all(|i| e.comp(i).is_zero()))
        .map(|e| e.slice(rank, rank + s))
        .collect();
    out.sort();
    out
}

/// Kernel of the map R^{cols.len()} -> R^rank with the given columns;
/// this is the same computation as `syzygies`, named for readability.
pub fn kernel_of_map(cols: &[FreeElem], rank: usize, nvars: usize) -> Vec<FreeElem> {
    syzygies(cols, rank, nvars)
}

/// Syzygy module of the generators of a Gröbner basis, as a finitely
/// presented module whose presentation columns are the syzygies.
pub fn syzygy_module(gb: &GroebnerBasis) -> Result<FPModule> {
    let syz = syzygies(&gb.elems, gb.rank, gb.nvars);
    fp_from_columns(gb.nvars, gb.elems.len(), &syz)
}

/// Package a list of columns as an FPModule presentation over the Laurent
/// ring (polynomials embed).
pub fn fp_from_columns(nvars: usize, rank: usize, cols: &[FreeElem]) -> Result<FPModule> {
    let mut rows: Vec<Vec<LaurentPoly>> = vec![vec![]; rank];
    for col in cols {
        assert_eq!(col.rank(), rank);
        for (i, row) in rows.iter_mut().enumerate() {
            row.push(col.comp(i).to_laurent());
        }
    }
    if rank == 0 {
        return FPModule::new(nvars, 0, crate::module::PolyMatrix::zeros(nvars, 0, 0));
    }
    let m = crate::module::PolyMatrix::from_rows(nvars, rows)?;
    FPModule::new(nvars, rank, m)
}

/// Columns of an FPModule presentation as FreeElems over R, clearing
/// Laurent denominators columnwise (multiplication by a unit does not
/// change the generated submodule over A).
pub fn columns_from_fp(m: &FPModule) -> Result<Vec<FreeElem>> {
    let nvars = m.nvars();
    let p = m.presentation();
    let mut out = vec![];
    for j in 0..p.ncols() {
        let col = p.col(j);
        out.push(clear_laurent_column(nvars, &col)?);
    }
    Ok(out)
}

/// Multiply a Laurent column by the least monomial making every entry
/// polynomial, then convert.
pub fn clear_laurent_column(nvars: usize, col: &[LaurentPoly]) -> Result<FreeElem> {
    let mut shift = vec![0i64; nvars];
    for e in col {
        if let Some(min) = e.min_exponents() {
            for i in 0..nvars {
                if min[i] < -shift[i] {
                    shift[i] = -min[i];
                }
            }
        }
    }
    let comps: Result<Vec<MPoly>> = col
        .iter()
        .map(|e| MPoly::from_laurent(&e.mul_monomial(&shift)?))
        .collect();
    Ok(FreeElem::from_comps(comps?))
}

/// Is f in the submodule generated by gens?
pub fn submodule_member(gens: &[FreeElem], f: &FreeElem) -> bool {
    if f.is_zero() {
        return true;
    }
    let gb = buchberger(gens, MonomialOrder::MODULE);
    gb.contains(f)
}

/// Mutual containment of two generated submodules of R^rank.
pub fn submodule_eq(a: &[FreeElem], b: &[FreeElem]) -> bool {
    let gba = buchberger(a, MonomialOrder::MODULE);
    let gbb = buchberger(b, MonomialOrder::MODULE);
    b.iter().all(|g| gba.contains(g)) && a.iter().all(|g| gbb.contains(g))
}

/// The colon ideal (N : v) = { f in R : f v in N } for a submodule
/// N of R^rank and an element v; computed as the v-coordinate projection
/// of the syzygies of [v | N].
pub fn colon_elem_ideal(n_gens: &[FreeElem], rank: usize, nvars: usize, v: &FreeElem) -> Vec<MPoly> {
    let mut cols = vec![v.clone()];
    cols.extend_from_slice(n_gens);
    let syz = syzygies(&cols, rank, nvars);
    let mut out: Vec<MPoly> = syz
        .iter()
        .map(|s| s.comp(0).clone())
        .filter(|p| !p.is_zero())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The colon module (N : f) = { v in R^rank : f v in N }.
pub fn colon_module_elem(
    n_gens: &[FreeElem],
    rank: usize,
    nvars: usize,
    f: &MPoly,
) -> Vec<FreeElem> {
    let mut cols: Vec<FreeElem> = (0..rank)
        .map(|i| FreeElem::std_basis(nvars, rank, i).mul_poly(f))
        .collect();
    cols.extend_from_slice(n_gens);
    let syz = syzygies(&cols, rank, nvars);
    let mut out: Vec<FreeElem> = syz
        .iter()
        .map(|s| s.slice(0, rank))
        .filter(|v| !v.is_zero())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Intersection of two submodules of R^rank.
pub fn intersect_modules(
    a: &[FreeElem],
    b: &[FreeElem],
    rank: usize,
    nvars: usize,
) -> Vec<FreeElem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut cols = a.to_vec();
    cols.extend_from_slice(b);
    let syz = syzygies(&cols, rank, nvars);
    let mut out = vec![];
    for s in &syz {
        let mut v = FreeElem::zero(nvars, rank);
        for (i, g) in a.iter().enumerate() {
            v = v.add(&g.mul_poly(s.comp(i)));
        }
        if !v.is_zero() {
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Intersection of two ideals.
pub fn intersect_ideals(a: &[MPoly], b: &[MPoly], nvars: usize) -> Vec<MPoly> {
    let ra: Vec<FreeElem> = a.iter().map(|p| FreeElem::from_poly(p.clone())).collect();
    let rb: Vec<FreeElem> = b.iter().map(|p| FreeElem::from_poly(p.clone())).collect();
    intersect_modules(&ra, &rb, 1, nvars)
        .into_iter()
        .map(|e| e.comp(0).clone())
        .collect()
}

/// (N : I) for a submodule N of R^rank and an ideal I.
pub fn colon_module_ideal(
    n_gens: &[FreeElem],
    rank: usize,
    nvars: usize,
    ideal: &[MPoly],
) -> Vec<FreeElem> {
    let mut acc: Option<Vec<FreeElem>> = None;
    for f in ideal {
        if f.is_zero() {
            continue;
        }
        let c = colon_module_elem(n_gens, rank, nvars, f);
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect_modules(&prev, &c, rank, nvars),
        });
    }
    acc.unwrap_or_else(|| {
        // colon by the zero ideal is everything
        (0..rank).map(|i| FreeElem::std_basis(nvars, rank, i)).collect()
    })
}

/// Saturation (N : I^infinity), by iterating the colon until it stabilizes.
pub fn saturate_module(
    n_gens: &[FreeElem],
    rank: usize,
    nvars: usize,
    ideal: &[MPoly],
) -> Vec<FreeElem> {
    let mut current: Vec<FreeElem> = n_gens.to_vec();
    loop {
        let next = colon_module_ideal(&current, rank, nvars, ideal);
        // ascending chain: stop when next is contained in current
        let gb = buchberger(&current, MonomialOrder::MODULE);
        if next.iter().all(|g| gb.contains(g)) {
            return gb.elems;
        }
        let mut merged = current;
        merged.extend(next);
        current = buchberger(&merged, MonomialOrder::MODULE).elems;
    }
}

/// Ideal saturation (I : J^infinity).
pub fn saturate_ideal(i: &[MPoly], j: &[MPoly], nvars: usize) -> Vec<MPoly> {
    let gi: Vec<FreeElem> = i.iter().map(|p| FreeElem::from_poly(p.clone())).collect();
    saturate_module(&gi, 1, nvars, j)
        .into_iter()
        .map(|e| e.comp(0).clone())
        .collect()
}

/// Does the ideal contain 1?
pub fn ideal_contains_one(gens: &[MPoly], nvars: usize) -> bool {
    let gi: Vec<FreeElem> = gens.iter().map(|p| FreeElem::from_poly(p.clone())).collect();
    let gb = buchberger(&gi, MonomialOrder::IDEAL);
    gb.contains(&FreeElem::from_poly(MPoly::one(nvars)))
}

/// Annihilator of the cokernel of the given presentation columns,
/// computed as the intersection over generators j of (im P : e_j).
pub fn annihilator(pres: &[FreeElem], rank: usize, nvars: usize) -> Vec<MPoly> {
    if rank == 0 {
        return vec![MPoly::one(nvars)];
    }
    let mut acc: Option<Vec<MPoly>> = None;
    for j in 0..rank {
        let e = FreeElem::std_basis(nvars, rank, j);
        let c = colon_elem_ideal(pres, rank, nvars, &e);
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect_ideals(&prev, &c, nvars),
        });
        if let Some(a) = &acc {
            if a.is_empty() {
                return vec![];
            }
        }
    }
    acc.unwrap()
}

/// Krull dimension of R/I via maximal variable sets independent modulo
/// the leading-term ideal; the unit ideal returns -1.
pub fn krull_dim(gens: &[MPoly], nvars: usize) -> i64 {
    if ideal_contains_one(gens, nvars) {
        return -1;
    }
    let gi: Vec<FreeElem> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| FreeElem::from_poly(p.clone()))
        .collect();
    if gi.is_empty() {
        return nvars as i64;
    }
    let gb = buchberger(&gi, MonomialOrder::IDEAL);
    let lms: Vec<Vec<u32>> = gb
        .leading_monomials()
        .into_iter()
        .map(|(_, m)| m)
        .collect();
    let mut best = 0i64;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        // S = variables in mask; independent iff no leading monomial is
        // supported inside S
        let independent = lms.iter().all(|m| {
            !m.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || (mask >> i) & 1 == 1)
        });
        if independent {
            best = size;
        }
    }
    best
}

/// A segment of a free resolution: ranks[0] is the ambient rank of the
/// presented module, maps[k] lists the columns of the map
/// R^{ranks[k+1]} -> R^{ranks[k]}, and maps[0] is the input presentation.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ranks: Vec<usize>,
    pub maps: Vec<Vec<FreeElem>>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }
}

/// Iterated syzygies: a length-`num_maps` free resolution segment of the
/// cokernel of the given columns.
pub fn free_resolution(
    cols: &[FreeElem],
    rank: usize,
    nvars: usize,
    num_maps: usize,
) -> FreeResolution {
    let mut ranks = vec![rank];
    let mut maps = vec![];
    let mut current: Vec<FreeElem> = cols.to_vec();
    let mut current_rank = rank;
    for _ in 0..num_maps {
        ranks.push(current.len());
        maps.push(current.clone());
        let next = syzygies(&current, current_rank, nvars);
        current_rank = current.len();
        current = next;
    }
    FreeResolution { ranks, maps }
}

/// Columns of the transpose of the map given by `cols` (a map
/// R^{cols.len()} -> R^rank): the dual map R^rank -> R^{cols.len()}.
fn transpose_columns(cols: &[FreeElem], rank: usize) -> Vec<FreeElem> {
    let s = cols.len();
    (0..rank)
        .map(|i| {
            FreeElem::from_comps(
                (0..s)
                    .map(|j| cols[j].comp(i).clone())
                    .collect::<Vec<MPoly>>(),
            )
        })
        .collect()
}

/// Presentation of Ext^n_R(M, R) for M = coker(cols), n = nvars: the top
/// cohomology of the dual of a length-(n+1) resolution. The result is
/// (rank, presentation columns).
pub fn ext_top(cols: &[FreeElem], rank: usize, nvars: usize) -> (usize, Vec<FreeElem>) {
    let n = nvars;
    if rank == 0 {
        return (0, vec![]);
    }
    let res = free_resolution(cols, rank, nvars, n + 1);
    // ranks: r_0 .. r_{n+1}; maps[k]: R^{r_{k+1}} -> R^{r_k}
    let r_n = res.ranks[n];
    let r_np1 = res.ranks[n + 1];
    if r_n == 0 {
        return (0, vec![]);
    }
    // kernel of the dual of maps[n]: R^{r_n} -> R^{r_{n+1}}
    let kernel = if r_np1 == 0 {
        (0..r_n)
            .map(|i| FreeElem::std_basis(nvars, r_n, i))
            .collect::<Vec<_>>()
    } else {
        let dual_cols = transpose_columns(&res.maps[n], r_n);
        debug_assert_eq!(dual_cols.len(), r_n);
        kernel_of_map(&dual_cols, r_np1, nvars)
    };
    if kernel.is_empty() {
        return (0, vec![]);
    }
    // image of the dual of maps[n-1]: columns in R^{r_n}
    let image = if n == 0 {
        vec![]
    } else {
        let r_nm1 = res.ranks[n - 1];
        transpose_columns(&res.maps[n - 1], r_nm1)
    };
    // relations on the kernel generators: { c : K c in image }
    let k = kernel.len();
    let mut combined = kernel.clone();
    combined.extend(image);
    let syz = syzygies(&combined, r_n, nvars);
    let mut rels: Vec<FreeElem> = syz
        .iter()
        .map(|s| s.slice(0, k))
        .filter(|v| !v.is_zero())
        .collect();
    rels.sort();
    rels.dedup();
    (k, rels)
}

/// Is the cokernel of the given presentation columns the zero module?
pub fn is_zero_cokernel(cols: &[FreeElem], rank: usize, nvars: usize) -> bool {
    if rank == 0 {
        return true;
    }
    let gb = buchberger(cols, MonomialOrder::MODULE);
    (0..rank).all(|i| gb.contains(&FreeElem::std_basis(nvars, rank, i)))
}

/// Rank of a Laurent polynomial matrix over the fraction field, by
/// fraction-free (Bareiss) elimination after clearing denominators.
pub fn poly_matrix_rank(m: &crate::module::PolyMatrix) -> Result<usize> {
    let nvars = m.nvars();
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a: Vec<Vec<MPoly>> = vec![];
    for i in 0..rows {
        let row: Vec<LaurentPoly> = (0..cols).map(|j| m[(i, j)].clone()).collect();
        let cleared = clear_laurent_column(nvars, &row)?;
        a.push(cleared.comps().to_vec());
    }
    let mut rank = 0;
    let mut prev = MPoly::one(nvars);
    let mut r0 = 0;
    for c in 0..cols {
        // locate a pivot in column c at or below r0
        let Some(pr) = (r0..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r0, pr);
        for i in (r0 + 1)..rows {
            for j in (c + 1)..cols {
                let t = a[r0][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r0][j]));
                a[i][j] = t
                    .exact_div(&prev)
                    .ok_or_else(|| Error::internal("fraction-free elimination division failed"))?;
            }
            a[i][c] = MPoly::zero(nvars);
        }
        prev = a[r0][c].clone();
        rank += 1;
        r0 += 1;
        if r0 == rows {
            break;
        }
    }
    Ok(rank)
}

/// Standard monomials of the leading-term module of a Gröbner basis of a
/// submodule of R^rank: the monomials (position, mono) not divisible by
/// any leading term. Returns None when the set is infinite.
pub fn standard_monomials(gb: &GroebnerBasis, rank: usize) -> Option<Vec<(usize, Vec<u32>)>> {
    let nvars = gb.nvars;
    let lms = gb.leading_monomials();
    let mut out = vec![];
    for pos in 0..rank {
        let pos_lms: Vec<&Vec<u32>> = lms
            .iter()
            .filter_map(|(p, m)| (*p == pos).then_some(m))
            .collect();
        // caps: for each variable, the least pure power x_i^k in the
        // leading-term ideal at this position; absence means infinitely
        // many standard monomials
        let mut caps = vec![u32::MAX; nvars];
        for m in &pos_lms {
            let support: Vec<usize> = m
                .iter()
                .enumerate()
                .filter_map(|(i, &e)| (e > 0).then_some(i))
                .collect();
            if support.is_empty() {
                // the whole component is gone
                caps = vec![0; nvars];
                break;
            }
            if support.len() == 1 {
                let i = support[0];
                caps[i] = caps[i].min(m[i]);
            }
        }
        if caps.iter().any(|&c| c == u32::MAX) {
            return None;
        }
        // enumerate the box [0, cap_i) and keep monomials outside the
        // leading-term ideal
        let mut stack: Vec<Vec<u32>> = vec![vec![]];
        for &cap in &caps {
            let mut next = vec![];
            for prefix in &stack {
                for e in 0..cap {
                    let mut p = prefix.clone();
                    p.push(e);
                    next.push(p);
                }
            }
            stack = next;
        }
        for mono in stack {
            if pos_lms.iter().all(|lm| !mono_divides(lm, &mono)) {
                out.push((pos, mono));
            }
        }
    }
    out.sort();
    Some(out)
}

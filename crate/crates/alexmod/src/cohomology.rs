//! Presentations of kernels-mod-images of maps between free A-modules.
//! For one variable the Smith normal form gives a free kernel basis and
//! canonical relations; for several variables kernels and relation modules
//! come from syzygy computations over the polynomial ring.

use crate::error::{Error, Result};
use crate::groebner::{
    self, clear_laurent_column, columns_from_fp, is_zero_cokernel, kernel_of_map,
    poly_matrix_rank, saturate_module, syzygies, FreeElem, MPoly,
};
use crate::module::{ArtinianModule, FPModule, PolyMatrix};
use crate::pid;
use crate::ring::LaurentPoly;

/// Columns of the matrix after clearing denominators rowwise (left
/// multiplication by an invertible diagonal; the kernel is unchanged).
fn row_cleared_columns(m: &PolyMatrix) -> Result<Vec<FreeElem>> {
    let nvars = m.nvars();
    let rows = m.nrows();
    // per-row shift making every entry polynomial
    let mut shifts = vec![vec![0i64; nvars]; rows];
    for i in 0..rows {
        for j in 0..m.ncols() {
            if let Some(min) = m[(i, j)].min_exponents() {
                for v in 0..nvars {
                    if min[v] < -shifts[i][v] {
                        shifts[i][v] = -min[v];
                    }
                }
            }
        }
    }
    let mut cols = vec![];
    for j in 0..m.ncols() {
        let mut comps = vec![];
        for i in 0..rows {
            let shifted = m[(i, j)].mul_monomial(&shifts[i])?;
            comps.push(MPoly::from_laurent(&shifted)?);
        }
        cols.push(FreeElem::from_comps(comps));
    }
    Ok(cols)
}

/// Finite presentation of ker(d_out) / im(d_in), where d_out maps the
/// middle free module A^mid onward and d_in maps into it. Either map may
/// be absent (zero).
pub fn cohomology_presentation(
    nvars: usize,
    mid: usize,
    d_in: Option<&PolyMatrix>,
    d_out: Option<&PolyMatrix>,
) -> Result<FPModule> {
    if let Some(m) = d_in {
        if m.nrows() != mid {
            return Err(Error::input("incoming map has wrong target rank"));
        }
    }
    if let Some(m) = d_out {
        if m.ncols() != mid {
            return Err(Error::input("outgoing map has wrong source rank"));
        }
    }
    if nvars == 1 {
        cohomology_snf(mid, d_in, d_out)
    } else {
        cohomology_groebner(nvars, mid, d_in, d_out)
    }
}

fn cohomology_snf(
    mid: usize,
    d_in: Option<&PolyMatrix>,
    d_out: Option<&PolyMatrix>,
) -> Result<FPModule> {
    match d_out {
        None => {
            // kernel is everything; relations are the incoming columns
            let pres = match d_in {
                Some(m) => m.clone(),
                None => PolyMatrix::zeros(1, mid, 0),
            };
            FPModule::new(1, mid, pres)
        }
        Some(out) => {
            let snf = pid::smith_normal_form(out)?;
            let r = snf.diagonal().len();
            let kernel_rank = mid - r;
            let pres = match d_in {
                None => PolyMatrix::zeros(1, kernel_rank, 0),
                Some(incoming) => {
                    // coordinates of each incoming column in the kernel
                    // basis, read off from Vinv
                    let coords = snf.vinv.mul(incoming)?;
                    let mut pres = PolyMatrix::zeros(1, kernel_rank, incoming.ncols());
                    for j in 0..incoming.ncols() {
                        for i in 0..mid {
                            if i < r {
                                if !coords[(i, j)].is_zero() {
                                    return Err(Error::internal(
                                        "incoming map does not land in the kernel",
                                    ));
                                }
                            } else {
                                pres[(i - r, j)] = coords[(i, j)].clone();
                            }
                        }
                    }
                    pres
                }
            };
            FPModule::new(1, kernel_rank, pres)
        }
    }
}

fn cohomology_groebner(
    nvars: usize,
    mid: usize,
    d_in: Option<&PolyMatrix>,
    d_out: Option<&PolyMatrix>,
) -> Result<FPModule> {
    // kernel generators of the outgoing map
    let kernel: Vec<FreeElem> = match d_out {
        None => (0..mid)
            .map(|i| FreeElem::std_basis(nvars, mid, i))
            .collect(),
        Some(out) => {
            let cols = row_cleared_columns(out)?;
            kernel_of_map(&cols, out.nrows(), nvars)
        }
    };
    if kernel.is_empty() {
        return FPModule::new(nvars, 0, PolyMatrix::zeros(nvars, 0, 0));
    }
    // incoming image columns (columnwise clearing keeps the A-span)
    let image: Vec<FreeElem> = match d_in {
        None => vec![],
        Some(incoming) => {
            let mut v = vec![];
            for j in 0..incoming.ncols() {
                let col: Vec<LaurentPoly> = incoming.col(j);
                let cleared = clear_laurent_column(nvars, &col)?;
                if !cleared.is_zero() {
                    v.push(cleared);
                }
            }
            v
        }
    };
    // relations: coefficient vectors c with kernel * c inside the image
    let k = kernel.len();
    let mut combined = kernel.clone();
    combined.extend(image);
    let syz = syzygies(&combined, mid, nvars);
    let rels: Vec<FreeElem> = syz
        .iter()
        .map(|s| s.slice(0, k))
        .filter(|v| !v.is_zero())
        .collect();
    groebner::fp_from_columns(nvars, k, &rels)
}

/// Is the module zero over A (i.e. after inverting every variable)?
pub fn fp_is_zero(m: &FPModule) -> Result<bool> {
    if m.rank() == 0 {
        return Ok(true);
    }
    if m.nvars() == 1 {
        let dec = pid::invariant_factors(m)?;
        return Ok(dec.free_rank == 0 && dec.factors.is_empty());
    }
    let cols = columns_from_fp(m)?;
    let s = MPoly::all_vars_product(m.nvars());
    let sat = saturate_module(&cols, m.rank(), m.nvars(), &[s]);
    Ok(is_zero_cokernel(&sat, m.rank(), m.nvars()))
}

/// Realize a module that is entirely Artinian as a finite-dimensional
/// space with its t-operators. Errors when the module has a free part.
pub fn artinian_realization(m: &FPModule) -> Result<ArtinianModule> {
    if m.nvars() == 1 {
        let dec = pid::invariant_factors(m)?;
        if dec.free_rank > 0 {
            return Err(Error::internal(
                "module expected to be Artinian has positive free rank",
            ));
        }
        return pid::torsion_from_factors(&dec);
    }
    let cols = columns_from_fp(m)?;
    let module = groebner::artinian_quotient(m.rank(), m.nvars(), &cols)?;
    Ok(module)
}

/// Rank of the module over the fraction field of A.
pub fn fp_free_rank(m: &FPModule) -> Result<usize> {
    if m.rank() == 0 {
        return Ok(0);
    }
    if m.presentation().ncols() == 0 {
        return Ok(m.rank());
    }
    Ok(m.rank() - poly_matrix_rank(m.presentation())?)
}

/// The maximal Artinian submodule of a presented module, dispatching to
/// the Smith normal form engine for one variable and the Ext/saturation
/// pipeline otherwise.
pub fn fp_artinian_part(m: &FPModule) -> Result<ArtinianModule> {
    if m.nvars() == 1 {
        pid::torsion_summary(m)
    } else {
        Ok(groebner::maximal_artinian_submodule(m)?.module)
    }
}

//! Maximal Artinian submodule of a finitely presented module over the
//! Laurent ring A = Q[t_1^{±1}, ..., t_n^{±1}].
//!
//! The module is presented over R = Q[x_1, ..., x_n] after clearing
//! denominators, so that M = M_R[s^{-1}] with s = x_1 ... x_n. The
//! dimension-zero part of M_R is the saturation (0 : I^inf) where
//! I = Ann Ext^n_R(M_R, R); localizing that part at s and extracting a
//! Q-basis from standard monomials realizes the result as a finite
//! dimensional space with commuting invertible multiplication operators.



use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::module::{ArtinianModule, FPModule};
use crate::ring::LaurentPoly;

use super::ops::{
    annihilator, colon_elem_ideal, columns_from_fp, ext_top, ideal_contains_one, krull_dim,
    saturate_ideal, saturate_module, standard_monomials, syzygies,
};
use super::{buchberger, normal_form, FreeElem, MPoly, MonomialOrder};

/// Result of the extraction: the Artinian module together with the
/// inclusion into the ambient module expressed on generators (each entry
/// is a vector of length `rank` over A generating the submodule).
#[derive(Clone, Debug)]
pub struct S0Result {
    pub module: ArtinianModule,
    pub inclusion: Vec<Vec<LaurentPoly>>,
}

/// Realize the cokernel of a submodule W of R^rank, localized at
/// s = x_1...x_n, as a Q-vector space with the n multiplication operators
/// x_i. Errors if the quotient is not finite dimensional or some operator
/// fails to be invertible (both are theory-guaranteed in the call sites).
pub fn artinian_quotient(
    rank: usize,
    nvars: usize,
    w_gens: &[FreeElem],
) -> Result<ArtinianModule> {
    if rank == 0 {
        return Ok(ArtinianModule::zero(nvars));
    }
    let s = MPoly::all_vars_product(nvars);
    let sat = saturate_module(w_gens, rank, nvars, &[s]);
    let gb = buchberger(&sat, MonomialOrder::MODULE);
    let Some(basis) = standard_monomials(&gb, rank) else {
        return Err(Error::internal(
            "standard monomial set is infinite where theory guarantees finiteness",
        ));
    };
    let qdim = basis.len();
    if qdim == 0 {
        return Ok(ArtinianModule::zero(nvars));
    }
    let index: std::collections::BTreeMap<(usize, Vec<u32>), usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let mut ops = Vec::with_capacity(nvars);
    for var in 0..nvars {
        let mut m = QMatrix::zeros(qdim, qdim);
        for (col, (pos, mono)) in basis.iter().enumerate() {
            let mut shifted = mono.clone();
            shifted[var] += 1;
            let elem = {
                let mut e = FreeElem::zero(nvars, rank);
                e = e.add(&FreeElem::std_basis(nvars, rank, *pos).mul_term(
                    &crate::ring::rat(1),
                    &shifted,
                ));
                e
            };
            let nf = normal_form(&elem, &gb.elems, MonomialOrder::MODULE);
            for (p, comp) in nf.comps().iter().enumerate() {
                for (e, c) in comp.terms() {
                    let key = (p, e.clone());
                    let row = *index.get(&key).ok_or_else(|| {
                        Error::internal("normal form left the standard monomial basis")
                    })?;
                    m[(row, col)] = c.clone();
                }
            }
        }
        ops.push(m);
    }
    for (i, t) in ops.iter().enumerate() {
        if t.inverse().is_none() {
            return Err(Error::internal(format!(
                "multiplication by x_{} is singular after inverting s",
                i + 1
            )));
        }
    }
    ArtinianModule::new(nvars, ops).map_err(|e| Error::internal(e.to_string()))
}

struct Pipeline {
    rank: usize,
    nvars: usize,
    pres_cols: Vec<FreeElem>,
    /// generators of the dimension-zero saturation (contains pres_cols)
    sat: Vec<FreeElem>,
}

fn run_pipeline(m: &FPModule) -> Result<Option<Pipeline>> {
    let nvars = m.nvars();
    let rank = m.rank();
    if rank == 0 {
        return Ok(None);
    }
    let pres_cols = columns_from_fp(m)?;
    let (e_rank, e_cols) = ext_top(&pres_cols, rank, nvars);
    if e_rank == 0 {
        return Ok(None);
    }
    let ann = annihilator(&e_cols, e_rank, nvars);
    if ideal_contains_one(&ann, nvars) {
        // Ext vanished after all
        return Ok(None);
    }
    if ann.is_empty() {
        return Err(Error::internal(
            "top Ext has zero annihilator but must have zero-dimensional support",
        ));
    }
    // guard: the support away from V(s) must be zero dimensional
    let s = MPoly::all_vars_product(nvars);
    let ann_sat = saturate_ideal(&ann, &[s], nvars);
    if krull_dim(&ann_sat, nvars) > 0 {
        return Err(Error::internal(
            "support of the torsion part is positive dimensional off the axes",
        ));
    }
    let sat = saturate_module(&pres_cols, rank, nvars, &ann);
    Ok(Some(Pipeline {
        rank,
        nvars,
        pres_cols,
        sat,
    }))
}

/// Maximal Artinian submodule of a finitely presented A-module, realized
/// as a finite-dimensional Q-vector space with its commuting t-operators,
/// together with generators of the submodule inside A^rank.
pub fn maximal_artinian_submodule(m: &FPModule) -> Result<S0Result> {
    let nvars = m.nvars();
    let Some(p) = run_pipeline(m)? else {
        return Ok(S0Result {
            module: ArtinianModule::zero(nvars),
            inclusion: vec![],
        });
    };
    // present T = sat / im(P): relations are the coefficient vectors c
    // with sat * c inside im(P)
    let mut combined = p.sat.clone();
    combined.extend(p.pres_cols.iter().cloned());
    let syz = syzygies(&combined, p.rank, p.nvars);
    let rel: Vec<FreeElem> = syz
        .iter()
        .map(|s| s.slice(0, p.sat.len()))
        .filter(|v| !v.is_zero())
        .collect();
    let module = artinian_quotient(p.sat.len(), p.nvars, &rel)?;
    let inclusion = p
        .sat
        .iter()
        .map(|g| g.comps().iter().map(|c| c.to_laurent()).collect())
        .collect();
    Ok(S0Result { module, inclusion })
}

/// Generators in R^rank of the pullback of the maximal Artinian submodule:
/// the s-saturation of the dimension-zero saturation. Membership of an
/// element v of A^rank in the submodule (mod im P) is normal-form zero
/// against a Gröbner basis of these generators.
pub fn s0_pullback_gens(m: &FPModule) -> Result<Vec<FreeElem>> {
    let nvars = m.nvars();
    let Some(p) = run_pipeline(m)? else {
        // the pullback of the zero submodule is im(P), saturated at s
        let pres_cols = columns_from_fp(m)?;
        let s = MPoly::all_vars_product(nvars);
        return Ok(saturate_module(&pres_cols, m.rank(), nvars, &[s]));
    };
    let s = MPoly::all_vars_product(nvars);
    Ok(saturate_module(&p.sat, p.rank, p.nvars, &[s]))
}

/// Brute-force membership filter: the element of M = coker(P) represented
/// by v lies in the maximal Artinian submodule of M[s^{-1}] exactly when
/// the annihilator of v, saturated at s, is the unit ideal (v dies after
/// inverting s) or zero dimensional.
pub fn finite_support_element(m: &FPModule, v: &FreeElem) -> Result<bool> {
    let nvars = m.nvars();
    let rank = m.rank();
    let pres_cols = columns_from_fp(m)?;
    let ann = colon_elem_ideal(&pres_cols, rank, nvars, v);
    let s = MPoly::all_vars_product(nvars);
    let ann_sat = saturate_ideal(&ann, &[s], nvars);
    if ideal_contains_one(&ann_sat, nvars) {
        return Ok(true);
    }
    Ok(krull_dim(&ann_sat, nvars) <= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::PolyMatrix;
    use crate::ring::rat;

    fn t1m1() -> LaurentPoly {
        &LaurentPoly::var(2, 0) - &LaurentPoly::one(2)
    }

    fn t2m1() -> LaurentPoly {
        &LaurentPoly::var(2, 1) - &LaurentPoly::one(2)
    }

    #[test]
    fn point_module_is_its_own_artinian_part() {
        // A/(t1 - 1, t2 - 1)
        let m = FPModule::cyclic(2, &[t1m1(), t2m1()]).unwrap();
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert_eq!(s0.module.qdim(), 1);
        assert!(s0.module.t_ops()[0].is_identity());
        assert!(s0.module.t_ops()[1].is_identity());
    }

    #[test]
    fn hypersurface_module_has_no_artinian_part() {
        // A/(t1 - 1) over two variables: every nonzero element has
        // one-dimensional support
        let m = FPModule::cyclic(2, &[t1m1()]).unwrap();
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert_eq!(s0.module.qdim(), 0);
    }

    #[test]
    fn direct_sum_picks_out_the_point_part() {
        // A ⊕ A/(t1 - 1, t2 - 2)
        let two = LaurentPoly::constant(2, rat(2));
        let summand = FPModule::cyclic(2, &[t1m1(), &LaurentPoly::var(2, 1) - &two]).unwrap();
        let m = FPModule::free(2, 1).direct_sum(&summand).unwrap();
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert_eq!(s0.module.qdim(), 1);
        assert!(s0.module.t_ops()[0].is_identity());
        assert_eq!(s0.module.t_ops()[1][(0, 0)], rat(2));
    }

    #[test]
    fn free_module_has_no_artinian_part() {
        let m = FPModule::free(2, 2);
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert!(s0.module.is_zero());
    }

    #[test]
    fn membership_filter_agrees_on_generators() {
        let two = LaurentPoly::constant(2, rat(2));
        let summand = FPModule::cyclic(2, &[t1m1(), &LaurentPoly::var(2, 1) - &two]).unwrap();
        let m = FPModule::free(2, 1).direct_sum(&summand).unwrap();
        // e1 (free part) is not finite support; e2 (point part) is
        let e1 = FreeElem::std_basis(2, 2, 0);
        let e2 = FreeElem::std_basis(2, 2, 1);
        assert!(!finite_support_element(&m, &e1).unwrap());
        assert!(finite_support_element(&m, &e2).unwrap());
        // and the pullback submodule sees exactly the same thing
        let pullback = s0_pullback_gens(&m).unwrap();
        let gb = buchberger(&pullback, MonomialOrder::MODULE);
        assert!(!gb.contains(&e1));
        assert!(gb.contains(&e2));
    }

    #[test]
    fn zero_dim_module_with_nilpotents() {
        // A/((t1-1)^2, t2-1): qdim 2, t1 acts unipotently
        let sq = &t1m1() * &t1m1();
        let m = FPModule::cyclic(2, &[sq, t2m1()]).unwrap();
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert_eq!(s0.module.qdim(), 2);
        let t1 = &s0.module.t_ops()[0];
        let id = QMatrix::identity(2);
        let n = t1 - &id;
        assert!(!n.is_zero());
        assert!((&n * &n).is_zero());
        assert!(s0.module.t_ops()[1].is_identity());
    }

    #[test]
    fn laurent_presentation_with_negative_exponents() {
        // relation written with negative exponents: t1^{-1}(t1 - 1) etc.
        let rel1 = t1m1().mul_monomial(&[-1, 0]).unwrap();
        let rel2 = t2m1().mul_monomial(&[0, -2]).unwrap();
        let m = FPModule::cyclic(2, &[rel1, rel2]).unwrap();
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert_eq!(s0.module.qdim(), 1);
        assert!(s0.module.t_ops()[0].is_identity());
        assert!(s0.module.t_ops()[1].is_identity());
    }

    #[test]
    fn pipeline_zero_for_rank_zero() {
        let m = FPModule::new(2, 0, PolyMatrix::zeros(2, 0, 0)).unwrap();
        let s0 = maximal_artinian_submodule(&m).unwrap();
        assert!(s0.module.is_zero());
    }
}

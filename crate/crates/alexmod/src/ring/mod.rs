//! Exact arithmetic in the Laurent polynomial ring Q[t_1^{±1}, ..., t_n^{±1}]
//! and univariate factor-structure utilities (unit normal forms, squarefree
//! decomposition, root-of-unity detection).

mod laurent;
mod univariate;

pub use laurent::{rat, ratio, LaurentPoly, Rat};
pub use univariate::{
    core_degree, cyclotomic_part, normalize_unit, yun_squarefree, CyclotomicSplit, QPoly,
    UnitNormalForm,
};

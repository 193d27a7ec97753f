//! Verdict layer: quasi-unipotence with its minimal power, Jordan
//! profiles, semisimplicity, and the quantitative checks (vanishing
//! ranges, Jordan-block bounds) with a pass / violation / not-applicable
//! trichotomy. Violations on synthetic input are reported, never raised
//! as errors: the quantitative bounds are theorems about algebraic maps
//! and arbitrary simplicial data may fail them legitimately.

use std::collections::BTreeMap;
use std::fmt;

use num::integer::lcm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::QMatrix;
use crate::module::ArtinianModule;
use crate::pid::minimal_polynomial;
use crate::ring::{cyclotomic_part, rat, yun_squarefree, QPoly};

/// Seed for the randomized semisimplicity trials; fixed so verdicts are
/// reproducible run to run.
const SEMISIMPLE_TRIAL_SEED: u64 = 0x5EED_0001;

/// Geometric bookkeeping for the quantitative checks: torus dimension,
/// generic fiber dimension, a user-asserted smoothness flag, and the
/// cohomological degree under scrutiny. Smoothness of the generic fiber
/// cannot be inferred from the inputs and is trusted as given.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeometryContext {
    pub n: usize,
    pub d: usize,
    pub smooth_fiber: bool,
    pub degree: usize,
}

impl GeometryContext {
    pub fn new(n: usize, d: usize) -> Self {
        GeometryContext {
            n,
            d,
            smooth_fiber: false,
            degree: 0,
        }
    }

    pub fn smooth(mut self) -> Self {
        self.smooth_fiber = true;
        self
    }

    pub fn at_degree(mut self, i: usize) -> Self {
        self.degree = i;
        self
    }
}

/// Jordan-structure summary of a monodromy operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanProfile {
    pub quasi_unipotent: bool,
    /// least positive N with the N-th power unipotent
    pub order: Option<u64>,
    /// least m with (sigma^N - 1)^m = 0
    pub nilpotence_index: Option<usize>,
    /// squarefree layers of the minimal polynomial with multiplicities
    pub layers: Vec<(QPoly, usize)>,
}

/// Product of t-operators prescribed by the word (identity for the empty
/// word), then: quasi-unipotent iff the root-of-unity part exhausts the
/// squarefree part of the characteristic polynomial. The returned N is
/// the lcm of the detected cyclotomic orders, minimal by construction of
/// the gcd strip.
pub fn is_quasi_unipotent(m: &ArtinianModule, word: &[i64]) -> Result<(bool, Option<u64>)> {
    if m.qdim() == 0 {
        return Ok((true, Some(1)));
    }
    let sigma = m.monodromy_word(word)?;
    let char = sigma.char_poly();
    let sf = char.div_rem(&char.gcd(&char.derivative())).0.monic();
    let split = cyclotomic_part(&sf)?;
    if split.remainder.degree() != Some(0) {
        return Ok((false, None));
    }
    let n = split.orders.iter().fold(1u64, |a, &b| lcm(a, b as u64));
    Ok((true, Some(n.max(1))))
}

/// Full Jordan profile: exact matrix powering for the nilpotence index,
/// squarefree layers from the Yun decomposition of the minimal
/// polynomial.
pub fn jordan_profile(m: &ArtinianModule, word: &[i64]) -> Result<JordanProfile> {
    let (qu, order) = is_quasi_unipotent(m, word)?;
    if !qu {
        return Ok(JordanProfile {
            quasi_unipotent: false,
            order: None,
            nilpotence_index: None,
            layers: vec![],
        });
    }
    let n = order.unwrap();
    if m.qdim() == 0 {
        return Ok(JordanProfile {
            quasi_unipotent: true,
            order: Some(1),
            nilpotence_index: Some(0),
            layers: vec![],
        });
    }
    let sigma = m.monodromy_word(word)?;
    let power = sigma.pow(n);
    let nilpotent = &power - &QMatrix::identity(m.qdim());
    let mut idx = 0;
    let mut acc = QMatrix::identity(m.qdim());
    while !acc.is_zero() {
        acc = &acc * &nilpotent;
        idx += 1;
        if acc.is_zero() {
            break;
        }
        assert!(idx <= m.qdim(), "nilpotence must terminate for unipotent powers");
    }
    let nil = if (&QMatrix::identity(m.qdim()) - &power).is_zero() {
        1
    } else {
        idx
    };
    let minimal = minimal_polynomial(&sigma)?;
    let layers = yun_squarefree(&minimal)?;
    Ok(JordanProfile {
        quasi_unipotent: true,
        order: Some(n),
        nilpotence_index: Some(nil),
        layers,
    })
}

/// Semisimplicity of the module: squarefree minimal polynomial of t for
/// one variable; for several variables every t_i must have squarefree
/// minimal polynomial and, as a randomized sufficiency check, so must a
/// handful of seeded random Q-linear combinations of the operators.
pub fn is_semisimple(m: &ArtinianModule) -> Result<bool> {
    if m.qdim() == 0 {
        return Ok(true);
    }
    for t in m.t_ops() {
        if !minimal_polynomial(t)?.is_squarefree() {
            return Ok(false);
        }
    }
    if m.nvars() >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(SEMISIMPLE_TRIAL_SEED);
        for _ in 0..5 {
            let mut combo = QMatrix::zeros(m.qdim(), m.qdim());
            for t in m.t_ops() {
                let c = rat(rng.gen_range(1..=100));
                combo = &combo + &t.scale(&c);
            }
            if !minimal_polynomial(&combo)?.is_squarefree() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Violation,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Violation => write!(f, "violation"),
            CheckStatus::NotApplicable => write!(f, "na"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckItem>,
}

impl Report {
    pub fn push(&mut self, item: CheckItem) {
        self.checks.push(item);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn has_violation(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.status == CheckStatus::Violation)
    }

    /// Line-oriented text rendering, one check per line, stable order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}: {} (expected {}, observed {})\n",
                c.name, c.status, c.expected, c.observed
            ));
        }
        out
    }
}

/// Flag any degree with a nonzero module outside [n, n + 2d].
pub fn check_vanishing_range(
    results: &BTreeMap<usize, ArtinianModule>,
    ctx: &GeometryContext,
) -> Report {
    let lo = ctx.n;
    let hi = ctx.n + 2 * ctx.d;
    let mut report = Report::default();
    for (&i, module) in results {
        let inside = i >= lo && i <= hi;
        let status = if inside || module.qdim() == 0 {
            CheckStatus::Pass
        } else {
            CheckStatus::Violation
        };
        report.push(CheckItem {
            name: format!("vanishing_range[{}]", i),
            status,
            expected: format!("qdim = 0 outside degrees {}..={}", lo, hi),
            observed: format!("qdim = {} in degree {}", module.qdim(), i),
        });
    }
    report
}

/// Jordan block bound at the context degree: the nilpotence index of the
/// unipotent part may not exceed 1 + min(i - n, 2d - i + n), or with a
/// smooth generic fiber min(ceil((i - n + 1) / 2), d - floor((i - n - 1) / 2)).
pub fn check_jordan_bound(profile: &JordanProfile, ctx: &GeometryContext) -> CheckItem {
    let name = format!("jordan_bound[{}]", ctx.degree);
    if !profile.quasi_unipotent {
        return CheckItem {
            name,
            status: CheckStatus::NotApplicable,
            expected: "quasi-unipotent action".into(),
            observed: "action is not quasi-unipotent".into(),
        };
    }
    let i = ctx.degree as i64;
    let n = ctx.n as i64;
    let d = ctx.d as i64;
    let bound = if ctx.smooth_fiber {
        // ceil((i - n + 1) / 2) and floor((i - n - 1) / 2), exact for
        // negative arguments too
        let ceil_half = (i - n + 2).div_euclid(2);
        let floor_half = (i - n - 1).div_euclid(2);
        ceil_half.min(d - floor_half)
    } else {
        1 + (i - n).min(2 * d - i + n)
    };
    let observed = profile.nilpotence_index.unwrap_or(0) as i64;
    let status = if observed <= bound {
        CheckStatus::Pass
    } else {
        CheckStatus::Violation
    };
    CheckItem {
        name,
        status,
        expected: format!("nilpotence index <= {}", bound),
        observed: format!("nilpotence index = {}", observed),
    }
}

/// Combined report over a map degree -> module: vanishing range plus, for
/// each degree with a nonzero module, quasi-unipotence data, the Jordan
/// bound, and the semisimplicity verdict as informational lines.
pub fn check_all(
    results: &BTreeMap<usize, ArtinianModule>,
    ctx: &GeometryContext,
    word: &[i64],
) -> Result<Report> {
    let mut report = check_vanishing_range(results, ctx);
    for (&i, module) in results {
        if module.qdim() == 0 {
            continue;
        }
        let profile = jordan_profile(module, word)?;
        let local = ctx.at_degree(i);
        report.push(CheckItem {
            name: format!("quasi_unipotent[{}]", i),
            status: if profile.quasi_unipotent {
                CheckStatus::Pass
            } else {
                CheckStatus::Violation
            },
            expected: "monodromy quasi-unipotent".into(),
            observed: match profile.order {
                Some(n) => format!("unipotent at power N = {}", n),
                None => "no unipotent power".into(),
            },
        });
        report.push(check_jordan_bound(&profile, &local));
        let ss = is_semisimple(module)?;
        report.push(CheckItem {
            name: format!("semisimple[{}]", i),
            status: CheckStatus::Pass,
            expected: "informational".into(),
            observed: if ss { "semisimple".into() } else { "not semisimple".into() },
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{FPModule, InvariantFactorDecomposition};
    use crate::pid::{torsion_from_factors, torsion_summary};
    use crate::ring::LaurentPoly;

    fn tm1() -> LaurentPoly {
        &LaurentPoly::var(1, 0) - &LaurentPoly::one(1)
    }

    fn module_of(factors: &[QPoly]) -> ArtinianModule {
        torsion_from_factors(&InvariantFactorDecomposition {
            free_rank: 0,
            factors: factors.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn unipotent_square() {
        // A/((t-1)^2): quasi-unipotent with N = 1
        let m = module_of(&[QPoly::from_i64(&[1, -2, 1])]);
        let (qu, n) = is_quasi_unipotent(&m, &[1]).unwrap();
        assert!(qu);
        assert_eq!(n, Some(1));
        let p = jordan_profile(&m, &[1]).unwrap();
        assert_eq!(p.nilpotence_index, Some(2));
        assert_eq!(p.layers, vec![(QPoly::from_i64(&[-1, 1]), 2)]);
        assert!(!is_semisimple(&m).unwrap());
    }

    #[test]
    fn non_quasi_unipotent_scalar() {
        let m = module_of(&[QPoly::from_i64(&[-2, 1])]);
        let (qu, n) = is_quasi_unipotent(&m, &[1]).unwrap();
        assert!(!qu);
        assert!(n.is_none());
        assert!(is_semisimple(&m).unwrap());
    }

    #[test]
    fn cube_roots_of_unity() {
        let m = module_of(&[QPoly::from_i64(&[1, 1, 1])]);
        let (qu, n) = is_quasi_unipotent(&m, &[1]).unwrap();
        assert!(qu);
        assert_eq!(n, Some(3));
        let p = jordan_profile(&m, &[1]).unwrap();
        assert_eq!(p.nilpotence_index, Some(1));
        assert!(is_semisimple(&m).unwrap());
    }

    #[test]
    fn fourth_roots_squared() {
        // A/((t^2+1)^2): N = 4, nilpotence index 2
        let sq = &QPoly::from_i64(&[1, 0, 1]) * &QPoly::from_i64(&[1, 0, 1]);
        let m = module_of(&[sq]);
        let p = jordan_profile(&m, &[1]).unwrap();
        assert!(p.quasi_unipotent);
        assert_eq!(p.order, Some(4));
        assert_eq!(p.nilpotence_index, Some(2));
    }

    #[test]
    fn semisimple_squarefree_product() {
        let m = module_of(&[&QPoly::from_i64(&[-1, 1]) * &QPoly::from_i64(&[-2, 1])]);
        assert!(is_semisimple(&m).unwrap());
        let fp = FPModule::cyclic(1, &[tm1()])
            .unwrap()
            .direct_sum(&FPModule::cyclic(1, &[tm1()]).unwrap())
            .unwrap();
        let identity_action = torsion_summary(&fp).unwrap();
        assert!(is_semisimple(&identity_action).unwrap());
        let p = jordan_profile(&identity_action, &[1]).unwrap();
        assert_eq!(p.nilpotence_index, Some(1));
    }

    #[test]
    fn verdicts_invariant_under_inversion() {
        for factors in [
            vec![QPoly::from_i64(&[1, -2, 1])],
            vec![QPoly::from_i64(&[1, 1, 1])],
            vec![QPoly::from_i64(&[-2, 1])],
        ] {
            let m = module_of(&factors);
            let inv = m.inverted().unwrap();
            assert_eq!(
                is_quasi_unipotent(&m, &[1]).unwrap(),
                is_quasi_unipotent(&inv, &[1]).unwrap()
            );
            assert_eq!(is_semisimple(&m).unwrap(), is_semisimple(&inv).unwrap());
            let pm = jordan_profile(&m, &[1]).unwrap();
            let pi = jordan_profile(&inv, &[1]).unwrap();
            assert_eq!(pm.nilpotence_index, pi.nilpotence_index);
            assert_eq!(pm.order, pi.order);
        }
    }

    #[test]
    fn quasi_unipotence_matrix_oracle() {
        // independent check: sigma^N - I is nilpotent by exact powering
        for factors in [
            vec![QPoly::from_i64(&[1, -2, 1])],
            vec![QPoly::from_i64(&[1, 1, 1]), &QPoly::from_i64(&[1, 1, 1]) * &QPoly::from_i64(&[-1, 1])],
        ] {
            let m = module_of(&factors);
            let (qu, n) = is_quasi_unipotent(&m, &[1]).unwrap();
            assert!(qu);
            let sigma = m.monodromy_word(&[1]).unwrap();
            let nilpotent = &sigma.pow(n.unwrap()) - &QMatrix::identity(m.qdim());
            assert!(nilpotent.pow(m.qdim() as u64).is_zero());
        }
    }

    #[test]
    fn vanishing_range_flags_out_of_range() {
        let mut results = BTreeMap::new();
        results.insert(0usize, module_of(&[QPoly::from_i64(&[-1, 1])]));
        results.insert(1usize, module_of(&[QPoly::from_i64(&[-1, 1])]));
        let ctx = GeometryContext::new(1, 0);
        let report = check_vanishing_range(&results, &ctx);
        assert_eq!(report.checks[0].status, CheckStatus::Violation);
        assert_eq!(report.checks[1].status, CheckStatus::Pass);
        assert!(report.has_violation());
    }

    #[test]
    fn jordan_bound_formulas() {
        // general: i = 2, n = 1, d = 1 gives 1 + min(1, 1) = 2
        let m = module_of(&[QPoly::from_i64(&[1, -2, 1])]);
        let profile = jordan_profile(&m, &[1]).unwrap();
        let ctx = GeometryContext::new(1, 1).at_degree(2);
        let item = check_jordan_bound(&profile, &ctx);
        assert_eq!(item.status, CheckStatus::Pass);
        assert!(item.expected.contains("<= 2"));
        // at i = n the bound is 1, so index 2 violates
        let ctx0 = GeometryContext::new(1, 1).at_degree(1);
        let item0 = check_jordan_bound(&profile, &ctx0);
        assert_eq!(item0.status, CheckStatus::Violation);
        // smooth-fiber refinement: i = 2, n = 1, d = 1 gives min(1, 1) = 1
        let ctxs = GeometryContext::new(1, 1).smooth().at_degree(2);
        let items = check_jordan_bound(&profile, &ctxs);
        assert!(items.expected.contains("<= 1"));
        assert_eq!(items.status, CheckStatus::Violation);
    }

    #[test]
    fn report_text_is_line_oriented() {
        let mut results = BTreeMap::new();
        results.insert(1usize, module_of(&[QPoly::from_i64(&[-1, 1])]));
        let ctx = GeometryContext::new(1, 0);
        let report = check_all(&results, &ctx, &[1]).unwrap();
        let text = report.to_text();
        assert!(text.lines().count() >= 3);
        assert!(text.contains("vanishing_range[1]: pass"));
    }
}

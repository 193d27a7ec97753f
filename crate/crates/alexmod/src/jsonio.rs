//! JSON encodings of the library's types. Integers inside Laurent
//! polynomial terms are decimal strings so arbitrary precision survives
//! the trip; rational matrix entries are plain JSON integers when they
//! fit and "p/q" strings otherwise.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fibration::FibrationModel;
use crate::linalg::QMatrix;
use crate::mellin::LocalSystem;
use crate::module::{ArtinianModule, FPModule, InvariantFactorDecomposition, PolyMatrix};
use crate::report::{GeometryContext, Report};
use crate::ring::{LaurentPoly, QPoly, Rat};
use crate::topology::{SimplicialComplex, TorusCocycle};

fn input_err(msg: impl Into<String>) -> Error {
    Error::input(msg.into())
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| input_err(format!("{} must be a nonnegative integer", what)))
}

fn as_i64(v: &Value, what: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| input_err(format!("{} must be an integer", what)))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| input_err(format!("{} must be an array", what)))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| input_err(format!("{} must be an object", what)))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| input_err(format!("missing field \"{}\"", key)))
}

fn bigint_from_value(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::String(s) => {
            BigInt::from_str(s).map_err(|_| input_err(format!("{} is not an integer: {}", what, s)))
        }
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| input_err(format!("{} must be an integer", what))),
        _ => Err(input_err(format!("{} must be a decimal string", what))),
    }
}

// ---- rational scalars ----

pub fn rat_to_value(r: &Rat) -> Value {
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer().clone()) {
            return json!(i);
        }
        return json!(r.numer().to_string());
    }
    json!(format!("{}/{}", r.numer(), r.denom()))
}

pub fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| input_err("rational entries must be integers or \"p/q\" strings"))?;
            Ok(Rat::from_integer(BigInt::from(i)))
        }
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a, b),
                None => (s.as_str(), "1"),
            };
            let n = BigInt::from_str(num.trim())
                .map_err(|_| input_err(format!("bad rational numerator: {}", s)))?;
            let d = BigInt::from_str(den.trim())
                .map_err(|_| input_err(format!("bad rational denominator: {}", s)))?;
            if d.is_zero() {
                return Err(input_err("zero denominator"));
            }
            Ok(Rat::new(n, d))
        }
        _ => Err(input_err("rational entries must be integers or \"p/q\" strings")),
    }
}

// ---- Laurent polynomials ----

pub fn laurent_to_value(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            json!({
                "exps": e,
                "num": c.numer().to_string(),
                "den": c.denom().to_string(),
            })
        })
        .collect();
    json!({ "nvars": p.nvars(), "terms": terms })
}

pub fn laurent_from_value(v: &Value) -> Result<LaurentPoly> {
    let obj = as_object(v, "laurent polynomial")?;
    let nvars = as_usize(field(obj, "nvars")?, "nvars")?;
    if nvars == 0 {
        return Err(input_err("nvars must be at least 1"));
    }
    let mut p = LaurentPoly::zero(nvars);
    for t in as_array(field(obj, "terms")?, "terms")? {
        let tobj = as_object(t, "term")?;
        let exps_v = as_array(field(tobj, "exps")?, "exps")?;
        if exps_v.len() != nvars {
            return Err(input_err("exponent vector length differs from nvars"));
        }
        let mut exps = Vec::with_capacity(nvars);
        for e in exps_v {
            exps.push(as_i64(e, "exponent")?);
        }
        let num = bigint_from_value(field(tobj, "num")?, "num")?;
        let den = bigint_from_value(field(tobj, "den")?, "den")?;
        if den.is_zero() {
            return Err(input_err("zero denominator"));
        }
        p = p.try_add(&LaurentPoly::monomial(nvars, exps, Rat::new(num, den)))?;
    }
    Ok(p)
}

pub fn qpoly_to_value(p: &QPoly) -> Value {
    laurent_to_value(&p.to_laurent())
}

pub fn qpoly_from_value(v: &Value) -> Result<QPoly> {
    QPoly::from_laurent(&laurent_from_value(v)?)
}

// ---- matrices ----

pub fn poly_matrix_to_value(m: &PolyMatrix) -> Value {
    let rows: Vec<Value> = (0..m.nrows())
        .map(|i| {
            Value::Array(
                (0..m.ncols())
                    .map(|j| laurent_to_value(&m[(i, j)]))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn poly_matrix_from_value(v: &Value, nvars: usize) -> Result<PolyMatrix> {
    let rows_v = as_array(v, "matrix")?;
    let mut rows = vec![];
    for r in rows_v {
        let row_v = as_array(r, "matrix row")?;
        let mut row = vec![];
        for e in row_v {
            row.push(laurent_from_value(e)?);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(PolyMatrix::zeros(nvars, 0, 0));
    }
    PolyMatrix::from_rows(nvars, rows)
}

pub fn qmatrix_to_value(m: &QMatrix) -> Value {
    let rows: Vec<Value> = (0..m.nrows())
        .map(|i| Value::Array((0..m.ncols()).map(|j| rat_to_value(&m[(i, j)])).collect()))
        .collect();
    Value::Array(rows)
}

pub fn qmatrix_from_value(v: &Value) -> Result<QMatrix> {
    let rows_v = as_array(v, "matrix")?;
    let mut rows = vec![];
    for r in rows_v {
        let row_v = as_array(r, "matrix row")?;
        let mut row = vec![];
        for e in row_v {
            row.push(rat_from_value(e)?);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(QMatrix::zeros(0, 0));
    }
    let c = rows[0].len();
    if rows.iter().any(|r| r.len() != c) {
        return Err(input_err("ragged matrix rows"));
    }
    Ok(QMatrix::from_rows(rows))
}

// ---- modules ----

pub fn fp_module_to_value(m: &FPModule) -> Value {
    json!({
        "nvars": m.nvars(),
        "rank": m.rank(),
        "presentation": poly_matrix_to_value(m.presentation()),
    })
}

pub fn fp_module_from_value(v: &Value) -> Result<FPModule> {
    let obj = as_object(v, "module")?;
    let nvars = as_usize(field(obj, "nvars")?, "nvars")?;
    let rank = as_usize(field(obj, "rank")?, "rank")?;
    let pres_v = field(obj, "presentation")?;
    let pres = poly_matrix_from_value(pres_v, nvars)?;
    let pres = if pres.nrows() == 0 && rank > 0 {
        PolyMatrix::zeros(nvars, rank, 0)
    } else {
        pres
    };
    FPModule::new(nvars, rank, pres)
}

pub fn decomposition_to_value(d: &InvariantFactorDecomposition) -> Value {
    json!({
        "free_rank": d.free_rank,
        "factors": d.factors.iter().map(qpoly_to_value).collect::<Vec<_>>(),
    })
}

pub fn artinian_to_value(m: &ArtinianModule) -> Value {
    json!({
        "qdim": m.qdim(),
        "t_ops": m.t_ops().iter().map(qmatrix_to_value).collect::<Vec<_>>(),
    })
}

pub fn artinian_from_value(v: &Value) -> Result<ArtinianModule> {
    let obj = as_object(v, "artinian module")?;
    let qdim = as_usize(field(obj, "qdim")?, "qdim")?;
    let ops_v = as_array(field(obj, "t_ops")?, "t_ops")?;
    if ops_v.is_empty() {
        return Err(input_err("t_ops must list at least one operator"));
    }
    let mut ops = vec![];
    for o in ops_v {
        let m = qmatrix_from_value(o)?;
        if m.nrows() == 0 && qdim > 0 {
            return Err(input_err("operator size differs from qdim"));
        }
        let m = if qdim == 0 { QMatrix::zeros(0, 0) } else { m };
        if m.nrows() != qdim {
            return Err(input_err("operator size differs from qdim"));
        }
        ops.push(m);
    }
    ArtinianModule::new(ops_v.len(), ops)
}

// ---- simplicial input ----

pub fn complex_to_value(k: &SimplicialComplex, w: &TorusCocycle) -> Value {
    let simplices: Vec<Value> = k.all_simplices().map(|s| json!(s)).collect();
    let edges: Vec<Value> = k
        .edges()
        .iter()
        .map(|e| {
            let val = w.value(e[0], e[1]).map(|v| v.clone()).unwrap_or_default();
            json!({ "edge": [e[0], e[1]], "value": val })
        })
        .collect();
    json!({
        "vertices": k.num_vertices(),
        "simplices": simplices,
        "cocycle": { "n": w.n(), "edges": edges },
    })
}

pub fn complex_from_value(v: &Value) -> Result<(SimplicialComplex, TorusCocycle)> {
    let obj = as_object(v, "complex input")?;
    let vertices = as_usize(field(obj, "vertices")?, "vertices")?;
    let mut simplices = vec![];
    for s in as_array(field(obj, "simplices")?, "simplices")? {
        let mut simplex = vec![];
        for x in as_array(s, "simplex")? {
            simplex.push(as_usize(x, "vertex index")?);
        }
        simplices.push(simplex);
    }
    let complex = SimplicialComplex::new(vertices, &simplices)?;
    let cobj = as_object(field(obj, "cocycle")?, "cocycle")?;
    let n = as_usize(field(cobj, "n")?, "cocycle n")?;
    let mut values = BTreeMap::new();
    for e in as_array(field(cobj, "edges")?, "cocycle edges")? {
        let eobj = as_object(e, "cocycle edge")?;
        let pair = as_array(field(eobj, "edge")?, "edge")?;
        if pair.len() != 2 {
            return Err(input_err("edge must have two endpoints"));
        }
        let i = as_usize(&pair[0], "edge endpoint")?;
        let j = as_usize(&pair[1], "edge endpoint")?;
        let mut value = vec![];
        for x in as_array(field(eobj, "value")?, "edge value")? {
            value.push(as_i64(x, "edge value entry")?);
        }
        values.insert((i, j), value);
    }
    let cocycle = TorusCocycle::new(n, values)?;
    Ok((complex, cocycle))
}

// ---- local systems ----

pub fn local_system_to_value(ls: &LocalSystem) -> Value {
    json!({
        "n": ls.n(),
        "rank": ls.rank(),
        "monodromies": ls.monodromies().iter().map(qmatrix_to_value).collect::<Vec<_>>(),
    })
}

pub fn local_system_from_value(v: &Value) -> Result<LocalSystem> {
    let obj = as_object(v, "local system")?;
    let n = as_usize(field(obj, "n")?, "n")?;
    let mats_v = as_array(field(obj, "monodromies")?, "monodromies")?;
    let mut mats = vec![];
    for m in mats_v {
        mats.push(qmatrix_from_value(m)?);
    }
    if let Some(rank_v) = obj.get("rank") {
        let rank = as_usize(rank_v, "rank")?;
        if mats.iter().any(|m| m.nrows() != rank) {
            return Err(input_err("monodromy size differs from declared rank"));
        }
    }
    LocalSystem::new(n, mats)
}

// ---- fibrations ----

pub fn fibration_from_value(v: &Value) -> Result<FibrationModel> {
    let obj = as_object(v, "fibration")?;
    let n = as_usize(field(obj, "n")?, "n")?;
    let mut generators = vec![];
    for g in as_array(field(obj, "generators")?, "generators")? {
        generators.push(
            g.as_str()
                .ok_or_else(|| input_err("generator names must be strings"))?
                .to_string(),
        );
    }
    let mut images = vec![];
    for img in as_array(field(obj, "images")?, "images")? {
        let mut row = vec![];
        for x in as_array(img, "image")? {
            row.push(as_i64(x, "image entry")?);
        }
        images.push(row);
    }
    let mut kernel_words = vec![];
    for w in as_array(field(obj, "kernel_words")?, "kernel_words")? {
        let mut word = vec![];
        for x in as_array(w, "kernel word")? {
            word.push(as_i64(x, "word letter")?);
        }
        kernel_words.push(word);
    }
    let mut degrees = BTreeMap::new();
    let degrees_obj = as_object(field(obj, "degrees")?, "degrees")?;
    for (key, val) in degrees_obj {
        let deg: usize = key
            .parse()
            .map_err(|_| input_err(format!("bad degree key \"{}\"", key)))?;
        let dobj = as_object(val, "degree entry")?;
        let mut mats = vec![];
        for m in as_array(field(dobj, "matrices")?, "matrices")? {
            mats.push(qmatrix_from_value(m)?);
        }
        degrees.insert(deg, mats);
    }
    let mut fiber_betti = vec![];
    for b in as_array(field(obj, "fiber_betti")?, "fiber_betti")? {
        fiber_betti.push(as_usize(b, "betti number")?);
    }
    FibrationModel::new(n, generators, images, kernel_words, degrees, fiber_betti)
}

// ---- reports and contexts ----

pub fn report_to_value(r: &Report, context: Value) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "status": c.status.to_string(),
                "expected": c.expected,
                "observed": c.observed,
            })
        })
        .collect();
    json!({ "checks": checks, "context": context })
}

/// Context JSON: {"n": .., "d": .., "smooth_fiber": bool, "word": [..]}
/// with smooth_fiber and word optional.
pub fn context_from_value(v: &Value) -> Result<(GeometryContext, Vec<i64>)> {
    let obj = as_object(v, "context")?;
    let n = as_usize(field(obj, "n")?, "n")?;
    let d = as_usize(field(obj, "d")?, "d")?;
    let mut ctx = GeometryContext::new(n, d);
    if let Some(s) = obj.get("smooth_fiber") {
        if s.as_bool()
            .ok_or_else(|| input_err("smooth_fiber must be a boolean"))?
        {
            ctx = ctx.smooth();
        }
    }
    let word = match obj.get("word") {
        None => vec![1],
        Some(w) => {
            let mut word = vec![];
            for x in as_array(w, "word")? {
                word.push(as_i64(x, "word letter")?);
            }
            word
        }
    };
    Ok((ctx, word))
}

pub fn context_to_value(ctx: &GeometryContext, word: &[i64]) -> Value {
    json!({
        "n": ctx.n,
        "d": ctx.d,
        "smooth_fiber": ctx.smooth_fiber,
        "word": word,
    })
}

/// Results bundle for the check subcommand: {"modules": {"<degree>": artinian}}.
pub fn results_from_value(v: &Value) -> Result<BTreeMap<usize, ArtinianModule>> {
    let obj = as_object(v, "results")?;
    let mods = as_object(field(obj, "modules")?, "modules")?;
    let mut out = BTreeMap::new();
    for (key, val) in mods {
        let deg: usize = key
            .parse()
            .map_err(|_| input_err(format!("bad degree key \"{}\"", key)))?;
        out.insert(deg, artinian_from_value(val)?);
    }
    Ok(out)
}

pub fn results_to_value(results: &BTreeMap<usize, ArtinianModule>) -> Value {
    let mut mods = Map::new();
    for (deg, m) in results {
        mods.insert(deg.to_string(), artinian_to_value(m));
    }
    json!({ "modules": Value::Object(mods) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    #[test]
    fn laurent_roundtrip() {
        let p = &LaurentPoly::monomial(2, vec![-1, 3], ratio(22, 7))
            + &LaurentPoly::constant(2, rat(-5));
        let v = laurent_to_value(&p);
        assert_eq!(laurent_from_value(&v).unwrap(), p);
        // decimal strings survive beyond i64
        let big = LaurentPoly::constant(
            1,
            Rat::new(
                BigInt::from_str("123456789012345678901234567890").unwrap(),
                BigInt::from(7),
            ),
        );
        let v = laurent_to_value(&big);
        assert_eq!(laurent_from_value(&v).unwrap(), big);
    }

    #[test]
    fn rational_scalar_forms() {
        assert_eq!(rat_to_value(&rat(3)), json!(3));
        assert_eq!(rat_to_value(&ratio(1, 2)), json!("1/2"));
        assert_eq!(rat_from_value(&json!(-4)).unwrap(), rat(-4));
        assert_eq!(rat_from_value(&json!("3/6")).unwrap(), ratio(1, 2));
        assert_eq!(rat_from_value(&json!("7")).unwrap(), rat(7));
        assert!(rat_from_value(&json!(1.5)).is_err());
        assert!(rat_from_value(&json!("1/0")).is_err());
    }

    #[test]
    fn artinian_roundtrip() {
        let m = ArtinianModule::new(
            2,
            vec![
                QMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]),
                QMatrix::from_i64_rows(&[&[2, 0], &[0, 2]]),
            ],
        )
        .unwrap();
        let v = artinian_to_value(&m);
        let back = artinian_from_value(&v).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn complex_roundtrip() {
        let (k, w) = crate::topology::models::wedge_two_circles(&[1], &[0]).unwrap();
        let v = complex_to_value(&k, &w);
        let (k2, w2) = complex_from_value(&v).unwrap();
        assert_eq!(k, k2);
        assert_eq!(w, w2);
    }

    #[test]
    fn fp_module_roundtrip() {
        let t = LaurentPoly::var(1, 0);
        let m = FPModule::cyclic(1, &[&t - &LaurentPoly::one(1)]).unwrap();
        let v = fp_module_to_value(&m);
        assert_eq!(fp_module_from_value(&v).unwrap(), m);
    }

    #[test]
    fn context_defaults() {
        let (ctx, word) = context_from_value(&json!({"n": 1, "d": 1})).unwrap();
        assert_eq!(ctx.n, 1);
        assert_eq!(ctx.d, 1);
        assert!(!ctx.smooth_fiber);
        assert_eq!(word, vec![1]);
    }
}

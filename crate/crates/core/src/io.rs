//! JSON file formats for algebras, coalgebras, Poisson algebras, co-flag
//! data, Hochschild systems and matrices.
//!
//! Entity files look like
//! `{"field":{"kind":"Fp","p":5},"dim":2,"basis":[..],"unit":[..],"mult":[[i,j,k,"c"],..]}`
//! with optional `"bracket"` (same sparse layout) or `"comult"`/`"counit"`
//! replacing `"unit"`/`"mult"`. Scalars are `"a/b"` strings over Q and
//! integers over F_p; both spellings are accepted on input.

use serde_json::{json, Map, Value};

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::coflag::CoflagDatum;
use crate::hochschild::HochschildSystem;
use crate::linalg::Matrix;
use crate::poisson::{PoissonAlgebra, PoissonCoflagDatum};
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub enum Entity {
    Algebra(Algebra),
    Poisson(PoissonAlgebra),
    Coalgebra(Coalgebra),
}

impl Entity {
    pub fn field(&self) -> Field {
        match self {
            Entity::Algebra(a) => a.field,
            Entity::Poisson(p) => p.field(),
            Entity::Coalgebra(c) => c.field,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Entity::Algebra(_) => "algebra",
            Entity::Poisson(_) => "poisson",
            Entity::Coalgebra(_) => "coalgebra",
        }
    }
}

/// Parsed value plus the non-fatal notes (unreduced scalars) met on the way.
#[derive(Clone, Debug)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Scalar reader that records normalization warnings.
struct Reader {
    field: Field,
    warnings: Vec<String>,
}

impl Reader {
    fn scalar(&mut self, v: &Value, at: &str) -> Result<Scalar> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
            _ => return Err(perr(format!("{at}: expected a scalar, got {v}"))),
        };
        let (s, changed) = self
            .field
            .parse_scalar(&text)
            .map_err(|e| perr(format!("{at}: {e}")))?;
        if changed {
            self.warnings
                .push(format!("{at}: `{text}` normalized to {s}"));
        }
        Ok(s)
    }

    fn vector(&mut self, v: &Value, len: usize, at: &str) -> Result<Vec<Scalar>> {
        let items = v
            .as_array()
            .ok_or_else(|| perr(format!("{at}: expected an array")))?;
        if items.len() != len {
            return Err(perr(format!(
                "{at}: expected {len} entries, got {}",
                items.len()
            )));
        }
        items
            .iter()
            .enumerate()
            .map(|(i, x)| self.scalar(x, &format!("{at}[{i}]")))
            .collect()
    }

    /// Dense tensor of shape `dims` from sparse `[i, j, .., "c"]` entries;
    /// repeated positions add up.
    fn sparse(&mut self, v: &Value, dims: &[usize], at: &str) -> Result<Vec<Scalar>> {
        let total: usize = dims.iter().product();
        let mut out = self.field.zeros(total);
        let items = v
            .as_array()
            .ok_or_else(|| perr(format!("{at}: expected an array of entries")))?;
        for (e, item) in items.iter().enumerate() {
            let parts = item
                .as_array()
                .filter(|p| p.len() == dims.len() + 1)
                .ok_or_else(|| {
                    perr(format!(
                        "{at}[{e}]: expected {} indices and a value",
                        dims.len()
                    ))
                })?;
            let mut pos = 0;
            for (idx, (x, &d)) in parts.iter().zip(dims).enumerate() {
                let i = x
                    .as_u64()
                    .map(|i| i as usize)
                    .filter(|&i| i < d)
                    .ok_or_else(|| {
                        perr(format!("{at}[{e}]: index {idx} must be in 0..{d}, got {x}"))
                    })?;
                pos = pos * d + i;
            }
            let c = self.scalar(&parts[dims.len()], &format!("{at}[{e}]"))?;
            out[pos] += &c;
        }
        Ok(out)
    }
}

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rationals => json!({"kind": "Q"}),
        Field::Prime(p) => json!({"kind": "Fp", "p": p}),
    }
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    match v.get("kind").and_then(Value::as_str) {
        Some("Q") => Ok(Field::Rationals),
        Some("Fp") => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| perr("field: Fp needs an integer \"p\""))?;
            Field::prime(p)
        }
        _ => Err(perr(
            "field: expected {\"kind\":\"Q\"} or {\"kind\":\"Fp\",\"p\":<prime>}",
        )),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Residue { value, .. } => json!(value),
        Scalar::Rational(_) => json!(s.to_string()),
    }
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

/// Nonzero entries of a dense tensor of shape `dims`, as `[i, j, .., c]`.
pub fn sparse_to_json(t: &[Scalar], dims: &[usize]) -> Value {
    let mut out = Vec::new();
    for (pos, c) in t.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut idx = vec![0usize; dims.len()];
        let mut rest = pos;
        for (slot, &d) in idx.iter_mut().zip(dims).rev() {
            *slot = rest % d;
            rest /= d;
        }
        let mut entry: Vec<Value> = idx.into_iter().map(|i| json!(i)).collect();
        entry.push(scalar_to_json(c));
        out.push(Value::Array(entry));
    }
    Value::Array(out)
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| vector_to_json(r)).collect())
}

fn header(field: Field, basis: &[String]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("field".into(), field_to_json(field));
    m.insert("dim".into(), json!(basis.len()));
    m.insert("basis".into(), json!(basis));
    m
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let n = a.dim;
    let mut m = header(a.field, &a.basis);
    m.insert("unit".into(), vector_to_json(&a.unit));
    m.insert("mult".into(), sparse_to_json(&a.mult, &[n, n, n]));
    Value::Object(m)
}

pub fn poisson_to_json(p: &PoissonAlgebra) -> Value {
    let n = p.dim();
    let mut v = algebra_to_json(&p.algebra);
    v["bracket"] = sparse_to_json(&p.bracket, &[n, n, n]);
    v
}

pub fn coalgebra_to_json(c: &Coalgebra) -> Value {
    let n = c.dim;
    let mut m = header(c.field, &c.basis);
    m.insert("comult".into(), sparse_to_json(&c.comult, &[n, n, n]));
    m.insert("counit".into(), vector_to_json(&c.counit));
    Value::Object(m)
}

pub fn entity_to_json(e: &Entity) -> Value {
    match e {
        Entity::Algebra(a) => algebra_to_json(a),
        Entity::Poisson(p) => poisson_to_json(p),
        Entity::Coalgebra(c) => coalgebra_to_json(c),
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("Value always serializes");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        perr(format!(
            "malformed JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

/// Reads an entity without running the axiom checks.
pub fn entity_from_json_unchecked(v: &Value) -> Result<Parsed<Entity>> {
    let field = field_from_json(v.get("field").ok_or_else(|| perr("missing \"field\""))?)?;
    let n = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| perr("missing integer \"dim\""))? as usize;
    let basis: Vec<String> = match v.get("basis") {
        None => (0..n).map(|i| format!("e{i}")).collect(),
        Some(b) => b
            .as_array()
            .filter(|b| b.len() == n)
            .and_then(|b| {
                b.iter()
                    .map(|x| x.as_str().map(String::from))
                    .collect::<Option<Vec<_>>>()
            })
            .ok_or_else(|| perr(format!("\"basis\" must be {n} strings")))?,
    };
    let mut r = Reader {
        field,
        warnings: Vec::new(),
    };
    let entity = if let Some(cm) = v.get("comult") {
        if v.get("mult").is_some() {
            return Err(perr(
                "an entity has either \"mult\" or \"comult\", not both",
            ));
        }
        let comult = r.sparse(cm, &[n, n, n], "comult")?;
        let counit = r.vector(
            v.get("counit").ok_or_else(|| perr("missing \"counit\""))?,
            n,
            "counit",
        )?;
        Entity::Coalgebra(Coalgebra::unchecked(field, basis, comult, counit)?)
    } else {
        let unit = r.vector(
            v.get("unit").ok_or_else(|| perr("missing \"unit\""))?,
            n,
            "unit",
        )?;
        let mult = r.sparse(
            v.get("mult").ok_or_else(|| perr("missing \"mult\""))?,
            &[n, n, n],
            "mult",
        )?;
        let a = Algebra::unchecked(field, basis, unit, mult)?;
        match v.get("bracket") {
            Some(b) => Entity::Poisson(PoissonAlgebra::unchecked(
                a,
                r.sparse(b, &[n, n, n], "bracket")?,
            )?),
            None => Entity::Algebra(a),
        }
    };
    Ok(Parsed {
        value: entity,
        warnings: r.warnings,
    })
}

/// Reads and validates an entity; a failed axiom is reported with its rule.
pub fn entity_from_json(v: &Value) -> Result<Parsed<Entity>> {
    let parsed = entity_from_json_unchecked(v)?;
    let report = match &parsed.value {
        Entity::Algebra(a) => a.validate(),
        Entity::Poisson(p) => p.validate(),
        Entity::Coalgebra(c) => c.validate(),
    };
    if !report.is_valid() {
        return Err(Error::Invalid {
            what: parsed.value.kind(),
            report,
        });
    }
    Ok(parsed)
}

pub fn parse_entity(text: &str) -> Result<Parsed<Entity>> {
    entity_from_json(&parse_json(text)?)
}

pub fn coflag_datum_to_json(d: &CoflagDatum) -> Value {
    match d {
        CoflagDatum::First {
            lambda,
            big_lambda,
            theta,
        } => {
            let n = lambda.len();
            json!({
                "kind": "first",
                "lambda": vector_to_json(lambda),
                "Lambda": vector_to_json(big_lambda),
                "theta": sparse_to_json(theta, &[n, n]),
            })
        }
        CoflagDatum::Second { lambda, u } => json!({
            "kind": "second",
            "lambda": vector_to_json(lambda),
            "u": scalar_to_json(u),
        }),
    }
}

/// Datum over an algebra of dimension `n`; shape only, see `validate_coflag`.
pub fn coflag_datum_from_json(v: &Value, field: Field, n: usize) -> Result<Parsed<CoflagDatum>> {
    let mut r = Reader {
        field,
        warnings: Vec::new(),
    };
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| perr(format!("datum: missing \"{k}\"")))
    };
    let lambda = r.vector(get("lambda")?, n, "lambda")?;
    let d = match v.get("kind").and_then(Value::as_str) {
        Some("first") => {
            let big_lambda = r.vector(get("Lambda")?, n, "Lambda")?;
            let theta = match v.get("theta") {
                Some(t) => r.sparse(t, &[n, n], "theta")?,
                None => field.zeros(n * n),
            };
            CoflagDatum::First {
                lambda,
                big_lambda,
                theta,
            }
        }
        Some("second") => CoflagDatum::Second {
            lambda,
            u: r.scalar(get("u")?, "u")?,
        },
        _ => return Err(perr("datum: \"kind\" must be \"first\" or \"second\"")),
    };
    Ok(Parsed {
        value: d,
        warnings: r.warnings,
    })
}

pub fn poisson_datum_to_json(d: &PoissonCoflagDatum) -> Value {
    let n = d.lambda.len();
    json!({
        "lambda": vector_to_json(&d.lambda),
        "Lambda": vector_to_json(&d.big_lambda),
        "gamma": vector_to_json(&d.gamma),
        "theta": sparse_to_json(&d.theta, &[n, n]),
        "f": sparse_to_json(&d.f, &[n, n]),
    })
}

pub fn poisson_datum_from_json(
    v: &Value,
    field: Field,
    n: usize,
) -> Result<Parsed<PoissonCoflagDatum>> {
    let mut r = Reader {
        field,
        warnings: Vec::new(),
    };
    let get = |k: &str| {
        v.get(k)
            .ok_or_else(|| perr(format!("datum: missing \"{k}\"")))
    };
    let lambda = r.vector(get("lambda")?, n, "lambda")?;
    let big_lambda = r.vector(get("Lambda")?, n, "Lambda")?;
    let gamma = match v.get("gamma") {
        Some(g) => r.vector(g, n, "gamma")?,
        None => field.zeros(n),
    };
    let theta = match v.get("theta") {
        Some(t) => r.sparse(t, &[n, n], "theta")?,
        None => field.zeros(n * n),
    };
    let f = match v.get("f") {
        Some(t) => r.sparse(t, &[n, n], "f")?,
        None => field.zeros(n * n),
    };
    Ok(Parsed {
        value: PoissonCoflagDatum {
            lambda,
            big_lambda,
            theta,
            gamma,
            f,
        },
        warnings: r.warnings,
    })
}

/// `{"algebra": {..}, "v_dim": d, "act_left", "act_right", "cocycle", "v_mult"}`.
pub fn system_to_json(s: &HochschildSystem) -> Value {
    let (n, d) = (s.algebra.dim, s.v_dim);
    json!({
        "algebra": algebra_to_json(&s.algebra),
        "v_dim": d,
        "act_left": sparse_to_json(&s.act_left, &[n, d, d]),
        "act_right": sparse_to_json(&s.act_right, &[d, n, d]),
        "cocycle": sparse_to_json(&s.cocycle, &[n, n, d]),
        "v_mult": sparse_to_json(&s.v_mult, &[d, d, d]),
    })
}

/// Shape-checked system; run `validate` for the axioms.
pub fn system_from_json(v: &Value) -> Result<Parsed<HochschildSystem>> {
    let parsed = entity_from_json(
        v.get("algebra")
            .ok_or_else(|| perr("system: missing \"algebra\""))?,
    )?;
    let Entity::Algebra(a) = parsed.value else {
        return Err(perr("system: \"algebra\" must be a plain algebra"));
    };
    let d = v
        .get("v_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| perr("system: missing \"v_dim\""))? as usize;
    let n = a.dim;
    let mut r = Reader {
        field: a.field,
        warnings: parsed.warnings,
    };
    let empty = Value::Array(Vec::new());
    let mut t = |k: &str, dims: &[usize]| r.sparse(v.get(k).unwrap_or(&empty), dims, k);
    let l = t("act_left", &[n, d, d])?;
    let rr = t("act_right", &[d, n, d])?;
    let c = t("cocycle", &[n, n, d])?;
    let m = t("v_mult", &[d, d, d])?;
    let s = HochschildSystem::data(a, d, l, rr, c, m)?;
    Ok(Parsed {
        value: s,
        warnings: r.warnings,
    })
}

pub fn matrix_from_json(
    v: &Value,
    field: Field,
    rows: usize,
    cols: usize,
) -> Result<Parsed<Matrix>> {
    let mut r = Reader {
        field,
        warnings: Vec::new(),
    };
    let items = v
        .as_array()
        .filter(|x| x.len() == rows)
        .ok_or_else(|| perr(format!("matrix: expected {rows} rows")))?;
    let rs = items
        .iter()
        .enumerate()
        .map(|(i, row)| r.vector(row, cols, &format!("row {i}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Parsed {
        value: Matrix::from_rows(field, &rs)?,
        warnings: r.warnings,
    })
}

/// A list of square matrices, either bare or under `"automorphisms"`.
pub fn matrices_from_json(v: &Value, field: Field, n: usize) -> Result<Parsed<Vec<Matrix>>> {
    let list = v
        .get("automorphisms")
        .unwrap_or(v)
        .as_array()
        .ok_or_else(|| perr("expected a list of matrices"))?;
    let mut warnings = Vec::new();
    let mut out = Vec::new();
    for m in list {
        let p = matrix_from_json(m, field, n, n)?;
        warnings.extend(p.warnings);
        out.push(p.value);
    }
    Ok(Parsed {
        value: out,
        warnings,
    })
}

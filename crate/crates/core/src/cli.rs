//! Command drivers behind the `quadpencil` binary. Each returns the
//! `"result"` part of a JSON report; [`envelope`] adds the job
//! configuration so that reruns with the same inputs are byte-identical.

use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::correspondence::{
    aut_set_fp, curve_to_triple, fiber_fp, gc_to_orb, orb_to_gc, triple_to_curve, Triple,
};
use crate::descent::{jp_check, validate_mumford, HyperCurve, MumfordDivisor};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::json::{
    binary_form_to_json, curve_to_json, divisor_to_json, element_to_json, field_to_json,
    frame_to_json, gl2_to_json, pencil_to_json, poly_from_json, scalar_to_json, subspace_to_json,
    triple_to_json, witness_to_json, Document,
};
use crate::matrix::Matrix;
use crate::pencil::{char_scheme, char_schemes_equivalent_fp, Pencil};
use crate::quasisplit::{brute_force_isotropic_fp, extract_trivialization, is_quasisplit_fp, OracleVerdict};
use crate::random::{random_stable_pencil, random_triple};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Settings shared by every command; recorded in each report.
#[derive(Clone, Debug, Serialize)]
pub struct JobConfig {
    pub command: String,
    #[serde(serialize_with = "ser_field")]
    pub field: Option<FieldDescriptor>,
    pub seed: u64,
    pub budget: u64,
}

fn ser_field<S: serde::Serializer>(f: &Option<FieldDescriptor>, s: S) -> std::result::Result<S::Ok, S::Error> {
    f.map(field_to_json).unwrap_or(Value::Null).serialize(s)
}

impl JobConfig {
    pub fn new(command: &str) -> Self {
        JobConfig {
            command: command.into(),
            field: None,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

pub fn envelope(cfg: &JobConfig, result: Value) -> Value {
    json!({
        "command": cfg.command,
        "config": cfg,
        "result": result,
    })
}

/// The document inside `v`: `v` itself, or the single pencil, triple or
/// curve carried by an earlier command's output.
pub fn unwrap_document(v: &Value) -> &Value {
    let inner = v.get("result").unwrap_or(v);
    ["pencil", "triple", "curve"]
        .iter()
        .find_map(|k| inner.get(*k).filter(|d| d.is_object()))
        .unwrap_or(v)
}

/// True when an oracle inside `result` stopped at the budget. The result is
/// still printed; the process then exits with the budget code.
pub fn budget_exhausted(result: &Value) -> bool {
    [&result["oracle"], &result["jp"]["oracle"]]
        .iter()
        .any(|o| o["status"] == "unknown")
}

pub fn error_report(cfg: &JobConfig, e: &Error) -> Value {
    json!({
        "command": cfg.command,
        "config": cfg,
        "error": {
            "code": e.code(),
            "message": e.to_string(),
            "exit_code": e.exit_code(),
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Orb,
    Gc,
    Hec,
}

impl std::str::FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orb" => Ok(Target::Orb),
            "gc" => Ok(Target::Gc),
            "hec" => Ok(Target::Hec),
            _ => Err(Error::Invalid(format!("unknown target {s:?}; use orb, gc or hec"))),
        }
    }
}

fn as_triple(doc: &Document) -> Result<Triple> {
    match doc {
        Document::Pencil(p) => Ok(orb_to_gc(p)?.0),
        Document::Triple(t) => Ok(t.clone()),
        Document::Curve { curve, alpha } => {
            let a = alpha.clone().unwrap_or_else(|| curve.algebra().one());
            curve_to_triple(curve, &a)
        }
    }
}

fn as_pencil(doc: &Document) -> Result<Pencil> {
    match doc {
        Document::Pencil(p) => Ok(p.clone()),
        other => gc_to_orb(&as_triple(other)?),
    }
}

fn oracle_json(v: &OracleVerdict, dim: usize) -> Value {
    let mut out = json!({ "status": v.label(), "dimension": dim });
    match v {
        OracleVerdict::Found(s) => out["subspace"] = subspace_to_json(s),
        OracleVerdict::Unknown { needed, budget } => {
            out["needed"] = json!(needed.to_string());
            out["budget"] = json!(budget.to_string());
        }
        _ => {}
    }
    out
}

fn run_oracle(p: &Pencil, dim: usize, budget: u64) -> Result<OracleVerdict> {
    match brute_force_isotropic_fp(p, dim, budget as u128) {
        Ok(Some(s)) => Ok(OracleVerdict::Found(s)),
        Ok(None) => Ok(OracleVerdict::NotFound),
        Err(Error::BudgetExceeded { needed, budget }) => Ok(OracleVerdict::Unknown { needed, budget }),
        Err(e) => Err(e),
    }
}

pub fn cmd_convert(doc: &Document, target: Target) -> Result<Value> {
    Ok(match (doc, target) {
        (Document::Pencil(p), Target::Orb) => json!({ "pencil": pencil_to_json(p) }),
        (Document::Pencil(p), _) => {
            let (t, frame) = orb_to_gc(p)?;
            let mut out = json!({ "frame": frame_to_json(&frame) });
            if target == Target::Gc {
                out["triple"] = triple_to_json(&t);
            } else {
                out["curve"] = curve_to_json(&triple_to_curve(&t)?, Some(t.alpha()));
            }
            out
        }
        (other, Target::Orb) => json!({ "pencil": pencil_to_json(&as_pencil(other)?) }),
        (other, Target::Gc) => json!({ "triple": triple_to_json(&as_triple(other)?) }),
        (other, Target::Hec) => {
            let t = as_triple(other)?;
            json!({ "curve": curve_to_json(&triple_to_curve(&t)?, Some(t.alpha())) })
        }
    })
}

pub fn cmd_roundtrip(doc: &Document) -> Result<Value> {
    match doc {
        Document::Pencil(p) => {
            let (t, frame) = orb_to_gc(p)?;
            let back = frame.transport(&gc_to_orb(&t)?)?;
            let normalized = p.act_gl2(&frame.g2);
            Ok(json!({
                "direction": "orb-gc-orb",
                "exact": back == normalized,
                "triple": triple_to_json(&t),
                "frame": frame_to_json(&frame),
            }))
        }
        other => {
            let t = as_triple(other)?;
            let (t2, frame) = orb_to_gc(&gc_to_orb(&t)?)?;
            let same_modulus = t2.modulus() == t.modulus();
            let same_class = if same_modulus && t.field().is_prime_field() {
                json!(t.algebra().square_class_equal_fp(t.alpha(), t2.alpha())?)
            } else {
                Value::Null
            };
            Ok(json!({
                "direction": "gc-orb-gc",
                "exact": t2 == t,
                "same_modulus": same_modulus,
                "same_class": same_class,
                "triple": triple_to_json(&t2),
                "frame": frame_to_json(&frame),
            }))
        }
    }
}

pub fn cmd_stable_check(doc: &Document) -> Result<Value> {
    let p = as_pencil(doc)?;
    let form = p.determinant_form();
    let disc = form.discriminant();
    Ok(json!({
        "stable": !disc.is_zero(),
        "determinant_form": binary_form_to_json(&form),
        "discriminant": scalar_to_json(&disc),
    }))
}

pub fn cmd_quasisplit(doc: &Document, budget: u64) -> Result<Value> {
    let t = as_triple(doc)?;
    let verdict = is_quasisplit_fp(&t)?;
    let m = t.algebra().half_degree();
    let oracle = run_oracle(&gc_to_orb(&t)?, m, budget)?;
    let mut out = json!({
        "quasisplit": verdict,
        "triple": triple_to_json(&t),
        "oracle": oracle_json(&oracle, m),
    });
    if let OracleVerdict::Found(s) = &oracle {
        let tr = extract_trivialization(&t, s)?;
        out["witness"] = witness_to_json(&tr.witness);
        out["chain_dims"] = json!(tr.chain_dims);
        out["preimage_chain_dims"] = json!(tr.preimage_chain_dims);
    }
    out["consistent"] = match &oracle {
        OracleVerdict::Found(_) => json!(verdict),
        OracleVerdict::NotFound => json!(!verdict),
        _ => Value::Null,
    };
    Ok(out)
}

pub fn cmd_fiber(doc: &Document) -> Result<Value> {
    let t = as_triple(doc)?;
    let aut = aut_set_fp(&t)?;
    let orbit = fiber_fp(&t)?;
    Ok(json!({
        "triple": triple_to_json(&t),
        "aut_size": aut.len(),
        "aut": aut.iter().map(gl2_to_json).collect::<Vec<_>>(),
        "orbit_size": orbit.len(),
        "orbit": orbit.iter().map(element_to_json).collect::<Vec<_>>(),
    }))
}

pub fn cmd_from_divisor(doc: &Document, g: &[Value], h: &[Value], budget: u64) -> Result<Value> {
    let curve: HyperCurve = match doc {
        Document::Curve { curve, .. } => curve.clone(),
        Document::Triple(t) => triple_to_curve(t)?,
        Document::Pencil(_) => return Err(Error::Invalid("from-divisor needs a curve".into())),
    };
    let field = curve.field();
    let d = MumfordDivisor {
        g: poly_from_json(field, g)?,
        h: poly_from_json(field, h)?,
    };
    if !validate_mumford(&curve, &d) {
        return Err(Error::BadDivisor(format!("g = {}, h = {}", d.g, d.h)));
    }
    let report = jp_check(&curve, &d, budget as u128)?;
    let t = Triple::new(curve.algebra().clone(), report.alpha.clone())?;
    Ok(json!({
        "curve": curve_to_json(&curve, None),
        "divisor": divisor_to_json(&d),
        "triple": triple_to_json(&t),
        "pencil": pencil_to_json(&gc_to_orb(&t)?),
        "jp": {
            "alpha": element_to_json(&report.alpha),
            "norm_is_square": report.norm_is_square,
            "degree_count_dim": report.degree_count_dim,
            "degree_count_isotropic": report.degree_count_isotropic,
            "claimed_dim": report.claimed_dim,
            "oracle": oracle_json(&report.oracle, report.claimed_dim),
            "discrepancy": report.discrepancy(),
        },
    }))
}

/// The quadratic form `Σ G_ii x_i² + Σ_{i<j} 2 G_ij x_i x_j`, e.g.
/// `2·x0·x2 + x1² + x2²`.
pub fn quadric_text(g: &Matrix) -> String {
    let n = g.rows();
    let two = g.field().from_i64(2);
    let mut out = String::new();
    for i in 0..n {
        for j in i..n {
            let c = if i == j { g.get(i, i) } else { &g.get(i, j) * &two };
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match &c {
                Scalar::Rat(r) if r.is_negative() => (true, -&c),
                _ => (false, c.clone()),
            };
            let mono = if i == j {
                format!("x{i}²")
            } else {
                format!("x{i}·x{j}")
            };
            let term = if mag.is_one() { mono } else { format!("{mag}·{mono}") };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn cmd_emit_quadrics(doc: &Document) -> Result<[String; 2]> {
    let p = as_pencil(doc)?;
    Ok([quadric_text(p.first()), quadric_text(p.second())])
}

pub fn cmd_char_scheme(doc: &Document, against: Option<&Document>) -> Result<Value> {
    let s = char_scheme(&as_pencil(doc)?)?;
    let mut out = json!({
        "form": binary_form_to_json(s.form()),
        "text": s.to_string(),
    });
    if let Some(other) = against {
        let s2 = char_scheme(&as_pencil(other)?)?;
        let w = char_schemes_equivalent_fp(&s, &s2)?;
        out["against"] = json!({
            "form": binary_form_to_json(s2.form()),
            "equivalent": w.is_some(),
            "witness": w.as_ref().map(gl2_to_json),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    Pencil,
    Triple,
}

impl std::str::FromStr for RandomKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pencil" => Ok(RandomKind::Pencil),
            "triple" => Ok(RandomKind::Triple),
            _ => Err(Error::Invalid(format!("unknown kind {s:?}; use pencil or triple"))),
        }
    }
}

pub fn cmd_random(cfg: &JobConfig, n: usize, kind: RandomKind) -> Result<Value> {
    let field = cfg
        .field
        .ok_or_else(|| Error::InvalidField("random needs --field".into()))?;
    if n < 3 || n % 2 == 0 {
        return Err(Error::Invalid(format!("degree {n} is not odd and >= 3")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(match kind {
        RandomKind::Pencil => json!({ "pencil": pencil_to_json(&random_stable_pencil(field, n, &mut rng)?) }),
        RandomKind::Triple => json!({ "triple": triple_to_json(&random_triple(field, n, &mut rng)?) }),
    })
}

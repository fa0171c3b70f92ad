use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};
use wdlab::cohomology::{report, very_smooth_report};
use wdlab::document::Document;
use wdlab::groups::{GroupModel, GroupSpec, Morphism};
use wdlab::linalg::Mat;
use wdlab::nilpotent::{jacobson_morozov, jordan_nilpotent, Cocharacter};
use wdlab::phimod::{
    fontaine_to_wd, global_ledger, hodge_dim, inflated_point, is_regular, local_dim, wd_to_phi_module,
    HodgeType,
};
use wdlab::scalars::Scalar;
use wdlab::smoothfactory::{pushforward as push, smooth_point as factory_point};
use wdlab::wdrep::{InertialData, WDPoint};
use wdlab::Error;

use crate::{DimsOp, FontaineOp, Io, PointSpec};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

pub type Outcome = std::result::Result<u8, Failure>;

pub fn malformed(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Dimension(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn read_document(io: &Io) -> Result<Document, Failure> {
    let text = match &io.input {
        Some(p) => fs::read_to_string(p).map_err(|e| malformed(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| malformed(e.to_string()))?;
            s
        }
    };
    Ok(Document::from_json(&text)?)
}

pub fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(output: Option<&Path>, v: &Value) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    emit(output, &s)
}

fn violations_json(x: &WDPoint) -> Option<Value> {
    let v = x.validate();
    if v.is_valid() {
        return None;
    }
    let list: Vec<Value> = v
        .violations
        .iter()
        .map(|v| json!({ "constraint": v.constraint.to_string(), "detail": v.detail }))
        .collect();
    Some(json!({ "valid": false, "violations": list }))
}

/// Parses the point and reports constraint violations with exit code 1.
fn load_valid_point(io: &Io) -> Result<std::result::Result<WDPoint, u8>, Failure> {
    let x = read_document(io)?.point()?;
    if let Some(v) = violations_json(&x) {
        emit_json(io.output.as_deref(), &v)?;
        return Ok(Err(1));
    }
    Ok(Ok(x))
}

/// Points are checked constraint by constraint; module documents by the
/// module conditions; ledger documents only need to parse.
pub fn validate(io: &Io) -> Outcome {
    let doc = read_document(io)?;
    let out = io.output.as_deref();
    if doc.point.is_some() {
        let x = doc.point()?;
        if let Some(v) = violations_json(&x) {
            emit_json(out, &v)?;
            return Ok(1);
        }
        let r = report(&x)?;
        emit_json(out, &json!({ "valid": true, "violations": [], "smooth": r.smooth, "h2": r.h2 }))?;
        return Ok(0);
    }
    if doc.module.is_some() {
        let m = doc.module()?;
        return match m.validate() {
            Ok(()) => {
                emit_json(out, &json!({ "valid": true, "violations": [] }))?;
                Ok(0)
            }
            Err(Error::Parse(e)) => Err(malformed(e)),
            Err(e) => {
                emit_json(out, &json!({ "valid": false, "violations": [e.to_string()] }))?;
                Ok(1)
            }
        };
    }
    if doc.ledger.is_some() {
        emit_json(out, &json!({ "valid": true, "violations": [] }))?;
        return Ok(0);
    }
    Err(malformed("document has no 'point', 'module' or 'ledger'"))
}

pub fn cohomology(io: &Io) -> Outcome {
    let x = match load_valid_point(io)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    let r = report(&x)?;
    emit_json(io.output.as_deref(), &serde_json::to_value(r).expect("report"))?;
    Ok(0)
}

pub fn very_smooth(io: &Io) -> Outcome {
    let x = match load_valid_point(io)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    let r = very_smooth_report(&x)?;
    emit_json(io.output.as_deref(), &serde_json::to_value(r).expect("report"))?;
    Ok(0)
}

/// `"2,1"` → `[2, 1]`; an empty string or `"0"` means the zero nilpotent.
pub fn parse_partition(s: &str) -> Result<Vec<usize>, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Vec::new());
    }
    s.split([',', '+'])
        .map(|t| t.trim().parse::<usize>().ok().filter(|&k| k > 0))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| malformed(format!("bad Jordan type '{s}'")))
}

pub fn group_from_name(name: &str) -> Result<GroupModel, Failure> {
    Ok(GroupModel::from_spec(&GroupSpec::parse_short(name)?)?)
}

/// Lie coordinates of the Jordan-form nilpotent; parts are padded with 1s
/// up to the size of the realization.
pub fn nilpotent_coords(g: &GroupModel, parts: &[usize]) -> Result<Vec<Scalar>, Failure> {
    let total: usize = parts.iter().sum();
    if total > g.std_dim {
        return Err(malformed(format!("Jordan type exceeds dimension {}", g.std_dim)));
    }
    let mut full = parts.to_vec();
    full.extend(std::iter::repeat(1).take(g.std_dim - total));
    Ok(g.lie_coords(&jordan_nilpotent(&full))?)
}

pub fn smooth_point(spec: &PointSpec, output: Option<&Path>) -> Outcome {
    let g = group_from_name(&spec.group)?;
    let parts = parse_partition(spec.nilpotent.as_deref().unwrap_or(""))?;
    let n = nilpotent_coords(&g, &parts)?;
    let c = factory_point(&g, &InertialData::trivial(&g), &n, spec.p, spec.fk)?;
    emit(output, &Document::of_point(&c.point)?.to_json())?;
    Ok(0)
}

pub fn pushforward(io: &Io, morphism: &str, nilpotent: Option<&str>) -> Outcome {
    let x = match load_valid_point(io)? {
        Ok(x) => x,
        Err(code) => return Ok(code),
    };
    let g = &x.group;
    let f = match morphism.split_once(':') {
        None if morphism == "det" => Morphism::det(g)?,
        None if morphism == "tensor" => {
            if g.factors.len() != 2 {
                return Err(malformed("tensor needs a point on a product of two groups"));
            }
            let GroupSpec::Product { factors } = &g.spec else {
                return Err(malformed("tensor needs a point on a product of two groups"));
            };
            let a = GroupModel::from_spec(&factors[0])?;
            let b = GroupModel::from_spec(&factors[1])?;
            Morphism::tensor(&a, &b)?
        }
        Some(("incl", k)) => {
            let k = k.parse().map_err(|_| malformed(format!("bad block size '{k}'")))?;
            Morphism::incl_block(g, k)?
        }
        Some(("sl2", target)) => {
            let t = group_from_name(target)?;
            let n = nilpotent_coords(&t, &parse_partition(nilpotent.unwrap_or(""))?)?;
            let tri = jacobson_morozov(&t, &n, None)?;
            Morphism::sl2_from_triple(&t, &tri.n, &tri.h, &tri.y)?
        }
        _ => return Err(malformed(format!("unknown morphism '{morphism}'"))),
    };
    let y = push(&f, &x)?;
    emit(io.output.as_deref(), &Document::of_point(&y)?.to_json())?;
    Ok(0)
}

pub fn fontaine(op: &FontaineOp) -> Outcome {
    match op {
        FontaineOp::ToWd(io) => {
            let m = read_document(io)?.module()?;
            let x = fontaine_to_wd(&m)?;
            emit(io.output.as_deref(), &Document::of_point(&x)?.to_json())?;
            Ok(0)
        }
        FontaineOp::ToPhimod { io, fl } => {
            let x = match load_valid_point(io)? {
                Ok(x) => x,
                Err(code) => return Ok(code),
            };
            let m = wd_to_phi_module(&x, *fl)?;
            emit(io.output.as_deref(), &Document::of_module(&m)?.to_json())?;
            Ok(0)
        }
        FontaineOp::Roundtrip { io, fl } => {
            let x = match load_valid_point(io)? {
                Ok(x) => x,
                Err(code) => return Ok(code),
            };
            let m = wd_to_phi_module(&x, *fl)?;
            let y = fontaine_to_wd(&m)?;
            let equal = y == inflated_point(&x, *fl)?;
            emit_json(io.output.as_deref(), &json!({ "fL": fl, "roundtrip": equal }))?;
            Ok(if equal { 0 } else { 1 })
        }
    }
}

fn parse_weights(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| malformed(format!("bad weights '{s}'"))))
        .collect()
}

pub fn dims(op: &DimsOp) -> Outcome {
    match op {
        DimsOp::Local { group, fk, hodge, fixed_det, l_equals_p, output } => {
            let g = group_from_name(group)?;
            let mut cochars = Vec::new();
            for h in hodge {
                let w = parse_weights(h)?;
                if w.len() != g.std_dim {
                    return Err(malformed(format!("expected {} weights", g.std_dim)));
                }
                let d: Vec<Scalar> = w.iter().map(|&a| Scalar::from_int(a)).collect();
                let coords = g.lie_coords(&Mat::diag(&d))?;
                cochars.push(Cocharacter::from_h(&g, &coords)?);
            }
            let hodge = (!cochars.is_empty()).then(|| HodgeType::new(cochars));
            let dim = local_dim(&g, *fk, hodge.as_ref(), *fixed_det, *l_equals_p)?;
            let mut v = json!({ "group": g.name, "local_dim": dim });
            if let Some(h) = &hodge {
                v["hodge_dim"] = json!(hodge_dim(&g, h));
                v["regular"] = json!(is_regular(&g, h));
            }
            emit_json(output.as_deref(), &v)?;
            Ok(0)
        }
        DimsOp::Global(io) => {
            let doc = read_document(io)?;
            let inp = doc.ledger.ok_or_else(|| malformed("document has no 'ledger'"))?;
            let l = global_ledger(&inp);
            emit_json(io.output.as_deref(), &serde_json::to_value(l).expect("ledger"))?;
            Ok(0)
        }
    }
}

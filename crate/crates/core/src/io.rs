//! File formats: the polytope input document and the machine-readable run
//! manifest. Everything is UTF-8 JSON with exact integer and rational
//! values — floating-point numbers are rejected on input and never
//! produced on output, so files are bit-identical across platforms.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::enumeration::EnumerationResult;
use crate::error::{Error, Result};
use crate::exact_arith::{Int, LatticePoint, Rat, RationalPoint};
use crate::polyhedron::{h_to_v, hull, HPolyhedron, VPolytope};

/// The geometric payload of a polytope document: exactly one of a vertex
/// list or an inequality system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolytopeBody {
    /// Exact rational vertices, one row per vertex.
    Vertices(Vec<RationalPoint>),
    /// Inequalities `normal · x ≤ rhs` with integer data, kept verbatim
    /// for round-tripping (normalization happens on conversion).
    Inequalities(Vec<(LatticePoint, Int)>),
}

/// A parsed polytope document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeFile {
    /// Ambient dimension.
    pub dim: usize,
    /// Lattice scale `s` (the lattice is `sZ^dim`); defaults to 1.
    pub scale: Int,
    /// Vertex list or inequality system.
    pub body: PolytopeBody,
}

impl PolytopeFile {
    /// A vertex document for an integral polytope.
    pub fn from_vpolytope(p: &VPolytope, scale: Int) -> Self {
        PolytopeFile {
            dim: p.dim(),
            scale,
            body: PolytopeBody::Vertices(p.vertices().to_vec()),
        }
    }

    /// Realize the document as a vertex-form polytope (convex hull of the
    /// vertex list, or the bounded solution set of the inequalities).
    ///
    /// # Errors
    /// [`Error::UnboundedPolyhedron`] or [`Error::EmptyPolyhedron`] for
    /// inequality input that does not describe a polytope; propagated
    /// construction errors otherwise.
    pub fn to_vpolytope(&self) -> Result<VPolytope> {
        match &self.body {
            PolytopeBody::Vertices(vs) => hull(vs),
            PolytopeBody::Inequalities(rows) => {
                let rows = rows
                    .iter()
                    .map(|(n, b)| (n.clone(), Rat::from_integer(b.clone())))
                    .collect();
                h_to_v(&HPolyhedron::new(self.dim, rows)?)
            }
        }
    }
}

fn json_object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))
}

/// An exact integer from a JSON value: an integral number or a decimal
/// string. Floating-point notation is rejected.
fn json_int(v: &Value, what: &str) -> Result<Int> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Int::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Int::from(u))
            } else {
                Err(Error::InvalidInput(format!(
                    "{what}: floating-point numbers are not accepted; write integers or exact \"p/q\" strings"
                )))
            }
        }
        Value::String(s) => {
            s.parse::<Int>().map_err(|_| Error::InvalidInput(format!("{what}: invalid integer {s:?}")))
        }
        other => Err(Error::InvalidInput(format!("{what}: expected an integer, got {other}"))),
    }
}

/// An exact rational from a JSON value: an integral number, a decimal
/// string, or a `"p/q"` string. Floating-point notation is rejected.
fn json_rat(v: &Value, what: &str) -> Result<Rat> {
    if let Value::String(s) = v {
        if let Some((p, q)) = s.split_once('/') {
            let p = p
                .trim()
                .parse::<Int>()
                .map_err(|_| Error::InvalidInput(format!("{what}: invalid numerator in {s:?}")))?;
            let q = q
                .trim()
                .parse::<Int>()
                .map_err(|_| Error::InvalidInput(format!("{what}: invalid denominator in {s:?}")))?;
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("{what}: zero denominator in {s:?}")));
            }
            return Ok(Rat::new(p, q));
        }
    }
    Ok(Rat::from_integer(json_int(v, what)?))
}

/// Parse a polytope document.
///
/// # Errors
/// [`Error::InvalidInput`] for malformed JSON, floating-point numbers,
/// unknown fields, missing fields, ragged rows, or when not exactly one of
/// `vertices`/`inequalities` is present; [`Error::InvalidScale`] for a
/// non-positive scale.
pub fn parse_polytope_file(text: &str) -> Result<PolytopeFile> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
    let obj = json_object(&value)?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "dim" | "scale" | "vertices" | "inequalities") {
            return Err(Error::InvalidInput(format!("unknown field {key:?}")));
        }
    }
    let dim_value =
        obj.get("dim").ok_or_else(|| Error::InvalidInput("missing field \"dim\"".into()))?;
    let dim = json_int(dim_value, "dim")?
        .to_usize()
        .ok_or_else(|| Error::InvalidInput("dim must be a small positive integer".into()))?;
    let scale = match obj.get("scale") {
        Some(v) => json_int(v, "scale")?,
        None => Int::one(),
    };
    if !scale.is_positive() {
        return Err(Error::InvalidScale(scale.to_string()));
    }
    let body = match (obj.get("vertices"), obj.get("inequalities")) {
        (Some(_), Some(_)) | (None, None) => {
            return Err(Error::InvalidInput(
                "exactly one of \"vertices\" and \"inequalities\" must be present".into(),
            ))
        }
        (Some(vs), None) => {
            let rows = vs
                .as_array()
                .ok_or_else(|| Error::InvalidInput("\"vertices\" must be an array".into()))?;
            let mut vertices = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let coords = row.as_array().ok_or_else(|| {
                    Error::InvalidInput(format!("vertex {i} must be an array of coordinates"))
                })?;
                if coords.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: coords.len() });
                }
                let mut v = Vec::with_capacity(dim);
                for (j, c) in coords.iter().enumerate() {
                    v.push(json_rat(c, &format!("vertex {i} coordinate {j}"))?);
                }
                vertices.push(v);
            }
            PolytopeBody::Vertices(vertices)
        }
        (None, Some(ineqs)) => {
            let rows = ineqs
                .as_array()
                .ok_or_else(|| Error::InvalidInput("\"inequalities\" must be an array".into()))?;
            let mut out = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let obj = json_object(row)?;
                for key in obj.keys() {
                    if !matches!(key.as_str(), "normal" | "rhs") {
                        return Err(Error::InvalidInput(format!(
                            "inequality {i}: unknown field {key:?}"
                        )));
                    }
                }
                let normal_value = obj.get("normal").ok_or_else(|| {
                    Error::InvalidInput(format!("inequality {i}: missing \"normal\""))
                })?;
                let coords = normal_value.as_array().ok_or_else(|| {
                    Error::InvalidInput(format!("inequality {i}: \"normal\" must be an array"))
                })?;
                if coords.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: coords.len() });
                }
                let mut normal = Vec::with_capacity(dim);
                for (j, c) in coords.iter().enumerate() {
                    normal.push(json_int(c, &format!("inequality {i} normal {j}"))?);
                }
                let rhs_value = obj
                    .get("rhs")
                    .ok_or_else(|| Error::InvalidInput(format!("inequality {i}: missing \"rhs\"")))?;
                let rhs = json_int(rhs_value, &format!("inequality {i} rhs"))?;
                out.push((normal, rhs));
            }
            PolytopeBody::Inequalities(out)
        }
    };
    Ok(PolytopeFile { dim, scale, body })
}

fn int_value(n: &Int) -> Value {
    match n.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(n.to_string()),
    }
}

fn rat_value(r: &Rat) -> Value {
    if r.is_integer() {
        int_value(r.numer())
    } else {
        Value::from(format!("{}/{}", r.numer(), r.denom()))
    }
}

/// Serialize a polytope document (pretty-printed, stable key order, exact
/// values only).
pub fn serialize_polytope_file(file: &PolytopeFile) -> String {
    let mut obj = Map::new();
    obj.insert("dim".into(), Value::from(file.dim));
    obj.insert("scale".into(), int_value(&file.scale));
    match &file.body {
        PolytopeBody::Vertices(vs) => {
            let rows: Vec<Value> = vs
                .iter()
                .map(|v| Value::from(v.iter().map(rat_value).collect::<Vec<_>>()))
                .collect();
            obj.insert("vertices".into(), Value::from(rows));
        }
        PolytopeBody::Inequalities(rows) => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, b)| {
                    let mut row = Map::new();
                    row.insert(
                        "normal".into(),
                        Value::from(n.iter().map(int_value).collect::<Vec<_>>()),
                    );
                    row.insert("rhs".into(), int_value(b));
                    Value::Object(row)
                })
                .collect();
            obj.insert("inequalities".into(), Value::from(rows));
        }
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable value");
    text.push('\n');
    text
}

/// The machine-readable record of a CLI run. Field names are a stable
/// contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunManifest {
    /// The subcommand that ran.
    pub command: String,
    /// Effective parameters as ordered key/value pairs.
    pub parameters: Vec<(String, String)>,
    /// Named counts (candidates examined, survivors, …).
    pub counts: Vec<(String, u64)>,
    /// Survivor identifiers: catalog ids where classified, otherwise
    /// `unclassified`.
    pub survivors: Vec<String>,
    /// The process exit status the run reports.
    pub exit_status: i32,
}

/// Serialize a manifest (pretty-printed, stable field names).
pub fn serialize_manifest(m: &RunManifest) -> String {
    let mut obj = Map::new();
    obj.insert("command".into(), Value::from(m.command.clone()));
    let params: Map<String, Value> =
        m.parameters.iter().map(|(k, v)| (k.clone(), Value::from(v.clone()))).collect();
    obj.insert("parameters".into(), Value::Object(params));
    let counts: Map<String, Value> =
        m.counts.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
    obj.insert("counts".into(), Value::Object(counts));
    obj.insert(
        "survivors".into(),
        Value::from(m.survivors.iter().map(|s| Value::from(s.clone())).collect::<Vec<_>>()),
    );
    obj.insert("exit_status".into(), Value::from(m.exit_status));
    let mut text = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable value");
    text.push('\n');
    text
}

/// Serialize an enumeration result's survivors: classification, canonical
/// vertices, and a polytope document for the first representative found.
pub fn serialize_survivors(result: &EnumerationResult) -> String {
    let entries: Vec<Value> = result
        .survivors
        .iter()
        .map(|s| {
            let mut obj = Map::new();
            obj.insert(
                "classification".into(),
                s.classification.as_ref().map_or(Value::Null, |id| Value::from(id.clone())),
            );
            let canon: Vec<Value> = s
                .canonical
                .canonical_vertices
                .iter()
                .map(|v| Value::from(v.iter().map(int_value).collect::<Vec<_>>()))
                .collect();
            obj.insert("canonical_vertices".into(), Value::from(canon));
            let file = PolytopeFile::from_vpolytope(&s.representative, Int::one());
            let rep: Value = serde_json::from_str(&serialize_polytope_file(&file))
                .expect("serialized document reparses");
            obj.insert("representative".into(), rep);
            Value::Object(obj)
        })
        .collect();
    let mut text =
        serde_json::to_string_pretty(&Value::from(entries)).expect("serializable value");
    text.push('\n');
    text
}

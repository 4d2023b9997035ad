//! JSON documents for modules and certificates.
//!
//! Fractions travel as `"a/b"` strings. Documents written by this crate are
//! canonical (fractions reduced into `[0, 1)`, keys sorted, fixed layout), so
//! reading and rewriting one reproduces it byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::ablattice::{GroupElement, QZScalar};
use crate::altmodule::AlternateModule;
use crate::embed::{
    verify_map, EmbeddingCertificate, ExtensionStep, StepWitness, Verdict, Violation,
};
use crate::error::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Field { path: String, source: Error },
    #[error("{0}")]
    Invariant(Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub orders: Vec<u64>,
    pub gram: Vec<Vec<String>>,
}

impl ModuleDocument {
    pub fn from_module(m: &AlternateModule) -> Self {
        ModuleDocument {
            orders: m.orders().to_vec(),
            gram: m
                .gram()
                .iter()
                .map(|row| row.iter().map(|q| q.to_string()).collect())
                .collect(),
        }
    }

    /// Validates into a module. Fraction errors carry their `gram[i][j]`
    /// location; invariant errors name the violated invariant.
    pub fn to_module(&self) -> Result<AlternateModule, DocumentError> {
        let gram = self
            .gram
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| {
                        s.parse::<QZScalar>().map_err(|source| DocumentError::Field {
                            path: format!("gram[{i}][{j}]"),
                            source,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(i) = self.orders.iter().position(|&d| d < 2) {
            return Err(DocumentError::Field {
                path: format!("orders[{i}]"),
                source: Error::InvalidOrder(self.orders[i]),
            });
        }
        AlternateModule::new(self.orders.clone(), gram).map_err(DocumentError::Invariant)
    }
}

pub fn parse_module(text: &str) -> Result<AlternateModule, DocumentError> {
    serde_json::from_str::<ModuleDocument>(text)?.to_module()
}

/// Canonical text: two-space indentation, keys sorted, arrays of scalars
/// on one line, trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn module_to_json(m: &AlternateModule) -> String {
    to_canonical_json(&ModuleDocument::from_module(m))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepRecord {
    pub kind: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub source: ModuleDocument,
    pub b_orders: Vec<u64>,
    /// `2s` rows by `r` columns; column `i` is the image of generator `i`.
    pub map: Vec<Vec<i64>>,
    #[serde(default)]
    pub trace: Vec<StepRecord>,
}

fn fractions(v: &[QZScalar]) -> Vec<String> {
    v.iter().map(|q| q.to_string()).collect()
}

fn step_record(step: &ExtensionStep) -> StepRecord {
    let mut witness = match &step.witness {
        StepWitness::AdjoinZp { k0, i0, gamma } => json!({
            "k0": k0.0,
            "i0": i0,
            "gamma": gamma.0,
        }),
        StepWitness::SplitSymplectic { e, ei, inner } => json!({
            "e": e.0,
            "ei": ei.0,
            "inner": step_record(inner),
        }),
        StepWitness::Stretch {
            e,
            e_hat,
            roots,
            constant,
        } => {
            let mut w = json!({
                "e": e.0,
                "e_hat": e_hat.0,
                "roots": fractions(roots),
            });
            if let Some(k) = constant {
                w["a0"] = json!(k.a0.0);
                w["kernel_witness"] = json!(k.element.0);
            }
            w
        }
    };
    witness["prime"] = json!(step.prime);
    witness["input_orders"] = json!(step.input.orders());
    witness["output_orders"] = json!(step.output.orders());
    StepRecord {
        kind: step.kind().as_str().to_string(),
        witness,
    }
}

impl CertificateDocument {
    pub fn from_certificate(c: &EmbeddingCertificate) -> Self {
        let rows = 2 * c.b_orders.len();
        let map = (0..rows)
            .map(|row| {
                c.embedding
                    .images()
                    .iter()
                    .map(|x| x.0[row] as i64)
                    .collect()
            })
            .collect();
        CertificateDocument {
            source: ModuleDocument::from_module(&c.source),
            b_orders: c.b_orders.clone(),
            map,
            trace: c.trace.iter().map(step_record).collect(),
        }
    }

    /// Checks the certificate from its source, `b_orders` and map alone.
    /// Map entries are read modulo the target orders; a map whose shape
    /// does not fit `B x B*` is reported as a violation.
    pub fn verify(&self) -> Result<Verdict, DocumentError> {
        let source = self.source.to_module()?;
        let r = source.rank();
        let rows = 2 * self.b_orders.len();
        if self.map.len() != rows || self.map.iter().any(|row| row.len() != r) {
            return Ok(Verdict {
                violations: vec![Violation::Shape(format!(
                    "map must be {rows} rows by {r} columns for b_orders {:?}",
                    self.b_orders
                ))],
            });
        }
        if self.b_orders.iter().any(|&b| b < 2) {
            return Ok(verify_map(&source, &self.b_orders, &[]));
        }
        let target_orders: Vec<u64> = self.b_orders.iter().chain(&self.b_orders).copied().collect();
        let images: Vec<GroupElement> = (0..r)
            .map(|i| {
                GroupElement(
                    (0..rows)
                        .map(|row| self.map[row][i].rem_euclid(target_orders[row] as i64) as u64)
                        .collect(),
                )
            })
            .collect();
        Ok(verify_map(&source, &self.b_orders, &images))
    }
}

pub fn parse_certificate(text: &str) -> Result<CertificateDocument, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

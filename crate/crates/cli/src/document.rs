//! JSON map documents and scalar encoding.

use std::fs;
use std::io::Read;
use std::path::Path;

use affsim_core::{AffineMap, FieldKind, FieldSpec, Matrix, Poly, Scalar, Vector};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum FieldDoc {
    Prime { p: u64 },
    Rationals { rationals: bool },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDocument {
    field: FieldDoc,
    matrix: Vec<Vec<Value>>,
    vector: Option<Vec<Value>>,
}

/// A parsed document: the linear part, and the translation if one was given.
pub struct Parsed {
    pub matrix: Matrix,
    pub vector: Option<Vector>,
}

impl Parsed {
    pub fn into_map(self) -> Result<AffineMap, CliError> {
        let vector = self.vector.ok_or_else(|| CliError::Parse("document has no \"vector\"".into()))?;
        Ok(AffineMap::new(self.matrix, vector)?)
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Parse(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Parse(format!("reading {}: {e}", path.display())))
    }
}

pub fn parse_document(text: &str) -> Result<Parsed, CliError> {
    let doc: MapDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let field = match doc.field {
        FieldDoc::Prime { p } => FieldSpec::prime(p)?,
        FieldDoc::Rationals { rationals: true } => FieldSpec::rationals(),
        FieldDoc::Rationals { rationals: false } => {
            return Err(CliError::Parse("\"rationals\" must be true".into()));
        }
    };
    let n = doc.matrix.len();
    let mut data = Vec::with_capacity(n * n);
    for (i, row) in doc.matrix.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::Semantic(format!("matrix row {i} has {} entries, expected {n}", row.len())));
        }
        for v in row {
            data.push(parse_scalar(field, v)?);
        }
    }
    let matrix = Matrix::from_rows(field, n, n, data)?;
    let vector = match doc.vector {
        None => None,
        Some(entries) => {
            if entries.len() != n {
                return Err(CliError::Semantic(format!("vector has {} entries, matrix order is {n}", entries.len())));
            }
            let v = entries.iter().map(|e| parse_scalar(field, e)).collect::<Result<_, _>>()?;
            Some(Vector::new(field, v))
        }
    };
    Ok(Parsed { matrix, vector })
}

/// An integer, or a string `"a"` or `"a/b"`.
fn parse_scalar(field: FieldSpec, v: &Value) -> Result<Scalar, CliError> {
    match v {
        Value::Number(num) => {
            let i = num
                .as_i64()
                .map(BigInt::from)
                .or_else(|| num.as_u64().map(BigInt::from))
                .ok_or_else(|| CliError::Parse(format!("{num} is not an integer; use an \"a/b\" string")))?;
            Ok(field.from_bigint(&i))
        }
        Value::String(s) => {
            let bad = || CliError::Parse(format!("cannot read {s:?} as a fraction"));
            let (num, den) = match s.split_once('/') {
                Some((a, b)) => (a.trim().parse::<BigInt>().map_err(|_| bad())?, b.trim().parse::<BigInt>().map_err(|_| bad())?),
                None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::from(1)),
            };
            Ok(field.from_ratio(&num, &den)?)
        }
        other => Err(CliError::Parse(format!("unexpected scalar {other}"))),
    }
}

/// Residues as integers; rationals as `"a"` or `"a/b"` strings.
pub fn encode_scalar(s: &Scalar) -> Value {
    match s.field().kind() {
        FieldKind::Prime(_) => Value::from(s.residue().expect("prime field")),
        FieldKind::Rationals => Value::from(s.to_string()),
    }
}

pub fn encode_vector(v: &Vector) -> Vec<Value> {
    v.entries().iter().map(encode_scalar).collect()
}

pub fn encode_matrix(m: &Matrix) -> Vec<Vec<Value>> {
    m.row_vectors().iter().map(encode_vector).collect()
}

/// Coefficients in ascending degree.
pub fn encode_poly(p: &Poly) -> Vec<Value> {
    p.coeffs().iter().map(encode_scalar).collect()
}

pub fn encode_field(field: FieldSpec) -> Value {
    match field.kind() {
        FieldKind::Prime(p) => serde_json::json!({ "p": p }),
        FieldKind::Rationals => serde_json::json!({ "rationals": true }),
    }
}

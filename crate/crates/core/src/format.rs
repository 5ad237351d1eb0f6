//! JSON documents for complexes and presentations.
//!
//! ```text
//! {"kind": "adc", "generators": [{"name", "dim", "boundary": {name: coeff}, "augmentation"}]}
//! {"kind": "polygraph", "generators": [{"name", "dim", "src": EXPR, "tgt": EXPR}]}
//! ```
//!
//! `EXPR` is the serde form of [`CellExpr`]. Output is canonical: keys are
//! sorted and generators appear in declaration order.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::adc::{Adc, AdcError};
use crate::polygraph::{CellExpr, PolyGenerator, PolyPresentation, PolygraphError, PresentationBuilder};
use crate::zlin::IntVector;
use crate::Name;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("validation error at `{generator}`: {reason}")]
    Validation { generator: Name, reason: String },
}

#[derive(Clone, Debug)]
pub enum Document {
    Adc(Adc),
    Polygraph(PolyPresentation),
}

impl Document {
    /// The complex itself, or the linearization of the presentation.
    pub fn complex(&self) -> &Adc {
        match self {
            Document::Adc(c) => c,
            Document::Polygraph(p) => p.lambda(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AdcDoc {
    #[allow(dead_code)]
    kind: String,
    generators: Vec<AdcEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AdcEntry {
    name: String,
    dim: usize,
    #[serde(default)]
    boundary: BTreeMap<String, i64>,
    #[serde(default)]
    augmentation: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyDoc {
    #[allow(dead_code)]
    kind: String,
    generators: Vec<PolyEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyEntry {
    name: String,
    dim: usize,
    #[serde(default)]
    src: Option<CellExpr>,
    #[serde(default)]
    tgt: Option<CellExpr>,
}

fn json_error(e: serde_json::Error) -> FormatError {
    match e.classify() {
        serde_json::error::Category::Data => FormatError::Schema(e.to_string()),
        _ => FormatError::Parse { line: e.line(), column: e.column(), message: e.to_string() },
    }
}

fn adc_error(e: AdcError) -> FormatError {
    FormatError::Schema(e.to_string())
}

fn poly_error(e: PolygraphError) -> FormatError {
    match e {
        PolygraphError::IllTyped { generator, reason } | PolygraphError::Linearization { generator, reason } => {
            FormatError::Validation { generator, reason }
        }
        PolygraphError::NotParallel { ref generator } => {
            FormatError::Validation { generator: generator.clone(), reason: e.to_string() }
        }
        other => FormatError::Schema(other.to_string()),
    }
}

/// Parses either kind of document.
pub fn parse(text: &str) -> Result<Document, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    match value.get("kind").and_then(Value::as_str) {
        Some("adc") => adc_from_value(value).map(Document::Adc),
        Some("polygraph") => polygraph_from_value(value).map(Document::Polygraph),
        Some(other) => Err(FormatError::Schema(format!("unknown kind `{other}`"))),
        None => Err(FormatError::Schema("missing string field `kind`".into())),
    }
}

pub fn parse_adc(text: &str) -> Result<Adc, FormatError> {
    match parse(text)? {
        Document::Adc(c) => Ok(c),
        Document::Polygraph(_) => Err(FormatError::Schema("expected kind `adc`".into())),
    }
}

pub fn parse_polygraph(text: &str) -> Result<PolyPresentation, FormatError> {
    match parse(text)? {
        Document::Polygraph(p) => Ok(p),
        Document::Adc(_) => Err(FormatError::Schema("expected kind `polygraph`".into())),
    }
}

fn adc_from_value(value: Value) -> Result<Adc, FormatError> {
    let doc: AdcDoc = serde_json::from_value(value).map_err(json_error)?;
    let mut c = Adc::new();
    for g in doc.generators {
        let boundary = IntVector::from_terms(g.boundary).map_err(|e| FormatError::Schema(e.to_string()))?;
        if g.dim == 0 && !boundary.is_zero() {
            return Err(FormatError::Schema(format!("point `{}` has a boundary", g.name)));
        }
        c.add_generator(g.name, g.dim, boundary, g.augmentation).map_err(adc_error)?;
    }
    let report = c.validate().map_err(adc_error)?;
    if let Some(f) = report.failures.first() {
        let generator = match f {
            crate::adc::ValidationFailure::BoundarySquared { generator, .. }
            | crate::adc::ValidationFailure::AugmentedBoundary { generator, .. } => generator.clone(),
        };
        return Err(FormatError::Validation { generator, reason: f.to_string() });
    }
    Ok(c)
}

fn polygraph_from_value(value: Value) -> Result<PolyPresentation, FormatError> {
    let doc: PolyDoc = serde_json::from_value(value).map_err(json_error)?;
    let mut b = PresentationBuilder::new();
    for g in doc.generators {
        let boundary = match (g.src, g.tgt) {
            (Some(s), Some(t)) => Some((s, t)),
            (None, None) => None,
            _ => return Err(FormatError::Schema(format!("`{}` needs both `src` and `tgt` or neither", g.name))),
        };
        b.push(PolyGenerator { name: g.name.into(), dim: g.dim, boundary }).map_err(poly_error)?;
    }
    b.build().map_err(poly_error)
}

fn render(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

pub fn adc_to_value(c: &Adc) -> Value {
    let generators: Vec<Value> = c
        .generators()
        .map(|g| {
            let boundary: serde_json::Map<String, Value> =
                g.boundary.iter().map(|(n, k)| (n.to_string(), json!(k))).collect();
            json!({"name": g.name.as_str(), "dim": g.dim, "boundary": boundary, "augmentation": g.augmentation})
        })
        .collect();
    json!({"kind": "adc", "generators": generators})
}

pub fn polygraph_to_value(p: &PolyPresentation) -> Value {
    let generators: Vec<Value> = p
        .generators()
        .iter()
        .map(|g| match &g.boundary {
            None => json!({"name": g.name.as_str(), "dim": g.dim}),
            Some((s, t)) => json!({
                "name": g.name.as_str(),
                "dim": g.dim,
                "src": serde_json::to_value(s).expect("expressions serialize"),
                "tgt": serde_json::to_value(t).expect("expressions serialize"),
            }),
        })
        .collect();
    json!({"kind": "polygraph", "generators": generators})
}

pub fn serialize_adc(c: &Adc) -> String {
    render(adc_to_value(c))
}

pub fn serialize_polygraph(p: &PolyPresentation) -> String {
    render(polygraph_to_value(p))
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Adc(c) => serialize_adc(c),
        Document::Polygraph(p) => serialize_polygraph(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, simplex_complex, standard_entries};

    #[test]
    fn simplex_round_trips() {
        let c = simplex_complex(2);
        let text = serialize_adc(&c);
        assert_eq!(parse_adc(&text).unwrap(), c);
        assert_eq!(c, build("oriental", &[2]).unwrap().complex.unwrap());
    }

    #[test]
    fn output_is_canonical() {
        for e in standard_entries() {
            if let Some(c) = &e.complex {
                let text = serialize_adc(c);
                assert_eq!(serialize_adc(&parse_adc(&text).unwrap()), text, "{}", e.name);
            }
            if let Some(p) = &e.presentation {
                let text = serialize_polygraph(p);
                let back = parse_polygraph(&text).unwrap();
                assert_eq!(&back, p, "{}", e.name);
                assert_eq!(serialize_polygraph(&back), text, "{}", e.name);
            }
        }
        let text = serialize_adc(&simplex_complex(1));
        let keys = ["\"augmentation\"", "\"boundary\"", "\"dim\"", "\"name\""];
        let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    }

    #[test]
    fn error_classes() {
        assert!(matches!(parse("{\"kind\": \"adc\",\n  \"generators\": [}"), Err(FormatError::Parse { line: 2, .. })));
        let unknown = r#"{"kind":"adc","generators":[{"name":"f","dim":1,"boundary":{"y":1,"x":-1}}]}"#;
        assert!(matches!(parse(unknown), Err(FormatError::Schema(_))));
        let poly_unknown = r#"{"kind":"polygraph","generators":[{"name":"f","dim":1,"src":{"gen":"x"},"tgt":{"gen":"y"}}]}"#;
        assert!(matches!(parse(poly_unknown), Err(FormatError::Schema(_))));
        let not_closed = r#"{"kind":"adc","generators":[
            {"name":"x","dim":0,"augmentation":1},{"name":"y","dim":0,"augmentation":1},
            {"name":"f","dim":1,"boundary":{"y":1}}]}"#;
        match parse(not_closed) {
            Err(FormatError::Validation { generator, .. }) => assert_eq!(generator.as_str(), "f"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse(r#"{"kind":"chain","generators":[]}"#), Err(FormatError::Schema(_))));
    }

    #[test]
    fn empty_documents_are_valid() {
        assert!(parse_adc(r#"{"kind":"adc","generators":[]}"#).unwrap().is_empty());
        assert!(parse_polygraph(r#"{"kind":"polygraph","generators":[]}"#).unwrap().is_empty());
    }
}

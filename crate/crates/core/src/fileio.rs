//! File formats for graphs, splines, and isomorphisms (JSON-compatible
//! structured text).
//!
//! Graph files: `{"ring": ..., "vertices": [...], "edges": [{"from",
//! "to", "ideal": [element, ...]}]}`. Integers are written as numbers
//! (decimal strings are also accepted, and are emitted for values beyond
//! the double-safe range); polynomials are ascending coefficient arrays.
//! Canonical output lists vertices in declaration order and edges sorted
//! by (min endpoint, max endpoint).
//!
//! Spline files: `{"graph": <path or inline graph>, "values": {vertex:
//! element}}` with values in vertex-declaration order. Iso files:
//! `{"vertex_map": {name: name}, "automorphism": "identity" |
//! {"epsilon": 1 | -1, "shift": n}}`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::EdgeLabeledGraph;
use crate::iso::LabeledIso;
use crate::ring::{Automorphism, Ideal, RingDescriptor, RingValue};
use crate::spline::Spline;
use crate::Result;

/// Largest magnitude emitted as a JSON number; larger values become
/// decimal strings so double-based readers cannot corrupt them.
const JSON_SAFE_MAX: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Number(i64),
    Text(String),
}

impl Scalar {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Scalar::Number(n) => Ok(BigInt::from(*n)),
            Scalar::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer literal `{s}`"))),
        }
    }

    fn from_bigint(value: &BigInt) -> Scalar {
        match value.to_i64() {
            Some(n) if n.abs() <= JSON_SAFE_MAX => Scalar::Number(n),
            _ => Scalar::Text(value.to_string()),
        }
    }
}

/// One ring element: a scalar for `Z` and `Z/mZ`, an ascending
/// coefficient array for `Z[x]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Scalar(Scalar),
    Coefficients(Vec<Scalar>),
}

impl ElementRepr {
    pub fn to_value(&self, ring: &RingDescriptor) -> Result<RingValue> {
        match (ring, self) {
            (RingDescriptor::Integers | RingDescriptor::IntegersMod { .. }, ElementRepr::Scalar(s)) => {
                Ok(RingValue::from_integer(ring, s.to_bigint()?))
            }
            (RingDescriptor::IntegerPolynomials { variable }, ElementRepr::Coefficients(cs)) => {
                let coeffs = cs.iter().map(Scalar::to_bigint).collect::<Result<Vec<_>>>()?;
                Ok(RingValue::polynomial(variable.clone(), coeffs))
            }
            (RingDescriptor::IntegerPolynomials { .. }, ElementRepr::Scalar(_)) => Err(
                Error::Parse("polynomial elements must be coefficient arrays".to_string()),
            ),
            (_, ElementRepr::Coefficients(_)) => Err(Error::Parse(
                "integer elements must be numbers or decimal strings".to_string(),
            )),
        }
    }

    pub fn from_value(value: &RingValue) -> ElementRepr {
        if let Some(coeffs) = value.as_poly() {
            ElementRepr::Coefficients(coeffs.iter().map(Scalar::from_bigint).collect())
        } else if let Some(v) = value.as_integer() {
            ElementRepr::Scalar(Scalar::from_bigint(v))
        } else {
            let r = value.as_residue().expect("exhaustive payloads");
            ElementRepr::Scalar(Scalar::from_bigint(&BigInt::from(r)))
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EdgeFile {
    from: String,
    to: String,
    ideal: Vec<ElementRepr>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphFile {
    ring: RingDescriptor,
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
}

impl GraphFile {
    fn into_graph(self) -> Result<EdgeLabeledGraph> {
        self.ring.validate()?;
        let mut builder = EdgeLabeledGraph::builder(self.ring.clone()).vertices(self.vertices);
        for edge in self.edges {
            let generators = edge
                .ideal
                .iter()
                .map(|e| e.to_value(&self.ring))
                .collect::<Result<Vec<_>>>()?;
            if generators.is_empty() {
                return Err(Error::Parse(format!(
                    "edge {} -- {} has an empty generator list",
                    edge.from, edge.to
                )));
            }
            let ideal = Ideal::new(self.ring.clone(), generators)?;
            builder = builder.edge(&edge.from, &edge.to, ideal);
        }
        builder.build()
    }

    fn from_graph(graph: &EdgeLabeledGraph) -> GraphFile {
        let mut edges: Vec<EdgeFile> = graph
            .edges()
            .map(|(from, to, ideal)| {
                let (from, to) = if from <= to { (from, to) } else { (to, from) };
                EdgeFile {
                    from: from.to_string(),
                    to: to.to_string(),
                    ideal: ideal.generators().iter().map(ElementRepr::from_value).collect(),
                }
            })
            .collect();
        edges.sort_by(|a, b| (&a.from, &a.to).cmp(&(&b.from, &b.to)));
        GraphFile {
            ring: graph.ring().clone(),
            vertices: graph.vertices().to_vec(),
            edges,
        }
    }
}

pub fn parse_graph_json(text: &str) -> Result<EdgeLabeledGraph> {
    let file: GraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_graph()
}

pub fn graph_to_canonical_json(graph: &EdgeLabeledGraph) -> String {
    let mut out = serde_json::to_string_pretty(&GraphFile::from_graph(graph))
        .expect("graph serialization cannot fail");
    out.push('\n');
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<EdgeLabeledGraph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::File {
        file: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_graph_json(&text).map_err(|e| Error::File {
        file: path.display().to_string(),
        detail: e.to_string(),
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum GraphRef {
    Path(String),
    Inline(GraphFile),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SplineFile {
    graph: GraphRef,
    values: IndexMap<String, ElementRepr>,
}

/// A parsed spline file: the graph plus the raw vertex labeling, not yet
/// verified. Use [`SplineDocument::into_spline`] to verify, or hand the
/// labeling to `verify_labeling` for a three-way report.
#[derive(Debug, Clone)]
pub struct SplineDocument {
    pub graph: Arc<EdgeLabeledGraph>,
    pub labeling: BTreeMap<String, RingValue>,
}

impl SplineDocument {
    pub fn into_spline(self) -> Result<Spline> {
        Spline::new(&self.graph, self.labeling)
    }
}

pub fn parse_spline_json(text: &str, base_dir: Option<&Path>) -> Result<SplineDocument> {
    let file: SplineFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let graph = match file.graph {
        GraphRef::Inline(graph_file) => graph_file.into_graph()?,
        GraphRef::Path(relative) => {
            let resolved = match base_dir {
                Some(dir) => dir.join(&relative),
                None => std::path::PathBuf::from(&relative),
            };
            read_graph_file(resolved)?
        }
    };
    let ring = graph.ring().clone();
    let mut labeling = BTreeMap::new();
    for (vertex, element) in &file.values {
        labeling.insert(vertex.clone(), element.to_value(&ring)?);
    }
    Ok(SplineDocument {
        graph: Arc::new(graph),
        labeling,
    })
}

pub fn read_spline_file(path: impl AsRef<Path>) -> Result<SplineDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::File {
        file: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_spline_json(&text, path.parent()).map_err(|e| match e {
        e @ Error::File { .. } => e,
        other => Error::File {
            file: path.display().to_string(),
            detail: other.to_string(),
        },
    })
}

/// Writes a spline with its graph inlined, values in declaration order.
pub fn spline_to_canonical_json(spline: &Spline) -> String {
    let values: IndexMap<String, ElementRepr> = spline
        .values()
        .map(|(name, value)| (name.to_string(), ElementRepr::from_value(value)))
        .collect();
    let file = SplineFile {
        graph: GraphRef::Inline(GraphFile::from_graph(spline.graph())),
        values,
    };
    let mut out =
        serde_json::to_string_pretty(&file).expect("spline serialization cannot fail");
    out.push('\n');
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum AutomorphismRepr {
    Named(String),
    Affine { epsilon: i64, shift: i64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct IsoFile {
    vertex_map: IndexMap<String, String>,
    automorphism: AutomorphismRepr,
}

pub fn parse_iso_json(text: &str) -> Result<LabeledIso> {
    let file: IsoFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let automorphism = match file.automorphism {
        AutomorphismRepr::Named(name) if name == "identity" => Automorphism::Identity,
        AutomorphismRepr::Named(name) => {
            return Err(Error::Parse(format!("unknown automorphism `{name}`")))
        }
        AutomorphismRepr::Affine { epsilon, shift } => {
            let negate = match epsilon {
                1 => false,
                -1 => true,
                other => {
                    return Err(Error::Parse(format!(
                        "epsilon must be 1 or -1, got {other}"
                    )))
                }
            };
            Automorphism::PolyAffine {
                negate,
                shift: BigInt::from(shift),
            }
        }
    };
    let vertex_map: BTreeMap<String, String> = file.vertex_map.into_iter().collect();
    Ok(LabeledIso::new(vertex_map, automorphism))
}

pub fn read_iso_file(path: impl AsRef<Path>) -> Result<LabeledIso> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::File {
        file: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_iso_json(&text).map_err(|e| Error::File {
        file: path.display().to_string(),
        detail: e.to_string(),
    })
}

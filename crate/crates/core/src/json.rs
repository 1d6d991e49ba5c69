//! Graph JSON format.
//!
//! ```text
//! {
//!   "edges": [[u, v, weight, id], ...],
//!   "markers": {"a": 6, "b": 1, ...},
//!   "rotation": {"0": [edge ids, counterclockwise], ...},
//!   "vertices": [0, 1, ...]
//! }
//! ```
//!
//! `markers` and `rotation` are optional. Keys are written in sorted order
//! and arrays sorted by id, so output is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Marker, Multigraph, Rotation, VertexId, WeightedEdge};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId, i64, EdgeId)>,
    #[serde(default)]
    rotation: Option<BTreeMap<VertexId, Vec<EdgeId>>>,
    #[serde(default)]
    markers: Option<BTreeMap<Marker, VertexId>>,
}

pub fn graph_from_json(text: &str) -> Result<Multigraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|source| Error::Json {
        context: "graph JSON".into(),
        source,
    })?;
    let edges = doc
        .edges
        .iter()
        .map(|&(u, v, w, id)| WeightedEdge::new(id, u, v, w));
    let mut g = Multigraph::new(doc.vertices, edges).map_err(|e| field_error("edges", e))?;
    if let Some(rotation) = doc.rotation {
        g = g
            .with_rotation(rotation)
            .map_err(|e| field_error("rotation", e))?;
    }
    if let Some(markers) = doc.markers {
        g = g
            .with_markers(&markers)
            .map_err(|e| field_error("markers", e))?;
    }
    Ok(g)
}

fn field_error(field: &str, e: Error) -> Error {
    Error::InvalidParameter(format!("field \"{field}\": {e}"))
}

pub fn graph_to_json(g: &Multigraph) -> String {
    let mut out = String::from("{\n  \"edges\": [");
    for (i, e) in g.edges().iter().enumerate() {
        let sep = if i == 0 { "\n" } else { ",\n" };
        let _ = write!(out, "{sep}    [{}, {}, {}, {}]", e.u, e.v, e.weight, e.id);
    }
    out.push_str(if g.edges().is_empty() { "]" } else { "\n  ]" });
    if !g.markers().is_empty() {
        let items: Vec<String> = g
            .markers()
            .iter()
            .map(|(m, v)| format!("\"{}\": {v}", m.name()))
            .collect();
        let _ = write!(out, ",\n  \"markers\": {{{}}}", items.join(", "));
    }
    if let Some(rotation) = g.rotation() {
        out.push_str(",\n  \"rotation\": {");
        write_rotation(&mut out, rotation);
        out.push('}');
    }
    let vertices: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
    let _ = write!(out, ",\n  \"vertices\": [{}]\n}}\n", vertices.join(", "));
    out
}

fn write_rotation(out: &mut String, rotation: &Rotation) {
    for (i, (v, cycle)) in rotation.iter().enumerate() {
        let sep = if i == 0 { "\n" } else { ",\n" };
        let ids: Vec<String> = cycle.iter().map(|e| e.to_string()).collect();
        let _ = write!(out, "{sep}    \"{v}\": [{}]", ids.join(", "));
    }
    if !rotation.is_empty() {
        out.push_str("\n  ");
    }
}

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Rotation, VertexId, WeightedEdge};

/// A directed traversal of an edge, leaving `tail`.
type Dart = (EdgeId, VertexId);

/// Face boundaries of an embedded graph, as dart sequences.
///
/// From dart `e` entering vertex `h`, the walk continues along the successor
/// of `e` in the rotation at `h`. Faces are numbered in order of discovery,
/// scanning darts by edge id.
pub fn faces(g: &Multigraph) -> Result<Vec<Vec<Dart>>> {
    let rotation = g.rotation().ok_or(Error::MissingRotation)?;
    let position: HashMap<(VertexId, EdgeId), usize> = rotation
        .iter()
        .flat_map(|(&v, cycle)| cycle.iter().enumerate().map(move |(i, &e)| ((v, e), i)))
        .collect();
    let mut visited: HashMap<Dart, ()> = HashMap::new();
    let mut out = Vec::new();
    for e in g.edges() {
        for start in [(e.id, e.u), (e.id, e.v)] {
            if visited.contains_key(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            loop {
                visited.insert(dart, ());
                face.push(dart);
                let (id, tail) = dart;
                let head = g.edge(id).expect("edge").other(tail).expect("endpoint");
                let cycle = &rotation[&head];
                let next = cycle[(position[&(head, id)] + 1) % cycle.len()];
                dart = (next, head);
                if dart == start {
                    break;
                }
            }
            out.push(face);
        }
    }
    Ok(out)
}

/// Face-vertex dual of a connected embedded ordinary graph.
///
/// Each edge keeps its id and joins the two faces it borders; the dual
/// rotation at a face lists its edges in boundary order.
pub fn planar_dual(g: &Multigraph) -> Result<Multigraph> {
    if g.rotation().is_none() {
        return Err(Error::MissingRotation);
    }
    g.require_ordinary()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let faces = faces(g)?;
    let euler = g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Error::NotPlanar(euler));
    }
    let mut face_of: HashMap<Dart, VertexId> = HashMap::new();
    for (f, darts) in faces.iter().enumerate() {
        for &d in darts {
            face_of.insert(d, f as VertexId);
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let (f1, f2) = (face_of[&(e.id, e.u)], face_of[&(e.id, e.v)]);
        if f1 == f2 {
            return Err(Error::Bridge(e.id));
        }
        edges.push(WeightedEdge::unit(e.id, f1, f2));
    }
    let rotation: Rotation = faces
        .iter()
        .enumerate()
        .map(|(f, darts)| (f as VertexId, darts.iter().map(|&(id, _)| id).collect()))
        .collect();
    Multigraph::new(0..faces.len() as VertexId, edges)?.with_rotation(rotation)
}

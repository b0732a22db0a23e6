//! Plabic graphs embedded in a disk.
//!
//! A graph is stored as a rotation system: for every vertex the clockwise cyclic order of its
//! incident edges. Boundary vertices `b_1..b_n` sit on the disk boundary in clockwise order and
//! have degree one. Faces are traced with the boundary arcs between consecutive boundary
//! vertices spliced in, so a face touching the boundary contains one or more arcs.

mod canonical;
mod dot;
mod faces;
mod moveclass;
mod moves;
mod rectangles;
mod work;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::GrassmannShape;

pub use faces::{FaceLabeling, Faces, Trip};
pub use moveclass::{MoveClass, MoveClassMember};
pub use moves::{MoveDescriptor, MoveKind, SquareMoveInfo};
pub use rectangles::{build_rectangles_graph, rectangles_orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flipped(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// Boundary vertex `b_i`, one-based.
    Boundary(usize),
    Internal(Color),
}

/// Directed half-edge: `2*e` runs `ends[0] -> ends[1]`, `2*e + 1` the other way.
pub type Dart = usize;

#[inline]
pub fn dart(edge: usize, reversed: bool) -> Dart {
    2 * edge + reversed as usize
}

#[inline]
pub fn dart_edge(d: Dart) -> usize {
    d / 2
}

#[inline]
pub fn dart_rev(d: Dart) -> Dart {
    d ^ 1
}

/// An embedded plabic graph. Values are immutable; moves return new graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlabicGraph {
    shape: GrassmannShape,
    kinds: Vec<VertexKind>,
    edges: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
    boundary: Vec<usize>,
}

impl PlabicGraph {
    /// Builds and validates a graph. `boundary[i]` is the vertex id of `b_{i+1}`.
    pub fn new(
        shape: GrassmannShape,
        colors: Vec<Option<Color>>,
        boundary: Vec<usize>,
        edges: Vec<[usize; 2]>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if boundary.len() != shape.n {
            return Err(Error::MalformedGraph(format!(
                "expected {} boundary vertices, got {}",
                shape.n,
                boundary.len()
            )));
        }
        let mut kinds: Vec<Option<VertexKind>> = colors.iter().map(|c| c.map(VertexKind::Internal)).collect();
        for (i, &v) in boundary.iter().enumerate() {
            match kinds.get(v) {
                Some(None) => kinds[v] = Some(VertexKind::Boundary(i + 1)),
                Some(Some(_)) => {
                    return Err(Error::MalformedGraph(format!("boundary vertex {v} is listed twice or has a color")))
                }
                None => return Err(Error::MalformedGraph(format!("boundary vertex {v} does not exist"))),
            }
        }
        let kinds = kinds
            .into_iter()
            .enumerate()
            .map(|(v, k)| k.ok_or_else(|| Error::MalformedGraph(format!("vertex {v} has no color"))))
            .collect::<Result<Vec<_>>>()?;
        let g = Self { shape, kinds, edges, rotation, boundary };
        g.validate()?;
        Ok(g)
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        match self.kinds[v] {
            VertexKind::Internal(c) => Some(c),
            VertexKind::Boundary(_) => None,
        }
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        matches!(self.kinds[v], VertexKind::Boundary(_))
    }

    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Clockwise incident edges of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Vertex id of `b_i`, one-based.
    pub fn boundary_vertex(&self, i: usize) -> usize {
        self.boundary[i - 1]
    }

    pub fn boundary_vertices(&self) -> &[usize] {
        &self.boundary
    }

    pub fn internal_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.kinds.len()).filter(|&v| !self.is_boundary(v))
    }

    pub fn dart_tail(&self, d: Dart) -> usize {
        self.edges[dart_edge(d)][d & 1]
    }

    pub fn dart_head(&self, d: Dart) -> usize {
        self.edges[dart_edge(d)][1 - (d & 1)]
    }

    /// The dart along `e` leaving `v`.
    pub fn dart_from(&self, e: usize, v: usize) -> Dart {
        dart(e, self.edges[e][0] != v)
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub(crate) fn position(&self, v: usize, e: usize) -> usize {
        self.rotation[v].iter().position(|&x| x == e).expect("edge is incident to vertex")
    }

    /// Returns a copy with vertex ids permuted by `perm` (old id -> new id) and edges by
    /// `edge_perm`. Used to test that encodings ignore ids.
    pub fn relabeled(&self, perm: &[usize], edge_perm: &[usize]) -> Self {
        let mut kinds = vec![VertexKind::Boundary(0); self.kinds.len()];
        let mut rotation = vec![Vec::new(); self.kinds.len()];
        for v in 0..self.kinds.len() {
            kinds[perm[v]] = self.kinds[v];
            rotation[perm[v]] = self.rotation[v].iter().map(|&e| edge_perm[e]).collect();
        }
        let mut edges = vec![[0, 0]; self.edges.len()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            edges[edge_perm[e]] = [perm[a], perm[b]];
        }
        let boundary = self.boundary.iter().map(|&v| perm[v]).collect();
        Self { shape: self.shape, kinds, edges, rotation, boundary }
    }

    fn validate(&self) -> Result<()> {
        let nv = self.kinds.len();
        if self.rotation.len() != nv {
            return Err(Error::MalformedGraph("rotation table size differs from vertex count".into()));
        }
        let mut seen = vec![0usize; self.edges.len()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if a >= nv || b >= nv {
                return Err(Error::MalformedGraph(format!("edge {e} has a missing endpoint")));
            }
            if a == b {
                return Err(Error::MalformedGraph(format!("edge {e} is a loop")));
            }
        }
        for v in 0..nv {
            for &e in &self.rotation[v] {
                let Some(ends) = self.edges.get(e) else {
                    return Err(Error::MalformedGraph(format!("rotation of {v} names missing edge {e}")));
                };
                if !ends.contains(&v) {
                    return Err(Error::MalformedGraph(format!("rotation of {v} names non-incident edge {e}")));
                }
                seen[e] += 1;
            }
        }
        if let Some(e) = seen.iter().position(|&c| c != 2) {
            return Err(Error::MalformedGraph(format!("edge {e} does not appear once at each endpoint")));
        }
        for (i, &b) in self.boundary.iter().enumerate() {
            if self.degree(b) != 1 {
                return Err(Error::MalformedGraph(format!("boundary vertex b_{} has degree {}", i + 1, self.degree(b))));
            }
        }
        for v in self.internal_vertices() {
            match self.degree(v) {
                0 => return Err(Error::MalformedGraph(format!("internal vertex {v} is isolated"))),
                1 => {
                    let w = self.other_end(self.rotation[v][0], v);
                    if !self.is_boundary(w) {
                        return Err(Error::MalformedGraph(format!("internal leaf {v} is not adjacent to the boundary")));
                    }
                }
                _ => {}
            }
        }
        // Every component must reach the boundary.
        let mut reached = vec![false; nv];
        let mut queue: VecDeque<usize> = self.boundary.iter().copied().collect();
        for &b in &self.boundary {
            reached[b] = true;
        }
        while let Some(v) = queue.pop_front() {
            for &e in &self.rotation[v] {
                let w = self.other_end(e, v);
                if !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = reached.iter().position(|r| !r) {
            return Err(Error::MalformedGraph(format!("vertex {v} lies in a component without boundary vertices")));
        }
        let faces = self.faces();
        let euler = nv as i64 - (self.edges.len() + self.shape.n) as i64 + (faces.len() + 1) as i64;
        if euler != 2 {
            return Err(Error::MalformedGraph(format!("rotation system is not a disk embedding (V-E+F = {euler})")));
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = GraphDoc::from(self);
        serde_json::to_value(doc).expect("graph serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphDoc::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.into_graph()
    }
}

/// On-disk form of a plabic graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub shape: GrassmannShape,
    pub vertices: Vec<VertexDoc>,
    /// Vertex ids of `b_1..b_n`.
    pub boundary: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub rotation: BTreeMap<usize, Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub color: String,
}

impl From<&PlabicGraph> for GraphDoc {
    fn from(g: &PlabicGraph) -> Self {
        let vertices = (0..g.vertex_count())
            .map(|v| VertexDoc {
                id: v,
                color: match g.kind(v) {
                    VertexKind::Boundary(_) => "boundary".to_string(),
                    VertexKind::Internal(Color::Black) => "black".to_string(),
                    VertexKind::Internal(Color::White) => "white".to_string(),
                },
            })
            .collect();
        GraphDoc {
            shape: g.shape,
            vertices,
            boundary: g.boundary.clone(),
            edges: g.edges.clone(),
            rotation: (0..g.vertex_count()).map(|v| (v, g.rotation[v].clone())).collect(),
        }
    }
}

impl GraphDoc {
    pub fn into_graph(self) -> Result<PlabicGraph> {
        let nv = self.vertices.len();
        let mut colors = vec![None; nv];
        for vd in &self.vertices {
            if vd.id >= nv {
                return Err(Error::Parse(format!("vertex id {} out of range", vd.id)));
            }
            colors[vd.id] = match vd.color.as_str() {
                "black" => Some(Color::Black),
                "white" => Some(Color::White),
                "boundary" => None,
                other => return Err(Error::Parse(format!("unknown vertex color {other:?}"))),
            };
        }
        let mut rotation = vec![Vec::new(); nv];
        for (v, rot) in self.rotation {
            if v >= nv {
                return Err(Error::Parse(format!("rotation for missing vertex {v}")));
            }
            rotation[v] = rot;
        }
        let shape = GrassmannShape::new(self.shape.k, self.shape.n)?;
        PlabicGraph::new(shape, colors, self.boundary, self.edges, rotation)
    }
}

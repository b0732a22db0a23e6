//! Mutable scratch representation used by moves and normalization. Vertex and edge ids stay
//! stable while editing; `finish` compacts them and reports where every edge went.

use std::collections::BTreeMap;

use super::{Color, PlabicGraph, VertexKind};
use crate::error::{Error, Result};
use crate::partitions::GrassmannShape;

#[derive(Clone, Debug)]
pub(crate) struct WorkEdge {
    pub ends: [usize; 2],
    /// Tail vertex when the edge carries an orientation.
    pub tail: Option<usize>,
}

#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub shape: GrassmannShape,
    pub kinds: Vec<Option<VertexKind>>,
    pub edges: Vec<Option<WorkEdge>>,
    pub rotation: Vec<Vec<usize>>,
    pub boundary: Vec<usize>,
    /// Edges glued away by degree-two removal, pointing at the edge that absorbed them.
    pub absorbed: BTreeMap<usize, usize>,
}

/// Result of compacting a `Work`.
pub(crate) struct Finished {
    pub graph: PlabicGraph,
    /// Old edge id to new edge id; glued edges map to the edge that absorbed them.
    pub edge_map: Vec<Option<usize>>,
    /// Orientation of new edges as "runs from `ends[0]` to `ends[1]`", if every surviving edge had one.
    pub orientation: Option<Vec<bool>>,
}

impl Work {
    pub fn from_graph(g: &PlabicGraph, orientation: Option<&[bool]>) -> Self {
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &ends)| {
                let tail = orientation.map(|o| if o[e] { ends[0] } else { ends[1] });
                Some(WorkEdge { ends, tail })
            })
            .collect();
        Work {
            shape: g.shape(),
            kinds: (0..g.vertex_count()).map(|v| Some(g.kind(v))).collect(),
            edges,
            rotation: (0..g.vertex_count()).map(|v| g.rotation(v).to_vec()).collect(),
            boundary: g.boundary_vertices().to_vec(),
            absorbed: BTreeMap::new(),
        }
    }

    pub fn edge(&self, e: usize) -> &WorkEdge {
        self.edges[e].as_ref().expect("live edge")
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edge(e).ends;
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        match self.kinds[v] {
            Some(VertexKind::Internal(c)) => Some(c),
            _ => None,
        }
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> usize {
        self.kinds.push(Some(kind));
        self.rotation.push(Vec::new());
        self.kinds.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize, tail: Option<usize>) -> usize {
        self.edges.push(Some(WorkEdge { ends: [a, b], tail }));
        self.edges.len() - 1
    }

    fn replace_end(&mut self, e: usize, from: usize, to: usize) {
        let edge = self.edges[e].as_mut().expect("live edge");
        for end in edge.ends.iter_mut() {
            if *end == from {
                *end = to;
            }
        }
        if edge.tail == Some(from) {
            edge.tail = Some(to);
        }
    }

    /// Contracts edge `e` between two internal vertices of the same color. The merged vertex
    /// keeps the id of `ends[0]`.
    pub fn contract(&mut self, e: usize) -> Result<usize> {
        let [u, w] = self.edge(e).ends;
        match (self.color(u), self.color(w)) {
            (Some(a), Some(b)) if a == b => {}
            _ => return Err(Error::IllegalMove(format!("edge {e} is not unicolored"))),
        }
        if self.rotation[u].iter().any(|&f| f != e && self.other_end(f, u) == w) {
            return Err(Error::IllegalMove(format!("contracting edge {e} would create a loop")));
        }
        let pu = self.rotation[u].iter().position(|&x| x == e).unwrap();
        let pw = self.rotation[w].iter().position(|&x| x == e).unwrap();
        let rw = std::mem::take(&mut self.rotation[w]);
        let deg_w = rw.len();
        let tail_part: Vec<usize> = (1..deg_w).map(|s| rw[(pw + s) % deg_w]).collect();
        for &f in &tail_part {
            self.replace_end(f, w, u);
        }
        let mut merged = Vec::with_capacity(self.rotation[u].len() + deg_w - 2);
        merged.extend_from_slice(&self.rotation[u][..pu]);
        merged.extend_from_slice(&tail_part);
        merged.extend_from_slice(&self.rotation[u][pu + 1..]);
        self.rotation[u] = merged;
        self.edges[e] = None;
        self.kinds[w] = None;
        Ok(u)
    }

    /// Splits internal vertex `v`: the cyclic run of `len` consecutive edges starting at rotation
    /// position `start` moves to a new vertex of the same color, joined to `v` by a new edge.
    /// Returns (new vertex, new edge).
    pub fn uncontract(&mut self, v: usize, start: usize, len: usize, new_tail_is_new: Option<bool>) -> Result<(usize, usize)> {
        let color = self
            .color(v)
            .ok_or_else(|| Error::IllegalMove(format!("vertex {v} is not internal")))?;
        let rot = self.rotation[v].clone();
        let deg = rot.len();
        if len == 0 || len >= deg || start >= deg {
            return Err(Error::IllegalMove(format!("bad split of vertex {v}")));
        }
        let moved: Vec<usize> = (0..len).map(|s| rot[(start + s) % deg]).collect();
        let kept: Vec<usize> = (len..deg).map(|s| rot[(start + s) % deg]).collect();
        let w = self.add_vertex(VertexKind::Internal(color));
        let tail = new_tail_is_new.map(|is_new| if is_new { w } else { v });
        let e = self.add_edge(v, w, tail);
        for &f in &moved {
            self.replace_end(f, v, w);
        }
        // Clockwise at v: kept run, then the new edge where the moved run used to be.
        let mut rv = kept;
        rv.push(e);
        let mut rw = moved;
        rw.push(e);
        self.rotation[v] = rv;
        self.rotation[w] = rw;
        Ok((w, e))
    }

    /// Inserts a degree-two vertex of the given color in the middle of edge `e`.
    pub fn insert(&mut self, e: usize, color: Color) -> usize {
        let WorkEdge { ends: [a, b], tail } = self.edge(e).clone();
        let m = self.add_vertex(VertexKind::Internal(color));
        let f = self.add_edge(m, b, tail.map(|t| if t == a { m } else { b }));
        {
            let edge = self.edges[e].as_mut().unwrap();
            edge.ends = [a, m];
            edge.tail = tail.map(|t| if t == a { a } else { m });
        }
        for x in self.rotation[b].iter_mut() {
            if *x == e {
                *x = f;
            }
        }
        self.rotation[m] = vec![e, f];
        m
    }

    /// Removes an internal degree-two vertex and glues its edges.
    pub fn remove_degree_two(&mut self, v: usize) -> Result<()> {
        if self.color(v).is_none() || self.rotation[v].len() != 2 {
            return Err(Error::IllegalMove(format!("vertex {v} is not an internal degree-two vertex")));
        }
        let (e1, e2) = (self.rotation[v][0], self.rotation[v][1]);
        let x = self.other_end(e1, v);
        let y = self.other_end(e2, v);
        if x == y {
            return Err(Error::IllegalMove(format!("removing vertex {v} would create a loop")));
        }
        self.replace_end(e1, v, y);
        for r in self.rotation[y].iter_mut() {
            if *r == e2 {
                *r = e1;
            }
        }
        self.edges[e2] = None;
        self.absorbed.insert(e2, e1);
        self.kinds[v] = None;
        self.rotation[v].clear();
        Ok(())
    }

    /// Contracts all unicolored edges and removes all degree-two vertices, to a fixpoint.
    pub fn normalize(&mut self) -> Result<()> {
        loop {
            let mut changed = false;
            for e in 0..self.edges.len() {
                let Some(edge) = &self.edges[e] else { continue };
                let [a, b] = edge.ends;
                if let (Some(c1), Some(c2)) = (self.color(a), self.color(b)) {
                    if c1 == c2 {
                        self.contract(e)?;
                        changed = true;
                    }
                }
            }
            for v in 0..self.kinds.len() {
                if self.color(v).is_some() && self.rotation[v].len() == 2 {
                    self.remove_degree_two(v)?;
                    changed = true;
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    pub fn finish(self) -> Result<Finished> {
        let mut vertex_map = vec![None; self.kinds.len()];
        let mut kinds = Vec::new();
        for (v, k) in self.kinds.iter().enumerate() {
            if let Some(k) = k {
                vertex_map[v] = Some(kinds.len());
                kinds.push(*k);
            }
        }
        let mut edge_map = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        let mut orientation = Some(Vec::new());
        for (e, edge) in self.edges.iter().enumerate() {
            if let Some(edge) = edge {
                edge_map[e] = Some(edges.len());
                let ends = [vertex_map[edge.ends[0]].unwrap(), vertex_map[edge.ends[1]].unwrap()];
                edges.push(ends);
                match (&mut orientation, edge.tail) {
                    (Some(o), Some(t)) => o.push(t == edge.ends[0]),
                    _ => orientation = None,
                }
            }
        }
        for e in 0..self.edges.len() {
            let mut r = e;
            while let Some(&next) = self.absorbed.get(&r) {
                r = next;
            }
            if r != e {
                edge_map[e] = edge_map[r];
            }
        }
        let rotation = self
            .rotation
            .iter()
            .enumerate()
            .filter(|(v, _)| self.kinds[*v].is_some())
            .map(|(_, r)| r.iter().map(|&e| edge_map[e].unwrap()).collect())
            .collect();
        let boundary = self.boundary.iter().map(|&b| vertex_map[b].unwrap()).collect();
        let colors = kinds
            .iter()
            .map(|k| match k {
                VertexKind::Internal(c) => Some(*c),
                VertexKind::Boundary(_) => None,
            })
            .collect();
        let graph = PlabicGraph::new(self.shape, colors, boundary, edges, rotation)?;
        Ok(Finished { graph, edge_map, orientation })
    }
}

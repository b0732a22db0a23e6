use std::collections::VecDeque;
use std::fmt::Write as _;

use super::work::Work;
use super::{Color, PlabicGraph, VertexKind};
use crate::error::Result;

impl PlabicGraph {
    /// Contracts unicolored edges and removes degree-two vertices until neither applies.
    pub fn normalized(&self) -> Result<PlabicGraph> {
        let mut w = Work::from_graph(self, None);
        w.normalize()?;
        Ok(w.finish()?.graph)
    }

    /// Normalizes while carrying a perfect orientation along (`true` = runs `ends[0] -> ends[1]`).
    pub fn normalized_oriented(&self, orientation: &[bool]) -> Result<(PlabicGraph, Vec<bool>)> {
        let mut w = Work::from_graph(self, Some(orientation));
        w.normalize()?;
        let fin = w.finish()?;
        Ok((fin.graph, fin.orientation.expect("every edge keeps its orientation")))
    }

    /// Traversal string of the normal form. Equal strings mean the graphs agree up to
    /// contraction/uncontraction of unicolored edges and insertion/removal of degree-two vertices.
    pub fn canonical_form(&self) -> Result<String> {
        Ok(self.normalized()?.encode())
    }

    /// Boundary-anchored traversal code of this exact graph.
    pub fn encode(&self) -> String {
        let nv = self.vertex_count();
        let mut edge_no = vec![usize::MAX; self.edge_count()];
        let mut next_edge = 0;
        let mut discovered: Vec<Option<usize>> = vec![None; nv];
        let mut out = String::new();
        for &b in self.boundary_vertices() {
            if discovered[b].is_some() {
                continue;
            }
            discovered[b] = Some(self.rotation(b)[0]);
            let mut queue = VecDeque::from([b]);
            while let Some(v) = queue.pop_front() {
                let rot = self.rotation(v);
                let first = discovered[v].unwrap();
                let start = self.position(v, first);
                match self.kind(v) {
                    VertexKind::Boundary(i) => write!(out, "B{i}").unwrap(),
                    VertexKind::Internal(Color::Black) => out.push('K'),
                    VertexKind::Internal(Color::White) => out.push('W'),
                }
                for s in 0..rot.len() {
                    let e = rot[(start + s) % rot.len()];
                    if edge_no[e] == usize::MAX {
                        edge_no[e] = next_edge;
                        next_edge += 1;
                    }
                    write!(out, ".{}", edge_no[e]).unwrap();
                    let w = self.other_end(e, v);
                    if discovered[w].is_none() {
                        discovered[w] = Some(e);
                        queue.push_back(w);
                    }
                }
                out.push(';');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::partitions::GrassmannShape;
    use crate::plabic::{build_rectangles_graph, MoveDescriptor};

    #[test]
    fn encoding_ignores_ids() {
        let g = build_rectangles_graph(GrassmannShape::new(3, 5).unwrap());
        let nv = g.vertex_count();
        let ne = g.edge_count();
        let perm: Vec<usize> = (0..nv).map(|v| (v + 3) % nv).collect();
        let eperm: Vec<usize> = (0..ne).rev().collect();
        let h = g.relabeled(&perm, &eperm);
        assert_eq!(g.encode(), h.encode());
        assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
    }

    #[test]
    fn degree_two_insertion_is_erased() {
        let g = build_rectangles_graph(GrassmannShape::new(2, 4).unwrap());
        for e in 0..g.edge_count() {
            for color in [crate::Color::Black, crate::Color::White] {
                let h = g.apply_move(&MoveDescriptor::Insert { edge: e, color }).unwrap();
                assert_eq!(h.canonical_form().unwrap(), g.canonical_form().unwrap());
            }
        }
    }
}

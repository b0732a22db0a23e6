use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::faces::Faces;
use super::work::Work;
use super::{dart_edge, Color, PlabicGraph, VertexKind};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    Square,
    Contract,
    Uncontract,
    Insert,
    Remove,
}

/// A local move together with its location in the graph it applies to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveDescriptor {
    /// Flip the colors of a quadrilateral face bounded by trivalent vertices of alternating colors.
    Square { face: usize },
    /// Contract an edge joining two internal vertices of the same color.
    Contract { edge: usize },
    /// Split `vertex`, moving the cyclic run of `len` edges starting at rotation position `start`
    /// onto a new vertex of the same color.
    Uncontract { vertex: usize, start: usize, len: usize },
    /// Subdivide an edge by a new degree-two vertex.
    Insert { edge: usize, color: Color },
    /// Remove a degree-two internal vertex.
    Remove { vertex: usize },
}

impl MoveDescriptor {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveDescriptor::Square { .. } => MoveKind::Square,
            MoveDescriptor::Contract { .. } => MoveKind::Contract,
            MoveDescriptor::Uncontract { .. } => MoveKind::Uncontract,
            MoveDescriptor::Insert { .. } => MoveKind::Insert,
            MoveDescriptor::Remove { .. } => MoveKind::Remove,
        }
    }
}

/// Labels around a square move: the mutated face before and after, and the four faces across
/// the sides of the square in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareMoveInfo {
    pub mu1: Partition,
    pub neighbors: [Partition; 4],
    pub mu1_prime: Partition,
}

pub(crate) struct SquareOutcome {
    pub graph: PlabicGraph,
    /// Carried orientation; colors changed, so it is generally not perfect near the square.
    pub orientation: Option<Vec<bool>>,
    /// Edges of the result that come from the square or its legs.
    pub local_edges: Vec<usize>,
}

/// Outcome of the reducedness test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedReport {
    pub reduced: bool,
    pub trip_permutation: Option<Vec<usize>>,
    pub face_count: usize,
    pub expected_face_count: usize,
    pub r1_pattern: bool,
    pub diagnostics: Vec<String>,
}

impl PlabicGraph {
    /// Corners of face `f` in traversal order, if it is an internal quadrilateral with four
    /// distinct internal vertices of alternating colors.
    fn square_corners(&self, faces: &Faces, f: usize) -> Option<[usize; 4]> {
        let cyc = &faces.cycles[f];
        if cyc.len() != 4 || !faces.is_internal(f) {
            return None;
        }
        let corners: Vec<usize> = cyc.iter().map(|&d| self.dart_head(d)).collect();
        let distinct: BTreeSet<usize> = corners.iter().copied().collect();
        if distinct.len() != 4 {
            return None;
        }
        let colors: Vec<Color> = corners.iter().map(|&v| self.color(v)).collect::<Option<_>>()?;
        if (0..4).any(|i| colors[i] == colors[(i + 1) % 4]) {
            return None;
        }
        Some([corners[0], corners[1], corners[2], corners[3]])
    }

    /// Faces at which the square move applies after uncontracting corners of degree above three.
    pub fn movable_faces(&self, faces: &Faces) -> Vec<usize> {
        (0..faces.len()).filter(|&f| self.square_corners(faces, f).is_some()).collect()
    }

    /// Faces across the four sides of square face `f`, in traversal order.
    pub fn square_neighbors(&self, faces: &Faces, f: usize) -> Vec<usize> {
        faces.cycles[f].iter().map(|&d| faces.right(d)).collect()
    }

    /// Square move on an alternating quadrilateral whose corners may have any degree: corners of
    /// degree above three are uncontracted first, then colors flip and the result is normalized.
    pub fn square_move(&self, f: usize) -> Result<PlabicGraph> {
        Ok(self.square_move_traced(f, None)?.graph)
    }

    pub(crate) fn square_move_traced(&self, f: usize, orientation: Option<&[bool]>) -> Result<SquareOutcome> {
        let faces = self.faces();
        if f >= faces.len() {
            return Err(Error::IllegalMove(format!("face {f} does not exist")));
        }
        let corners = self
            .square_corners(&faces, f)
            .ok_or_else(|| Error::IllegalMove(format!("face {f} is not an alternating quadrilateral")))?;
        let cyc = faces.cycles[f].clone();
        let square_edges: Vec<usize> = cyc.iter().map(|&d| dart_edge(d)).collect();
        let mut w = Work::from_graph(self, orientation);
        let mut new_corners = corners;
        for i in 0..4 {
            let v = corners[i];
            let e_in = square_edges[i];
            let e_out = square_edges[(i + 1) % 4];
            let deg = w.rotation[v].len();
            if deg <= 3 {
                continue;
            }
            let p = w.rotation[v].iter().position(|&x| x == e_in).unwrap();
            debug_assert_eq!(w.rotation[v][(p + 1) % deg], e_out);
            let tail = if orientation.is_some() {
                let color = w.color(v).unwrap();
                let moved = [e_in, e_out];
                let special = w.rotation[v]
                    .iter()
                    .copied()
                    .find(|&e| match color {
                        Color::Black => w.edge(e).tail == Some(v),
                        Color::White => w.edge(e).tail != Some(v),
                    })
                    .ok_or_else(|| Error::Consistency("orientation is not perfect".into()))?;
                let in_moved = moved.contains(&special);
                Some(match color {
                    Color::Black => !in_moved,
                    Color::White => in_moved,
                })
            } else {
                None
            };
            let (nv, _) = w.uncontract(v, p, 2, tail)?;
            new_corners[i] = nv;
        }
        let mut local: Vec<usize> = square_edges.clone();
        for &c in &new_corners {
            local.extend(w.rotation[c].iter().copied().filter(|e| !square_edges.contains(e)));
            let color = w.color(c).unwrap();
            w.kinds[c] = Some(VertexKind::Internal(color.flipped()));
        }
        w.normalize()?;
        let fin = w.finish()?;
        let mut local_edges: Vec<usize> = local.iter().filter_map(|&e| fin.edge_map[e]).collect();
        local_edges.sort_unstable();
        local_edges.dedup();
        Ok(SquareOutcome { graph: fin.graph, orientation: fin.orientation, local_edges })
    }

    /// Square move at the face labelled `label`, with the labels of the exchange relation.
    pub fn square_move_at_label(&self, label: &Partition) -> Result<(PlabicGraph, SquareMoveInfo)> {
        let faces = self.faces();
        let lab = self.face_labels()?;
        let f = lab
            .face_of(label)
            .ok_or_else(|| Error::IllegalMove(format!("no face is labelled {label}")))?;
        self.square_move_info(&faces, &lab, f)
    }

    pub(crate) fn square_move_info(
        &self,
        faces: &Faces,
        lab: &super::FaceLabeling,
        f: usize,
    ) -> Result<(PlabicGraph, SquareMoveInfo)> {
        let g = self.square_move(f)?;
        let neighbors_ids = self.square_neighbors(faces, f);
        let neighbors: [Partition; 4] = std::array::from_fn(|i| lab.labels[neighbors_ids[i]].clone());
        let old: BTreeSet<&Partition> = lab.labels.iter().collect();
        let new_lab = g.face_labels()?;
        let fresh: Vec<&Partition> = new_lab.labels.iter().filter(|l| !old.contains(l)).collect();
        if fresh.len() != 1 {
            return Err(Error::Consistency(format!("square move changed {} labels", fresh.len())));
        }
        let info = SquareMoveInfo { mu1: lab.labels[f].clone(), neighbors, mu1_prime: fresh[0].clone() };
        Ok((g, info))
    }

    pub fn apply_move(&self, m: &MoveDescriptor) -> Result<PlabicGraph> {
        Ok(self.apply_move_oriented(m, None)?.0)
    }

    /// Applies a move, carrying an orientation through contractions, splits and subdivisions.
    /// A square move drops the orientation.
    pub fn apply_move_oriented(
        &self,
        m: &MoveDescriptor,
        orientation: Option<&[bool]>,
    ) -> Result<(PlabicGraph, Option<Vec<bool>>)> {
        let mut w = Work::from_graph(self, orientation);
        match *m {
            MoveDescriptor::Square { face } => {
                let faces = self.faces();
                if face >= faces.len() {
                    return Err(Error::IllegalMove(format!("face {face} does not exist")));
                }
                let corners = self
                    .square_corners(&faces, face)
                    .filter(|c| c.iter().all(|&v| self.degree(v) == 3))
                    .ok_or_else(|| {
                        Error::IllegalMove(format!("face {face} is not bounded by four alternating trivalent vertices"))
                    })?;
                for v in corners {
                    let c = self.color(v).unwrap();
                    w.kinds[v] = Some(VertexKind::Internal(c.flipped()));
                }
                let fin = w.finish()?;
                return Ok((fin.graph, None));
            }
            MoveDescriptor::Contract { edge } => {
                if edge >= self.edge_count() {
                    return Err(Error::IllegalMove(format!("edge {edge} does not exist")));
                }
                w.contract(edge)?;
            }
            MoveDescriptor::Uncontract { vertex, start, len } => {
                if vertex >= self.vertex_count() {
                    return Err(Error::IllegalMove(format!("vertex {vertex} does not exist")));
                }
                let tail = match orientation {
                    None => None,
                    Some(_) => {
                        let color = w
                            .color(vertex)
                            .ok_or_else(|| Error::IllegalMove(format!("vertex {vertex} is not internal")))?;
                        let deg = w.rotation[vertex].len();
                        let moved: Vec<usize> = (0..len.min(deg)).map(|s| w.rotation[vertex][(start + s) % deg]).collect();
                        let in_moved = moved.iter().any(|&e| match color {
                            Color::Black => w.edge(e).tail == Some(vertex),
                            Color::White => w.edge(e).tail != Some(vertex),
                        });
                        Some(match color {
                            Color::Black => !in_moved,
                            Color::White => in_moved,
                        })
                    }
                };
                w.uncontract(vertex, start, len, tail)?;
            }
            MoveDescriptor::Insert { edge, color } => {
                if edge >= self.edge_count() {
                    return Err(Error::IllegalMove(format!("edge {edge} does not exist")));
                }
                w.insert(edge, color);
            }
            MoveDescriptor::Remove { vertex } => {
                if vertex >= self.vertex_count() {
                    return Err(Error::IllegalMove(format!("vertex {vertex} does not exist")));
                }
                w.remove_degree_two(vertex)?;
            }
        }
        let fin = w.finish()?;
        Ok((fin.graph, fin.orientation))
    }

    /// Whether the normal form has a pair of parallel edges bounding a face.
    pub fn has_r1_pattern(&self) -> Result<bool> {
        let g = self.normalized()?;
        let faces = g.faces();
        Ok((0..faces.len()).any(|f| faces.is_internal(f) && faces.cycles[f].len() == 2))
    }

    /// Trip permutation, face count and parallel-edge test combined.
    pub fn check_reduced_type(&self) -> ReducedReport {
        let shape = self.shape();
        let expected_face_count = shape.dim() + 1;
        let face_count = self.faces().len();
        let mut diagnostics = Vec::new();
        let trip_permutation = match self.trip_permutation() {
            Ok(p) => Some(p),
            Err(e) => {
                diagnostics.push(format!("trips: {e}"));
                None
            }
        };
        if let Some(p) = &trip_permutation {
            if *p != shape.trip_permutation() {
                diagnostics.push(format!("trip permutation {p:?} differs from {:?}", shape.trip_permutation()));
            }
        }
        if face_count != expected_face_count {
            diagnostics.push(format!("{face_count} faces, expected {expected_face_count}"));
        }
        let r1_pattern = match self.has_r1_pattern() {
            Ok(b) => b,
            Err(e) => {
                diagnostics.push(format!("normal form: {e}"));
                true
            }
        };
        if r1_pattern {
            diagnostics.push("parallel edges bound a face in the normal form".into());
        }
        ReducedReport {
            reduced: diagnostics.is_empty(),
            trip_permutation,
            face_count,
            expected_face_count,
            r1_pattern,
            diagnostics,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::GrassmannShape;
    use crate::plabic::build_rectangles_graph;

    fn rec(k: usize, n: usize) -> PlabicGraph {
        build_rectangles_graph(GrassmannShape::new(k, n).unwrap())
    }

    #[test]
    fn rectangles_graphs_are_reduced() {
        for (k, n) in [(2, 3), (2, 4), (3, 5), (2, 5), (3, 6)] {
            let r = rec(k, n).check_reduced_type();
            assert!(r.reduced, "{k},{n}: {:?}", r.diagnostics);
        }
        assert_eq!(rec(2, 4).check_reduced_type().face_count, 5);
    }

    #[test]
    fn doubled_edge_is_not_reduced() {
        let g = rec(2, 4);
        // Duplicate an edge between two internal vertices of different colors.
        let e = (0..g.edge_count())
            .find(|&e| {
                let [a, b] = g.edge(e);
                matches!((g.color(a), g.color(b)), (Some(x), Some(y)) if x != y)
            })
            .unwrap();
        let [a, b] = g.edge(e);
        let mut edges = g.edges().to_vec();
        edges.push([a, b]);
        let new = edges.len() - 1;
        let mut rotation: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.rotation(v).to_vec()).collect();
        let pa = rotation[a].iter().position(|&x| x == e).unwrap();
        rotation[a].insert(pa + 1, new);
        let pb = rotation[b].iter().position(|&x| x == e).unwrap();
        rotation[b].insert(pb, new);
        let colors = (0..g.vertex_count()).map(|v| g.color(v)).collect();
        let h = PlabicGraph::new(g.shape(), colors, g.boundary_vertices().to_vec(), edges, rotation).unwrap();
        let r = h.check_reduced_type();
        assert!(!r.reduced);
        assert!(r.r1_pattern);
    }

    #[test]
    fn strict_square_move_flips_colors() {
        let g = rec(2, 4);
        let faces = g.faces();
        let f = (0..faces.len()).find(|&f| faces.is_internal(f)).unwrap();
        let before: Vec<_> = faces.cycles[f].iter().map(|&d| g.color(g.dart_head(d))).collect();
        let h = g.apply_move(&MoveDescriptor::Square { face: f }).unwrap();
        let after: Vec<_> = faces.cycles[f].iter().map(|&d| h.color(h.dart_head(d))).collect();
        for (b, a) in before.iter().zip(&after) {
            assert_eq!(b.unwrap().flipped(), a.unwrap());
        }
        assert_eq!(h.trip_permutation().unwrap(), g.trip_permutation().unwrap());
        assert_ne!(h.canonical_form().unwrap(), g.canonical_form().unwrap());
    }

    #[test]
    fn strict_square_move_rejects_boundary_face() {
        let g = rec(2, 4);
        let faces = g.faces();
        let f = (0..faces.len()).find(|&f| !faces.is_internal(f)).unwrap();
        assert!(matches!(g.apply_move(&MoveDescriptor::Square { face: f }), Err(Error::IllegalMove(_))));
    }

    #[test]
    fn contract_then_uncontract_restores_graph() {
        let g = rec(3, 5);
        for e in 0..g.edge_count() {
            let [a, b] = g.edge(e);
            let same = matches!((g.color(a), g.color(b)), (Some(x), Some(y)) if x == y);
            if !same {
                assert!(g.apply_move(&MoveDescriptor::Contract { edge: e }).is_err());
                continue;
            }
            let h = g.apply_move(&MoveDescriptor::Contract { edge: e }).unwrap();
            // The merged vertex keeps the id of `a`; the edges of `b` sit where `e` was.
            let v = if b < a { a - 1 } else { a };
            let start = g.position(a, e);
            let back = h
                .apply_move(&MoveDescriptor::Uncontract { vertex: v, start, len: g.degree(b) - 1 })
                .unwrap();
            assert_eq!(back.encode(), g.encode(), "edge {e}");
            assert_eq!(back.trip_permutation().unwrap(), g.trip_permutation().unwrap());
        }
    }

    #[test]
    fn insert_then_remove_is_identity() {
        let g = rec(2, 5);
        for e in 0..g.edge_count() {
            let h = g.apply_move(&MoveDescriptor::Insert { edge: e, color: Color::White }).unwrap();
            assert_eq!(h.trip_permutation().unwrap(), g.trip_permutation().unwrap());
            let v = h.vertex_count() - 1;
            let back = h.apply_move(&MoveDescriptor::Remove { vertex: v }).unwrap();
            assert_eq!(back.encode(), g.encode());
        }
    }

    #[test]
    fn remove_rejects_trivalent_vertex() {
        let g = rec(2, 4);
        let v = g.internal_vertices().next().unwrap();
        assert!(g.apply_move(&MoveDescriptor::Remove { vertex: v }).is_err());
    }
}

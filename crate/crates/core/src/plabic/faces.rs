use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{dart_edge, dart_rev, Color, Dart, PlabicGraph, VertexKind};
use crate::error::{Error, Result};
use crate::partitions::{IndexSubset, Partition};

/// Faces of the disk embedding, excluding the outer region beyond the boundary arcs.
#[derive(Clone, Debug)]
pub struct Faces {
    /// Dart cycle of each face, counterclockwise with the face on the left.
    pub cycles: Vec<Vec<Dart>>,
    /// Face on the left of each dart.
    pub left: Vec<usize>,
    /// For each face, the boundary arcs it contains; arc `i` joins `b_i` and `b_{i+1}`.
    pub arcs: Vec<Vec<usize>>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Face on the right of a dart.
    pub fn right(&self, d: Dart) -> usize {
        self.left[dart_rev(d)]
    }

    pub fn is_internal(&self, f: usize) -> bool {
        self.arcs[f].is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trip {
    pub start: usize,
    pub end: usize,
    pub darts: Vec<Dart>,
}

impl Trip {
    pub fn edges(&self) -> Vec<usize> {
        self.darts.iter().map(|&d| dart_edge(d)).collect()
    }
}

/// Face labels of a graph whose trip permutation is `pi_{k,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLabeling {
    pub subsets: Vec<IndexSubset>,
    pub labels: Vec<Partition>,
}

impl FaceLabeling {
    pub fn face_of(&self, label: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Face carrying the empty diagram.
    pub fn empty_face(&self) -> usize {
        self.face_of(&Partition::empty()).expect("the empty label is always present")
    }

    /// Nonempty labels in the default column order.
    pub fn nonempty_labels(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self.labels.iter().filter(|l| !l.is_empty()).cloned().collect();
        out.sort_by(Partition::column_order);
        out
    }
}

impl PlabicGraph {
    /// The dart that follows `d` along the face on its left.
    pub(crate) fn face_successor(&self, d: Dart) -> Dart {
        let v = self.dart_head(d);
        match self.kind(v) {
            VertexKind::Boundary(i) => {
                let n = self.shape().n;
                let prev = self.boundary_vertex(if i == 1 { n } else { i - 1 });
                let e = self.rotation(prev)[0];
                self.dart_from(e, prev)
            }
            VertexKind::Internal(_) => {
                let e = dart_edge(d);
                let rot = self.rotation(v);
                let pos = self.position(v, e);
                let next = rot[(pos + 1) % rot.len()];
                self.dart_from(next, v)
            }
        }
    }

    pub fn faces(&self) -> Faces {
        let nd = 2 * self.edge_count();
        let mut left = vec![usize::MAX; nd];
        let mut cycles = Vec::new();
        let mut arcs = Vec::new();
        let n = self.shape().n;
        for start in 0..nd {
            if left[start] != usize::MAX {
                continue;
            }
            let f = cycles.len();
            let mut cyc = Vec::new();
            let mut face_arcs = Vec::new();
            let mut d = start;
            while left[d] == usize::MAX {
                left[d] = f;
                cyc.push(d);
                if let VertexKind::Boundary(i) = self.kind(self.dart_head(d)) {
                    face_arcs.push(if i == 1 { n } else { i - 1 });
                }
                d = self.face_successor(d);
            }
            face_arcs.sort_unstable();
            cycles.push(cyc);
            arcs.push(face_arcs);
        }
        Faces { cycles, left, arcs }
    }

    /// The trip starting at `b_i`.
    pub fn trip(&self, i: usize) -> Result<Trip> {
        let b = self.boundary_vertex(i);
        let mut d = self.dart_from(self.rotation(b)[0], b);
        let mut darts = vec![d];
        let limit = 2 * self.edge_count() + 2;
        loop {
            let v = self.dart_head(d);
            match self.kind(v) {
                VertexKind::Boundary(j) => return Ok(Trip { start: i, end: j, darts }),
                VertexKind::Internal(c) => {
                    let rot = self.rotation(v);
                    let deg = rot.len();
                    let pos = self.position(v, dart_edge(d));
                    let next = match c {
                        Color::Black => rot[(pos + deg - 1) % deg],
                        Color::White => rot[(pos + 1) % deg],
                    };
                    d = self.dart_from(next, v);
                    darts.push(d);
                }
            }
            if darts.len() > limit {
                return Err(Error::MalformedGraph(format!("trip from b_{i} does not terminate")));
            }
        }
    }

    pub fn trips(&self) -> Result<Vec<Trip>> {
        (1..=self.shape().n).map(|i| self.trip(i)).collect()
    }

    /// One-based trip permutation.
    pub fn trip_permutation(&self) -> Result<Vec<usize>> {
        Ok(self.trips()?.into_iter().map(|t| t.end).collect())
    }

    /// Faces to the left of a walk between two boundary vertices (or any walk whose edges
    /// separate the disk). Dual flood fill from the left sides of the walk, blocked by the walk.
    pub fn faces_left_of(&self, faces: &Faces, walk: &[Dart]) -> Result<BTreeSet<usize>> {
        let blocked: BTreeSet<usize> = walk.iter().map(|&d| dart_edge(d)).collect();
        let mut inside = vec![false; faces.len()];
        let mut queue = VecDeque::new();
        for &d in walk {
            let f = faces.left[d];
            if !inside[f] {
                inside[f] = true;
                queue.push_back(f);
            }
        }
        while let Some(f) = queue.pop_front() {
            for &d in &faces.cycles[f] {
                if blocked.contains(&dart_edge(d)) {
                    continue;
                }
                let g = faces.right(d);
                if !inside[g] {
                    inside[g] = true;
                    queue.push_back(g);
                }
            }
        }
        for &d in walk {
            if inside[faces.right(d)] {
                return Err(Error::FaceLabeling("walk does not separate the disk".into()));
            }
        }
        Ok((0..faces.len()).filter(|&f| inside[f]).collect())
    }

    /// Labels every face by the set of `i` such that the face lies left of the trip from `b_i`.
    pub fn face_labels(&self) -> Result<FaceLabeling> {
        let shape = self.shape();
        let perm = self.trip_permutation()?;
        if perm != shape.trip_permutation() {
            return Err(Error::FaceLabeling(format!("trip permutation {perm:?} is not the expected one")));
        }
        let faces = self.faces();
        let mut sets: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
        for trip in self.trips()? {
            for f in self.faces_left_of(&faces, &trip.darts)? {
                sets[f].push(trip.start);
            }
        }
        let subsets: Vec<IndexSubset> = sets.into_iter().map(IndexSubset::new).collect();
        let mut labels = Vec::with_capacity(subsets.len());
        for s in &subsets {
            if s.len() != shape.rows() {
                return Err(Error::FaceLabeling(format!("face label {s} has the wrong size")));
            }
            labels.push(Partition::from_south(s, &shape)?);
        }
        let empties = labels.iter().filter(|l| l.is_empty()).count();
        if empties != 1 {
            return Err(Error::FaceLabeling(format!("{empties} faces carry the empty label")));
        }
        Ok(FaceLabeling { subsets, labels })
    }

    /// Map from label to face id.
    pub fn label_index(&self) -> Result<BTreeMap<Partition, usize>> {
        let lab = self.face_labels()?;
        Ok(lab.labels.into_iter().enumerate().map(|(f, l)| (l, f)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::GrassmannShape;
    use crate::plabic::build_rectangles_graph;

    #[test]
    fn single_edge_trip() {
        let sh = GrassmannShape::new(1, 2).unwrap();
        let g = PlabicGraph::new(sh, vec![None, None], vec![0, 1], vec![[0, 1]], vec![vec![0], vec![0]]).unwrap();
        assert_eq!(g.trip(1).unwrap().end, 2);
        assert_eq!(g.trip_permutation().unwrap(), vec![2, 1]);
        assert_eq!(g.faces().len(), 2);
    }

    #[test]
    fn rectangles_trips_and_labels() {
        for (k, n) in [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (2, 5), (3, 6), (5, 9)] {
            let sh = GrassmannShape::new(k, n).unwrap();
            let g = build_rectangles_graph(sh);
            assert_eq!(g.trip_permutation().unwrap(), sh.trip_permutation(), "{k},{n}");
            let lab = g.face_labels().unwrap();
            assert_eq!(lab.labels.len(), sh.dim() + 1);
            assert_eq!(lab.nonempty_labels(), sh.rectangles(), "{k},{n}");
        }
    }

    #[test]
    fn grid_2_4_labels_by_face_position() {
        let sh = GrassmannShape::new(2, 4).unwrap();
        let g = build_rectangles_graph(sh);
        let faces = g.faces();
        let lab = g.face_labels().unwrap();
        // The face containing the arc between b_1 and b_2 is the row-1 strip.
        let f = (0..faces.len()).find(|&f| faces.arcs[f] == vec![1]).unwrap();
        assert_eq!(lab.labels[f], Partition::new(vec![2]));
        let f = (0..faces.len()).find(|&f| faces.arcs[f] == vec![4]).unwrap();
        assert!(lab.labels[f].is_empty());
        let internal: Vec<_> = (0..faces.len()).filter(|&f| faces.is_internal(f)).collect();
        assert_eq!(internal.len(), 1);
        assert_eq!(lab.labels[internal[0]], Partition::new(vec![1]));
    }
}

use std::collections::BTreeMap;

use super::PlabicGraph;
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug)]
pub struct MoveClassMember {
    /// Normal form of the graph.
    pub graph: PlabicGraph,
    pub code: String,
    /// Labels of the faces mutated along a shortest path from the seed.
    pub path: Vec<Partition>,
}

/// Result of a breadth-first search over square moves.
#[derive(Clone, Debug)]
pub struct MoveClass {
    /// Members in discovery order; the seed comes first.
    pub members: Vec<MoveClassMember>,
    /// Square moves between members as `(from, to, label of the mutated face in from)`, one
    /// entry per unordered pair and face.
    pub exchanges: Vec<(usize, usize, Partition)>,
    /// False when the budget ran out before the search finished.
    pub complete: bool,
}

impl MoveClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn find(&self, code: &str) -> Option<&MoveClassMember> {
        self.members.iter().find(|m| m.code == code)
    }

    /// Member equivalent to `g` under contractions and degree-two moves.
    pub fn locate(&self, g: &PlabicGraph) -> Result<&MoveClassMember> {
        let code = g.canonical_form()?;
        self.find(&code).ok_or(Error::NoMovePath)
    }
}

impl PlabicGraph {
    /// Applies square moves at the faces with the given labels, starting from the normal form.
    pub fn follow_path(&self, path: &[Partition]) -> Result<PlabicGraph> {
        let mut g = self.normalized()?;
        for label in path {
            g = g.square_move_at_label(label)?.0;
        }
        Ok(g)
    }

    /// Breadth-first search over square moves from `seed`, visiting at most `budget` normal forms.
    pub fn move_class_bfs(seed: &PlabicGraph, budget: usize) -> Result<MoveClass> {
        let start = seed.normalized()?;
        let code = start.encode();
        let mut index: BTreeMap<String, usize> = BTreeMap::from([(code.clone(), 0)]);
        let mut members = vec![MoveClassMember { graph: start, code, path: Vec::new() }];
        let mut exchanges = BTreeMap::new();
        let mut complete = budget >= 1;
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                let g = members[u].graph.clone();
                let faces = g.faces();
                let lab = g.face_labels()?;
                let mut movable: Vec<usize> = g.movable_faces(&faces);
                movable.sort_by(|&x, &y| Partition::column_order(&lab.labels[x], &lab.labels[y]));
                for f in movable {
                    let h = g.square_move(f)?;
                    let code = h.encode();
                    let v = match index.get(&code) {
                        Some(&v) => v,
                        None => {
                            if members.len() >= budget {
                                complete = false;
                                continue;
                            }
                            let v = members.len();
                            let mut path = members[u].path.clone();
                            path.push(lab.labels[f].clone());
                            index.insert(code.clone(), v);
                            members.push(MoveClassMember { graph: h, code, path });
                            next.push(v);
                            v
                        }
                    };
                    exchanges.entry((u.min(v), u.max(v))).or_insert((u, v, lab.labels[f].clone()));
                }
            }
            next.sort_by(|&x, &y| members[x].code.cmp(&members[y].code));
            frontier = next;
        }
        Ok(MoveClass { members, exchanges: exchanges.into_values().collect(), complete })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::GrassmannShape;
    use crate::plabic::build_rectangles_graph;

    fn class(k: usize, n: usize) -> MoveClass {
        let g = build_rectangles_graph(GrassmannShape::new(k, n).unwrap());
        PlabicGraph::move_class_bfs(&g, 10_000).unwrap()
    }

    #[test]
    fn small_class_sizes() {
        assert_eq!(class(2, 4).len(), 2);
        assert_eq!(class(2, 5).len(), 5);
        assert_eq!(class(3, 5).len(), 5);
        assert_eq!(class(2, 3).len(), 1);
    }

    #[test]
    fn members_are_reduced_and_paths_replay() {
        let sh = GrassmannShape::new(2, 5).unwrap();
        let seed = build_rectangles_graph(sh);
        let mc = PlabicGraph::move_class_bfs(&seed, 100).unwrap();
        assert!(mc.complete);
        for m in &mc.members {
            let r = m.graph.check_reduced_type();
            assert!(r.reduced, "{:?}", r.diagnostics);
            assert_eq!(r.face_count, 7);
            assert_eq!(seed.follow_path(&m.path).unwrap().encode(), m.code);
        }
        // The exchange graph of a pentagon.
        assert_eq!(mc.exchanges.len(), 5);
    }

    #[test]
    fn budget_truncates() {
        let g = build_rectangles_graph(GrassmannShape::new(2, 5).unwrap());
        let mc = PlabicGraph::move_class_bfs(&g, 3).unwrap();
        assert_eq!(mc.len(), 3);
        assert!(!mc.complete);
    }
}

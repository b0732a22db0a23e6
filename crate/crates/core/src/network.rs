//! Perfect orientations, flows and the flow formulas for Plücker coordinates.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial, Var};
use crate::partitions::{GrassmannShape, IndexSubset, Partition};
use crate::plabic::{
    build_rectangles_graph, rectangles_orientation, Color, Dart, FaceLabeling, Faces, PlabicGraph, VertexKind,
};

/// A perfect orientation: every black vertex has one outgoing edge, every white vertex one
/// incoming edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectOrientation {
    graph: PlabicGraph,
    /// `true` when edge `e` runs `ends[0] -> ends[1]`.
    forward: Vec<bool>,
    sources: IndexSubset,
    acyclic: bool,
}

impl PerfectOrientation {
    pub fn new(graph: PlabicGraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != graph.edge_count() {
            return Err(Error::Consistency("orientation length differs from edge count".into()));
        }
        for v in graph.internal_vertices() {
            let outs = graph.rotation(v).iter().filter(|&&e| tail_of(&graph, &forward, e) == v).count();
            let ok = match graph.color(v) {
                Some(Color::Black) => outs == 1,
                Some(Color::White) => graph.degree(v) - outs == 1,
                None => true,
            };
            if !ok {
                return Err(Error::Consistency(format!("vertex {v} violates the perfect orientation rule")));
            }
        }
        let sources = IndexSubset::new(
            (1..=graph.shape().n)
                .filter(|&i| {
                    let b = graph.boundary_vertex(i);
                    tail_of(&graph, &forward, graph.rotation(b)[0]) == b
                })
                .collect(),
        );
        let acyclic = is_acyclic(&graph, &forward);
        Ok(Self { graph, forward, sources, acyclic })
    }

    pub fn graph(&self) -> &PlabicGraph {
        &self.graph
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    pub fn sources(&self) -> &IndexSubset {
        &self.sources
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    pub fn tail(&self, e: usize) -> usize {
        tail_of(&self.graph, &self.forward, e)
    }

    pub fn head(&self, e: usize) -> usize {
        self.graph.other_end(e, self.tail(e))
    }

    /// The dart along the orientation of `e`.
    pub fn dart(&self, e: usize) -> Dart {
        crate::plabic::dart(e, !self.forward[e])
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph.rotation(v).iter().copied().filter(move |&e| self.tail(e) == v)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let dirs: BTreeMap<usize, [usize; 2]> =
            (0..self.graph.edge_count()).map(|e| (e, [self.tail(e), self.head(e)])).collect();
        serde_json::json!({
            "graph": self.graph.to_json_value(),
            "orientation": dirs,
            "sources": self.sources,
        })
    }
}

fn tail_of(g: &PlabicGraph, forward: &[bool], e: usize) -> usize {
    let [a, b] = g.edge(e);
    if forward[e] {
        a
    } else {
        b
    }
}

fn is_acyclic(g: &PlabicGraph, forward: &[bool]) -> bool {
    let nv = g.vertex_count();
    let mut indeg = vec![0usize; nv];
    for e in 0..g.edge_count() {
        indeg[g.other_end(e, tail_of(g, forward, e))] += 1;
    }
    let mut stack: Vec<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &e in g.rotation(v) {
            if tail_of(g, forward, e) == v {
                let w = g.other_end(e, v);
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
    }
    seen == nv
}

/// Backtracking search for an acyclic perfect orientation with the given boundary sources.
/// Edges with `Some` in `fixed` keep that direction.
pub fn search_orientation(g: &PlabicGraph, sources: &IndexSubset, fixed: &[Option<bool>]) -> Option<Vec<bool>> {
    let mut dir: Vec<Option<bool>> = fixed.to_vec();
    for i in 1..=g.shape().n {
        let b = g.boundary_vertex(i);
        let e = g.rotation(b)[0];
        let out = g.edge(e)[0] == b;
        let want = if sources.contains(i) { out } else { !out };
        match dir[e] {
            Some(d) if d != want => return None,
            _ => dir[e] = Some(want),
        }
    }
    let order: Vec<usize> = g.internal_vertices().collect();
    let mut found = None;
    assign(g, &order, 0, &mut dir, &mut found);
    found
}

fn assign(g: &PlabicGraph, order: &[usize], idx: usize, dir: &mut Vec<Option<bool>>, found: &mut Option<Vec<bool>>) {
    if found.is_some() {
        return;
    }
    if idx == order.len() {
        let forward: Vec<bool> = dir.iter().map(|d| d.unwrap_or(true)).collect();
        if dir.iter().all(Option::is_some) && is_acyclic(g, &forward) {
            *found = Some(forward);
        }
        return;
    }
    let v = order[idx];
    let color = g.color(v).expect("internal vertex");
    let rot = g.rotation(v).to_vec();
    // `special` is the unique outgoing edge of a black vertex or incoming edge of a white one.
    for &special in &rot {
        let mut changed = Vec::new();
        let mut ok = true;
        for &e in &rot {
            let outgoing = match color {
                Color::Black => e == special,
                Color::White => e != special,
            };
            let want = (g.edge(e)[0] == v) == outgoing;
            match dir[e] {
                Some(d) if d != want => {
                    ok = false;
                    break;
                }
                Some(_) => {}
                None => {
                    dir[e] = Some(want);
                    changed.push(e);
                }
            }
        }
        if ok && partial_acyclic(g, dir) {
            assign(g, order, idx + 1, dir, found);
        }
        for e in changed {
            dir[e] = None;
        }
        if found.is_some() {
            return;
        }
    }
}

/// Whether the edges with a decided direction form an acyclic digraph.
fn partial_acyclic(g: &PlabicGraph, dir: &[Option<bool>]) -> bool {
    let nv = g.vertex_count();
    let mut indeg = vec![0usize; nv];
    for (e, d) in dir.iter().enumerate() {
        if let Some(d) = d {
            let [a, b] = g.edge(e);
            indeg[if *d { b } else { a }] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..nv).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &e in g.rotation(v) {
            if let Some(d) = dir[e] {
                let [a, b] = g.edge(e);
                if (if d { a } else { b }) == v {
                    let w = if d { b } else { a };
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        stack.push(w);
                    }
                }
            }
        }
    }
    seen == nv
}

/// The orientation of the grid graph with sources `b_1..b_{n-k}`.
pub fn rectangles_perfect_orientation(shape: GrassmannShape) -> PerfectOrientation {
    PerfectOrientation::new(build_rectangles_graph(shape), rectangles_orientation(shape))
        .expect("grid orientation is perfect")
}

/// Transports the grid orientation along a path of square moves (face labels) and returns the
/// oriented normal form reached at the end.
pub fn oriented_along_path(shape: GrassmannShape, path: &[Partition]) -> Result<PerfectOrientation> {
    let start = rectangles_perfect_orientation(shape);
    let (mut g, mut forward) = start.graph().normalized_oriented(start.forward())?;
    let sources = shape.initial_subset();
    for label in path {
        let f = g
            .face_labels()?
            .face_of(label)
            .ok_or_else(|| Error::IllegalMove(format!("no face is labelled {label}")))?;
        let out = g.square_move_traced(f, Some(&forward))?;
        let carried = out.orientation.expect("orientation carried through the move");
        let local: BTreeSet<usize> = out.local_edges.iter().copied().collect();
        let fixed: Vec<Option<bool>> = (0..out.graph.edge_count())
            .map(|e| if local.contains(&e) { None } else { Some(carried[e]) })
            .collect();
        let next = search_orientation(&out.graph, &sources, &fixed)
            .or_else(|| search_orientation(&out.graph, &sources, &vec![None; out.graph.edge_count()]))
            .ok_or_else(|| Error::NoAcyclicOrientation(sources.elements().to_vec()))?;
        g = out.graph;
        forward = next;
    }
    PerfectOrientation::new(g, forward)
}

/// An acyclic perfect orientation of the normal form of `g` with sources `{1..n-k}`, obtained by
/// transport along `path`, which must lead from the grid graph to `g`.
pub fn acyclic_orientation(g: &PlabicGraph, path: &[Partition]) -> Result<PerfectOrientation> {
    let o = oriented_along_path(g.shape(), path)?;
    if o.graph().encode() != g.canonical_form()? {
        return Err(Error::NoMovePath);
    }
    Ok(o)
}

/// A directed walk between boundary vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowPath {
    pub source: usize,
    pub sink: usize,
    pub darts: Vec<Dart>,
}

/// Vertex-disjoint walks from `I_O \ J` to `J \ I_O`, listed by decreasing source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flow {
    pub paths: Vec<FlowPath>,
}

impl Flow {
    /// Vertex sequences of the walks.
    pub fn vertex_walks(&self, g: &PlabicGraph) -> Vec<Vec<usize>> {
        self.paths
            .iter()
            .map(|p| {
                let mut w = vec![g.dart_tail(p.darts[0])];
                w.extend(p.darts.iter().map(|&d| g.dart_head(d)));
                w
            })
            .collect()
    }
}

pub fn enumerate_flows(o: &PerfectOrientation, j: &IndexSubset) -> Vec<Flow> {
    let g = o.graph();
    let mut from: Vec<usize> = o.sources().elements().iter().copied().filter(|&i| !j.contains(i)).collect();
    from.sort_unstable_by(|a, b| b.cmp(a));
    let to: BTreeSet<usize> = j.elements().iter().copied().filter(|&i| !o.sources().contains(i)).collect();
    let mut used = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    let mut current = Vec::new();
    flows_rec(o, &from, &to, 0, &mut used, &mut current, &mut out);
    out
}

fn flows_rec(
    o: &PerfectOrientation,
    from: &[usize],
    to: &BTreeSet<usize>,
    r: usize,
    used: &mut Vec<bool>,
    current: &mut Vec<FlowPath>,
    out: &mut Vec<Flow>,
) {
    if r == from.len() {
        out.push(Flow { paths: current.clone() });
        return;
    }
    let g = o.graph();
    let b = g.boundary_vertex(from[r]);
    used[b] = true;
    let mut darts = Vec::new();
    walk_rec(o, b, from[r], to, r, from, used, &mut darts, current, out);
    used[b] = false;
}

#[allow(clippy::too_many_arguments)]
fn walk_rec(
    o: &PerfectOrientation,
    v: usize,
    source: usize,
    to: &BTreeSet<usize>,
    r: usize,
    from: &[usize],
    used: &mut Vec<bool>,
    darts: &mut Vec<Dart>,
    current: &mut Vec<FlowPath>,
    out: &mut Vec<Flow>,
) {
    let g = o.graph();
    if let VertexKind::Boundary(i) = g.kind(v) {
        if i != source {
            if to.contains(&i) {
                current.push(FlowPath { source, sink: i, darts: darts.clone() });
                flows_rec(o, from, to, r + 1, used, current, out);
                current.pop();
            }
            return;
        }
    }
    let outs: Vec<usize> = o.out_edges(v).collect();
    for e in outs {
        let w = o.head(e);
        if used[w] {
            continue;
        }
        used[w] = true;
        darts.push(o.dart(e));
        walk_rec(o, w, source, to, r, from, used, darts, current, out);
        darts.pop();
        used[w] = false;
    }
}

/// A network chart: a graph with its face labels and an acyclic perfect orientation.
#[derive(Clone, Debug)]
pub struct NetworkChart {
    pub orientation: PerfectOrientation,
    pub faces: Faces,
    pub labels: FaceLabeling,
}

impl NetworkChart {
    pub fn new(orientation: PerfectOrientation) -> Result<Self> {
        if !orientation.is_acyclic() {
            return Err(Error::Consistency("network charts need an acyclic orientation".into()));
        }
        let g = orientation.graph();
        let faces = g.faces();
        let labels = g.face_labels()?;
        Ok(Self { orientation, faces, labels })
    }

    pub fn graph(&self) -> &PlabicGraph {
        self.orientation.graph()
    }

    pub fn shape(&self) -> GrassmannShape {
        self.graph().shape()
    }

    /// Nonempty face labels in the default column order.
    pub fn coordinates(&self) -> Vec<Partition> {
        self.labels.nonempty_labels()
    }

    /// Face variables in the default column order.
    pub fn variables(&self) -> Vec<Var> {
        self.coordinates().into_iter().map(Var::X).collect()
    }

    /// Product of face variables over all faces left of every walk; `x[]` is kept as is.
    pub fn flow_weight(&self, flow: &Flow) -> Result<Monomial> {
        let mut m = Monomial::one();
        for p in &flow.paths {
            for f in self.graph().faces_left_of(&self.faces, &p.darts)? {
                m = m.mul(&Monomial::var(Var::X(self.labels.labels[f].clone())));
            }
        }
        Ok(m)
    }

    pub fn flows(&self, j: &IndexSubset) -> Vec<Flow> {
        enumerate_flows(&self.orientation, j)
    }

    /// Sum of flow weights with `x[]` replaced by the inverse product of the other face variables.
    pub fn plucker_polynomial(&self, j: &IndexSubset) -> Result<LaurentPoly> {
        let shape = self.shape();
        if j.len() != shape.rows() {
            return Err(Error::WrongCardinality { expected: shape.rows(), got: j.len() });
        }
        let empty = Var::X(Partition::empty());
        let others = Monomial::from_exponents(self.variables().into_iter().map(|v| (v, -1)));
        let mut total = LaurentPoly::zero();
        for flow in self.flows(j) {
            let w = self.flow_weight(&flow)?;
            let e = w.exponent(&empty);
            let w = w.mul(&Monomial::from_exponents([(empty.clone(), -e)])).mul(&others.pow(e));
            total = &total + &LaurentPoly::monomial(w);
        }
        Ok(total)
    }

    /// Plücker polynomials of every `(n-k)`-subset, in lexicographic order of subsets.
    pub fn plucker_table(&self) -> Result<Vec<(IndexSubset, LaurentPoly)>> {
        let shape = self.shape();
        shape
            .subsets(shape.rows())
            .into_iter()
            .map(|j| self.plucker_polynomial(&j).map(|p| (j, p)))
            .collect()
    }
}

/// Chart of the grid graph with its preferred orientation.
pub fn rectangles_chart(shape: GrassmannShape) -> NetworkChart {
    NetworkChart::new(rectangles_perfect_orientation(shape)).expect("grid chart")
}

/// The flow to `J` in the grid chart built greedily: walks from `i_1 > i_2 > ...` to
/// `j_1 < j_2 < ...`, each the vertex-disjoint walk with the fewest faces on its left.
pub fn minimal_flow_rec(shape: GrassmannShape, j: &IndexSubset) -> Result<Flow> {
    let chart = rectangles_chart(shape);
    let o = &chart.orientation;
    let g = o.graph();
    let mut from: Vec<usize> = o.sources().elements().iter().copied().filter(|&i| !j.contains(i)).collect();
    from.sort_unstable_by(|a, b| b.cmp(a));
    let to: Vec<usize> = j.elements().iter().copied().filter(|&i| !o.sources().contains(i)).collect();
    let mut used = vec![false; g.vertex_count()];
    let mut paths = Vec::new();
    for (&s, &t) in from.iter().zip(&to) {
        let b = g.boundary_vertex(s);
        let target = g.boundary_vertex(t);
        let mut candidates = Vec::new();
        let mut darts = Vec::new();
        used[b] = true;
        all_paths(o, b, target, &mut used, &mut darts, &mut candidates);
        let mut best: Option<(usize, Vec<Dart>)> = None;
        for c in candidates {
            let size = g.faces_left_of(&chart.faces, &c)?.len();
            if best.as_ref().is_none_or(|(s, _)| size < *s) {
                best = Some((size, c));
            }
        }
        let (_, darts) = best.ok_or_else(|| Error::Consistency(format!("no free walk from b_{s} to b_{t}")))?;
        for &d in &darts {
            used[g.dart_head(d)] = true;
        }
        paths.push(FlowPath { source: s, sink: t, darts });
    }
    Ok(Flow { paths })
}

fn all_paths(
    o: &PerfectOrientation,
    v: usize,
    target: usize,
    used: &mut Vec<bool>,
    darts: &mut Vec<Dart>,
    out: &mut Vec<Vec<Dart>>,
) {
    if v == target {
        out.push(darts.clone());
        return;
    }
    if o.graph().is_boundary(v) && !darts.is_empty() {
        return;
    }
    let outs: Vec<usize> = o.out_edges(v).collect();
    for e in outs {
        let w = o.head(e);
        if used[w] {
            continue;
        }
        used[w] = true;
        darts.push(o.dart(e));
        all_paths(o, w, target, used, darts, out);
        darts.pop();
        used[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> IndexSubset {
        IndexSubset::parse(text).unwrap()
    }

    #[test]
    fn grid_orientation_sources() {
        let sh = GrassmannShape::new(5, 9).unwrap();
        let o = rectangles_perfect_orientation(sh);
        assert_eq!(o.sources(), &s("1,2,3,4"));
        assert!(o.is_acyclic());
    }

    #[test]
    fn normalization_is_trivial_on_grid_plucker() {
        let sh = GrassmannShape::new(3, 5).unwrap();
        let c = rectangles_chart(sh);
        assert!(c.plucker_polynomial(&s("1,2")).unwrap().is_one());
        let flows = c.flows(&s("1,2"));
        assert_eq!(flows.len(), 1);
        assert!(flows[0].paths.is_empty());
    }

    #[test]
    fn flow_pairing_is_decreasing_to_increasing() {
        let sh = GrassmannShape::new(3, 6).unwrap();
        let c = rectangles_chart(sh);
        for j in sh.subsets(3) {
            for f in c.flows(&j) {
                let src: Vec<usize> = f.paths.iter().map(|p| p.source).collect();
                let snk: Vec<usize> = f.paths.iter().map(|p| p.sink).collect();
                assert!(src.windows(2).all(|w| w[0] > w[1]));
                assert!(snk.windows(2).all(|w| w[0] < w[1]), "{j}: {snk:?}");
            }
        }
    }

    #[test]
    fn search_finds_grid_like_orientation() {
        let sh = GrassmannShape::new(2, 4).unwrap();
        let g = build_rectangles_graph(sh);
        let f = search_orientation(&g, &sh.initial_subset(), &vec![None; g.edge_count()]).unwrap();
        let o = PerfectOrientation::new(g, f).unwrap();
        assert!(o.is_acyclic());
        assert_eq!(o.sources(), &sh.initial_subset());
    }

    #[test]
    fn minimal_flow_of_initial_subset_is_empty() {
        let sh = GrassmannShape::new(5, 9).unwrap();
        assert!(minimal_flow_rec(sh, &sh.initial_subset()).unwrap().paths.is_empty());
    }
}

use std::collections::BTreeMap;

use super::{Color, PlabicGraph, VertexKind};
use crate::partitions::GrassmannShape;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Port {
    N,
    E,
    S,
    W,
}

impl Port {
    fn dir(self) -> (i64, i64) {
        match self {
            Port::N => (0, 1),
            Port::E => (1, 0),
            Port::S => (0, -1),
            Port::W => (-1, 0),
        }
    }
}

struct Builder {
    kinds: Vec<VertexKind>,
    edges: Vec<[usize; 2]>,
    /// Half-edges at each vertex with their outgoing direction.
    half: Vec<Vec<(usize, (i64, i64))>>,
    /// `true` when the edge runs `ends[0] -> ends[1]` in the preferred orientation.
    forward: Vec<bool>,
}

impl Builder {
    fn vertex(&mut self, kind: VertexKind) -> usize {
        self.kinds.push(kind);
        self.half.push(Vec::new());
        self.kinds.len() - 1
    }

    /// Edge from `tail` to `head`, leaving each end in the given direction.
    fn edge(&mut self, tail: (usize, (i64, i64)), head: (usize, (i64, i64))) {
        let e = self.edges.len();
        self.edges.push([tail.0, head.0]);
        self.forward.push(true);
        self.half[tail.0].push((e, tail.1));
        self.half[head.0].push((e, head.1));
    }
}

/// Position of a compass direction in clockwise order starting at north.
fn clockwise_key(d: (i64, i64)) -> u8 {
    match (d.0.signum(), d.1.signum()) {
        (0, 1) => 0,
        (1, 1) => 1,
        (1, 0) => 2,
        (1, -1) => 3,
        (0, -1) => 4,
        (-1, -1) => 5,
        (-1, 0) => 6,
        _ => 7,
    }
}

/// The grid-shaped plabic graph whose faces are labelled by rectangles.
///
/// Box `(i, j)` of the `(n-k) x k` grid (row `i` from the top, column `j` from the left) holds a
/// white trivalent vertex in the top row, a black trivalent vertex in the left column, and a
/// black/white pair joined by a diagonal edge elsewhere; the top-left box is empty. `b_i` for
/// `i <= n-k` closes row `i` on the east; `b_{n-k+c}` closes column `k+1-c` at the bottom.
pub fn build_rectangles_graph(shape: GrassmannShape) -> PlabicGraph {
    build(shape).0
}

/// The orientation of [`build_rectangles_graph`] with every row edge pointing west, every column
/// edge pointing south and every diagonal pointing from its black to its white end. Its sources
/// are `b_1..b_{n-k}`. Entry `e` is `true` when edge `e` runs `ends[0] -> ends[1]`.
pub fn rectangles_orientation(shape: GrassmannShape) -> Vec<bool> {
    build(shape).1
}

fn build(shape: GrassmannShape) -> (PlabicGraph, Vec<bool>) {
    let a = shape.rows();
    let k = shape.cols();
    let n = shape.n;
    let mut b = Builder { kinds: Vec::new(), edges: Vec::new(), half: Vec::new(), forward: Vec::new() };
    let boundary: Vec<usize> = (1..=n).map(|i| b.vertex(VertexKind::Boundary(i))).collect();
    // Vertex owning each port of each box.
    let mut ports: BTreeMap<(usize, usize, Port), usize> = BTreeMap::new();
    for i in 1..=a {
        for j in 1..=k {
            match (i, j) {
                (1, 1) => {}
                (1, _) => {
                    let t = b.vertex(VertexKind::Internal(Color::White));
                    for p in [Port::E, Port::W, Port::S] {
                        ports.insert((i, j, p), t);
                    }
                }
                (_, 1) => {
                    let t = b.vertex(VertexKind::Internal(Color::Black));
                    for p in [Port::N, Port::E, Port::S] {
                        ports.insert((i, j, p), t);
                    }
                }
                _ => {
                    let u = b.vertex(VertexKind::Internal(Color::Black));
                    let v = b.vertex(VertexKind::Internal(Color::White));
                    ports.insert((i, j, Port::N), u);
                    ports.insert((i, j, Port::E), u);
                    ports.insert((i, j, Port::W), v);
                    ports.insert((i, j, Port::S), v);
                    b.edge((u, (-1, -1)), (v, (1, 1)));
                }
            }
        }
    }
    let port = |i: usize, j: usize, p: Port| (ports[&(i, j, p)], p.dir());
    // Row segments, directed west. The top-left box is skipped here and in the column pass.
    for i in 1..=a {
        for j in 1..=k {
            if (i, j) == (1, 1) {
                continue;
            }
            let east = if j == k { (boundary[i - 1], Port::W.dir()) } else { port(i, j + 1, Port::W) };
            b.edge(east, port(i, j, Port::E));
        }
    }
    // Column segments, directed south.
    for j in 1..=k {
        for i in 1..=a {
            if (i, j) == (1, 1) {
                continue;
            }
            let south = if i == a { (boundary[a + k - j], Port::N.dir()) } else { port(i + 1, j, Port::N) };
            b.edge(port(i, j, Port::S), south);
        }
    }
    // The bent edge through the empty box, from its east neighbour to its south neighbour.
    let from = if k == 1 { (boundary[0], Port::W.dir()) } else { port(1, 2, Port::W) };
    let to = if a == 1 { (boundary[n - 1], Port::N.dir()) } else { port(2, 1, Port::N) };
    b.edge(from, to);
    let rotation: Vec<Vec<usize>> = b
        .half
        .iter()
        .map(|hs| {
            let mut hs = hs.clone();
            hs.sort_by_key(|&(_, d)| clockwise_key(d));
            hs.into_iter().map(|(e, _)| e).collect()
        })
        .collect();
    let colors = b
        .kinds
        .iter()
        .map(|kind| match kind {
            VertexKind::Internal(c) => Some(*c),
            VertexKind::Boundary(_) => None,
        })
        .collect();
    let g = PlabicGraph::new(shape, colors, boundary, b.edges, rotation).expect("grid graph is well formed");
    (g, b.forward)
}

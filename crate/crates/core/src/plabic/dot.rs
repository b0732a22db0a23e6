use std::fmt::Write as _;

use super::{Color, PlabicGraph, VertexKind};

impl PlabicGraph {
    /// Graphviz rendering with filled vertices and a text node per face carrying its label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plabic {\n  node [shape=circle, label=\"\", width=0.18];\n");
        for v in 0..self.vertex_count() {
            match self.kind(v) {
                VertexKind::Boundary(i) => writeln!(out, "  v{v} [shape=plaintext, label=\"b{i}\"];").unwrap(),
                VertexKind::Internal(Color::Black) => {
                    writeln!(out, "  v{v} [style=filled, fillcolor=black];").unwrap()
                }
                VertexKind::Internal(Color::White) => {
                    writeln!(out, "  v{v} [style=filled, fillcolor=white];").unwrap()
                }
            }
        }
        for (e, [a, b]) in self.edges().iter().enumerate() {
            writeln!(out, "  v{a} -- v{b} [id=\"e{e}\"];").unwrap();
        }
        if let Ok(lab) = self.face_labels() {
            let faces = self.faces();
            for (f, label) in lab.labels.iter().enumerate() {
                let text = if label.is_empty() { "∅".to_string() } else { label.to_string() };
                writeln!(out, "  f{f} [shape=plaintext, fontcolor=blue, label=\"{text}\"];").unwrap();
                let mut around: Vec<usize> = faces.cycles[f].iter().map(|&d| self.dart_head(d)).collect();
                around.sort_unstable();
                around.dedup();
                for v in around {
                    writeln!(out, "  f{f} -- v{v} [style=invis];").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::partitions::GrassmannShape;
    use crate::plabic::build_rectangles_graph;

    #[test]
    fn dot_is_deterministic_and_labelled() {
        let g = build_rectangles_graph(GrassmannShape::new(2, 4).unwrap());
        let a = g.to_dot();
        assert_eq!(a, g.to_dot());
        assert!(a.contains("label=\"[1]\""));
        assert!(a.contains("label=\"[2,2]\""));
        assert!(a.contains("fillcolor=black"));
    }
}

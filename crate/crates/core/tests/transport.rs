use grdual_core::network::{oriented_along_path, NetworkChart};
use grdual_core::plabic::build_rectangles_graph;
use grdual_core::{GrassmannShape, PlabicGraph};

#[test]
fn transport_reaches_every_member() {
    for (k, n, size) in [(2, 4, 2), (2, 5, 5), (3, 5, 5), (3, 6, 34)] {
        let sh = GrassmannShape::new(k, n).unwrap();
        let mc = PlabicGraph::move_class_bfs(&build_rectangles_graph(sh), 10_000).unwrap();
        assert_eq!(mc.len(), size, "{k},{n}");
        for m in &mc.members {
            let o = oriented_along_path(sh, &m.path).unwrap();
            assert_eq!(o.graph().encode(), m.code);
            assert!(o.is_acyclic());
            assert_eq!(o.sources(), &sh.initial_subset());
            let chart = NetworkChart::new(o).unwrap();
            assert!(chart.plucker_polynomial(&sh.initial_subset()).unwrap().is_one());
        }
    }
}

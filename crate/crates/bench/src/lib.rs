//! Shared fixtures for the polycut benchmarks.

use polycut::construct;
use polycut::cuts::{self, CofacialState, CutReport};
use polycut::embed::PlanarGraph;

/// A mid-sized triangulation with removable edges: the double wheel on ten
/// vertices.
pub fn wheel10() -> PlanarGraph {
    construct::double_wheel(10).expect("double wheel on 10 vertices")
}

/// The wheel plus its cut state, ready for removal benchmarks.
pub fn wheel10_with_state() -> (PlanarGraph, CofacialState, CutReport) {
    let g = wheel10();
    let state = CofacialState::new(&g);
    let report = cuts::enumerate_3cuts_unchecked(&g, &state);
    (g, state, report)
}

/// An edge of the wheel whose removal keeps the graph a polyhedron.
pub fn removable_edge(g: &PlanarGraph) -> (u8, u8) {
    for (x, y) in g.edges() {
        if g.degree(x) >= 4 && g.degree(y) >= 4 && g.remove_edge(x, y).is_ok() {
            let h = g.remove_edge(x, y).unwrap();
            if h.is_three_connected() {
                return (x, y);
            }
        }
    }
    panic!("fixture has no removable edge");
}

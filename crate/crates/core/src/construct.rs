//! Constructions: named witness graphs, exhaustive triangulation generation,
//! and expansion of triangulations into polyhedra by edge removal.
//!
//! The generators are desk-scale by design. Triangulations are produced by
//! iterated vertex splitting starting from K4 (the inverse of edge
//! contraction; every triangulation on five or more vertices has a
//! contractible edge, so level-by-level splitting with canonical-code
//! deduplication reaches every isomorphism class). Polyhedra are produced
//! from triangulations by removing edges while keeping 3-connectivity,
//! pruning a branch as soon as its 3-cut count exceeds the requested upper
//! bound — sound because removing an edge never destroys a 3-cut, so cut
//! counts only grow along a removal chain.

use crate::bitset::{Vertex, VertexSet};
use crate::cuts::{self, CofacialState, CutReport};
use crate::embed::{EmbedError, Face, PlanarGraph};
use dashmap::DashSet;
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    TooSmall { need: usize, have: usize },
    /// The face is not a triangle.
    NotTriangle { len: usize },
    /// The family is defined for even parameters from 8 upward.
    OddOrSmall { d: usize },
    OutOfRange { n: usize, lo: usize, hi: usize },
    Embed(EmbedError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructError::TooSmall { need, have } => {
                write!(f, "need at least {need} vertices, got {have}")
            }
            ConstructError::NotTriangle { len } => {
                write!(f, "face has {len} vertices, expected a triangle")
            }
            ConstructError::OddOrSmall { d } => {
                write!(f, "family needs an even parameter of at least 8, got {d}")
            }
            ConstructError::OutOfRange { n, lo, hi } => {
                write!(f, "{n} outside supported range {lo}..={hi}")
            }
            ConstructError::Embed(ref e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ConstructError {}

impl From<EmbedError> for ConstructError {
    fn from(e: EmbedError) -> Self {
        ConstructError::Embed(e)
    }
}

/// The complete graph on four vertices — the smallest polyhedron and the
/// root of triangulation generation.
pub fn k4() -> PlanarGraph {
    PlanarGraph::from_faces(4, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 1], &[1, 3, 2]])
        .expect("K4 face list is a valid sphere map")
}

/// Double wheel on n vertices: a cycle on vertices 0..n-2 plus two apexes
/// (n-2 and n-1) adjacent to every cycle vertex but not to each other. A
/// 4-connected triangulation with 2n-4 triangular faces.
pub fn double_wheel(n: usize) -> Result<PlanarGraph, ConstructError> {
    if n < 6 {
        return Err(ConstructError::TooSmall { need: 6, have: n });
    }
    if n > 255 {
        return Err(ConstructError::Embed(EmbedError::TooManyVertices { n }));
    }
    let r = n - 2;
    let a = (n - 2) as Vertex;
    let b = (n - 1) as Vertex;
    let mut faces: Vec<Vec<Vertex>> = Vec::with_capacity(2 * r);
    for k in 0..r {
        let u = k as Vertex;
        let w = ((k + 1) % r) as Vertex;
        faces.push(vec![u, w, a]);
        faces.push(vec![w, u, b]);
    }
    let refs: Vec<&[Vertex]> = faces.iter().map(|f| f.as_slice()).collect();
    Ok(PlanarGraph::from_faces(n, &refs)?)
}

/// Insert a new degree-3 vertex into the triangular face `f` and join it to
/// the three corners. Preserves the triangulation property.
pub fn stack_vertex(t: &PlanarGraph, f: &Face) -> Result<PlanarGraph, ConstructError> {
    if f.len() != 3 {
        return Err(ConstructError::NotTriangle { len: f.len() });
    }
    let b = f.boundary();
    if !t.are_adjacent(b[0], b[1]) || t.trace_face(b[0], b[1]) != *f {
        return Err(ConstructError::Embed(EmbedError::NotAFace));
    }
    Ok(t.add_apex_in_face(f)?)
}

/// The non-traceable triangulation family: the double wheel with d faces
/// (d/2 + 2 vertices) with a new vertex stacked into every face. The result
/// has 3d/2 + 2 vertices and exactly d 3-cuts, and the d stacked vertices
/// outnumber the rest so no hamiltonian path exists.
pub fn non_traceable_family(d: usize) -> Result<PlanarGraph, ConstructError> {
    if d < 8 || d % 2 != 0 {
        return Err(ConstructError::OddOrSmall { d });
    }
    let base = double_wheel(d / 2 + 2)?;
    let originals: Vec<VertexSet> = base.faces().iter().map(|f| f.vertex_set()).collect();
    debug_assert_eq!(originals.len(), d);
    let mut g = base;
    for triple in &originals {
        let face = g
            .faces()
            .into_iter()
            .find(|f| f.vertex_set() == *triple)
            .expect("stacking one face leaves the other original faces intact");
        g = stack_vertex(&g, &face)?;
    }
    Ok(g)
}

/// The smallest non-hamiltonian polyhedron: 11 vertices, 18 edges, all nine
/// faces quadrilaterals, with a 3-fold symmetry. Vertex 0 and vertex 10 are
/// the two poles; 1-3 and 7-9 are their neighbours, 4-6 the middle ring.
pub fn herschel() -> PlanarGraph {
    PlanarGraph::from_faces(
        11,
        &[
            &[0, 1, 5, 2],
            &[0, 2, 6, 3],
            &[0, 3, 4, 1],
            &[1, 4, 7, 5],
            &[2, 5, 8, 6],
            &[3, 6, 9, 4],
            &[10, 8, 5, 7],
            &[10, 9, 6, 8],
            &[10, 7, 4, 9],
        ],
    )
    .expect("fixture face list is a valid sphere map")
}

/// Eliminate every 3-cut by repeated apex insertion: take the
/// lexicographically least 3-cut, pick a non-adjacent pair in it (deleting
/// one cut edge first when the cut is a triangle), and put a new vertex into
/// the face shared by that pair, joined to the whole boundary. Each step
/// strictly decreases the 3-cut count. Returns the lifted graph and the set
/// of added vertices; a graph without 3-cuts comes back unchanged.
pub fn lift_to_4connected(g: &PlanarGraph) -> (PlanarGraph, VertexSet) {
    let mut h = g.clone();
    let mut added = VertexSet::EMPTY;
    loop {
        let report = cuts::enumerate_3cuts(&h).expect("lift operates on polyhedra");
        if report.cuts.is_empty() {
            return (h, added);
        }
        let before = report.count();
        let t = report.cuts[0].vertices;
        let pairs = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
        let (u, v) = match pairs.iter().copied().find(|&(x, y)| !h.are_adjacent(x, y)) {
            Some(p) => p,
            None => {
                // Separating triangle: delete one of its edges first.
                let (x, y) = pairs[0];
                h = h.remove_edge(x, y).expect("cut edge is present");
                assert!(
                    h.is_three_connected(),
                    "removing a separating-triangle edge must keep 3-connectivity"
                );
                (x, y)
            }
        };
        let cut_set = VertexSet::from_slice(&t);
        let comps = h.components_without(cut_set);
        let face = h
            .faces()
            .into_iter()
            .find(|f| {
                if !f.contains(u) || !f.contains(v) {
                    return false;
                }
                let vs = f.vertex_set();
                comps.iter().filter(|c| c.intersects(vs)).count() >= 2
            })
            .expect("the face shared by a non-adjacent cut pair meets both sides");
        added.insert(h.n() as Vertex);
        h = h.add_apex_in_face(&face).expect("apex insertion stays planar");
        let after = cuts::enumerate_3cuts(&h)
            .expect("apex insertion keeps 3-connectivity")
            .count();
        assert!(
            after < before,
            "apex insertion must strictly decrease the cut count ({before} -> {after})"
        );
    }
}

/// Split vertex v of a triangulation along the rotation positions i < j:
/// v keeps the rotation arc from position i to j plus the new vertex, the
/// new vertex (index n) takes the complementary arc plus v, and the arc
/// endpoints become adjacent to both. The inverse of contracting the new
/// edge; the result is again a triangulation.
fn split_vertex(t: &PlanarGraph, v: Vertex, i: usize, j: usize) -> PlanarGraph {
    let old = t.neighbors(v);
    let d = old.len();
    debug_assert!(i < j && j < d);
    let a = old[i];
    let b = old[j];
    let n = t.n();
    let v2 = n as Vertex;
    let arc1: Vec<Vertex> = (i..=j).map(|k| old[k]).collect();
    let arc2: Vec<Vertex> = (0..=d - (j - i)).map(|k| old[(j + k) % d]).collect();
    let mut rot: Vec<Vec<Vertex>> = (0..n)
        .map(|x| t.neighbors(x as Vertex).to_vec())
        .collect();
    rot[v as usize] = arc1;
    rot[v as usize].push(v2);
    let mut r2 = arc2.clone();
    r2.push(v);
    // Interior vertices of the complementary arc move from v to the new
    // vertex.
    for &x in &arc2[1..arc2.len() - 1] {
        let p = rot[x as usize]
            .iter()
            .position(|&w| w == v)
            .expect("arc vertex is adjacent to v");
        rot[x as usize][p] = v2;
    }
    // The arc endpoints see both: v then v2 at a, v2 then v at b, replacing
    // their old single entry for v.
    let pa = rot[a as usize].iter().position(|&w| w == v).unwrap();
    rot[a as usize].insert(pa + 1, v2);
    let pb = rot[b as usize].iter().position(|&w| w == v).unwrap();
    rot[b as usize][pb] = v2;
    rot[b as usize].insert(pb + 1, v);
    rot.push(r2);
    PlanarGraph::build(rot).expect("vertex split of a triangulation is a triangulation")
}

/// All simple planar triangulations on n vertices, one per isomorphism
/// class, by iterated vertex splitting from K4 with canonical-code
/// deduplication at every level.
pub fn generate_triangulations(n: usize) -> Result<Vec<PlanarGraph>, ConstructError> {
    if !(4..=12).contains(&n) {
        return Err(ConstructError::OutOfRange { n, lo: 4, hi: 12 });
    }
    let mut level = vec![k4()];
    for _ in 4..n {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let d = t.degree(v);
                for i in 0..d {
                    for j in i + 1..d {
                        let child = split_vertex(t, v, i, j);
                        if seen.insert(child.canonical_code()) {
                            next.push(child);
                        }
                    }
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Observer of the edge-removal expansion. `enter` fires once per newly
/// discovered isomorphism class, immediately after its cut report is
/// computed; `leave` fires when the search below it is exhausted, so a
/// visitor can maintain per-chain state on its own stack. `removed` is the
/// edge whose removal produced this graph from its parent (None at the
/// root); `in_range` tells whether the graph's cut count lies in the
/// requested range (the emission rule).
pub trait ChainVisitor {
    fn enter(
        &mut self,
        g: &PlanarGraph,
        report: &CutReport,
        removed: Option<(Vertex, Vertex)>,
        in_range: bool,
    );
    fn leave(&mut self);
}

/// Adapter running a closure on every in-range graph.
pub struct EmitVisitor<F: FnMut(&PlanarGraph, &CutReport)>(pub F);

impl<F: FnMut(&PlanarGraph, &CutReport)> ChainVisitor for EmitVisitor<F> {
    fn enter(
        &mut self,
        g: &PlanarGraph,
        report: &CutReport,
        _removed: Option<(Vertex, Vertex)>,
        in_range: bool,
    ) {
        if in_range {
            (self.0)(g, report)
        }
    }

    fn leave(&mut self) {}
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpandStats {
    /// Isomorphism classes visited (cut count within the upper bound).
    pub visited: u64,
    /// Classes whose cut count also reached the lower bound.
    pub emitted: u64,
    /// Children discarded for exceeding the upper bound.
    pub overcap_children: u64,
}

impl std::ops::AddAssign for ExpandStats {
    fn add_assign(&mut self, o: ExpandStats) {
        self.visited += o.visited;
        self.emitted += o.emitted;
        self.overcap_children += o.overcap_children;
    }
}

/// Expand one triangulation into every 3-connected graph reachable from it
/// by edge removals whose cut count stays within `hi`, visiting each
/// isomorphism class once. Branches are cut as soon as a child exceeds `hi`
/// (cut counts never decrease along removals); graphs are reported in-range
/// when their count is at least `lo`.
pub fn expand_polyhedra<V: ChainVisitor>(
    t: &PlanarGraph,
    lo: usize,
    hi: usize,
    visitor: &mut V,
) -> ExpandStats {
    let seen: DashSet<Box<[u8]>> = DashSet::new();
    expand_polyhedra_with_seen(t, lo, hi, &seen, visitor)
}

/// [`expand_polyhedra`] with a caller-supplied deduplication set, so that
/// walks from different seed triangulations of the same order can share it:
/// a polyhedron reachable from several triangulations is still visited once.
/// Insertion into the set happens before the visitor sees a graph, so at
/// most one concurrent walk ever reports a given class.
pub fn expand_polyhedra_with_seen<V: ChainVisitor>(
    t: &PlanarGraph,
    lo: usize,
    hi: usize,
    seen: &DashSet<Box<[u8]>>,
    visitor: &mut V,
) -> ExpandStats {
    debug_assert!(t.is_three_connected());
    debug_assert!(t.faces().iter().all(|f| f.is_triangle()));
    let mut stats = ExpandStats::default();
    let state = CofacialState::new(t);
    let report = cuts::enumerate_3cuts_unchecked(t, &state);
    if report.count() > hi {
        stats.overcap_children += 1;
        return stats;
    }
    if !seen.insert(t.canonical_code().into_boxed_slice()) {
        return stats;
    }
    expand_rec(t, &state, &report, None, lo, hi, seen, visitor, &mut stats);
    stats
}

#[allow(clippy::too_many_arguments)]
fn expand_rec<V: ChainVisitor>(
    g: &PlanarGraph,
    state: &CofacialState,
    report: &CutReport,
    removed: Option<(Vertex, Vertex)>,
    lo: usize,
    hi: usize,
    seen: &DashSet<Box<[u8]>>,
    visitor: &mut V,
    stats: &mut ExpandStats,
) {
    stats.visited += 1;
    let in_range = report.count() >= lo;
    if in_range {
        stats.emitted += 1;
    }
    visitor.enter(g, report, removed, in_range);
    for (x, y) in g.edges() {
        // A 3-connected graph needs minimum degree 3, so both endpoints must
        // have degree at least 4 before the removal.
        if g.degree(x) < 4 || g.degree(y) < 4 {
            continue;
        }
        let Ok(step) = cuts::remove_edge_recount(g, state, report, x, y) else {
            continue;
        };
        if step.report.count() > hi {
            stats.overcap_children += 1;
            continue;
        }
        if seen.insert(step.graph.canonical_code().into_boxed_slice()) {
            expand_rec(
                &step.graph,
                &step.state,
                &step.report,
                Some((x, y)),
                lo,
                hi,
                seen,
                visitor,
                stats,
            );
        }
    }
    visitor.leave();
}

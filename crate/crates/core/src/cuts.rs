//! 3-cuts of a polyhedron through face incidences.
//!
//! In a 3-connected plane graph a vertex triple is a 3-cut exactly when the
//! three vertices are pairwise on a common face but no single face contains
//! all three. This module maintains the underlying cofaciality structure
//! (which vertex pairs share a face, which triples lie together on one), uses
//! it to enumerate and classify 3-cuts, recounts cuts incrementally when an
//! edge is removed (only pairs on the two merged faces can become newly
//! cofacial, so candidates are confined to the merged boundary), and splits a
//! polyhedron along a cut into its two edge-closed sides.

use crate::bitset::{Vertex, VertexSet};
use crate::embed::{EmbedError, Face, PlanarGraph};
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutError {
    NotThreeConnected,
    /// The triple does not disconnect the graph.
    NotACut { cut: [Vertex; 3] },
    /// The graph has no 3-cuts at all.
    NoCuts,
    Embed(EmbedError),
}

impl fmt::Display for CutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutError::NotThreeConnected => write!(f, "graph is not 3-connected"),
            CutError::NotACut { cut } => {
                write!(f, "{{{}, {}, {}}} is not a 3-cut", cut[0], cut[1], cut[2])
            }
            CutError::NoCuts => write!(f, "graph has no 3-cuts"),
            CutError::Embed(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CutError {}

impl From<EmbedError> for CutError {
    fn from(e: EmbedError) -> Self {
        CutError::Embed(e)
    }
}

/// Which vertex pairs and triples lie together on a face.
///
/// `share[v]` is the set of vertices (other than v) cofacial with v;
/// `triples` holds every sorted vertex triple that appears on a single face
/// boundary. Both only ever grow when edges are removed, which is what makes
/// incremental recounting sound.
#[derive(Clone, Debug)]
pub struct CofacialState {
    share: Vec<VertexSet>,
    triples: HashSet<[Vertex; 3]>,
}

impl CofacialState {
    pub fn new(g: &PlanarGraph) -> CofacialState {
        let mut state = CofacialState {
            share: vec![VertexSet::EMPTY; g.n()],
            triples: HashSet::new(),
        };
        for face in g.faces() {
            state.absorb_face(&face);
        }
        state
    }

    fn absorb_face(&mut self, face: &Face) {
        let vs: Vec<Vertex> = face.vertex_set().iter().collect();
        let k = vs.len();
        for i in 0..k {
            for j in i + 1..k {
                self.share[vs[i] as usize].insert(vs[j]);
                self.share[vs[j] as usize].insert(vs[i]);
                for l in j + 1..k {
                    self.triples.insert([vs[i], vs[j], vs[l]]);
                }
            }
        }
    }

    /// Vertices sharing a face with `v` (v itself excluded).
    pub fn share(&self, v: Vertex) -> VertexSet {
        self.share[v as usize]
    }

    pub fn pair_cofacial(&self, u: Vertex, v: Vertex) -> bool {
        self.share[u as usize].contains(v)
    }

    /// True if some single face contains all of u, v, w.
    pub fn triple_cofacial(&self, u: Vertex, v: Vertex, w: Vertex) -> bool {
        let mut t = [u, v, w];
        t.sort_unstable();
        self.triples.contains(&t)
    }

    /// The 3-cut test: pairwise cofacial but not all on one face.
    pub fn is_cut(&self, u: Vertex, v: Vertex, w: Vertex) -> bool {
        self.pair_cofacial(u, v)
            && self.pair_cofacial(u, w)
            && self.pair_cofacial(v, w)
            && !self.triple_cofacial(u, v, w)
    }
}

/// A 3-cut together with its classification: the cut is trivial when one side
/// of the separation is a single (degree-3) vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    pub vertices: [Vertex; 3],
    pub trivial: bool,
}

/// The complete 3-cut structure of a polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    /// All 3-cuts, sorted lexicographically by vertex triple.
    pub cuts: Vec<Cut>,
}

impl CutReport {
    pub fn count(&self) -> usize {
        self.cuts.len()
    }

    pub fn trivial_count(&self) -> usize {
        self.cuts.iter().filter(|c| c.trivial).count()
    }

    /// No 3-cuts at all, i.e. the graph is 4-connected (or K4).
    pub fn is_four_connected_like(&self) -> bool {
        self.cuts.is_empty()
    }

    /// Every 3-cut is trivial.
    pub fn essentially_four_connected(&self) -> bool {
        self.cuts.iter().all(|c| c.trivial)
    }

    pub fn triples(&self) -> Vec<[Vertex; 3]> {
        self.cuts.iter().map(|c| c.vertices).collect()
    }
}

fn classify(g: &PlanarGraph, t: [Vertex; 3]) -> Cut {
    let comps = g.components_without(VertexSet::from_slice(&t));
    debug_assert!(comps.len() >= 2);
    Cut {
        vertices: t,
        trivial: comps.iter().any(|c| c.len() == 1),
    }
}

/// Enumerate all 3-cuts of a 3-connected plane graph by the face-sharing
/// criterion. Candidates are triples with all three pairs cofacial; the
/// triples sitting on a single face are excluded.
pub fn enumerate_3cuts(g: &PlanarGraph) -> Result<CutReport, CutError> {
    if !g.is_three_connected() {
        return Err(CutError::NotThreeConnected);
    }
    Ok(enumerate_3cuts_unchecked(g, &CofacialState::new(g)))
}

/// Enumeration core, usable with a precomputed cofacial state. The caller
/// guarantees 3-connectivity.
pub fn enumerate_3cuts_unchecked(g: &PlanarGraph, state: &CofacialState) -> CutReport {
    let n = g.n();
    let mut cuts = Vec::new();
    for u in 0..n {
        let su = state.share(u as Vertex);
        for v in su.iter() {
            if v <= u as Vertex {
                continue;
            }
            let common = su & state.share(v);
            for w in common.iter() {
                if w <= v {
                    continue;
                }
                let t = [u as Vertex, v, w];
                if !state.triple_cofacial(t[0], t[1], t[2]) {
                    cuts.push(classify(g, t));
                }
            }
        }
    }
    cuts.sort_unstable();
    CutReport { cuts }
}

/// Outcome of removing one edge from a polyhedron while tracking cuts.
#[derive(Clone, Debug)]
pub struct RemovalStep {
    pub graph: PlanarGraph,
    pub state: CofacialState,
    pub report: CutReport,
}

/// Remove edge {x,y} from `g` and produce the updated graph, cofacial state
/// and cut report without re-enumerating from scratch.
///
/// Removing an edge merges its two flanking faces, so cofaciality only grows,
/// every previous cut remains a cut, and any new cut must use a pair that
/// became cofacial just now: one vertex from each flank, not previously on a
/// common face. For each such pair the third vertex must have been cofacial
/// with both already and must avoid the merged face. Surviving candidates are
/// confirmed with the full face-sharing test; the cofaciality filter alone is
/// not trusted.
pub fn remove_edge_recount(
    g: &PlanarGraph,
    state: &CofacialState,
    report: &CutReport,
    x: Vertex,
    y: Vertex,
) -> Result<RemovalStep, CutError> {
    let f1 = g.trace_face(x, y).vertex_set();
    let f2 = g.trace_face(y, x).vertex_set();
    let h = g.remove_edge(x, y)?;
    if !h.is_three_connected() {
        return Err(CutError::NotThreeConnected);
    }

    // The merged face is the face of h containing both old flanks; it is
    // incident to x, so scanning x's rotations finds it.
    let merged = {
        let mut found = None;
        for &w in h.neighbors(x) {
            let face = h.trace_face(x, w);
            let vs = face.vertex_set();
            if f1.is_subset_of(vs) && f2.is_subset_of(vs) {
                found = Some(face);
                break;
            }
        }
        found.expect("removing an edge merges its two flanking faces")
    };

    let mut new_state = state.clone();
    new_state.absorb_face(&merged);

    let only_f1 = f1 - f2;
    let only_f2 = f2 - f1;
    let merged_set = merged.vertex_set();

    let mut cuts: Vec<Cut> = report
        .cuts
        .iter()
        .map(|c| Cut {
            vertices: c.vertices,
            trivial: {
                let comps = h.components_without(VertexSet::from_slice(&c.vertices));
                comps.iter().any(|s| s.len() == 1)
            },
        })
        .collect();

    for u in only_f1.iter() {
        for w in only_f2.iter() {
            if state.pair_cofacial(u, w) {
                // The pair was already cofacial before the merge; any cut
                // through it was found earlier.
                continue;
            }
            let third = (new_state.share(u) & new_state.share(w)) - merged_set;
            for z in third.iter() {
                if new_state.is_cut(u, w, z) {
                    let mut t = [u, w, z];
                    t.sort_unstable();
                    cuts.push(classify(&h, t));
                }
            }
        }
    }
    cuts.sort_unstable();
    cuts.dedup();

    Ok(RemovalStep {
        graph: h,
        state: new_state,
        report: CutReport { cuts },
    })
}

/// One side of a 3-cut decomposition: the polyhedron induced by a component
/// together with the cut, with the cut triangle completed, plus the mapping
/// back to the original vertex labels.
#[derive(Clone, Debug)]
pub struct CutSide {
    pub graph: PlanarGraph,
    /// `original[i]` is the vertex of the source graph that i maps back to.
    pub original: Vec<Vertex>,
    /// Positions of the three cut vertices within the part.
    pub cut: [Vertex; 3],
}

/// Decomposition of a polyhedron along one 3-cut into its two sides.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub cut: [Vertex; 3],
    pub sides: [CutSide; 2],
}

/// Split `g` along the 3-cut `t`: each side is the subgraph induced by one
/// component plus the cut vertices, with the triangle on the cut completed so
/// that both sides are again polyhedra in which the cut triple is a face.
pub fn decompose_along_cut(g: &PlanarGraph, t: [Vertex; 3]) -> Result<Decomposition, CutError> {
    let cut_set = VertexSet::from_slice(&t);
    let comps = g.components_without(cut_set);
    if comps.len() < 2 {
        return Err(CutError::NotACut { cut: t });
    }
    assert_eq!(
        comps.len(),
        2,
        "a 3-cut of a 3-connected plane graph separates exactly two parts"
    );
    let sides = [
        extract_side(g, comps[0], cut_set)?,
        extract_side(g, comps[1], cut_set)?,
    ];
    Ok(Decomposition { cut: t, sides })
}

fn extract_side(g: &PlanarGraph, comp: VertexSet, cut_set: VertexSet) -> Result<CutSide, CutError> {
    let keep = comp | cut_set;
    let original: Vec<Vertex> = keep.iter().collect();
    let mut to_new = [255u8; 256];
    for (i, &v) in original.iter().enumerate() {
        to_new[v as usize] = i as u8;
    }
    // Induced rotation system: keep each vertex's rotation restricted to kept
    // neighbours. Dropping the other side's vertices keeps the cyclic order
    // planar because the removed set is exactly one face-connected region.
    let rot: Vec<Vec<Vertex>> = original
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| keep.contains(w))
                .map(|&w| to_new[w as usize])
                .collect()
        })
        .collect();
    let mut part = PlanarGraph::build(rot)?;
    let cut_new: Vec<Vertex> = cut_set.iter().map(|v| to_new[v as usize]).collect();
    let cut_new: [Vertex; 3] = [cut_new[0], cut_new[1], cut_new[2]];
    part = complete_triangle(&part, cut_new)?;
    Ok(CutSide {
        graph: part,
        original,
        cut: cut_new,
    })
}

/// Insert any missing edges among {a,b,c} so they bound a triangular face.
/// Each missing edge is inserted as a chord of a face containing both ends
/// and all three cut vertices; chords are placed so the remaining corner
/// stays on the face that still needs completing.
fn complete_triangle(g: &PlanarGraph, t: [Vertex; 3]) -> Result<PlanarGraph, CutError> {
    let mut h = g.clone();
    loop {
        let missing: Vec<(Vertex, Vertex)> = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
            .into_iter()
            .filter(|&(a, b)| !h.are_adjacent(a, b))
            .collect();
        let Some(&(a, b)) = missing.first() else {
            break;
        };
        let third = t.iter().copied().find(|&v| v != a && v != b).unwrap();
        let face = h
            .faces()
            .into_iter()
            .find(|f| f.contains(a) && f.contains(b) && f.contains(third))
            .expect("cut vertices lie on the face left by the removed side");
        let boundary = face.boundary();
        let ia = boundary.iter().position(|&v| v == a).unwrap();
        let ib = boundary.iter().position(|&v| v == b).unwrap();
        // Splitting at (ia, ib) makes two faces; the third cut vertex lands
        // on one of them, so re-finding the face with all three on the next
        // iteration keeps the completion going in the right region.
        h = h.split_face_at(boundary, ia, ib);
    }
    // The triangle must now bound a face.
    let is_face = h.faces().iter().any(|f| {
        f.len() == 3 && f.contains(t[0]) && f.contains(t[1]) && f.contains(t[2])
    });
    assert!(is_face, "completed cut triangle must be facial");
    Ok(h)
}

/// The lexicographically least 3-cut whose removal leaves one side free of
/// further cuts, together with its decomposition. In a polyhedron with at
/// least one 3-cut such a cut always exists: any cut minimizing one side.
pub fn find_clean_cut(g: &PlanarGraph, report: &CutReport) -> Result<Decomposition, CutError> {
    if report.cuts.is_empty() {
        return Err(CutError::NoCuts);
    }
    for cut in &report.cuts {
        let dec = decompose_along_cut(g, cut.vertices)?;
        for side_idx in [0, 1] {
            let side = &dec.sides[side_idx];
            let side_report = enumerate_3cuts(&side.graph);
            if let Ok(r) = side_report {
                if r.cuts.is_empty() {
                    return Ok(dec);
                }
            }
        }
    }
    Err(CutError::NoCuts)
}

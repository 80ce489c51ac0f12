//! Combinatorial embeddings of planar graphs.
//!
//! A graph is stored as a rotation system: for every vertex the clockwise
//! cyclic order of its neighbours. Faces are the orbits of directed edges
//! under the fixed traversal convention "reverse, then rotate": the directed
//! edge (u,v) is followed by (v,w) where w is the successor of u in the
//! rotation of v. A rotation system is accepted only if it is connected and
//! describes a sphere embedding, i.e. V - E + F = 2, so every value of
//! [`PlanarGraph`] in existence is a valid plane graph.
//!
//! Vertices are dense indices 0..n with n <= 255 (the single-byte planar_code
//! regime); all mutating operations return a fresh graph and re-validate it.

use crate::bitset::{Vertex, VertexSet};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedError {
    /// `u` lists `v` as a neighbour but `v` does not list `u`.
    AsymmetricAdjacency { u: Vertex, v: Vertex },
    /// A vertex lists itself, or lists the same neighbour twice.
    LoopOrMultiEdge { v: Vertex },
    /// The rotation system does not satisfy V - E + F = 2.
    NotGenusZero { faces: usize },
    /// The graph does not reach every vertex from vertex 0.
    Disconnected,
    /// Graph has fewer vertices than the operation needs.
    TooSmall { need: usize, have: usize },
    /// More vertices than a single planar_code byte can address.
    TooManyVertices { n: usize },
    /// The named edge is not present.
    NoSuchEdge { u: Vertex, v: Vertex },
    /// The face handle does not describe a face of this graph.
    NotAFace,
    /// The vertex does not lie on the given face.
    NotOnFace { v: Vertex },
    AlreadyAdjacent { u: Vertex, v: Vertex },
}

impl fmt::Display for EmbedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EmbedError::AsymmetricAdjacency { u, v } => {
                write!(f, "vertex {u} lists {v} but {v} does not list {u}")
            }
            EmbedError::LoopOrMultiEdge { v } => {
                write!(f, "vertex {v} has a loop or repeated neighbour")
            }
            EmbedError::NotGenusZero { faces } => {
                write!(f, "rotation system is not a sphere embedding ({faces} faces)")
            }
            EmbedError::Disconnected => write!(f, "graph is not connected"),
            EmbedError::TooSmall { need, have } => {
                write!(f, "need at least {need} vertices, have {have}")
            }
            EmbedError::TooManyVertices { n } => write!(f, "{n} vertices exceed the cap of 255"),
            EmbedError::NoSuchEdge { u, v } => write!(f, "no edge between {u} and {v}"),
            EmbedError::NotAFace => write!(f, "boundary sequence is not a face of this graph"),
            EmbedError::NotOnFace { v } => write!(f, "vertex {v} is not on the face"),
            EmbedError::AlreadyAdjacent { u, v } => write!(f, "{u} and {v} are already adjacent"),
        }
    }
}

impl std::error::Error for EmbedError {}

/// A face of the embedding: the cyclic boundary sequence of one directed-edge
/// orbit. `boundary()[i] -> boundary()[i+1]` (cyclically) are exactly the
/// directed edges of the orbit; on non-simple boundaries a vertex may repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    boundary: Vec<Vertex>,
}

impl Face {
    pub fn boundary(&self) -> &[Vertex] {
        &self.boundary
    }

    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.boundary.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_slice(&self.boundary)
    }

    pub fn is_triangle(&self) -> bool {
        self.boundary.len() == 3
    }
}

/// Vertex connectivity classified up to 4; complete graphs K_k count as
/// (k-1)-connected, so K4 reports `Three`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConnectivityClass {
    One,
    Two,
    Three,
    FourPlus,
}

/// An immutable plane graph: validated rotation system plus derived
/// adjacency bitsets and edge/face counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarGraph {
    rot: Vec<Vec<Vertex>>,
    adj: Vec<VertexSet>,
    m: usize,
    f: usize,
}

impl PlanarGraph {
    /// Validate a rotation system and wrap it. Neighbour lists are taken in
    /// clockwise order; see the module doc for the face convention.
    pub fn build(rot: Vec<Vec<Vertex>>) -> Result<PlanarGraph, EmbedError> {
        let n = rot.len();
        if n == 0 {
            return Err(EmbedError::TooSmall { need: 1, have: 0 });
        }
        if n > 255 {
            return Err(EmbedError::TooManyVertices { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut degsum = 0usize;
        for (v, nbrs) in rot.iter().enumerate() {
            let v = v as Vertex;
            for &w in nbrs {
                if w as usize >= n {
                    return Err(EmbedError::AsymmetricAdjacency { u: v, v: w });
                }
                if w == v || adj[v as usize].contains(w) {
                    return Err(EmbedError::LoopOrMultiEdge { v });
                }
                adj[v as usize].insert(w);
            }
            degsum += nbrs.len();
        }
        for (v, nbrs) in rot.iter().enumerate() {
            for &w in nbrs {
                if !adj[w as usize].contains(v as Vertex) {
                    return Err(EmbedError::AsymmetricAdjacency { u: v as Vertex, v: w });
                }
            }
        }
        let m = degsum / 2;
        let g = PlanarGraph { rot, adj, m, f: 0 };
        if !g.is_connected_without(VertexSet::EMPTY) {
            return Err(EmbedError::Disconnected);
        }
        let f = if m == 0 { 1 } else { g.count_face_orbits() };
        if n + f != m + 2 {
            return Err(EmbedError::NotGenusZero { faces: f });
        }
        Ok(PlanarGraph { f, ..g })
    }

    /// Build from an oriented face list: every directed edge must appear in
    /// exactly one face, all faces traversed with the same orientation.
    /// Convenient for fixtures whose face structure is known.
    pub fn from_faces(n: usize, faces: &[&[Vertex]]) -> Result<PlanarGraph, EmbedError> {
        let mut succ: Vec<HashMap<Vertex, Vertex>> = vec![HashMap::new(); n];
        for face in faces {
            let l = face.len();
            if l < 3 {
                return Err(EmbedError::NotAFace);
            }
            for i in 0..l {
                let at = face[i];
                let prev = face[(i + l - 1) % l];
                let next = face[(i + 1) % l];
                if at as usize >= n {
                    return Err(EmbedError::NotOnFace { v: at });
                }
                if succ[at as usize].insert(prev, next).is_some() {
                    // A directed edge listed twice cannot be a sphere map.
                    return Err(EmbedError::NotGenusZero { faces: faces.len() });
                }
            }
        }
        let mut rot = Vec::with_capacity(n);
        for v in 0..n {
            let map = &succ[v];
            if map.is_empty() {
                rot.push(Vec::new());
                continue;
            }
            let start = *map.keys().min().unwrap();
            let mut cycle = vec![start];
            let mut cur = start;
            loop {
                let Some(&next) = map.get(&cur) else {
                    return Err(EmbedError::NotGenusZero { faces: faces.len() });
                };
                if next == start {
                    break;
                }
                cycle.push(next);
                cur = next;
                if cycle.len() > map.len() {
                    return Err(EmbedError::NotGenusZero { faces: faces.len() });
                }
            }
            if cycle.len() != map.len() {
                return Err(EmbedError::NotGenusZero { faces: faces.len() });
            }
            rot.push(cycle);
        }
        PlanarGraph::build(rot)
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn face_count(&self) -> usize {
        self.f
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rot[v as usize].len()
    }

    /// Neighbours of `v` in clockwise rotation order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v as usize]
    }

    pub fn adjacency(&self, v: Vertex) -> VertexSet {
        self.adj[v as usize]
    }

    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].contains(v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.n() as u16).map(|v| v as Vertex)
    }

    /// All edges as (u,v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for v in self.vertices() {
            for &w in self.neighbors(v) {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    fn rot_pos(&self, v: Vertex, w: Vertex) -> usize {
        self.rot[v as usize]
            .iter()
            .position(|&x| x == w)
            .unwrap_or_else(|| panic!("vertex {w} not in rotation of {v}"))
    }

    /// The directed edge following (u,v) on its face: (v,w) with w the
    /// rotation successor of u at v.
    pub fn face_next(&self, u: Vertex, v: Vertex) -> (Vertex, Vertex) {
        let nbrs = &self.rot[v as usize];
        let i = self.rot_pos(v, u);
        (v, nbrs[(i + 1) % nbrs.len()])
    }

    /// Boundary of the face containing the directed edge (u,v), starting at u.
    pub fn trace_face(&self, u: Vertex, v: Vertex) -> Face {
        debug_assert!(self.are_adjacent(u, v));
        let mut boundary = Vec::new();
        let (mut x, mut y) = (u, v);
        loop {
            boundary.push(x);
            let (nx, ny) = self.face_next(x, y);
            x = nx;
            y = ny;
            if (x, y) == (u, v) {
                break;
            }
        }
        Face { boundary }
    }

    /// All faces, in the deterministic order induced by scanning directed
    /// edges (vertex-major, then rotation position).
    pub fn faces(&self) -> Vec<Face> {
        let n = self.n();
        let mut offset = vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + self.rot[v].len();
        }
        let mut seen = vec![false; offset[n]];
        let mut out = Vec::with_capacity(self.f);
        for v in self.vertices() {
            for p in 0..self.degree(v) {
                if seen[offset[v as usize] + p] {
                    continue;
                }
                let face = self.trace_face(v, self.rot[v as usize][p]);
                let l = face.len();
                for i in 0..l {
                    let x = face.boundary[i];
                    let y = face.boundary[(i + 1) % l];
                    seen[offset[x as usize] + self.rot_pos(x, y)] = true;
                }
                out.push(face);
            }
        }
        out
    }

    fn count_face_orbits(&self) -> usize {
        self.faces().len()
    }

    /// Connected components of the graph induced on V minus `removed`.
    pub fn components_without(&self, removed: VertexSet) -> Vec<VertexSet> {
        let alive = VertexSet::full(self.n()) - removed;
        let mut todo = alive;
        let mut out = Vec::new();
        while let Some(s) = todo.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next |= self.adj[v as usize];
                }
                next &= alive;
                next -= comp;
                comp |= next;
                frontier = next;
            }
            todo -= comp;
            out.push(comp);
        }
        out
    }

    /// True if V minus `removed` induces a connected (or empty) graph.
    pub fn is_connected_without(&self, removed: VertexSet) -> bool {
        let alive = VertexSet::full(self.n()) - removed;
        let Some(s) = alive.first() else {
            return true;
        };
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v as usize];
            }
            next &= alive;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        comp == alive
    }

    /// Brute-force 3-connectivity: no vertex subset of size at most two
    /// disconnects the graph.
    pub fn is_three_connected(&self) -> bool {
        let n = self.n();
        if n < 4 {
            return false;
        }
        if !self.is_connected_without(VertexSet::EMPTY) {
            return false;
        }
        for x in self.vertices() {
            if !self.is_connected_without(VertexSet::singleton(x)) {
                return false;
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                let mut s = VertexSet::singleton(x as Vertex);
                s.insert(y as Vertex);
                if !self.is_connected_without(s) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertex connectivity classified into {1, 2, 3, 4+} by testing all
    /// subsets of size at most three for disconnection.
    pub fn vertex_connectivity_at_most_4(&self) -> Result<ConnectivityClass, EmbedError> {
        let n = self.n();
        if n < 4 {
            return Err(EmbedError::TooSmall { need: 4, have: n });
        }
        for x in 0..n {
            if !self.is_connected_without(VertexSet::singleton(x as Vertex)) {
                return Ok(ConnectivityClass::One);
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                let s = VertexSet::from_slice(&[x as Vertex, y as Vertex]);
                if !self.is_connected_without(s) {
                    return Ok(ConnectivityClass::Two);
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let s = VertexSet::from_slice(&[x as Vertex, y as Vertex, z as Vertex]);
                    if !self.is_connected_without(s) {
                        return Ok(ConnectivityClass::Three);
                    }
                }
            }
        }
        // No small separator: complete on 4 vertices, else at least 4-connected.
        if n == 4 {
            Ok(ConnectivityClass::Three)
        } else {
            Ok(ConnectivityClass::FourPlus)
        }
    }

    /// Remove the edge {u,v}; its two flanking faces merge into one. Fails
    /// with `NoSuchEdge` if absent, or propagates a validation error if the
    /// removal would disconnect the graph (bridge).
    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Result<PlanarGraph, EmbedError> {
        if !self.are_adjacent(u, v) {
            return Err(EmbedError::NoSuchEdge { u, v });
        }
        let mut rot = self.rot.clone();
        rot[u as usize].retain(|&w| w != v);
        rot[v as usize].retain(|&w| w != u);
        PlanarGraph::build(rot)
    }

    /// Insert the chord {u,v} inside face `face`, splitting it in two. The
    /// face handle must be exactly as produced by [`faces`](Self::faces) or
    /// [`trace_face`](Self::trace_face).
    pub fn insert_edge_in_face(
        &self,
        face: &Face,
        u: Vertex,
        v: Vertex,
    ) -> Result<PlanarGraph, EmbedError> {
        let b = &face.boundary;
        if b.len() < 2 || !self.are_adjacent(b[0], b[1]) {
            return Err(EmbedError::NotAFace);
        }
        if self.trace_face(b[0], b[1]) != *face {
            return Err(EmbedError::NotAFace);
        }
        if u == v {
            return Err(EmbedError::LoopOrMultiEdge { v });
        }
        if self.are_adjacent(u, v) {
            return Err(EmbedError::AlreadyAdjacent { u, v });
        }
        let iu = b
            .iter()
            .position(|&x| x == u)
            .ok_or(EmbedError::NotOnFace { v: u })?;
        let iv = b
            .iter()
            .position(|&x| x == v)
            .ok_or(EmbedError::NotOnFace { v })?;
        Ok(self.split_face_at(b, iu, iv))
    }

    /// Insert a chord between the corners at boundary positions `ia` and `ib`
    /// of the face orbit `boundary`. The corner at position i sits between the
    /// in-edge from boundary[i-1] and the out-edge to boundary[i+1]; the new
    /// neighbour lands in that rotational gap on both sides.
    pub(crate) fn split_face_at(&self, boundary: &[Vertex], ia: usize, ib: usize) -> PlanarGraph {
        let l = boundary.len();
        let a = boundary[ia];
        let b = boundary[ib];
        let pa = boundary[(ia + l - 1) % l];
        let pb = boundary[(ib + l - 1) % l];
        let mut rot = self.rot.clone();
        let pos_a = self.rot_pos(a, pa) + 1;
        rot[a as usize].insert(pos_a, b);
        let pos_b = self.rot_pos(b, pb) + 1;
        rot[b as usize].insert(pos_b, a);
        PlanarGraph::build(rot).expect("face split must stay a sphere embedding")
    }

    /// Add a new vertex inside the face and join it to every boundary vertex.
    /// The boundary must be a simple cycle; the new vertex gets index n.
    pub(crate) fn add_apex_in_face(&self, face: &Face) -> Result<PlanarGraph, EmbedError> {
        let n = self.n();
        if n + 1 > 255 {
            return Err(EmbedError::TooManyVertices { n: n + 1 });
        }
        let b = &face.boundary;
        debug_assert_eq!(face.vertex_set().len(), b.len(), "apex face must be simple");
        let z = n as Vertex;
        let mut rot = self.rot.clone();
        let l = b.len();
        for i in 0..l {
            let x = b[i];
            let p = b[(i + l - 1) % l];
            let pos = self.rot_pos(x, p) + 1;
            rot[x as usize].insert(pos, z);
        }
        let mut zrot = vec![b[0]];
        zrot.extend(b[1..].iter().rev());
        rot.push(zrot);
        PlanarGraph::build(rot)
    }

    /// Canonical byte code of the embedding, identical for isomorphic
    /// embeddings and their mirror images: the lexicographic minimum, over all
    /// root edges at minimum-degree vertices and both orientations, of a
    /// breadth-first relabelled rotation encoding.
    pub fn canonical_code(&self) -> Vec<u8> {
        let n = self.n();
        if self.m == 0 {
            return vec![n as u8];
        }
        let mindeg = self.min_degree();
        let mut best: Option<Vec<u8>> = None;
        let mut cand = Vec::with_capacity(1 + n + 2 * self.m);
        let mut label = vec![0u8; n];
        let mut entry = vec![0u8; n];
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        for r0 in self.vertices() {
            if self.degree(r0) != mindeg {
                continue;
            }
            for ri in 0..self.degree(r0) {
                let r1 = self.rot[r0 as usize][ri];
                for rev in [false, true] {
                    self.code_from(r0, r1, rev, &mut cand, &mut label, &mut entry, &mut order);
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand.clone());
                    }
                }
            }
        }
        best.unwrap()
    }

    #[allow(clippy::too_many_arguments)]
    fn code_from(
        &self,
        r0: Vertex,
        r1: Vertex,
        rev: bool,
        out: &mut Vec<u8>,
        label: &mut [u8],
        entry: &mut [u8],
        order: &mut Vec<Vertex>,
    ) {
        let n = self.n();
        out.clear();
        order.clear();
        label.fill(0);
        out.push(n as u8);
        label[r0 as usize] = 1;
        entry[r0 as usize] = r1;
        order.push(r0);
        let mut next_label = 1u8;
        let mut qi = 0;
        while qi < order.len() {
            let v = order[qi];
            qi += 1;
            let nbrs = &self.rot[v as usize];
            let d = nbrs.len();
            let start = self.rot_pos(v, entry[v as usize]);
            for k in 0..d {
                let w = if rev {
                    nbrs[(start + d - k) % d]
                } else {
                    nbrs[(start + k) % d]
                };
                if label[w as usize] == 0 {
                    next_label += 1;
                    label[w as usize] = next_label;
                    entry[w as usize] = v;
                    order.push(w);
                }
                out.push(label[w as usize]);
            }
            out.push(0);
        }
    }
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::*;

    pub fn k4() -> PlanarGraph {
        PlanarGraph::from_faces(4, &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 1], &[1, 3, 2]]).unwrap()
    }

    pub fn cube() -> PlanarGraph {
        // Bottom 0123, top 4567 with i above i-4.
        PlanarGraph::from_faces(
            8,
            &[
                &[0, 1, 2, 3],
                &[0, 4, 5, 1],
                &[1, 5, 6, 2],
                &[2, 6, 7, 3],
                &[3, 7, 4, 0],
                &[7, 6, 5, 4],
            ],
        )
        .unwrap()
    }

    pub fn path3() -> PlanarGraph {
        PlanarGraph::build(vec![vec![1], vec![0, 2], vec![1]]).unwrap()
    }

    pub fn cycle(n: usize) -> PlanarGraph {
        let rot = (0..n)
            .map(|v| {
                vec![
                    ((v + n - 1) % n) as Vertex,
                    ((v + 1) % n) as Vertex,
                ]
            })
            .collect();
        PlanarGraph::build(rot).unwrap()
    }
}

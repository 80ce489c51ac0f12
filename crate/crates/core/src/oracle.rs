//! Independent reference implementations used to validate the fast paths.
//!
//! Everything in this module is deliberately naive: disconnection checks by
//! deleting every candidate subset, hamiltonicity by trying every vertex
//! permutation, connectivity by max-flow, scattering by full subset
//! enumeration, and triangulation counting by filtering raw edge subsets.
//! None of it shares logic with the production modules beyond the embedding
//! container itself, so agreement between the two is meaningful evidence.
//! All of these are exponential or worse and intended for small orders only.

use crate::bitset::{Vertex, VertexSet};
use crate::embed::PlanarGraph;
use std::cmp::Ordering;
use std::collections::HashSet;

/// All 3-element vertex subsets whose deletion disconnects the graph, in
/// lexicographic order.
pub fn cut_triples_by_deletion(g: &PlanarGraph) -> Vec<[Vertex; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let s = VertexSet::from_slice(&[x as Vertex, y as Vertex, z as Vertex]);
                if !g.is_connected_without(s) {
                    out.push([x as Vertex, y as Vertex, z as Vertex]);
                }
            }
        }
    }
    out
}

/// True if deleting the triple leaves some component that is a single vertex.
pub fn is_trivial_cut_by_deletion(g: &PlanarGraph, cut: [Vertex; 3]) -> bool {
    g.components_without(VertexSet::from_slice(&cut))
        .iter()
        .any(|c| c.len() == 1)
}

/// Visit every permutation of `items` (Heap's algorithm); stops and returns
/// true as soon as `visit` does.
pub fn for_each_permutation<F>(items: &mut [Vertex], mut visit: F) -> bool
where
    F: FnMut(&[Vertex]) -> bool,
{
    let n = items.len();
    if visit(items) {
        return true;
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            if visit(items) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Hamiltonian-cycle test by brute force: vertex 0 is fixed as the start and
/// every ordering of the remaining vertices is tried. Factorial time.
pub fn is_hamiltonian_by_permutation(g: &PlanarGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<Vertex> = (1..n as u16).map(|v| v as Vertex).collect();
    for_each_permutation(&mut rest, |p| {
        if !g.are_adjacent(0, p[0]) {
            return false;
        }
        for w in p.windows(2) {
            if !g.are_adjacent(w[0], w[1]) {
                return false;
            }
        }
        g.are_adjacent(p[p.len() - 1], 0)
    })
}

/// Hamiltonian-path test by brute force over every vertex ordering.
pub fn is_traceable_by_permutation(g: &PlanarGraph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut verts: Vec<Vertex> = (0..n as u16).map(|v| v as Vertex).collect();
    for_each_permutation(&mut verts, |p| {
        for w in p.windows(2) {
            if !g.are_adjacent(w[0], w[1]) {
                return false;
            }
        }
        true
    })
}

/// Vertex connectivity via Menger's theorem: the minimum over non-adjacent
/// pairs of the number of internally disjoint paths, computed by unit-capacity
/// max-flow on the vertex-split network. Complete graphs give n - 1.
pub fn vertex_connectivity_by_flow(g: &PlanarGraph) -> usize {
    let n = g.n();
    assert!(n >= 2, "connectivity needs at least two vertices");
    let mut best = usize::MAX;
    for u in 0..n {
        for v in u + 1..n {
            if !g.are_adjacent(u as Vertex, v as Vertex) {
                best = best.min(max_vertex_disjoint_paths(g, u, v));
            }
        }
    }
    if best == usize::MAX {
        n - 1
    } else {
        best
    }
}

fn max_vertex_disjoint_paths(g: &PlanarGraph, s: usize, t: usize) -> usize {
    let n = g.n();
    let nn = 2 * n;
    let inn = |v: usize| 2 * v;
    let out = |v: usize| 2 * v + 1;
    let big = n as i32;
    let mut cap = vec![vec![0i32; nn]; nn];
    for v in 0..n {
        cap[inn(v)][out(v)] = if v == s || v == t { big } else { 1 };
    }
    for (a, b) in g.edges() {
        cap[out(a as usize)][inn(b as usize)] = big;
        cap[out(b as usize)][inn(a as usize)] = big;
    }
    let src = out(s);
    let dst = inn(t);
    let mut flow = 0usize;
    loop {
        let mut parent = vec![usize::MAX; nn];
        parent[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for y in 0..nn {
                if parent[y] == usize::MAX && cap[x][y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[dst] == usize::MAX {
            return flow;
        }
        let mut bottleneck = i32::MAX;
        let mut x = dst;
        while x != src {
            let p = parent[x];
            bottleneck = bottleneck.min(cap[p][x]);
            x = p;
        }
        let mut x = dst;
        while x != src {
            let p = parent[x];
            cap[p][x] -= bottleneck;
            cap[x][p] += bottleneck;
            x = p;
        }
        flow += bottleneck as usize;
    }
}

fn witness_order(a: &VertexSet, b: &VertexSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec()))
}

/// Scattering number by enumerating every vertex subset X: the maximum of
/// c(G-X) - |X| over subsets whose removal leaves at least two components.
/// Returns None when no subset disconnects the graph (complete graphs).
/// The witness is the smallest maximizer (by size, then lexicographically).
pub fn scattering_by_full_enumeration(g: &PlanarGraph) -> Option<(i32, VertexSet)> {
    let n = g.n();
    assert!(n <= 20, "exhaustive scattering oracle is exponential in n");
    let mut best: Option<(i32, VertexSet)> = None;
    for mask in 1u32..(1u32 << n) {
        let mut x = VertexSet::EMPTY;
        for v in 0..n {
            if mask & (1 << v) != 0 {
                x.insert(v as Vertex);
            }
        }
        let c = g.components_without(x).len();
        if c < 2 {
            continue;
        }
        let val = c as i32 - x.len() as i32;
        let replace = match &best {
            None => true,
            Some((bv, bw)) => {
                val > *bv || (val == *bv && witness_order(&x, bw) == Ordering::Less)
            }
        };
        if replace {
            best = Some((val, x));
        }
    }
    best
}

fn pair_index(u: usize, v: usize, n: usize) -> usize {
    debug_assert!(u < v);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Count the isomorphism classes of plane triangulations on `n` vertices by
/// raw enumeration: every (3n-6)-edge subset of the complete graph is tested
/// for an all-triangle sphere rotation system, and survivors are deduplicated
/// by minimizing their edge bitmask over all vertex permutations. Practical
/// for n up to 7 only.
pub fn count_triangulations_by_edge_sets(n: usize) -> usize {
    assert!((4..=7).contains(&n), "edge-subset census only feasible for n in 4..=7");
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u as Vertex, v as Vertex)))
        .collect();
    let m_target = 3 * n - 6;
    let mut classes: HashSet<u32> = HashSet::new();
    let mut idx: Vec<usize> = (0..m_target).collect();
    loop {
        if let Some(mask) = triangulation_mask(n, &pairs, &idx) {
            classes.insert(mask);
        }
        // Advance to the next combination of edge indices.
        let k = m_target;
        let mut i = k;
        loop {
            if i == 0 {
                return classes.len();
            }
            i -= 1;
            if idx[i] != i + pairs.len() - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// If the chosen edge subset is a plane triangulation, return its canonical
/// (permutation-minimal) edge bitmask.
fn triangulation_mask(n: usize, pairs: &[(Vertex, Vertex)], idx: &[usize]) -> Option<u32> {
    let mut adj = vec![VertexSet::EMPTY; n];
    for &i in idx {
        let (u, v) = pairs[i];
        adj[u as usize].insert(v);
        adj[v as usize].insert(u);
    }
    if adj.iter().any(|a| a.len() < 3) {
        return None;
    }
    // Each edge of a triangulation lies on two triangular faces, so its
    // endpoints share at least two neighbours.
    for &i in idx {
        let (u, v) = pairs[i];
        if (adj[u as usize] & adj[v as usize]).len() < 2 {
            return None;
        }
    }
    // Connectivity.
    let mut seen = VertexSet::singleton(0);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next |= adj[v as usize];
        }
        next -= seen;
        seen |= next;
        frontier = next;
    }
    if seen.len() != n {
        return None;
    }
    let adj_list: Vec<Vec<Vertex>> = adj.iter().map(|a| a.to_vec()).collect();
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    if !assign_link_cycles(0, n, &adj_list, &adj, &mut rot) {
        return None;
    }
    // Canonical form: minimal edge bitmask over all vertex relabellings.
    let mut verts: Vec<Vertex> = (0..n as u16).map(|v| v as Vertex).collect();
    let mut best = u32::MAX;
    for_each_permutation(&mut verts, |p| {
        let mut mask = 0u32;
        for &i in idx {
            let (u, v) = pairs[i];
            let (a, b) = (p[u as usize] as usize, p[v as usize] as usize);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            mask |= 1 << pair_index(a, b, n);
        }
        if mask < best {
            best = mask;
        }
        false
    });
    Some(best)
}

/// Try to orient every vertex link as a cycle so that all faces close into
/// triangles: each rotation must be a hamiltonian cycle of the neighbourhood,
/// and for every directed edge (u,v) with successor w at v, the successor of
/// v at w must be u.
fn assign_link_cycles(
    v: usize,
    n: usize,
    adj_list: &[Vec<Vertex>],
    adj: &[VertexSet],
    rot: &mut Vec<Vec<Vertex>>,
) -> bool {
    if v == n {
        return all_corners_close(n, rot, adj);
    }
    let nb = &adj_list[v];
    let mut rest: Vec<Vertex> = nb[1..].to_vec();
    let mut cands: Vec<Vec<Vertex>> = Vec::new();
    for_each_permutation(&mut rest, |p| {
        let mut cyc = Vec::with_capacity(nb.len());
        cyc.push(nb[0]);
        cyc.extend_from_slice(p);
        if link_cycle_ok(&cyc, adj) && cross_consistent(v, &cyc, rot) {
            cands.push(cyc);
        }
        false
    });
    for cyc in cands {
        rot[v] = cyc;
        if assign_link_cycles(v + 1, n, adj_list, adj, rot) {
            return true;
        }
        rot[v].clear();
    }
    false
}

fn link_cycle_ok(cyc: &[Vertex], adj: &[VertexSet]) -> bool {
    let d = cyc.len();
    (0..d).all(|i| adj[cyc[i] as usize].contains(cyc[(i + 1) % d]))
}

fn rot_succ(rot: &[Vertex], u: Vertex) -> Option<Vertex> {
    let d = rot.len();
    rot.iter().position(|&x| x == u).map(|i| rot[(i + 1) % d])
}

fn cross_consistent(v: usize, cyc: &[Vertex], rot: &[Vec<Vertex>]) -> bool {
    // For each already assigned neighbour u: the face entered through (u,v)
    // turns to w = succ_v(u); if w is assigned too it must turn back to u.
    for (i, &u) in cyc.iter().enumerate() {
        if (u as usize) < v {
            let w = cyc[(i + 1) % cyc.len()];
            if (w as usize) < v && rot_succ(&rot[w as usize], v as Vertex) != Some(u) {
                return false;
            }
        }
    }
    true
}

fn all_corners_close(n: usize, rot: &[Vec<Vertex>], adj: &[VertexSet]) -> bool {
    for v in 0..n {
        for &u in &rot[v] {
            let Some(w) = rot_succ(&rot[v], u) else {
                return false;
            };
            if !adj[u as usize].contains(w) {
                return false;
            }
            if rot_succ(&rot[w as usize], v as Vertex) != Some(u) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::test_graphs::*;

    fn octahedron() -> PlanarGraph {
        PlanarGraph::from_faces(
            6,
            &[
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 5, 2],
                &[1, 3, 2],
                &[1, 4, 3],
                &[1, 5, 4],
                &[1, 2, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn cut_triples_of_small_graphs() {
        assert!(cut_triples_by_deletion(&k4()).is_empty());
        assert!(cut_triples_by_deletion(&octahedron()).is_empty());
        let cuts = cut_triples_by_deletion(&cube());
        // In the cube exactly the eight vertex neighbourhoods disconnect.
        assert_eq!(cuts.len(), 8);
        assert!(cuts.iter().all(|&c| is_trivial_cut_by_deletion(&cube(), c)));
    }

    #[test]
    fn hamiltonicity_by_permutation() {
        assert!(is_hamiltonian_by_permutation(&k4()));
        assert!(is_hamiltonian_by_permutation(&cube()));
        assert!(is_hamiltonian_by_permutation(&octahedron()));
        assert!(is_hamiltonian_by_permutation(&cycle(7)));
        assert!(!is_hamiltonian_by_permutation(&path3()));
        assert!(is_traceable_by_permutation(&path3()));
        assert!(is_traceable_by_permutation(&cube()));
        // A star K_{1,3} has no hamiltonian path.
        let star = PlanarGraph::build(vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        assert!(!is_traceable_by_permutation(&star));
    }

    #[test]
    fn connectivity_by_flow() {
        assert_eq!(vertex_connectivity_by_flow(&path3()), 1);
        assert_eq!(vertex_connectivity_by_flow(&cycle(6)), 2);
        assert_eq!(vertex_connectivity_by_flow(&cube()), 3);
        assert_eq!(vertex_connectivity_by_flow(&k4()), 3);
        assert_eq!(vertex_connectivity_by_flow(&octahedron()), 4);
    }

    #[test]
    fn scattering_by_enumeration() {
        assert_eq!(scattering_by_full_enumeration(&k4()), None);
        let (s, w) = scattering_by_full_enumeration(&path3()).unwrap();
        assert_eq!((s, w.to_vec()), (1, vec![1]));
        let (s, w) = scattering_by_full_enumeration(&cycle(6)).unwrap();
        assert_eq!((s, w.to_vec()), (0, vec![0, 2]));
        let (s, _) = scattering_by_full_enumeration(&cube()).unwrap();
        assert_eq!(s, 0);
        let (s, _) = scattering_by_full_enumeration(&octahedron()).unwrap();
        assert_eq!(s, -2);
    }

    #[test]
    fn triangulation_census_small() {
        assert_eq!(count_triangulations_by_edge_sets(4), 1);
        assert_eq!(count_triangulations_by_edge_sets(5), 1);
        assert_eq!(count_triangulations_by_edge_sets(6), 2);
        assert_eq!(count_triangulations_by_edge_sets(7), 5);
    }
}

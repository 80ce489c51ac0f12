//! Branch-and-bound search for hamiltonian cycles and paths.
//!
//! The search grows a path from a fixed root, always extending at the end
//! vertex, trying neighbours in rotation order starting from the
//! predecessor's position. Exactly two look-ahead rules prune the cycle
//! search: backtrack when the start vertex has no unvisited neighbour left,
//! and backtrack when some unvisited vertex has fewer than two neighbours
//! among the unvisited vertices plus the two path ends. The path search
//! starts from every vertex and uses the analogous rules with the scope S =
//! unvisited vertices plus the end (but not the start) of the path: backtrack
//! when some unvisited vertex has no neighbour in S, or when at least two
//! unvisited vertices have fewer than two neighbours in S.
//!
//! Both rules are necessary conditions, so pruning never changes the
//! outcome, only the number of expanded nodes — the ablation switches in
//! [`SearchOptions`] exist to let tests assert exactly that. A found witness
//! is re-validated against the adjacency structure before it is returned.
//!
//! [`CycleCache`] keeps the edge set of a known hamiltonian cycle so that
//! edge-removal chains can skip the search entirely while the removed edge
//! stays off the cached cycle.

use crate::bitset::{Vertex, VertexSet};
use crate::embed::PlanarGraph;
use std::collections::HashSet;

/// Ablation switches for the two look-ahead rules. Disabling a rule never
/// changes whether a cycle or path is found, only the work done.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub use_rule1: bool,
    pub use_rule2: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            use_rule1: true,
            use_rule2: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PruneCounts {
    pub rule1: u64,
    pub rule2: u64,
}

/// Result of a hamiltonian cycle or path search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: bool,
    /// The cycle (wrap-around implied) or path as a vertex sequence.
    pub witness: Option<Vec<Vertex>>,
    pub nodes_expanded: u64,
    pub prune_counts: PruneCounts,
}

/// True if `w` lists every vertex exactly once with consecutive and
/// wrap-around adjacency.
pub fn is_valid_cycle(g: &PlanarGraph, w: &[Vertex]) -> bool {
    is_valid_path(g, w) && w.len() >= 3 && g.are_adjacent(w[w.len() - 1], w[0])
}

/// True if `w` lists every vertex exactly once with consecutive adjacency.
pub fn is_valid_path(g: &PlanarGraph, w: &[Vertex]) -> bool {
    if w.len() != g.n() {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &v in w {
        if (v as usize) >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    w.windows(2).all(|p| g.are_adjacent(p[0], p[1]))
}

struct Search<'a> {
    g: &'a PlanarGraph,
    opts: SearchOptions,
    path: Vec<Vertex>,
    unvisited: VertexSet,
    nodes: u64,
    prunes: PruneCounts,
}

impl<'a> Search<'a> {
    fn new(g: &'a PlanarGraph, opts: SearchOptions) -> Self {
        Search {
            g,
            opts,
            path: Vec::with_capacity(g.n()),
            unvisited: VertexSet::EMPTY,
            nodes: 0,
            prunes: PruneCounts::default(),
        }
    }

    fn start_at(&mut self, s: Vertex) {
        self.path.clear();
        self.path.push(s);
        self.unvisited = VertexSet::full(self.g.n());
        self.unvisited.remove(s);
    }

    /// Candidate extensions at the end of the path: all neighbours for a
    /// single-vertex path, otherwise the neighbours in rotation order
    /// starting just after the predecessor.
    fn extend<F: FnMut(&mut Self) -> bool>(&mut self, mut recurse: F) -> bool {
        let end = *self.path.last().unwrap();
        let nbrs = self.g.neighbors(end);
        let d = nbrs.len();
        let (first, count) = if self.path.len() == 1 {
            (0, d)
        } else {
            let pred = self.path[self.path.len() - 2];
            let ip = nbrs.iter().position(|&x| x == pred).unwrap();
            (ip + 1, d - 1)
        };
        for k in 0..count {
            let cand = nbrs[(first + k) % d];
            if !self.unvisited.contains(cand) {
                continue;
            }
            self.path.push(cand);
            self.unvisited.remove(cand);
            if recurse(self) {
                return true;
            }
            self.unvisited.insert(cand);
            self.path.pop();
        }
        false
    }

    fn dfs_cycle(&mut self) -> bool {
        self.nodes += 1;
        if self.unvisited.is_empty() {
            let start = self.path[0];
            let end = *self.path.last().unwrap();
            return self.g.are_adjacent(end, start);
        }
        let start = self.path[0];
        if self.opts.use_rule1 && !self.g.adjacency(start).intersects(self.unvisited) {
            self.prunes.rule1 += 1;
            return false;
        }
        if self.opts.use_rule2 {
            let end = *self.path.last().unwrap();
            let mut scope = self.unvisited;
            scope.insert(start);
            scope.insert(end);
            for u in self.unvisited.iter() {
                if (self.g.adjacency(u) & scope).len() < 2 {
                    self.prunes.rule2 += 1;
                    return false;
                }
            }
        }
        self.extend(Self::dfs_cycle)
    }

    fn dfs_path(&mut self) -> bool {
        self.nodes += 1;
        if self.unvisited.is_empty() {
            return true;
        }
        let end = *self.path.last().unwrap();
        let mut scope = self.unvisited;
        scope.insert(end);
        if self.opts.use_rule1 {
            for u in self.unvisited.iter() {
                if !self.g.adjacency(u).intersects(scope) {
                    self.prunes.rule1 += 1;
                    return false;
                }
            }
        }
        if self.opts.use_rule2 {
            let mut weak = 0;
            for u in self.unvisited.iter() {
                if (self.g.adjacency(u) & scope).len() < 2 {
                    weak += 1;
                    if weak >= 2 {
                        self.prunes.rule2 += 1;
                        return false;
                    }
                }
            }
        }
        self.extend(Self::dfs_path)
    }
}

/// Search for a hamiltonian cycle. The search tree is rooted at vertex 0;
/// `found` is true exactly when the graph is hamiltonian.
pub fn find_cycle(g: &PlanarGraph) -> SearchOutcome {
    find_cycle_with(g, SearchOptions::default())
}

pub fn find_cycle_with(g: &PlanarGraph, opts: SearchOptions) -> SearchOutcome {
    let mut s = Search::new(g, opts);
    let mut found = false;
    if g.n() >= 3 {
        s.start_at(0);
        found = s.dfs_cycle();
    }
    let witness = found.then(|| s.path.clone());
    if let Some(w) = &witness {
        assert!(is_valid_cycle(g, w), "cycle witness failed validation");
    }
    SearchOutcome {
        found,
        witness,
        nodes_expanded: s.nodes,
        prune_counts: s.prunes,
    }
}

/// Search for a hamiltonian path, starting from every vertex in turn;
/// `found` is true exactly when the graph is traceable. Node and prune
/// counters accumulate over all start vertices.
pub fn find_path(g: &PlanarGraph) -> SearchOutcome {
    find_path_with(g, SearchOptions::default())
}

pub fn find_path_with(g: &PlanarGraph, opts: SearchOptions) -> SearchOutcome {
    let mut s = Search::new(g, opts);
    let mut found = false;
    if g.n() == 1 {
        found = true;
        s.path.push(0);
    } else {
        for v in g.vertices() {
            s.start_at(v);
            if s.dfs_path() {
                found = true;
                break;
            }
        }
    }
    let witness = found.then(|| s.path.clone());
    if let Some(w) = &witness {
        assert!(is_valid_path(g, w), "path witness failed validation");
    }
    SearchOutcome {
        found,
        witness,
        nodes_expanded: s.nodes,
        prune_counts: s.prunes,
    }
}

/// Edge set of a known hamiltonian cycle, kept across edge removals.
#[derive(Clone, Debug)]
pub struct CycleCache {
    cycle: Vec<Vertex>,
    edges: HashSet<(Vertex, Vertex)>,
}

fn norm(x: Vertex, y: Vertex) -> (Vertex, Vertex) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

impl CycleCache {
    pub fn from_cycle(cycle: Vec<Vertex>) -> CycleCache {
        let n = cycle.len();
        let mut edges = HashSet::with_capacity(n);
        for i in 0..n {
            edges.insert(norm(cycle[i], cycle[(i + 1) % n]));
        }
        CycleCache { cycle, edges }
    }

    pub fn cycle(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn contains_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.edges.contains(&norm(x, y))
    }
}

/// True when the cached cycle survives removal of the edge {x,y}: the cycle
/// then remains a hamiltonian cycle of the child graph and no fresh search
/// is needed.
pub fn cache_still_valid(cache: &CycleCache, removed: (Vertex, Vertex)) -> bool {
    !cache.contains_edge(removed.0, removed.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::test_graphs::*;
    use crate::oracle;

    #[test]
    fn finds_cycles_on_small_polyhedra() {
        for g in [k4(), cube(), cycle(7)] {
            let out = find_cycle(&g);
            assert!(out.found);
            assert!(is_valid_cycle(&g, out.witness.as_ref().unwrap()));
        }
        assert!(!find_cycle(&path3()).found);
    }

    #[test]
    fn finds_paths() {
        for g in [k4(), cube(), path3()] {
            let out = find_path(&g);
            assert!(out.found);
            assert!(is_valid_path(&g, out.witness.as_ref().unwrap()));
        }
        let star = PlanarGraph::build(vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        assert!(!find_path(&star).found);
    }

    #[test]
    fn agrees_with_permutation_oracle() {
        let graphs = [k4(), cube(), path3(), cycle(5), cycle(8)];
        for g in &graphs {
            assert_eq!(find_cycle(g).found, oracle::is_hamiltonian_by_permutation(g));
            assert_eq!(find_path(g).found, oracle::is_traceable_by_permutation(g));
        }
    }

    #[test]
    fn ablation_changes_only_work_done() {
        let variants = [
            SearchOptions { use_rule1: false, use_rule2: false },
            SearchOptions { use_rule1: true, use_rule2: false },
            SearchOptions { use_rule1: false, use_rule2: true },
        ];
        for g in [cube(), k4(), path3(), cycle(6)] {
            let base_c = find_cycle(&g);
            let base_p = find_path(&g);
            for opts in variants {
                let c = find_cycle_with(&g, opts);
                assert_eq!(c.found, base_c.found);
                assert_eq!(c.witness, base_c.witness);
                let p = find_path_with(&g, opts);
                assert_eq!(p.found, base_p.found);
                assert_eq!(p.witness, base_p.witness);
            }
            // With no pruning at all the search expands at least as many nodes.
            let free = find_cycle_with(&g, variants[0]);
            assert!(free.nodes_expanded >= base_c.nodes_expanded);
        }
    }

    #[test]
    fn cycle_cache_tracks_removed_edges() {
        let g = cube();
        let out = find_cycle(&g);
        let cache = CycleCache::from_cycle(out.witness.unwrap());
        let w = cache.cycle().to_vec();
        // An edge on the cycle invalidates the cache, an off-cycle edge keeps it.
        let on = (w[0], w[1]);
        assert!(!cache_still_valid(&cache, on));
        let off = g
            .edges()
            .into_iter()
            .find(|&e| !cache.contains_edge(e.0, e.1))
            .expect("cube has 12 edges, a hamiltonian cycle only 8");
        assert!(cache_still_valid(&cache, off));
        // The cached witness really is a cycle of the child after removing it.
        let child = g.remove_edge(off.0, off.1).unwrap();
        assert!(is_valid_cycle(&child, &w));
    }
}

//! Toughness-style invariants: component counts under vertex deletion, the
//! scattering number, 1-toughness, the cut-count bound on component counts,
//! and completion of a polyhedron to a triangulation that preserves the
//! component structure of a chosen splitting set.
//!
//! The scattering number s(G) = max { c(G-X) - |X| : X ⊂ V, c(G-X) ≥ 2 } is
//! computed by subset enumeration in increasing size (lexicographic within a
//! size), with two sound prunes: subsets of size k can never beat n - 2k, and
//! for a polyhedron with d 3-cuts no subset beats ⌊d/2⌋ - 2, so the search
//! stops as soon as that value is reached. The reported witness is the first
//! maximizer in enumeration order, i.e. the smallest and then
//! lexicographically least one.

use crate::bitset::{Vertex, VertexSet};
use crate::cuts;
use crate::embed::PlanarGraph;
use std::fmt;

pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ToughError {
    /// Subset enumeration would be astronomically large.
    TooLarge { n: usize, cap: usize },
    /// The given set does not split the graph into two or more components.
    NotSplittingSet,
}

impl fmt::Display for ToughError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ToughError::TooLarge { n, cap } => {
                write!(f, "{n} vertices exceed the subset-enumeration cap {cap}")
            }
            ToughError::NotSplittingSet => write!(f, "set does not disconnect the graph"),
        }
    }
}

impl std::error::Error for ToughError {}

/// Scattering number: either no vertex subset disconnects the graph
/// (complete graphs), or the maximum of c(G-X) - |X| with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScatterResult {
    Undefined,
    Defined { value: i32, witness: VertexSet },
}

impl ScatterResult {
    pub fn value(&self) -> Option<i32> {
        match self {
            ScatterResult::Undefined => None,
            ScatterResult::Defined { value, .. } => Some(*value),
        }
    }

    /// True when the scattering number is at most `bound`; an undefined
    /// scattering number (complete graph) satisfies every bound.
    pub fn at_most(&self, bound: i32) -> bool {
        self.value().is_none_or(|v| v <= bound)
    }
}

/// Number of connected components of g with the vertices of `s` deleted.
pub fn component_count(g: &PlanarGraph, s: VertexSet) -> usize {
    g.components_without(s).len()
}

/// Enumerate k-subsets of 0..n in lexicographic order; `f` returns true to
/// stop early. Returns whether it stopped.
fn for_each_subset<F>(n: usize, k: usize, f: &mut F) -> bool
where
    F: FnMut(&[Vertex]) -> bool,
{
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<Vertex> = idx.iter().map(|&i| i as Vertex).collect();
    loop {
        if f(&buf) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                for j in i..k {
                    buf[j] = idx[j] as Vertex;
                }
                break;
            }
        }
    }
}

/// The cut-count slack in the component bound for polyhedra: ⌊d/2⌋, raised
/// to 1 when d = 1 — as soon as a single 3-cut S exists, deleting it gives
/// two components, i.e. c = |S| - 1, so the slack can never be below one in
/// a graph with any 3-cut.
fn half_slack(d: usize) -> i32 {
    if d == 1 {
        1
    } else {
        (d / 2) as i32
    }
}

/// Exact scattering number by pruned subset enumeration. `n_cap` guards the
/// exponential cost; use [`DEFAULT_SUBSET_CAP`] unless you know better.
pub fn scattering_number(g: &PlanarGraph, n_cap: usize) -> Result<ScatterResult, ToughError> {
    let n = g.n();
    if n > n_cap {
        return Err(ToughError::TooLarge { n, cap: n_cap });
    }
    // For a polyhedron with d 3-cuts the scattering number never exceeds
    // the slack minus 2, so reaching that value ends the search.
    let stop_at: Option<i32> = if g.is_three_connected() {
        cuts::enumerate_3cuts(g)
            .ok()
            .map(|r| half_slack(r.count()) - 2)
    } else {
        None
    };
    let mut best: Option<(i32, VertexSet)> = None;
    for k in 1..=n.saturating_sub(2) {
        if let Some((bv, _)) = &best {
            // A size-k subset leaves at most n - k components.
            if *bv >= n as i32 - 2 * k as i32 {
                break;
            }
        }
        let mut reached_bound = false;
        for_each_subset(n, k, &mut |xs| {
            let x = VertexSet::from_slice(xs);
            let c = g.components_without(x).len();
            if c >= 2 {
                let val = c as i32 - k as i32;
                if best.as_ref().is_none_or(|(bv, _)| val > *bv) {
                    best = Some((val, x));
                    if stop_at == Some(val) {
                        reached_bound = true;
                        return true;
                    }
                }
            }
            false
        });
        if reached_bound {
            break;
        }
    }
    Ok(match best {
        None => ScatterResult::Undefined,
        Some((value, witness)) => ScatterResult::Defined { value, witness },
    })
}

/// 1-toughness via the scattering number: true iff s(G) is undefined or ≤ 0.
pub fn is_one_tough(g: &PlanarGraph) -> Result<bool, ToughError> {
    Ok(scattering_number(g, DEFAULT_SUBSET_CAP)?.at_most(0))
}

/// Check c(G-S) ≤ |S| - 2 + ⌊d/2⌋ for every splitting set S, where d is the
/// graph's 3-cut count and the slack term is raised to one when d = 1 (see
/// [`half_slack`]: one existing 3-cut already forces c = |S| - 1). Returns
/// the first violating set (smallest, then lexicographically least) or None
/// when the bound holds throughout.
pub fn verify_cut_bound(
    g: &PlanarGraph,
    d: usize,
) -> Result<Option<VertexSet>, ToughError> {
    let n = g.n();
    if n > DEFAULT_SUBSET_CAP {
        return Err(ToughError::TooLarge {
            n,
            cap: DEFAULT_SUBSET_CAP,
        });
    }
    let fd2 = half_slack(d);
    let mut violation: Option<VertexSet> = None;
    for k in 1..=n.saturating_sub(2) {
        // A violation needs c ≥ |S| - 1 + ⌊d/2⌋ and c ≤ n - |S|.
        if n as i32 - (k as i32) < k as i32 - 1 + fd2 {
            break;
        }
        let stopped = for_each_subset(n, k, &mut |xs| {
            let x = VertexSet::from_slice(xs);
            let c = g.components_without(x).len() as i32;
            if c >= 2 && c > k as i32 - 2 + fd2 {
                violation = Some(x);
                return true;
            }
            false
        });
        if stopped {
            break;
        }
    }
    Ok(violation)
}

/// Complete `g` to a triangulation without touching the component structure
/// of `g - s`: repeatedly insert a chord into a non-triangular face, never
/// connecting two different components of g - s. The first admissible chord
/// (lowest face in face order, then lowest boundary-position pair) is taken,
/// so the result is deterministic. Component counts are preserved exactly
/// and the 3-cut count cannot increase.
pub fn triangulate_preserving(
    g: &PlanarGraph,
    s: VertexSet,
) -> Result<PlanarGraph, ToughError> {
    let comps = g.components_without(s);
    if comps.len() < 2 {
        return Err(ToughError::NotSplittingSet);
    }
    // Chords never alter the components of (g + chords) - s, so the labels
    // computed here stay valid for the whole run.
    let mut comp_id = [usize::MAX; 256];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_id[v as usize] = i;
        }
    }
    let mut h = g.clone();
    loop {
        let mut inserted = false;
        'faces: for f in h.faces() {
            if f.len() <= 3 {
                continue;
            }
            let b = f.boundary();
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    let (u, v) = (b[i], b[j]);
                    if u == v || h.are_adjacent(u, v) {
                        continue;
                    }
                    let connecting = !s.contains(u)
                        && !s.contains(v)
                        && comp_id[u as usize] != comp_id[v as usize];
                    if connecting {
                        continue;
                    }
                    h = h.split_face_at(b, i, j);
                    inserted = true;
                    break 'faces;
                }
            }
        }
        if !inserted {
            assert!(
                h.faces().iter().all(|f| f.len() == 3),
                "triangulation stalled: some non-triangular face admits no chord"
            );
            return Ok(h);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::test_graphs::*;
    use crate::oracle;

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
    fn component_counts() {
        let o = octahedron();
        assert_eq!(component_count(&o, VertexSet::EMPTY), 1);
        // Deleting one non-adjacent pair leaves the 4-cycle on the rest.
        assert_eq!(component_count(&o, VertexSet::from_slice(&[0, 1])), 1);
        assert_eq!(
            component_count(&cube(), VertexSet::from_slice(&[1, 3, 4])),
            2
        );
    }

    #[test]
    fn scattering_matches_oracle() {
        for g in [k4(), cube(), octahedron(), cycle(6), path3()] {
            let fast = scattering_number(&g, DEFAULT_SUBSET_CAP).unwrap();
            match oracle::scattering_by_full_enumeration(&g) {
                None => assert_eq!(fast, ScatterResult::Undefined),
                Some((value, witness)) => {
                    assert_eq!(fast, ScatterResult::Defined { value, witness })
                }
            }
        }
    }

    #[test]
    fn scattering_values_of_fixtures() {
        assert_eq!(scattering_number(&k4(), 20).unwrap(), ScatterResult::Undefined);
        let ScatterResult::Defined { value, witness } =
            scattering_number(&octahedron(), 20).unwrap()
        else {
            panic!("octahedron scattering must be defined")
        };
        assert_eq!(value, -2);
        assert_eq!(witness.to_vec(), vec![0, 1, 2, 4]);
        let ScatterResult::Defined { value, witness } = scattering_number(&cube(), 20).unwrap()
        else {
            panic!("cube scattering must be defined")
        };
        assert_eq!(value, 0);
        assert_eq!(witness.to_vec(), vec![0, 2, 5, 7]);
    }

    #[test]
    fn one_toughness() {
        assert!(is_one_tough(&k4()).unwrap());
        assert!(is_one_tough(&cube()).unwrap());
        assert!(is_one_tough(&octahedron()).unwrap());
        assert!(!is_one_tough(&path3()).unwrap());
    }

    #[test]
    fn cut_bound_holds_with_true_count_and_fails_with_false_one() {
        let g = cube();
        let d = cuts::enumerate_3cuts(&g).unwrap().count();
        assert_eq!(d, 8);
        assert_eq!(verify_cut_bound(&g, d).unwrap(), None);
        assert_eq!(verify_cut_bound(&k4(), 0).unwrap(), None);
        // Understating d must surface a violating set: the first cut triple.
        let bad = verify_cut_bound(&g, 0).unwrap().expect("bound must fail for d=0");
        assert_eq!(bad.to_vec(), vec![0, 2, 5]);
    }

    #[test]
    fn triangulation_preserves_split_structure() {
        let g = cube();
        let s = VertexSet::from_slice(&[0, 2, 5, 7]);
        let t = triangulate_preserving(&g, s).unwrap();
        assert!(t.faces().iter().all(|f| f.is_triangle()));
        // Subgraph containment.
        for (u, v) in g.edges() {
            assert!(t.are_adjacent(u, v));
        }
        // Component structure under s preserved exactly.
        assert_eq!(component_count(&t, s), component_count(&g, s));
        assert_eq!(component_count(&t, s), 4);
        // Every added edge touches s (the components of cube - s are
        // singletons, so any other chord would connect two of them).
        for (u, v) in t.edges() {
            if !g.are_adjacent(u, v) {
                assert!(s.contains(u) || s.contains(v));
            }
        }
        // Cut count does not increase.
        let before = cuts::enumerate_3cuts(&g).unwrap().count();
        let after = cuts::enumerate_3cuts(&t).unwrap().count();
        assert!(after <= before, "triangulating raised cuts {before} -> {after}");
    }

    #[test]
    fn triangulation_of_a_triangulation_is_identity() {
        let o = octahedron();
        let s = VertexSet::from_slice(&[0, 1, 2, 4]);
        assert_eq!(triangulate_preserving(&o, s).unwrap(), o);
    }

    #[test]
    fn non_splitting_set_is_rejected() {
        assert_eq!(
            triangulate_preserving(&cube(), VertexSet::singleton(0)).unwrap_err(),
            ToughError::NotSplittingSet
        );
    }
}

//! Corpus drivers: walk every polyhedron in a cut-count range order by
//! order, check claims against each one, and assemble per-graph records.
//!
//! Work is partitioned by seed triangulation. All seeds of one order share a
//! concurrent deduplication set, so each isomorphism class is visited by
//! exactly one walk regardless of thread count; aggregation is commutative,
//! which keeps parallel and sequential runs byte-identical after the final
//! sort of any counterexamples.
//!
//! Along each removal chain the driver carries the last known hamiltonian
//! cycle. Removing an edge that is not on the cycle leaves the cycle intact
//! in the child, so the search is skipped; removing an edge of a graph that
//! has no spanning cycle cannot create one (a cycle of a spanning subgraph
//! is a cycle of the parent), so those children are settled without search
//! too. Both shortcuts are optimizations only and are switched off by
//! `use_cache = false`, which must never change any outcome.

use crate::bitset::Vertex;
use crate::construct::{self, ChainVisitor, ConstructError, EmitVisitor, ExpandStats};
use crate::cuts::CutReport;
use crate::embed::PlanarGraph;
use crate::hamilton::{self, CycleCache};
use crate::tough::{self, ScatterResult};
use dashmap::DashSet;
use rayon::prelude::*;
use std::time::Instant;

/// Per-graph analysis summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusRecord {
    /// Canonical code — the isomorphism-class key.
    pub code: Vec<u8>,
    pub n: usize,
    pub m: usize,
    pub cut_count: usize,
    pub trivial_cut_count: usize,
    pub hamiltonian: bool,
    pub traceable: bool,
    /// None when toughness analysis was skipped (graph above the cap).
    pub one_tough: Option<bool>,
    /// None when skipped or when the scattering number is undefined
    /// (complete graphs).
    pub scattering: Option<i32>,
    /// Search nodes expanded by the cycle and path searches combined.
    pub nodes_expanded: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct RecordOptions {
    /// Compute toughness fields for graphs up to this order; None skips them.
    pub toughness_cap: Option<usize>,
}

impl Default for RecordOptions {
    fn default() -> Self {
        RecordOptions {
            toughness_cap: Some(tough::DEFAULT_SUBSET_CAP),
        }
    }
}

impl CorpusRecord {
    /// Run the searches and invariant computations for one graph. Asserts
    /// the implication chain that must hold for every record: a spanning
    /// cycle yields a spanning path, a spanning cycle forces 1-toughness,
    /// and a spanning path forces scattering number at most 1.
    pub fn assemble(g: &PlanarGraph, report: &CutReport, opts: &RecordOptions) -> CorpusRecord {
        let cyc = hamilton::find_cycle(g);
        let path = hamilton::find_path(g);
        let (one_tough, scattering) = match opts.toughness_cap {
            Some(cap) if g.n() <= cap => {
                let s = tough::scattering_number(g, cap)
                    .expect("order is within the configured cap");
                let value = match s {
                    ScatterResult::Defined { value, .. } => Some(value),
                    ScatterResult::Undefined => None,
                };
                (Some(s.at_most(0)), value)
            }
            _ => (None, None),
        };
        assert!(!cyc.found || path.found, "a spanning cycle contains a spanning path");
        if let Some(ot) = one_tough {
            assert!(!cyc.found || ot, "hamiltonian graphs are 1-tough");
        }
        if let (true, Some(s)) = (path.found, scattering) {
            assert!(s <= 1, "traceable graphs have scattering number at most 1");
        }
        CorpusRecord {
            code: g.canonical_code(),
            n: g.n(),
            m: g.m(),
            cut_count: report.count(),
            trivial_cut_count: report.trivial_count(),
            hamiltonian: cyc.found,
            traceable: path.found,
            one_tough,
            scattering,
            nodes_expanded: cyc.nodes_expanded + path.nodes_expanded,
        }
    }
}

/// The properties the verifier can check over a corpus slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// Every graph in range has a spanning cycle.
    Hamiltonian,
    /// Every graph in range has a spanning path.
    Traceable,
    /// Every graph in range has scattering number at most 0.
    OneTough,
    /// Every graph in range has scattering number at most 1 (or undefined).
    ScatterLe1,
    /// Component count after deleting any splitting set S stays within
    /// |S| - 2 + floor(d/2).
    CutBound,
}

#[derive(Clone, Copy, Debug)]
pub struct ClaimSpec {
    pub id: &'static str,
    pub kind: ClaimKind,
    /// Default upper cut bound for the walk.
    pub hi: usize,
    /// Default largest order to generate.
    pub max_n: usize,
}

/// The built-in claims: spanning cycles up to three 3-cuts, spanning paths
/// up to four, their desk-scale extensions to five and seven cuts, the
/// toughness bounds, and the component-count bound.
pub const CLAIMS: &[ClaimSpec] = &[
    ClaimSpec { id: "ham3cuts", kind: ClaimKind::Hamiltonian, hi: 3, max_n: 11 },
    ClaimSpec { id: "trace4cuts", kind: ClaimKind::Traceable, hi: 4, max_n: 11 },
    ClaimSpec { id: "ham5cuts", kind: ClaimKind::Hamiltonian, hi: 5, max_n: 12 },
    ClaimSpec { id: "trace7cuts", kind: ClaimKind::Traceable, hi: 7, max_n: 12 },
    ClaimSpec { id: "tough5cuts", kind: ClaimKind::OneTough, hi: 5, max_n: 11 },
    ClaimSpec { id: "scatter7cuts", kind: ClaimKind::ScatterLe1, hi: 7, max_n: 11 },
    ClaimSpec { id: "cutbound", kind: ClaimKind::CutBound, hi: usize::MAX, max_n: 10 },
];

pub fn claim_by_id(id: &str) -> Option<&'static ClaimSpec> {
    CLAIMS.iter().find(|c| c.id == id)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Children that inherited the parent's cycle unchanged.
    pub cache_hits: u64,
    /// Children settled as cycle-free because the parent already was.
    pub inherited_nonham: u64,
    /// Full cycle searches run.
    pub searches: u64,
    /// Nodes expanded by those searches.
    pub search_nodes: u64,
}

impl std::ops::AddAssign for RunStats {
    fn add_assign(&mut self, o: RunStats) {
        self.cache_hits += o.cache_hits;
        self.inherited_nonham += o.inherited_nonham;
        self.searches += o.searches;
        self.search_nodes += o.search_nodes;
    }
}

/// Result of verifying one claim over one generated corpus slice.
#[derive(Clone, Debug)]
pub struct VerificationSummary {
    pub claim: String,
    pub n_range: (usize, usize),
    pub cut_range: (usize, usize),
    pub graphs_tested: u64,
    /// Canonical codes of in-range graphs violating the claim, sorted.
    pub counterexamples: Vec<Vec<u8>>,
    pub wall_ms: u128,
    pub expand: ExpandStats,
    pub run: RunStats,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub lo: usize,
    pub hi: usize,
    pub threads: usize,
    pub use_cache: bool,
}

/// Walk visitor that checks one claim on every in-range graph, carrying the
/// cycle cache down each removal chain and recording counterexamples by
/// canonical code.
pub struct ClaimVisitor {
    kind: ClaimKind,
    use_cache: bool,
    /// One entry per chain level: the graph's spanning cycle if it has one.
    stack: Vec<Option<CycleCache>>,
    /// Cut counts along the chain; must never decrease.
    chain_counts: Vec<usize>,
    pub tested: u64,
    pub counterexamples: Vec<Vec<u8>>,
    pub stats: RunStats,
}

impl ClaimVisitor {
    pub fn new(kind: ClaimKind, use_cache: bool) -> ClaimVisitor {
        ClaimVisitor {
            kind,
            use_cache,
            stack: Vec::new(),
            chain_counts: Vec::new(),
            tested: 0,
            counterexamples: Vec::new(),
            stats: RunStats::default(),
        }
    }

    fn search_cycle(&mut self, g: &PlanarGraph) -> Option<CycleCache> {
        self.stats.searches += 1;
        let out = hamilton::find_cycle(g);
        self.stats.search_nodes += out.nodes_expanded;
        out.witness.map(CycleCache::from_cycle)
    }

    fn settle_hamiltonian(
        &mut self,
        g: &PlanarGraph,
        removed: Option<(Vertex, Vertex)>,
    ) -> bool {
        let cache = match (self.stack.last(), removed) {
            (Some(parent), Some(e)) if self.use_cache => match parent {
                None => {
                    // A spanning cycle of this graph would be one of the
                    // parent, which has none.
                    self.stats.inherited_nonham += 1;
                    None
                }
                Some(pc) if hamilton::cache_still_valid(pc, e) => {
                    self.stats.cache_hits += 1;
                    let c = pc.clone();
                    debug_assert!(hamilton::is_valid_cycle(g, c.cycle()));
                    Some(c)
                }
                Some(_) => self.search_cycle(g),
            },
            _ => self.search_cycle(g),
        };
        let found = cache.is_some();
        self.stack.push(cache);
        found
    }

    fn violates(&mut self, g: &PlanarGraph, report: &CutReport, ham: Option<bool>) -> bool {
        match self.kind {
            ClaimKind::Hamiltonian => !ham.expect("cycle status settled for this claim"),
            ClaimKind::Traceable => !hamilton::find_path(g).found,
            ClaimKind::OneTough => !tough::is_one_tough(g).expect("corpus orders fit the cap"),
            ClaimKind::ScatterLe1 => !tough::scattering_number(g, tough::DEFAULT_SUBSET_CAP)
                .expect("corpus orders fit the cap")
                .at_most(1),
            ClaimKind::CutBound => tough::verify_cut_bound(g, report.count())
                .expect("corpus orders fit the cap")
                .is_some(),
        }
    }
}

impl ChainVisitor for ClaimVisitor {
    fn enter(
        &mut self,
        g: &PlanarGraph,
        report: &CutReport,
        removed: Option<(Vertex, Vertex)>,
        in_range: bool,
    ) {
        if let Some(&parent_count) = self.chain_counts.last() {
            assert!(
                report.count() >= parent_count,
                "cut count decreased along a removal chain: {parent_count} -> {}",
                report.count()
            );
        }
        self.chain_counts.push(report.count());
        let ham = if self.kind == ClaimKind::Hamiltonian {
            Some(self.settle_hamiltonian(g, removed))
        } else {
            None
        };
        if in_range {
            self.tested += 1;
            if self.violates(g, report, ham) {
                self.counterexamples.push(g.canonical_code());
            }
        }
    }

    fn leave(&mut self) {
        self.chain_counts.pop();
        if self.kind == ClaimKind::Hamiltonian {
            self.stack.pop();
        }
    }
}

/// Mutable aggregation target for claim runs.
#[derive(Default)]
struct ClaimTally {
    expand: ExpandStats,
    run: RunStats,
    tested: u64,
    counterexamples: Vec<Vec<u8>>,
}

impl ClaimTally {
    fn absorb(&mut self, s: ExpandStats, v: ClaimVisitor) {
        self.expand += s;
        self.run += v.stats;
        self.tested += v.tested;
        self.counterexamples.extend(v.counterexamples);
    }

    fn into_summary(
        mut self,
        id: &str,
        n_range: (usize, usize),
        cfg: &VerifyConfig,
        start: Instant,
    ) -> VerificationSummary {
        self.counterexamples.sort();
        self.counterexamples.dedup();
        VerificationSummary {
            claim: id.to_string(),
            n_range,
            cut_range: (cfg.lo, cfg.hi),
            graphs_tested: self.tested,
            counterexamples: self.counterexamples,
            wall_ms: start.elapsed().as_millis(),
            expand: self.expand,
            run: self.run,
        }
    }
}

/// Walk all given seeds against one shared deduplication set, one claim
/// visitor per seed, sequentially or across a thread pool.
fn run_over_seeds(
    kind: ClaimKind,
    cfg: &VerifyConfig,
    seeds: &[PlanarGraph],
    seen: &DashSet<Box<[u8]>>,
    tally: &mut ClaimTally,
) {
    let results: Vec<(ExpandStats, ClaimVisitor)> = if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .expect("thread pool construction");
        pool.install(|| {
            seeds
                .par_iter()
                .map(|t| {
                    let mut v = ClaimVisitor::new(kind, cfg.use_cache);
                    let s = construct::expand_polyhedra_with_seen(t, cfg.lo, cfg.hi, seen, &mut v);
                    (s, v)
                })
                .collect()
        })
    } else {
        seeds
            .iter()
            .map(|t| {
                let mut v = ClaimVisitor::new(kind, cfg.use_cache);
                let s = construct::expand_polyhedra_with_seen(t, cfg.lo, cfg.hi, seen, &mut v);
                (s, v)
            })
            .collect()
    };
    for (s, v) in results {
        tally.absorb(s, v);
    }
}

/// Verify one claim kind over the full generated corpus for orders
/// 4..=max_n, walking only graphs whose cut count stays within `hi`.
pub fn run_claim(
    id: &str,
    kind: ClaimKind,
    cfg: &VerifyConfig,
) -> Result<VerificationSummary, ConstructError> {
    let start = Instant::now();
    let mut tally = ClaimTally::default();
    for n in 4..=cfg.max_n {
        let seeds = construct::generate_triangulations(n)?;
        let seen: DashSet<Box<[u8]>> = DashSet::new();
        run_over_seeds(kind, cfg, &seeds, &seen, &mut tally);
    }
    Ok(tally.into_summary(id, (4, cfg.max_n), cfg, start))
}

/// Verify one claim kind over externally supplied seed triangulations
/// (mixed orders allowed; one deduplication set spans them all).
pub fn run_claim_seeded(
    id: &str,
    kind: ClaimKind,
    seeds: &[PlanarGraph],
    cfg: &VerifyConfig,
) -> VerificationSummary {
    let start = Instant::now();
    let mut tally = ClaimTally::default();
    let seen: DashSet<Box<[u8]>> = DashSet::new();
    run_over_seeds(kind, cfg, seeds, &seen, &mut tally);
    let lo_n = seeds.iter().map(|g| g.n()).min().unwrap_or(0);
    let hi_n = seeds.iter().map(|g| g.n()).max().unwrap_or(0);
    tally.into_summary(id, (lo_n, hi_n), cfg, start)
}

/// Sequentially walk every polyhedron of one order whose cut count is within
/// `hi`, sharing one deduplication set across all seed triangulations.
pub fn walk_order<V: ChainVisitor>(
    n: usize,
    lo: usize,
    hi: usize,
    visitor: &mut V,
) -> Result<ExpandStats, ConstructError> {
    let seeds = construct::generate_triangulations(n)?;
    let seen: DashSet<Box<[u8]>> = DashSet::new();
    let mut stats = ExpandStats::default();
    for t in &seeds {
        stats += construct::expand_polyhedra_with_seen(t, lo, hi, &seen, visitor);
    }
    Ok(stats)
}

/// Materialize the in-range polyhedra of one order, in walk order.
pub fn collect_order(
    n: usize,
    lo: usize,
    hi: usize,
) -> Result<Vec<(PlanarGraph, CutReport)>, ConstructError> {
    let mut out = Vec::new();
    let mut v = EmitVisitor(|g: &PlanarGraph, r: &CutReport| out.push((g.clone(), r.clone())));
    walk_order(n, lo, hi, &mut v)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{herschel, k4, non_traceable_family};
    use crate::cuts;

    #[test]
    fn claim_lookup() {
        assert_eq!(claim_by_id("ham3cuts").unwrap().hi, 3);
        assert_eq!(claim_by_id("cutbound").unwrap().max_n, 10);
        assert!(claim_by_id("nonsense").is_none());
    }

    #[test]
    fn record_for_k4() {
        let g = k4();
        let r = cuts::enumerate_3cuts(&g).unwrap();
        let rec = CorpusRecord::assemble(&g, &r, &RecordOptions::default());
        assert_eq!((rec.n, rec.m, rec.cut_count), (4, 6, 0));
        assert!(rec.hamiltonian && rec.traceable);
        assert_eq!(rec.one_tough, Some(true));
        assert_eq!(rec.scattering, None);
    }

    #[test]
    fn record_for_herschel() {
        let g = herschel();
        let r = cuts::enumerate_3cuts(&g).unwrap();
        let rec = CorpusRecord::assemble(&g, &r, &RecordOptions::default());
        assert!(!rec.hamiltonian);
        assert!(rec.traceable);
        // Removing one side of the 5+6 bipartition isolates the other six
        // vertices, so the scattering number is 1 and the graph is not
        // 1-tough.
        assert_eq!(rec.one_tough, Some(false));
        assert_eq!(rec.scattering, Some(1));
    }

    #[test]
    fn record_for_non_traceable_witness() {
        let g = non_traceable_family(8).unwrap();
        let r = cuts::enumerate_3cuts(&g).unwrap();
        let rec = CorpusRecord::assemble(&g, &r, &RecordOptions::default());
        assert_eq!(rec.cut_count, 8);
        assert!(!rec.hamiltonian && !rec.traceable);
        assert_eq!(rec.one_tough, Some(false));
        assert_eq!(rec.scattering, Some(2));
    }

    #[test]
    fn small_claims_hold() {
        let cfg = VerifyConfig { max_n: 7, lo: 0, hi: 3, threads: 1, use_cache: true };
        let s = run_claim("ham3cuts", ClaimKind::Hamiltonian, &cfg).unwrap();
        assert!(s.passed());
        assert!(s.graphs_tested > 0);

        let cfg = VerifyConfig { max_n: 7, lo: 0, hi: 4, threads: 1, use_cache: true };
        let s = run_claim("trace4cuts", ClaimKind::Traceable, &cfg).unwrap();
        assert!(s.passed());

        let cfg = VerifyConfig { max_n: 7, lo: 0, hi: usize::MAX, threads: 1, use_cache: true };
        let s = run_claim("cutbound", ClaimKind::CutBound, &cfg).unwrap();
        assert!(s.passed());
        assert_eq!(s.graphs_tested, 44, "all polyhedra with 4..=7 vertices");
    }

    #[test]
    fn cache_and_threads_do_not_change_results() {
        let base = VerifyConfig { max_n: 8, lo: 0, hi: 5, threads: 1, use_cache: true };
        let a = run_claim("ham5cuts", ClaimKind::Hamiltonian, &base).unwrap();
        let b = run_claim(
            "ham5cuts",
            ClaimKind::Hamiltonian,
            &VerifyConfig { use_cache: false, ..base },
        )
        .unwrap();
        let c = run_claim(
            "ham5cuts",
            ClaimKind::Hamiltonian,
            &VerifyConfig { threads: 2, ..base },
        )
        .unwrap();
        assert_eq!(a.graphs_tested, b.graphs_tested);
        assert_eq!(a.counterexamples, b.counterexamples);
        assert_eq!(a.graphs_tested, c.graphs_tested);
        assert_eq!(a.counterexamples, c.counterexamples);
        assert!(a.run.cache_hits + a.run.inherited_nonham > 0);
        assert_eq!(b.run.cache_hits + b.run.inherited_nonham, 0);
        assert!(b.run.searches >= a.run.searches);
    }

    #[test]
    fn collect_matches_known_counts() {
        assert_eq!(collect_order(6, 0, usize::MAX).unwrap().len(), 7);
        let low_cut = collect_order(7, 0, 2).unwrap();
        for (g, r) in &low_cut {
            assert_eq!(g.n(), 7);
            assert!(r.count() <= 2);
        }
    }
}

//! Structure analysis for 3-connected planar graphs (polyhedra).
//!
//! The crate revolves around a small set of tasks on combinatorial
//! embeddings: enumerating the 3-cuts of a polyhedron through face
//! incidences, recounting them incrementally as edges are removed,
//! searching for hamiltonian cycles and paths with rotation-guided pruning,
//! computing toughness-style invariants (scattering number, 1-toughness),
//! decomposing a polyhedron along a 3-cut, and generating exhaustive
//! catalogues of small polyhedra from triangulations by edge removal.
//!
//! Every algorithmic module has an independently written reference
//! implementation in [`oracle`]; the test suite cross-checks the fast paths
//! against the oracles on complete small-order catalogues.

pub mod bitset;
pub mod code;
pub mod construct;
pub mod corpus;
pub mod cuts;
pub mod embed;
pub mod hamilton;
pub mod oracle;
pub mod tough;

pub use bitset::{Vertex, VertexSet};
pub use code::{CodeError, PlanarCodeReader, PLANAR_CODE_HEADER};
pub use construct::{ChainVisitor, ConstructError, ExpandStats};
pub use corpus::{
    ClaimKind, ClaimSpec, CorpusRecord, RecordOptions, RunStats, VerificationSummary,
    VerifyConfig, CLAIMS,
};
pub use cuts::{CofacialState, Cut, CutError, CutReport, Decomposition};
pub use embed::{ConnectivityClass, EmbedError, Face, PlanarGraph};
pub use hamilton::{CycleCache, SearchOptions, SearchOutcome};
pub use tough::{ScatterResult, ToughError, DEFAULT_SUBSET_CAP};

//! Edge counts of edge polytopes of finite simple graphs.
//!
//! For a simple graph `G` on `d` labeled vertices, the edge polytope of `G`
//! is the convex hull of the midpoint vectors of its edges; this crate counts
//! its 1-dimensional faces, written `eps(G)`, entirely combinatorially. A pair
//! of distinct edges of `G` spans a 1-face exactly when the edges share a
//! vertex, or are disjoint and their four endpoints induce no 4-cycle.
//!
//! The crate provides:
//!
//! - [`graph`]: immutable bitset-backed graphs, named families, complement /
//!   subtraction / component / bipartition operations, and an edge-list text
//!   format;
//! - [`census`]: induced-subgraph statistics on four vertices plus triangle
//!   and induced-2-path counts;
//! - [`epsilon`]: several independent routes to `eps(G)` (pairwise scan,
//!   complement census, component additivity), closed forms for complete and
//!   complete-bipartite removals, a linear extrapolation form, a
//!   triangle-weighted upper bound, and an optimizer over complete-bipartite
//!   complement components;
//! - [`random`]: seeded random-graph models with an exact expectation formula
//!   for the complement-bipartite model and Monte Carlo estimation;
//! - [`search`]: exhaustive maximizer search for small `d`, local search and
//!   annealing over bipartite complements, and a claims verification suite.
//!
//! With the default `parallel` feature the hot loops (edge-pair scans,
//! 4-subset censuses, exhaustive enumeration, sampling, restarts) run on
//! rayon; disabling it yields a dependency-light sequential build. Results
//! are identical either way: every reduction is integer-additive or merges
//! by a deterministic rule, and per-sample randomness is derived from
//! `(seed, index)` rather than from shared generator state.

pub mod census;
pub mod epsilon;
pub mod graph;
pub mod random;
pub mod rational;
pub mod rng;
pub mod search;

pub use graph::{Edge, Graph, GraphError};

pub(crate) mod util {
    /// n choose 2 without overflow for the sizes used here.
    pub fn choose2(n: u64) -> u64 {
        n * n.saturating_sub(1) / 2
    }

    pub fn choose2_u128(n: u128) -> u128 {
        n * n.saturating_sub(1) / 2
    }
}

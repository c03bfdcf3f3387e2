//! Certifying Hamiltonicity for 2K2-free graphs.
//!
//! Given a 2K2-free graph, [`solver::solve`] starts from a 2-factor and merges
//! its cycles with explicit constructions until either one Hamiltonian cycle
//! remains or the merge rules stall. A stalled state is turned into a vertex
//! cutset whose ratio `|S| / c(G - S)` falls below the toughness threshold.
//! Every answer ships as a [`solver::Certificate`] that can be re-checked
//! independently of the code that produced it.

pub mod assembly;
pub mod audit;
pub mod classifier;
pub mod cycle;
pub mod error;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod merge;
pub mod path;
pub mod recognizers;
pub mod solver;
pub mod two_factor;
pub mod witness;

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// `p / q` as a [`Rational`].
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

pub use cycle::{OrientedCycle, TwoFactor};
pub use graph::{component_count, Graph, VertexSet};
pub use path::{rotate_path, OrientedPath};

//! Shared domain types for fair-representation solvers.
//!
//! Vertices, rows, columns and part labels are 0-based inside the library.
//! The JSON schema in [`schema`] is 1-based; conversion happens only there.

pub mod assignment;
pub mod error;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod report;
pub mod scalar;
pub mod schema;

pub use error::CoreError;
pub use matrix::ColorMatrix;
pub use partition::{GraphKind, IndependentSet, VertexPartition};
pub use perm::{distance_unchecked, hamming_distance, sim, Permutation};
pub use report::{bipartite_report, interval_report, FairnessReport};
pub use scalar::Scalar;
pub use schema::{parse_instance, render_instance, BipartiteJson, Instance, IntervalJson, PermSolution, SetSolution};

/// Exact rational used for every deficit the library reports.
pub type Rational = num_rational::Ratio<i64>;

/// Report over the default exact scalar.
pub type Report = FairnessReport<Rational>;

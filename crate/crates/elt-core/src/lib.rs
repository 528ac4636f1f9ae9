//! Exact graph analysis at desk scale.
//!
//! The crate certifies structural properties of small simple graphs with
//! explicit, re-checkable witnesses: splittability of the vertex set into
//! two high-chromatic parts, quasi-line structure via per-vertex two-clique
//! covers (generic, and constructively anchored at an induced odd cycle),
//! hole and antihole detection, and perfection. Every optimized search is
//! paired with a brute-force oracle so results can be cross-checked
//! exhaustively on small corpora.

pub mod batch;
pub mod canon;
pub mod cycle_cover;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod holes;
pub mod invariants;
pub mod oracle;
pub mod quasiline;
pub mod report;
pub mod splittable;

pub use exec::configure_jobs;

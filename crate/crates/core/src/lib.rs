//! Constructive cover algorithms and extremal constructions around Ryser's
//! conjecture, checked against exact brute-force oracles.
//!
//! - [`hypergraph`]: hypergraphs, validation, duals, intersection level.
//! - [`colored`]: multi edge-coloured complete graphs, the Gyárfás graph,
//!   closure, components, contraction and colour deletion.
//! - [`oracles`]: exact τ, ν, ρ, α, α′ and component-cover optima.
//! - [`t_cover`]: covering a graph whose pairs carry at least `t` colours by
//!   at most `r - t` monochromatic components, for `r/4 < t <= r - 1`.
//! - [`partial`]: covering a large fraction of the vertices by `r - 1`
//!   components of distinct colours, and recognizing the sharp examples.
//! - [`planes`]: affine and truncated projective planes, blowups.
//! - [`delta2`]: vertex covers of size at most `(r - 1) ν` when every vertex
//!   lies in at most two edges.
//! - [`generators`]: seeded random instances.
//! - [`format`]: the HGF and CGF text formats.

pub mod acceptance;
pub mod colored;
pub mod delta2;
pub mod error;
pub mod format;
pub mod generators;
pub mod hypergraph;
mod iso;
pub mod matching;
pub mod oracles;
pub mod partial;
pub mod planes;
pub mod t_cover;

pub use colored::{ColorSet, ColoredCompleteGraph, ComponentCover, ComponentIndex, CoverPart};
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, HypergraphParams};
pub use oracles::OracleLimits;
pub use planes::{AffinePlane, BlowupMap};

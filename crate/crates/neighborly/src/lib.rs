//! Exact-arithmetic construction and verification of neighborly polytopes.
//!
//! This crate builds even-dimensional neighborly polytopes with exact
//! rational arithmetic: lexicographic extensions of oriented matroids (with
//! certified epsilons), sewing through universal flags, Gale sewing from
//! polygons, and a search that completes any uniform rank-3 oriented matroid
//! to the Gale dual of a neighborly polytope. Everything is deterministic
//! and replayable; no floating point anywhere in the core.
//!
//! ## Examples first
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p neighborly --example cyclic_polytopes        # moment curve, facets, Gale evenness
//! cargo run -p neighborly --example lexicographic_extensions # symbolic rule vs certified geometry
//! cargo run -p neighborly --example fiber_polyhedra          # deletion fibers and their dimensions
//! cargo run -p neighborly --example duality                  # chirotope duals and Gale transforms
//! cargo run -p neighborly --example sewing                   # universal flags and sewn polytopes
//! cargo run -p neighborly --example gale_sewing              # dual-side sewing pipelines
//! cargo run -p neighborly --example completion               # rank-3 to neighborly Gale dual
//! cargo run -p neighborly --example openness                 # realization-space perturbation probe
//! cargo run -p neighborly --example replay                   # construction logs, bit-exact replay
//! ```
//!
//! ## Quick start
//!
//! ```rust
//! use neighborly::{constructions, polytope, Chirotope};
//!
//! // The cyclic polytope C(4, 8): the canonical neighborly polytope.
//! let v = constructions::cyclic(4, 8, &constructions::default_params(8))?;
//! let c = Chirotope::from_configuration(&v)?;
//! assert!(c.is_uniform());
//! assert!(polytope::is_neighborly(&c)?);
//!
//! // Gale sewing: polygon -> neighborly 4-polytope on 8 vertices.
//! let sewn = constructions::gale_sewn_pipeline(6, 1, &[])?;
//! assert_eq!(sewn.chirotope.polytope_dim(), 4);
//! # Ok::<(), neighborly::Error>(())
//! ```
//!
//! ## Modules
//!
//! - [`linalg`]: exact rational scalars and fraction-free determinants,
//!   rank, nullspace bases.
//! - [`config`]: vector configurations (realization data) and their text
//!   format.
//! - [`chirotope`]: the oriented matroid core: basis signs, duality,
//!   minors, cocircuits.
//! - [`extension`]: lexicographic extensions, epsilon certification, fiber
//!   polyhedra.
//! - [`polytope`]: face lattices from positive cocircuits, neighborliness,
//!   universal flags.
//! - [`constructions`]: cyclic polytopes, sewing, Gale sewing, neighborly
//!   completion, openness probes, replayable logs.
//!
//! A thin CLI (`neighborly`) fronts the same operations with bit-exact text
//! I/O; see the repository README.

pub mod chirotope;
pub mod combinat;
pub mod config;
pub mod constructions;
pub mod error;
pub mod extension;
pub mod linalg;
pub mod polytope;

pub use chirotope::{Chirotope, Sign, SignVector};
pub use config::VectorConfiguration;
pub use constructions::ConstructionLog;
pub use error::{Error, Result};
pub use extension::{FiberDescription, LexProgram};
pub use linalg::{Matrix, Scalar};
pub use polytope::{FaceLattice, Flag};

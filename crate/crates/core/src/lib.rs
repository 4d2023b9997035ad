//! Finite alternate modules: finite abelian groups with an alternating
//! bilinear form into Q/Z.
//!
//! Everything is exact. Groups are products of cyclic factors, forms are
//! Gram matrices of reduced fractions, and the lattice work runs on
//! arbitrary-precision integers.
//!
//! - [`ablattice`]: groups, subgroups, morphisms, Smith and Hermite forms.
//! - [`altmodule`]: kernels, orthogonals, Lagrangians, Sylow parts.
//! - [`symplectic`]: normal form `B x B*` of a symplectic module.
//! - [`embed`]: embeddings into `B x B*` with `|B|` the Lagrangian order,
//!   with checkable certificates.
//! - [`oracle`]: brute-force enumeration used to cross-check the above.
//! - [`document`] and [`cli`]: JSON documents and the `altmod` tool.
//!
//! Runnable examples live in `examples/`, one per topic.

pub mod ablattice;
pub mod altmodule;
pub mod cli;
pub mod document;
pub mod embed;
pub mod error;
pub mod oracle;
pub mod random;
pub mod symplectic;

pub use error::{Error, Result};

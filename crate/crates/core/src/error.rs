use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cyclic factor order {0}: orders must be at least 2")]
    InvalidOrder(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("coordinate {index} is {value}, outside 0..{order}")]
    CoordinateOutOfRange { index: usize, value: u64, order: u64 },

    #[error("invalid fraction {0:?}")]
    InvalidFraction(String),

    #[error("alternate: gram[{index}][{index}] = {value}, expected 0/1")]
    NotAlternate { index: usize, value: String },

    #[error("antisymmetry: gram[{i}][{j}] = {a} but gram[{j}][{i}] = {b}")]
    NotAntisymmetric { i: usize, j: usize, a: String, b: String },

    #[error("order-compatibility: gram[{i}][{j}] = {value} is not killed by the orders {di} and {dj}")]
    IncompatibleOrder { i: usize, j: usize, value: String, di: u64, dj: u64 },

    #[error("morphism not well defined: {order} * image of generator {index} is nonzero")]
    NotWellDefined { index: usize, order: u64 },

    #[error("congruence system is not well defined on the column moduli (row {row}, column {col})")]
    IllDefinedSystem { row: usize, col: usize },

    #[error("composition domain mismatch: target of the first map differs from source of the second")]
    CompositionMismatch,

    #[error("element does not lie in the subgroup")]
    NotInSubgroup,

    #[error("kernel nontrivial: module is not symplectic")]
    KernelNontrivial,

    #[error("module is already symplectic")]
    AlreadySymplectic,

    #[error("underlying group is not a {0}-group")]
    NotPrimary(u64),

    #[error("module is trivial")]
    TrivialModule,

    #[error("induced form on the submodule is degenerate")]
    DegenerateSubmodule,

    #[error("kernel is contained in p*A; case 1 does not apply")]
    KernelInPA,

    #[error("stretch precondition violated: pairing with generator {index} has full order {order}")]
    StretchPrecondition { index: usize, order: u64 },

    #[error("size bound exceeded: |A| = {size} > {bound}")]
    BoundExceeded { size: String, bound: u64 },

    #[error("extension step audit failed: {0}")]
    StepAudit(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

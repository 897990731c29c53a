//! Exact Schubert calculus on complex Grassmannians and partial flag manifolds,
//! plus the degree-halving dictionary that turns real even and quaternionic
//! Schubert problems into complex ones.

pub mod error;
pub mod flag;
pub mod grassmann;
pub mod halving;
pub mod indexing;
pub mod poly;
pub mod problem;
pub mod ring;
pub mod schur;
pub mod selftest;
pub mod serial;

pub use error::{Error, Result};
pub use flag::{FlagClass, FlagDescriptor, SchubertPolynomial, SchubertTable};
pub use grassmann::{Bundle, GrassmannClass, GrassmannianDescriptor};
pub use halving::{
    ClassIndex, ComplexClass, FixedPointSpace, HalvingClass, HalvingKind, HalvingSpace, KappaImage,
    RawIndex,
};
pub use indexing::{OrderedSetPartition, Partition, Permutation, RankFunction};
pub use poly::{Monomial, SparsePolynomial};
pub use problem::{solve, Mode, Report, SchubertProblem, SpaceDescriptor};
pub use schur::{SchurExpansion, StripKind};
pub use selftest::{Fault, Level, SuiteResult};

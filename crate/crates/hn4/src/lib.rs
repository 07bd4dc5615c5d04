//! Exact-arithmetic engine for hypercomplex structures with Hermitian-Norden
//! metrics on 4-dimensional real Lie algebras.
//!
//! Given a Lie algebra by structure constants, the engine equips it with the
//! standard triple of almost complex structures and the neutral metric
//! diag(1, 1, -1, -1), computes the Levi-Civita connection and every derived
//! tensor (Nijenhuis tensors, structure tensors F_alpha, Lee forms, square
//! norms, curvature), and decides the class of the resulting structure. All
//! arithmetic is over exact rationals; results are bit-exact.
//!
//! The built-in [`catalog`] carries the nine named cases hc1..hc5b (the
//! 4-dimensional algebras admitting an integrable hypercomplex structure)
//! with golden expected values, and the `hn4` binary exposes the engine over
//! a small line-oriented input format.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod connection;
pub mod exact;
pub mod hnstruct;
pub mod liealg;
pub mod oracle;
pub mod parse;
pub mod report;

pub use classify::{classify, ClassificationReport, CombinedClass};
pub use exact::{Covector, Matrix4, Rational, Tensor3, Vector4};
pub use hnstruct::{HNStructure, Metric};
pub use liealg::LieAlgebra;

//! Exact rational scalars and the small dense containers used everywhere else.
//!
//! Every quantity in the engine is a rational number; there is no floating
//! point anywhere in the computation path. Containers are fixed to dimension
//! four.

mod linalg;
mod rational;

pub use linalg::{
    signature_of_symmetric, solve_linear, BilinearMap, Covector, Matrix4, Tensor3, Vector4,
};
pub use rational::Rational;

/// Errors from exact arithmetic and linear solving.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("invalid rational literal `{0}`")]
    InvalidLiteral(String),
}

//! Exact computation of formal Gauss-Manin connections for affine
//! hyperplane arrangements and their combinatorial degenerations.

pub mod aomoto;
pub mod arrangement;
pub mod combinatorics;
pub mod connection;
pub mod error;
pub mod example;
pub mod format;
pub mod index_set;
pub mod linalg;
pub mod os_algebra;
pub mod poly;
pub mod polymat;
pub mod rational;
pub mod sweep;

pub use arrangement::{Arrangement, FixedMultiplicities, MultiplicitySource};
pub use combinatorics::CombinatorialType;
pub use error::{Error, Result};
pub use index_set::IndexSet;
pub use linalg::Matrix;
pub use os_algebra::{OsAlgebra, OsElement};
pub use poly::PolyQ;
pub use polymat::PolyMatrix;
pub use rational::Q;

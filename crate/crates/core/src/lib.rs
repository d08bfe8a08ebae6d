//! Exact computations in Albert algebras, octonion algebras, hermitian
//! Jordan triples, and the mod-2 invariants that classify them.

pub mod albert;
pub mod error;
pub mod fieldcore;
pub mod hermtriple;
pub mod idealgeom;
pub mod invariants;
pub mod linalg;
pub mod octonion;
pub mod scenario;
pub mod scalar;
pub mod wittforms;

pub use error::{Error, Result};

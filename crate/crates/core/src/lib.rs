//! Exact computational engine for cohomological and hypersurface support of
//! finite-dimensional Hopf algebras, with tensor-product-property harnesses
//! and q-regular sequence certification.

pub mod constructors;
pub mod error;
pub mod grading;
pub mod hopf;
pub mod linalg;
pub mod presentation;
pub mod rootdata;
pub mod scalar;

pub use error::{EngineError, Result};

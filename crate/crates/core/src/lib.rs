//! Exact surface skein computations over commutative Frobenius algebras.
//!
//! The crate covers decorated Temperley-Lieb diagrams, the solid-torus skein
//! module of `k[x]/(x^2 - a)`, its Kirby color, abstract evaluation of
//! decorated surfaces and a handful of 4-dimensional handlebody invariants.

pub mod error;
pub mod frobenius;
pub mod idempotents;
pub mod invariants;
pub mod dtl;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod solidtorus;
pub mod surfaces;
pub mod verify;

pub use error::{Error, Result};

//! Exact computer algebra for monoidal Hom-Hopf algebras, their comodule
//! algebras and relative Hom-Hopf modules: axiom checking, total and quantum
//! integrals, and Hom-Galois extensions, all over the rationals.

pub mod catalog;
pub mod error;
pub mod galois;
pub mod instance;
pub mod integrals;
pub mod linalg;
pub mod repcat;
pub mod report;
pub mod structures;

pub use error::Error;

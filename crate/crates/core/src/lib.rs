//! Exact construction and verification of the coribbon weak Hopf algebra
//! reconstructed from the `U_q(sl2)` modular category at a root of unity.

pub mod comodule;
pub mod cyclo;
pub mod error;
pub mod export;
pub mod linalg;
pub mod recoupling;
pub mod tl;
pub mod verify;
pub mod wha;

pub use cyclo::{CycloError, CycloScalar, Rational};
pub use error::{Error, Result};
pub use export::ExportDocument;
pub use wha::{BasisVector, Conventions, WhaAlgebra};

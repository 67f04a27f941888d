//! Stable rigged configurations for the nonexceptional affine types, the
//! bijection to pairs of type-A rigged configurations and LR tableaux, and
//! fermionic formulas.

pub mod affine_data;
pub mod bijection;
pub mod error;
#[cfg(test)]
mod fixtures;
pub mod half;
pub mod qpoly;
pub mod rigged;
pub mod tableaux;

pub use affine_data::{AffineType, Family, Kind, TypeConstants};
pub use bijection::{delta, delta_pair, delta_tilde, group_tableau, psi, psi_tilde, DeltaOutcome, PsiOutput};
pub use error::{Error, Result};
pub use half::Half;
pub use qpoly::{fermionic_m, m_by_enumeration, qbinomial, stable_m, verify_identity, QPolynomial};
pub use rigged::{Configuration, RiggedConfiguration, Row};
pub use tableaux::{Partition, QuantumSpace, SkewTableau};

//! Exact arithmetic for Frobenius-twisted Schur polynomials of subspaces of
//! a polynomial ring over a finite field, and a harness that checks their
//! identities case by case.
//!
//! Modules build on each other in this order: [`gf`] (finite fields),
//! [`ppoly`] (sparse polynomials with q-local exponents), [`partitions`],
//! [`fmatrix`] (determinants and triangular matrices indexed by integers),
//! [`subspaces`], [`schur`] and [`verify`].

pub mod error;
pub mod fmatrix;
pub mod gf;
pub mod partitions;
pub mod ppoly;
pub mod schur;
pub mod subspaces;
pub mod verify;

pub use error::{Error, Result};

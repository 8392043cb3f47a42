//! Monomial ideals with prescribed depth functions of their powers.
//!
//! The crate has two halves that check each other. The construction side
//! builds explicit ideal families ([`constructions`]) and predicts their depth
//! functions symbolically ([`depth_model`]). The computation side measures
//! `depth S/I^k` from multigraded Betti numbers ([`betti`]), cross-checked by
//! an independent Taylor-complex oracle ([`taylor`]). [`buchberger`] holds the
//! explicit syzygy bookkeeping for the three-generator family.

pub mod betti;
pub mod buchberger;
pub mod complex;
pub mod constructions;
pub mod depth_model;
pub mod document;
pub mod error;
pub mod field;
pub mod monomial;
pub mod random;
pub mod taylor;

pub use betti::{BettiEngine, BettiTable, DepthRow, Stability};
pub use depth_model::DepthFunction;
pub use error::{Error, Result};
pub use field::Field;
pub use monomial::{Monomial, MonomialIdeal, Ring};

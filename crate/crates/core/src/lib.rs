//! Exact computational engine for the reduced glider representation ring of a
//! finite group.

pub mod error;
pub mod exact_linear;
pub mod group_core;
pub mod glider_ring;
pub mod rep_theory;
pub mod structure_theory;

pub use error::{Error, Result};

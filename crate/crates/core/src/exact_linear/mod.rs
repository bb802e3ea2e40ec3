//! Exact arithmetic over cyclotomic fields and exact linear algebra.

pub mod cyclotomic;
pub mod matrix;

pub use cyclotomic::{field, totient, CycScalar};
pub use matrix::{CycMatrix, Rref, Solution};

//! Exact homological invariants of finite-dimensional path algebras.
#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod algebra;
pub mod bounds;
pub mod catalog;
pub mod collection;
pub mod complex;
pub mod field;
pub mod linalg;
pub mod module;
pub mod psi;
pub mod quiver;
pub mod random;
pub mod resolution;
pub mod script;
pub mod serre;

//! Exact character theory for the semidirect products `C_l^n ⋊ G`.
//!
//! The crate is `no_std` (it only needs `alloc`). It provides
//!
//! * [`cyclotomic`]: exact arithmetic in `ℚ(ζ_m)`,
//! * [`group`]: dense-encoded finite groups, subgroups, cosets and conjugacy classes,
//! * [`tilde`]: the wreath-like group `G̃ = C_l^n ⋊ G` built from a subgroup `H ≤ G`
//!   of index `n`, together with the first-coordinate character `χ` of `H̃`,
//! * [`character`]: class functions, induction, restriction and inner products,
//! * [`gassmann`]: Gassmann triple detection and a small catalog of instances,
//! * [`verify`]: machine checks of the irreducibility, decomposition, conjugacy and
//!   distinguishing statements on concrete instances.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod character;
pub mod cyclotomic;
mod error;
pub mod gassmann;
pub mod group;
pub mod tilde;
pub mod verify;

pub use error::{Error, Result};

/// Default upper bound on the number of enumerated group elements.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

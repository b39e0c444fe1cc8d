//! Exact computations around diminished Fermat-type point configurations.
//!
//! Everything here runs over a cyclotomic field `Q(ζ_n)` with arbitrary precision
//! rational coefficients, so every equality that ends up in a [`Certificate`] is an
//! exact identity rather than a numerical observation.
//!
//! The crate is `no_std` (it only needs `alloc`); IO, serialization and the command
//! line driver live in the `dimfermat` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arrangements;
pub mod certificate;
pub mod cyclotomic;
mod error;
pub mod linsys;
pub mod multipoly;
pub mod unexpected;
mod upoly;

pub use arrangements::{ConfigKind, Configuration, LineForm, ProjPoint};
pub use certificate::{Certificate, Status, Witness};
pub use cyclotomic::{make_field, CycloElem, CycloField};
pub use error::Error;
pub use multipoly::{Bidegree, Monomial, MultiPoly, VarSet};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Conductor of the single field used for all computations with parameter `m`.
pub fn ambient_conductor(m: u32) -> u32 {
    num_integer::lcm(2 * m.max(1), 6)
}

//! Weight-graded intersection cohomology of toric varieties, computed exactly
//! from rational polyhedral fans.
//!
//! The equivariant cohomology of a simplicial fan is modelled by continuous
//! piecewise polynomial functions ([`pp`]); tensoring with the exterior
//! algebra of the dual Lie algebra gives a Koszul complex that splits into
//! one subcomplex per Frobenius weight ([`koszul`]). For arbitrary fans the
//! virtual Poincaré polynomial is computed from cone links ([`ip`]).

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

mod dd;
mod error;
mod lattice;

pub mod catalogue;
pub mod deligne;
pub mod fan;
pub mod ip;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod pp;
pub mod sym;

pub use error::{Error, Result};
pub use fan::{subfan_ops, validate_fan, Classification, Cone, Fan, FanDescription, SubfanOps};
pub use lattice::Lattice;

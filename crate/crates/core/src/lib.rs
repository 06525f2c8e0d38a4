//! Exact combinatorics for genus-2 Heegaard splittings built by Dehn surgery
//! on a four-component link in `(S¹×S²)#(S¹×S²)`.
//!
//! The crate is `no_std` (it needs `alloc`). Modules build on each other in
//! this order:
//!
//! - [`farey`]: extended rationals, the determinant pairing and the
//!   close / nearby / distant / remote slope tiers.
//! - [`ptorus`]: intersection counts of arcs and curves in a once-punctured
//!   torus, plus a lattice oracle that counts crossings geometrically.
//! - [`surface`]: the marked genus-2 model and the arc families of a curve
//!   after a half-twist along the separating disk.
//! - [`berge`]: the high denominator rectangle condition, distance-3 and
//!   SUMS certificates, and a bounded disjoint-curve search.
//! - [`construct`]: surgery specs, the splitting pair obtained by exchanging
//!   two cores, their invariants, and seeded sampling.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod berge;
pub mod construct;
pub mod farey;
pub mod ptorus;
pub mod surface;

pub use farey::{q, ExtendedRational, SlopeClass};

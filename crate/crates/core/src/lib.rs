//! Doubling of simple polytopes and the cohomology of moment-angle complexes.
//!
//! The crate works on three representations of a simple polytope `P` with `m`
//! facets in dimension `n`:
//!
//! * its dual simplicial complex `K_P` ([`complex`]),
//! * its f- and h-polynomials in `Z[a, t]` ([`poly`]),
//! * an exact rational H-representation and the slice `{y >= 0 : Cy = q}`
//!   cut out of the positive orthant ([`geom`]).
//!
//! The double `L(P)` is built on each of them, and [`macohom`] computes the
//! Betti numbers of the moment-angle complex `Z_K` and its real analogue
//! `R_K` from full subcomplexes.
//!
//! Everything is `no_std` with `alloc`; file formats, threading and the command
//! line live in the companion `polydouble-cli` crate.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod complex;
pub mod geom;
pub mod linalg;
pub mod macohom;
pub mod poly;
pub mod ring;
pub mod vertex_set;

pub use complex::{ComplexError, DualPolytope, SimplicialComplex};
pub use geom::{GeomError, LinearSlice, PolytopeSystem, SliceVertices, VertexSet};
pub use macohom::{BettiTable, FieldTag, HomologyError, SpaceKind};
pub use poly::{BivariatePolynomial, PolyError};
pub use ring::FormalPolytopeSum;
pub use vertex_set::Mask;

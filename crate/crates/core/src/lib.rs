//! Exact homological and enumerative invariants of edge ideals of finite
//! simple graphs: Betti tables via Hochster's formula, regularity and
//! projective dimension, independence polynomials and h-polynomials,
//! discrete Morse matchings, and mechanical verification of a family of
//! suspension theorems relating them.
//!
//! Everything is computed over ℚ (fraction-free integer elimination) or
//! GF(p); no floating point is involved anywhere.

pub mod betti;
pub mod complex;
pub mod error;
pub mod field;
pub mod graph;
pub mod indpoly;
pub mod linalg;
pub mod morse;
pub mod suspension;
pub mod verify;

pub use complex::{HomologyProfile, SimplicialComplex, DEFAULT_FACE_LIMIT};
pub use error::{Error, Result};
pub use field::{Field, GUARD_PRIME};
pub use graph::{Graph, VertexSet, MAX_VERTICES};

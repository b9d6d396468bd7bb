//! Exact visibility computations in polygonal scenes and polyhedra, and
//! structural analysis of the spherical occlusion diagrams they produce.
//!
//! All arithmetic is exact rational arithmetic.

// Errors carry the offending points, which are not small.
#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod geom;
pub mod harness;
pub mod scene;
pub mod sod;
pub mod sphere;
pub mod visibility;

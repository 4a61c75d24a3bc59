//! Exact arithmetic for Abel pairs and Abel-Belyi pairs of genus 1.
//!
//! Everything here computes over Q or a prime field F_p (p > 3), never
//! floating point.  The building blocks are dense univariate polynomials,
//! rational functions, resultants, and squarefree decomposition; on top of
//! those sit the counting formulas for hexagonal and box dessin classes,
//! the cusp catalog and degree of the level-n Belyi map, validation of
//! hyperelliptic normal forms and their critical values, the worked
//! level-6 pencil, and the Pade construction that detects Abel points on
//! cubic curves.

pub mod abelforms;
pub mod chebyshev;
pub mod counts;
pub mod dessins;
pub mod error;
pub mod family6;
pub mod linalg;
pub mod numtheory;
pub mod pade;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use poly::{RatFunc, UniPoly};
pub use scalar::{FieldCtx, Scalar};

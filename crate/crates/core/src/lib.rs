//! Exact computations on both sides of the plabic-graph duality for Grassmannians.
//!
//! The A-model side builds network charts on `Gr_{n-k}(C^n)` from perfect orientations of
//! plabic graphs and turns valuations of Plücker coordinates into Newton-Okounkov polytopes.
//! The B-model side writes the superpotential in the cluster attached to the
//! same plabic graph and tropicalizes it into an inequality description. Everything is exact:
//! big integers for polynomial coefficients and big rationals for polyhedral geometry.

pub mod amodel;
pub mod bmodel;
pub mod error;
pub mod laurent;
pub mod network;
pub mod partitions;
pub mod plabic;
pub mod polytope;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Monomial, Var};
pub use partitions::{GrassmannShape, IndexSubset, Partition};
pub use plabic::{Color, MoveClass, MoveDescriptor, PlabicGraph};
pub use polytope::{HPolytope, Inequality, VPolytope};

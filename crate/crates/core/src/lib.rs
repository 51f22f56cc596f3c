//! Exact-arithmetic τ-tilting theory for finite-dimensional algebras given
//! by quivers with relations.

pub mod algebra;
pub mod brenner_butler;
pub mod cli;
pub mod decompose;
pub mod dot;
pub mod error;
pub mod hom;
pub mod homology;
pub mod linalg;
pub mod module;
pub mod pool;
pub mod regression;
pub mod restriction;
pub mod subcat;
pub mod tau_tilt;

pub use algebra::{Algebra, Presentation, Quiver};
pub use error::{Error, Result};
pub use linalg::{Matrix, Q};
pub use module::{Module, Morphism};

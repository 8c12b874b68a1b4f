//! Exact computations for del Pezzo surfaces with a single `1/k(1,1)`
//! point: Fano polygons, Laurent inversion, Hilbert series,
//! quasismoothness, Picard-lattice root systems, mutations and quivers.

pub mod acceptance;
pub mod catalog;
pub mod error;
pub mod hilbert;
pub mod intmat;
pub mod mutation;
pub mod polygon;
pub mod quasismooth;
pub mod rootsys;
pub mod scaffolding;
pub mod tables;

pub use error::{Error, Result};

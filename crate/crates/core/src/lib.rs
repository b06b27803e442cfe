//! Warping degrees of knot diagrams and their projections.

pub mod bracket;
pub mod cache;
pub mod canon;
pub mod cases;
pub mod census;
pub mod classify;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod halfcurve;
pub mod pd;
pub(crate) mod pmap;
pub mod poly;
pub mod rfactor;
pub mod table;
pub mod warping;

pub use diagram::{Diagram, Orientation, Shadow};
pub use error::{Error, Result};
pub use warping::{projection_warping_degree, warping_degree};

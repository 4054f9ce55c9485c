//! Intersection Alexander polynomials of singular knots, computed exactly
//! over the Laurent ring Q[t, t^-1].

pub mod error;
pub mod bounds;
pub mod engine;
pub mod exactseq;
pub mod gmodule;
pub mod laurent;
pub mod twisted;

pub use error::{Error, Result};

//! Exact computation of slope functions of NET maps from lattice
//! presentations, with excluded-interval bookkeeping on the boundary circle.

pub mod error;
pub mod exact;
pub mod halfspace;
pub mod matings;
pub mod parallel;
pub mod presentation;
pub mod pullback;

pub use error::{Error, Result};

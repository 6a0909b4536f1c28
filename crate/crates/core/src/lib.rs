//! Zeta functions of sequences, computed from the Taylor coefficients and the
//! large-|z| asymptotics of a characteristic function whose zeros are the
//! sequence.

pub mod aaa;
pub mod asym;
pub mod catalog;
pub mod error;
pub mod json;
pub mod numerics;
pub mod series;
pub mod shift;
pub mod taylor;

pub use error::{Result, ZetaError};
pub use numerics::Complex;

//! Exact computation with optics over finite sets: coend classes, Tambara
//! modules, string diagrams and lawfulness.

mod error;

pub mod coend;
pub mod decide;
pub mod diagram;
pub mod fincat;
pub mod laws;
pub mod optic;
pub mod tambara;

pub use error::{Error, Result};

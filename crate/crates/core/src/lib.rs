pub mod apparent;
mod arith;
pub mod cli;
pub mod codes;
pub mod dsbounds;
pub mod error;
pub mod gfield;
pub mod oracle;
pub mod orbits;

pub use error::{Error, Result};

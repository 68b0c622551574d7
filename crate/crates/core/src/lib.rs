pub mod counts;
pub mod elliptic;
pub mod error;
pub mod lattice;
pub mod paths;
pub mod steps;
pub mod subdivisions;

pub use error::{Error, Result};

pub mod cli;
pub mod cubicrel;
pub mod error;
pub mod exactlin;
pub mod monomial;
pub mod multipoly;
pub mod picard;
pub mod pipeline;
pub mod quiver;
pub mod rational;
pub mod toricgit;

pub use error::{Error, Result};

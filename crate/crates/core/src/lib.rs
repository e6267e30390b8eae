pub mod error;
pub mod gf2;
pub mod gf2poly;

pub use error::{Error, Result};
pub mod cli;
pub mod codebuilder;
pub mod distance;
pub mod logicalgates;
pub mod pauli;
pub mod search;
pub mod tables;
pub mod torus;

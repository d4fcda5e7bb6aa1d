pub mod algebra;
pub mod catalog;
pub mod bimodule;
pub mod comodule;
pub mod coring;
pub mod entwine;
pub mod error;
pub mod exactlin;
pub mod io;
pub mod linear_maps;
pub mod report;

pub use error::{Error, Result};

pub mod acceptance;
pub mod binpoly;
pub mod coxspec;
pub mod diagrams;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod molien;
pub mod poincare;
pub mod qcartan;
pub mod reflhom;
pub mod report;

pub use error::{Error, Result};
pub use report::{Check, Report};

pub mod cli;
pub mod error;
pub mod experiments;
pub mod formats;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod scattering;
pub mod states;
pub mod verify;

pub use error::{Error, Result};

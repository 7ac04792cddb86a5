pub mod chars;
pub mod context;
pub mod error;
pub mod field;
pub mod group;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod verify;

pub use context::Context;
pub use error::{Error, Result};

//! Smoothness of positroid varieties at torus-fixed points, decided with
//! affine pipe dreams.

pub mod atomic;
pub mod equiv;
pub mod error;
pub mod io;
pub mod permcore;
pub mod pipedream;
pub mod render;
pub mod schubert;
pub mod shape;
pub mod smooth;
pub mod survey;
pub mod word;

pub use error::{Error, Result};

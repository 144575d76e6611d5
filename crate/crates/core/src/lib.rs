#![allow(clippy::result_large_err)]

pub mod cf;
pub mod chain;
pub mod error;
pub mod farey;
pub mod net;
pub mod orbit;
pub mod point;
pub mod rational;
pub mod render;
pub mod sweep;
pub mod triple;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use rational::Rational;
pub use word::{Letter, Word};

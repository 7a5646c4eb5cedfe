//! Construction and verification of primitive permutation groups with a
//! suborbit of length five, their orbital digraphs, and the modular
//! representations behind them.

pub mod atlas;
pub mod error;
pub mod orbital;
pub mod ffalg;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};

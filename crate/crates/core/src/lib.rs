//! Unipotent and nilpotent classes of `Sp(2n)`, `SO(2n+1)` and `SO(2n)` in
//! characteristic 2 and in every other characteristic, their Springer
//! labels, and the pieces that group characteristic-2 classes by
//! characteristic-1 ones.
//!
//! The guide in `book/` walks through the modules in order; its snippets
//! run as doc-tests of this crate.

pub mod classes;
pub mod error;
pub mod filtration;
pub mod hasse;
pub mod partitions;
pub mod pieces;
pub mod springer;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/springer.md")]
    mod springer {}
    #[doc = include_str!("../../../book/src/pieces.md")]
    mod pieces {}
    #[doc = include_str!("../../../book/src/filtration.md")]
    mod filtration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}

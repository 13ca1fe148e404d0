//! The guide's listings, compiled and run by `cargo test --doc`. One module
//! per chapter so a failing listing points at its chapter.

#[doc = include_str!("src/intro.md")]
pub mod intro {}
#[doc = include_str!("src/subspaces.md")]
pub mod subspaces {}
#[doc = include_str!("src/families.md")]
pub mod families {}
#[doc = include_str!("src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("src/extension.md")]
pub mod extension {}
#[doc = include_str!("src/division.md")]
pub mod division {}
#[doc = include_str!("src/classification.md")]
pub mod classification {}
#[doc = include_str!("src/cli.md")]
pub mod cli {}

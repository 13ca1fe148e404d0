//! Exact computations on finite unions of linear subspaces and coordinate
//! varieties: extremality and loads of subspace families, square-free
//! monomial ideals, and extension and division of polynomial data.

pub mod classify;
pub mod error;
pub mod exactla;
pub mod extendiv;
pub mod families;
pub mod monomideal;
pub mod poly;
pub mod subset;

pub use error::{Error, Result};

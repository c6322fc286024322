//! Finite-group computations around transversals and double cosets.
//!
//! Groups are concrete multiplication tables ([`Group`]); subsets are dense
//! bitsets ([`ElementSet`]). On top of that sit the subset products and the
//! middle director ([`products`]), the transversal, double-coset and middle
//! sub-factor algorithms with exhaustive branch enumeration ([`algorithms`]),
//! and an independent brute-force [`oracle`] used to cross-check them.

pub mod algorithms;
mod error;
pub mod fleet;
pub mod group;
pub mod oracle;
pub mod products;
mod set;
pub mod word;

pub use error::{Error, Result};
pub use group::{build_group, build_group_with, BuildOptions, Group, GroupSpec};
pub use set::ElementSet;

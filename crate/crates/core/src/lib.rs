//! Idempotent generation in transformation semigroups built from
//! permutation groups.
//!
//! The crate decides, for a finite permutation group `G` and small `k`:
//! the k-universal transversal property and its strong form, the road
//! closure property, connectivity of Houghton graphs, and whether
//! `<G, t> \ G` is generated by its idempotents, either directly or through
//! the rank-k principal factor viewed as a Rees 0-matrix semigroup.
//!
//! All maps act on the right and compose left to right: `x(f·g) = (x f) g`.

pub mod budget;
pub mod construct;
pub mod error;
pub mod graph;
pub mod perm;
pub mod props;
pub mod rees;
pub mod tsemi;

pub use budget::Budget;
pub use error::{Error, Result};
pub use perm::{KSubset, Permutation, PermutationGroup, SetPartition};
pub use tsemi::Transformation;

//! Exact Chermak–Delgado measures and lattices of finite groups.
//!
//! Groups are Cayley tables over ids `0..n` with the identity at `0`.
//! Subgroups are bitsets over those ids. The CD lattice is computed by
//! maximizing `|H||C_G(H)|` over the centralizer-closed subgroups, and the
//! exhaustive subgroup enumeration is kept as an oracle.

pub mod cd;
pub mod constructors;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod group;
pub mod harness;
pub mod limits;
pub mod subgroups;
pub mod subset;

pub use cd::{cd_lattice, cd_lattice_cross_validated, cd_measure, CDReport, Check, Method};
pub use constructors::GroupSpec;
pub use error::{Axiom, Error, Result};
pub use group::{Characteristic, Group};
pub use limits::Limits;
pub use subgroups::{all_subgroups, SubgroupInventory};
pub use subset::SubgroupSet;

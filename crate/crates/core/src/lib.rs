//! Computational group theory for finite permutation groups, centred on
//! ω(G), the number of orbits of Aut(G) on G.

pub mod aut;
pub mod bsgs;
pub mod catalog;
pub mod error;
pub mod group;
pub mod groupfile;
pub mod numbers;
pub mod perm;
pub mod structure;
pub mod table;
pub mod verify;

pub use aut::{omega, AutAnalysis, Automorphism, OrbitPartition};
pub use bsgs::Bsgs;
pub use error::{GroupError, Result};
pub use group::PermGroup;
pub use perm::Permutation;
pub use table::ElementTable;

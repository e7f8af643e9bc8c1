//! Subgroups, classes, quotients and other structural data of a group held
//! as an element table.

pub mod classes;
pub mod derived;
pub mod invariants;
pub mod iso;
pub mod normal;
pub mod product;
pub mod quotient;
pub mod subgroup;
pub mod sylow;

pub use classes::{conjugacy_classes, ClassPartition, ConjClass};
pub use derived::{derived_series, derived_subgroup, is_perfect, is_solvable, normal_closure};
pub use invariants::{center, centralizer, is_elementary_abelian, is_simple, prime_set, spectrum};
pub use iso::{is_isomorphic, isomorphic, isomorphic_tables, HomWitness};
pub use normal::{normal_subgroups, SubgroupRecord};
pub use product::{direct_power, direct_product};
pub use quotient::{quotient, quotient_by};
pub use subgroup::{index_subgroup_of, IndexSubgroup};
pub use sylow::sylow_subgroup;

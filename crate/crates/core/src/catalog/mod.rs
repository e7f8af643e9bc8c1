//! Named groups: symmetric, alternating, cyclic and affine families,
//! projective groups over small fields, and the groups of order 960.

pub mod extensions;
pub mod field;
pub mod grammar;
pub mod projective;

pub use extensions::{asl24a, asl24b, extension_family, ExtensionMember};
pub use field::FieldTable;
pub use grammar::{build, describe, GroupDescriptor, GroupSpec};
pub use projective::{frobenius_point_map, m10, pgammal2, pgl2, psigmal2, psl2, psl3_4};

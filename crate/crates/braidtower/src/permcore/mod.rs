//! Permutations, permutation groups, conjugacy classes.

mod bsgs;
mod group;
mod perm;
mod permgroup;

pub use bsgs::Bsgs;
pub use group::{a5, alternating, dihedral, symmetric, ConjClass, Elt, FiniteGroup, Group};
pub use perm::Perm;
pub use permgroup::{are_conjugate_triples, orbits as permgroup_orbits, PermGroup};

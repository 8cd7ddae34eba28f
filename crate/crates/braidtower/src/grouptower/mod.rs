//! The Frattini module M(A5), the group G1, pullbacks, spin separating
//! representations and tower arithmetic.

mod arith;
pub mod cocycle;
pub mod g1;
pub mod gf2;
pub mod module_m;
mod spinsep;

pub use arith::tower_arith;
pub use cocycle::{solve_h2, Cocycle2, H2Report};
pub use g1::{G1Certificate, G1};
pub use module_m::{classify, MClass, MVec, ModuleM};
pub use spinsep::{commuting_involution_profile, spin_sep_rep, spin_sep_rep_120, InvolutionProfile, SpinSepRep};

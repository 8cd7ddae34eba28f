//! Braid action on Nielsen classes, Q'' reduction, orbits of the reduced
//! mapping class group, cusps and sh-incidence.

mod action;
mod cusps;
mod reduced;

pub use action::{apply_q, braid_apply, BraidAction};
pub use cusps::{
    cusp_orbits, equivalent_up_to_permutation, hm_tags, q2_orbit_length, sh_incidence, sh_incidence_from, sh_incidence_general, shortening_type, CuspOrbit, Q2Orbit, ShIncidence,
};
pub use reduced::{mbar4_orbits, MOrbit, Reduced};

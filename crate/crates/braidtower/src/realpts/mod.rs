//! Complex conjugation on Nielsen classes and the real locus of j-line covers.

mod kappa;
mod locus;

pub use kappa::{conjugator, khat, KappaVariant};
pub use locus::{conjugation_over_1_inf, is_reflection, real_components, real_locus, reduced_kappa, RealLocusReport};

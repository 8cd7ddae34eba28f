//! Nielsen classes: enumeration under inner / absolute equivalence,
//! canonical forms, H-M structure and class-algebra counting.

mod canon;
mod count;
mod dihedral;
mod enumerate;
mod hm;
mod spec;

use std::str::FromStr;

pub use canon::{automorphism_of_perm, automorphisms_from_generators, class_map, generating_pair, normalizer_automorphisms, Canon, Tuple};
pub use count::class_product_count;
pub use dihedral::{dihedral_reference, DihedralReport};
pub use enumerate::{enumerate_nielsen, iteration_estimate, mpr};
pub use hm::{hm_structure, is_hm_shape, near_hm_synthesize, real_involution, HmTag, Projection};
pub use spec::ClassSpec;

use crate::error::{parse_err, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Inner,
    Absolute,
    ReducedInner,
    ReducedAbsolute,
}

impl Mode {
    pub fn is_absolute(self) -> bool {
        matches!(self, Mode::Absolute | Mode::ReducedAbsolute)
    }

    pub fn is_reduced(self) -> bool {
        matches!(self, Mode::ReducedInner | Mode::ReducedAbsolute)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Inner => "inner",
            Mode::Absolute => "absolute",
            Mode::ReducedInner => "reduced-inner",
            Mode::ReducedAbsolute => "reduced-absolute",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode, Error> {
        Ok(match s {
            "inner" => Mode::Inner,
            "absolute" => Mode::Absolute,
            "reduced-inner" => Mode::ReducedInner,
            "reduced-absolute" => Mode::ReducedAbsolute,
            _ => return Err(parse_err(s, "mode must be inner, absolute, reduced-inner or reduced-absolute")),
        })
    }
}

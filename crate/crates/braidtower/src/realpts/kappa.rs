//! Complex conjugation on 4-tuples of branch cycles.

use crate::error::{Error, Result};
use crate::nielsen::Tuple;
use crate::permcore::{Elt, FiniteGroup, Group};

/// Real branch point configuration: r1 real points, r2 conjugate pairs, r1 + 2 r2 = 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct KappaVariant {
    pub r1: u8,
    pub r2: u8,
}

impl KappaVariant {
    pub const K0: KappaVariant = KappaVariant { r1: 0, r2: 2 };
    pub const K2: KappaVariant = KappaVariant { r1: 2, r2: 1 };
    pub const K4: KappaVariant = KappaVariant { r1: 4, r2: 0 };

    pub fn new(r1: u8, r2: u8) -> Result<KappaVariant> {
        if r1 as usize + 2 * r2 as usize != 4 {
            return Err(Error::Invalid(format!("r1 + 2 r2 = {} != 4", r1 + 2 * r2)));
        }
        Ok(KappaVariant { r1, r2 })
    }

    /// j-interval of the configuration: 4 real points over (1, oo), a pair
    /// of each over (-oo, 1) is the complement; r1 = 2 sits over (-oo, 0).
    pub fn interval(&self) -> &'static str {
        match self.r1 {
            4 => "(1,inf)",
            0 => "(1,inf)",
            _ => "(-inf,1)",
        }
    }
}

/// The conjugated tuple for variant `v`.
pub fn khat(g: &Group, t: &[Elt], v: KappaVariant) -> Result<Tuple> {
    if t.len() != 4 {
        return Err(Error::Invalid(format!("complex conjugation implemented for r = 4, got {}", t.len())));
    }
    let inv = |x| g.inv(x);
    let w = g.mul(t[2], t[3]);
    Ok(match v.r1 {
        4 => vec![inv(t[0]), g.conj(inv(t[1]), w), g.conj(inv(t[2]), t[3]), inv(t[3])],
        2 => vec![inv(t[0]), g.conj(inv(t[1]), w), inv(t[3]), inv(t[2])],
        0 => vec![g.conj(inv(t[1]), w), g.conj(inv(t[0]), w), inv(t[3]), inv(t[2])],
        _ => return Err(Error::Invalid(format!("unsupported r1 = {}", v.r1))),
    })
}

/// Some c with c t_i c^-1 = khat(t)_i entrywise, if one exists.
pub fn conjugator(g: &Group, t: &[Elt], target: &[Elt]) -> Option<Elt> {
    (0..g.order() as Elt).find(|&c| t.iter().zip(target).all(|(&a, &b)| g.conj(a, c) == b))
}

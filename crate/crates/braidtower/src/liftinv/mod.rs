//! Spin lifting invariants of Nielsen classes and braid orbits.

use crate::braidact::BraidAction;
use crate::error::{Error, Result};
use crate::grouptower::g1::{mpart, proj};
use crate::grouptower::{classify, MClass, SpinSepRep, G1};
use crate::nielsen::{Canon, ClassSpec, Tuple};
use crate::permcore::{Elt, FiniteGroup, Group, Perm};
use crate::spincover::product_sign;

/// How group elements are placed in an alternating group.
#[derive(Clone, Copy)]
pub enum Embedding<'a> {
    /// The group's own permutation representation.
    Standard,
    /// A spin-separating coset representation of G1, optionally composed
    /// with an inclusion of a subgroup (element map into G1).
    SpinSep(&'a SpinSepRep, Option<&'a [Elt]>),
}

impl Embedding<'_> {
    pub fn image(&self, g: &Group, x: Elt) -> Result<Perm> {
        match self {
            Embedding::Standard => g.perm(x).cloned().ok_or_else(|| Error::Invalid("group has no permutation representation".into())),
            Embedding::SpinSep(rep, via) => Ok(rep.image(via.map_or(x, |v| v[x as usize])).clone()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Embedding::Standard => "standard".into(),
            Embedding::SpinSep(rep, _) => format!("spin-separating degree {}", rep.degree()),
        }
    }
}

/// Sign of the product of canonical odd-order lifts of the embedded entries.
pub fn lift_invariant(g: &Group, t: &[Elt], emb: Embedding) -> Result<i8> {
    let perms: Vec<Perm> = t.iter().map(|&x| emb.image(g, x)).collect::<Result<_>>()?;
    product_sign(&perms)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct OrbitLift {
    pub size: usize,
    pub invariant: i8,
    pub obstructed: bool,
    pub embedding: String,
}

/// Invariant of every class, certified constant on each braid orbit.
pub fn orbit_invariants(g: &Group, ba: &BraidAction, emb: Embedding) -> Result<(Vec<i8>, Vec<OrbitLift>)> {
    use rayon::prelude::*;
    let s: Vec<i8> = ba.classes().par_iter().map(|t| lift_invariant(g, t, emb)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for orb in ba.orbits() {
        let v = s[orb[0] as usize];
        if orb.iter().any(|&x| s[x as usize] != v) {
            return Err(Error::Certify("lifting invariant is mixed on a braid orbit".into()));
        }
        out.push(OrbitLift { size: orb.len(), invariant: v, obstructed: v == -1, embedding: emb.name() });
    }
    Ok((s, out))
}

/// Inner Nielsen class, braid orbits and their invariants.
pub fn obstruction_report(g: &Group, spec: &ClassSpec, emb: Embedding, budget: u128) -> Result<(Vec<Tuple>, Vec<OrbitLift>)> {
    let canon = Canon::inner(g);
    let ni = crate::nielsen::enumerate_nielsen(&canon, spec, budget)?;
    if ni.is_empty() {
        return Ok((ni, Vec::new()));
    }
    let ba = BraidAction::new(&canon, ni)?;
    let (_, orbits) = orbit_invariants(g, &ba, emb)?;
    Ok((ba.classes().to_vec(), orbits))
}

/// Perturbation types (a, b) of a level-1 tuple lying over a level-0 H-M rep:
/// a solves a + a^{g1} = t2 t1 and b solves b + b^{t4} = t3 t4, both outside V.
pub fn perturbation_types(g1: &G1, t: &[Elt]) -> Option<(MClass, MClass)> {
    let g = &g1.group;
    let a5 = g1.a5();
    let (p0, p3) = (proj(t[0]), proj(t[3]));
    if proj(t[1]) != a5.inv(p0) || proj(t[2]) != a5.inv(p3) {
        return None;
    }
    let solve = |m: u8, h: Elt| -> Option<MClass> {
        let mut kinds: Vec<MClass> = (0..32u8).filter(|&a| a ^ g1.module.act(a, h) == m).map(classify).filter(|c| matches!(c, MClass::M3 | MClass::M5)).collect();
        kinds.sort_by_key(|c| *c as u8);
        kinds.dedup();
        (kinds.len() == 1).then(|| kinds[0])
    };
    let a = solve(mpart(g.mul(t[1], t[0])), p0)?;
    let b = solve(mpart(g.mul(t[2], t[3])), p3)?;
    Some((a, b))
}

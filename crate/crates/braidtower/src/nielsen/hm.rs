use super::canon::Tuple;
use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup, Group};
use crate::realpts::{khat, KappaVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HmTag {
    Hm,
    NearHm,
    ComplementHm,
    ComplementNearHm,
    None,
}

impl HmTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            HmTag::Hm => "HM",
            HmTag::NearHm => "nearHM",
            HmTag::ComplementHm => "comp(HM)",
            HmTag::ComplementNearHm => "comp(nearHM)",
            HmTag::None => "-",
        }
    }
}

/// A group homomorphism to a lower level, as an element map.
#[derive(Clone, Copy)]
pub struct Projection<'a> {
    pub lower: &'a Group,
    pub map: &'a [Elt],
}

impl Projection<'_> {
    pub fn apply(&self, t: &[Elt]) -> Tuple {
        t.iter().map(|&x| self.map[x as usize]).collect()
    }
}

/// (g1, g1^-1, g2, g2^-1); the shape is invariant under conjugation.
pub fn is_hm_shape(g: &Group, t: &[Elt]) -> bool {
    t.len() == 4 && t[1] == g.inv(t[0]) && t[3] == g.inv(t[2])
}

/// An involution c with c t c = khat_0(t), if any.
pub fn real_involution(g: &Group, t: &[Elt]) -> Result<Option<Elt>> {
    let k = khat(g, t, KappaVariant::K0)?;
    Ok((1..g.order() as Elt).find(|&c| g.elt_order(c) == 2 && t.iter().zip(&k).all(|(&a, &b)| g.conj(a, c) == b)))
}

/// HM / near-HM / none for one tuple (complements need the braid action, see
/// `braidact::hm_tags`).
pub fn hm_structure(g: &Group, t: &[Elt], proj: Option<Projection>, want_near: bool) -> Result<HmTag> {
    if t.len() != 4 {
        return Err(Error::Invalid("H-M structure needs r = 4".into()));
    }
    if is_hm_shape(g, t) {
        return Ok(HmTag::Hm);
    }
    if !want_near {
        return Ok(HmTag::None);
    }
    let p = proj.ok_or_else(|| Error::Invalid("near H-M test requires a projection to the previous level".into()))?;
    if is_hm_shape(p.lower, &p.apply(t)) && real_involution(g, t)?.is_some() {
        return Ok(HmTag::NearHm);
    }
    Ok(HmTag::None)
}

/// (g1, c^{g2^-1} g1^-1 c^{g2^-1}, c g2 c, g2^-1) with c = (g1 g2)^5, over a
/// level-0 pair whose product has order 5.
pub fn near_hm_synthesize(g: &Group, proj: Projection, g1: Elt, g2: Elt) -> Result<Tuple> {
    let u = g.mul(g1, g2);
    if proj.lower.elt_order(proj.map[u as usize]) != 5 {
        return Err(Error::Invalid("image of g1 g2 must have order 5".into()));
    }
    let c = g.pow(u, 5);
    let cp = g.conj(c, g.inv(g2));
    let t = vec![g1, g.product(&[cp, g.inv(g1), cp]), g.product(&[c, g2, c]), g.inv(g2)];
    if g.product(&t) != 0 {
        return Err(Error::Certify("synthesized tuple has product != 1".into()));
    }
    let k = khat(g, &t, KappaVariant::K0)?;
    if !t.iter().zip(&k).all(|(&a, &b)| g.conj(a, c) == b) {
        return Err(Error::Certify("c does not conjugate the tuple to its khat_0 image".into()));
    }
    Ok(t)
}

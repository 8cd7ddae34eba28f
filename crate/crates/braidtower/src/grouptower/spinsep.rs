//! Coset representations of G1 whose pullback to the spin cover of the
//! alternating group realizes the nonsplit extension.

use super::g1::{encode, proj, G1};
use super::module_m::{classify, MClass};
use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup, Perm};

pub struct SpinSepRep {
    pub subgroup: Vec<Elt>,
    pub alpha: Elt,
    pub beta: Elt,
    /// Image of every element of G1.
    pub images: Vec<Perm>,
    /// Fixed points on M3', M5', V minus 1.
    pub traces: (usize, usize, usize),
}

impl SpinSepRep {
    pub fn degree(&self) -> usize {
        self.images[0].degree()
    }

    pub fn image(&self, x: Elt) -> &Perm {
        &self.images[x as usize]
    }
}

fn traces(_g1: &G1, images: &[Perm]) -> Result<(usize, usize, usize)> {
    let mut t = [None::<usize>; 3];
    for m in 1..32u8 {
        let k = match classify(m) {
            MClass::M3 => 0,
            MClass::M5 => 1,
            MClass::V => 2,
            MClass::Zero => unreachable!(),
        };
        let f = images[encode(m, 0) as usize].fixed_points();
        match t[k] {
            None => t[k] = Some(f),
            Some(x) if x != f => return Err(Error::Certify("trace not constant on a module orbit".into())),
            _ => {}
        }
    }
    Ok((t[0].unwrap(), t[1].unwrap(), t[2].unwrap()))
}

fn coset_images(g1: &G1, h: &[Elt]) -> Result<Vec<Perm>> {
    let g = &g1.group;
    let all: Vec<Elt> = (0..g.order() as Elt).collect();
    let (_, images) = g.coset_action(h, &all);
    if images.iter().skip(1).any(|p| p.is_identity()) {
        return Err(Error::Certify("coset action is not faithful".into()));
    }
    if images.iter().any(|p| !p.is_even()) {
        return Err(Error::Certify("coset action has an odd image".into()));
    }
    Ok(images)
}

/// Degree-40 representation on cosets of H' = <alpha', beta>, |H'| = 48,
/// with image S3 in A5 and traces (4, 20, 8) on (M3', M5', V).
pub fn spin_sep_rep(g1: &G1) -> Result<SpinSepRep> {
    let g = &g1.group;
    let a5 = g1.a5();
    let order3: Vec<Elt> = (0..g.order() as Elt).filter(|&x| g.elt_order(x) == 3).collect();
    for class in g.classes().iter().filter(|c| c.elt_order == 4) {
        let alpha = class.rep;
        for &beta in &order3 {
            if a5.subgroup_order(&[proj(alpha), proj(beta)]) != 6 {
                continue;
            }
            let h = g.closure(&[alpha, beta]);
            if h.len() != 48 {
                continue;
            }
            let images = match coset_images(g1, &h) {
                Ok(i) => i,
                Err(_) => continue,
            };
            let tr = traces(g1, &images)?;
            if tr == (4, 20, 8) {
                return Ok(SpinSepRep { subgroup: h, alpha, beta, images, traces: tr });
            }
        }
    }
    Err(Error::Certify("no spin separating subgroup of order 48 found".into()))
}

/// Degree-120 variant: H = <alpha', K>, K a Klein 4-group in V moved by alpha',
/// with |M3' in H| = 1.
pub fn spin_sep_rep_120(g1: &G1) -> Result<SpinSepRep> {
    let g = &g1.group;
    let vs: Vec<Elt> = g1.module_elements(&[MClass::V]);
    for class in g.classes().iter().filter(|c| c.elt_order == 4) {
        let alpha = class.rep;
        for (i, &v1) in vs.iter().enumerate() {
            for &v2 in &vs[i + 1..] {
                let k = g.closure(&[v1, v2]);
                if k.iter().any(|&x| !k.contains(&g.conj(x, alpha))) || k.iter().all(|&x| g.conj(x, alpha) == x) {
                    continue;
                }
                let h = g.closure(&[alpha, v1, v2]);
                if h.len() != 16 {
                    continue;
                }
                let m3 = h.iter().filter(|&&x| proj(x) == 0 && classify((x % 32) as u8) == MClass::M3).count();
                if m3 != 1 {
                    continue;
                }
                let images = coset_images(g1, &h)?;
                let tr = traces(g1, &images)?;
                return Ok(SpinSepRep { subgroup: h, alpha, beta: v1, images, traces: tr });
            }
        }
    }
    Err(Error::Certify("no degree-120 spin separating subgroup found".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct InvolutionProfile {
    pub a: usize,
    pub a_rev: usize,
    pub b: usize,
    pub c: usize,
}

fn two_cycles(p: &Perm) -> Vec<(u32, u32)> {
    p.cycles().into_iter().filter(|c| c.len() == 2).map(|c| (c[0], c[1])).collect()
}

/// Overlap statistics of two commuting involutions: a(m,m') counts 2-cycles of m
/// fixed pointwise by m', b common 2-cycles, c the K4-pairs.
pub fn commuting_involution_profile(m: &Perm, m2: &Perm) -> Result<InvolutionProfile> {
    if m.mul(m2) != m2.mul(m) {
        return Err(Error::Invalid("involutions do not commute".into()));
    }
    if !m.mul(m).is_identity() || !m2.mul(m2).is_identity() {
        return Err(Error::Invalid("not an involution".into()));
    }
    let a_of = |x: &Perm, y: &Perm| two_cycles(x).iter().filter(|&&(i, j)| y.apply(i) == i && y.apply(j) == j).count();
    let tc = two_cycles(m);
    let b = tc.iter().filter(|&&(i, j)| m2.apply(i) == j).count();
    let k4 = tc
        .iter()
        .filter(|&&(i, j)| {
            let (i3, i4) = (m2.apply(i), m2.apply(j));
            i3 != i && i3 != j && m.apply(i3) == i4
        })
        .count();
    let p = InvolutionProfile { a: a_of(m, m2), a_rev: a_of(m2, m), b, c: k4 / 2 };
    if p.a + p.b + 2 * p.c != tc.len() {
        return Err(Error::Certify("2-cycle bookkeeping identity failed".into()));
    }
    let prod = two_cycles(&m.mul(m2)).len();
    if p.a + p.a_rev + 2 * p.c != prod {
        return Err(Error::Certify("product 2-cycle identity failed".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_40() {
        let g1 = G1::build().unwrap();
        let r = spin_sep_rep(&g1).unwrap();
        assert_eq!(r.degree(), 40);
        assert_eq!(r.traces, (4, 20, 8));
        // fixed cosets of an order-3 element: |x^G cap H'| |Z(x)| / |H'| = 8 * 6 / 48
        let g = &g1.group;
        let x = (0..1920u32).find(|&x| g.elt_order(x) == 3).unwrap();
        let in_h = r.subgroup.iter().filter(|&&y| g.elt_order(y) == 3).count();
        assert_eq!(in_h, 8);
        assert_eq!(r.image(x).fixed_points(), 1);
        assert_eq!(r.image(x).cycle_type().iter().filter(|&&c| c == 3).count(), 13);
        let by = |c: MClass| -> Vec<Perm> { (1..32u8).filter(|&m| classify(m) == c).map(|m| r.image(encode(m, 0)).clone()).collect() };
        let m3 = by(MClass::M3);
        let p = commuting_involution_profile(&m3[0], &m3[1]).unwrap();
        assert_eq!((p.b, p.c), (4, 6));
        assert_eq!((p.a, p.a_rev), (2, 2));
        let m5 = by(MClass::M5);
        let p = commuting_involution_profile(&m5[0], &m5[1]).unwrap();
        assert_eq!((p.a, p.a_rev, p.b, p.c), (6, 6, 0, 2));
        let p = commuting_involution_profile(&m5[0], &m5[0]).unwrap();
        assert_eq!((p.a, p.b, p.c), (0, 10, 0));
    }

    #[test]
    fn degree_120() {
        let g1 = G1::build().unwrap();
        let r = spin_sep_rep_120(&g1).unwrap();
        assert_eq!(r.degree(), 120);
        assert_eq!(r.traces, (12, 60, 24));
    }
}

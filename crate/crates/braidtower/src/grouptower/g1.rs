//! G1: the extension of A5 by M given by the nontrivial 2-cocycle.
//! Elements are encoded as `g * 32 + m`; the identity is 0.

use std::path::Path;

use super::cocycle::{load_or_solve, Cocycle2};
use super::module_m::{classify, MClass, MVec, ModuleM};
use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup, Group};

pub struct G1 {
    pub module: ModuleM,
    pub cocycle: Cocycle2,
    pub group: Group,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct G1Certificate {
    pub order: usize,
    pub perfect: bool,
    pub centerless: bool,
    pub involutions: usize,
    pub v_quotient_order: usize,
    pub v_quotient_perfect: bool,
    pub v_quotient_involutions: usize,
    pub even_order_lifts_double: bool,
    pub odd_order_half_preserve: bool,
    pub frattini: bool,
    pub order3_over_3cycle: usize,
    pub dim_h2: usize,
}

#[inline]
pub fn encode(m: MVec, g: Elt) -> Elt {
    g * 32 + m as Elt
}

#[inline]
pub fn proj(x: Elt) -> Elt {
    x / 32
}

#[inline]
pub fn mpart(x: Elt) -> MVec {
    (x % 32) as MVec
}

impl G1 {
    pub fn build() -> Result<G1> {
        G1::build_cached(None)
    }

    pub fn build_cached(cache: Option<&Path>) -> Result<G1> {
        let module = ModuleM::build();
        let cocycle = load_or_solve(&module, cache)?;
        let a5 = &module.a5;
        let gens = vec![encode(0, a5.gens()[0]), encode(0, a5.gens()[1])];
        let group = {
            let (m, c) = (&module, &cocycle);
            Group::from_fn(1920, gens, move |x, y| {
                let (g1, m1, g2, m2) = (proj(x), mpart(x), proj(y), mpart(y));
                encode(m.act(m1, g2) ^ m2 ^ c.get(g1, g2), m.a5.mul(g1, g2))
            })
        };
        let labels = (0..1920u32).map(|x| format!("{}.{:05b}", module.a5.label(proj(x)), mpart(x))).collect();
        let group = group.with_labels(labels);
        Ok(G1 { module, cocycle, group })
    }

    pub fn a5(&self) -> &Group {
        &self.module.a5
    }

    /// Elements (m, 1) with m in the given classes.
    pub fn module_elements(&self, classes: &[MClass]) -> Vec<Elt> {
        (0..32u8).filter(|&m| classes.contains(&classify(m))).map(|m| encode(m, 0)).collect()
    }

    pub fn certify(&self) -> Result<G1Certificate> {
        let g = &self.group;
        let a5 = self.a5();
        let fail = |what: &str| Err(Error::Certify(format!("G1: {what}")));
        if g.order() != 1920 {
            return fail("order is not 1920");
        }
        let perfect = g.is_perfect();
        if !perfect {
            return fail("not perfect");
        }
        let centerless = g.center() == vec![0];
        if !centerless {
            return fail("nontrivial center");
        }
        let mut even_double = true;
        let mut odd_half = true;
        for a in 0..60u32 {
            let o = a5.elt_order(a);
            let lifts: Vec<u32> = (0..32u8).map(|m| g.elt_order(encode(m, a))).collect();
            if o.is_multiple_of(2) {
                even_double &= lifts.iter().all(|&x| x == 2 * o);
            } else if o > 1 {
                let keep = lifts.iter().filter(|&&x| x == o).count();
                odd_half &= keep == 16 && lifts.iter().all(|&x| x == o || x == 2 * o);
            }
        }
        if !even_double {
            return fail("a lift of an even-order element does not have doubled order");
        }
        if !odd_half {
            return fail("odd-order lifts are not half order-preserving");
        }
        let involutions = g.involutions();
        if involutions != 31 {
            return fail("involution count is not 31");
        }
        let v = self.module_elements(&[MClass::Zero, MClass::V]);
        let (q, _) = g.quotient(&v)?;
        let qinv = q.involutions();
        let qperf = q.is_perfect();
        if q.order() != 120 || !qperf || qinv != 1 {
            return fail("V-quotient is not an SL(2,5) fingerprint");
        }
        let (a, b) = (a5.gens()[0], a5.gens()[1]);
        let mut frattini = true;
        'pairs: for ma in 0..32u8 {
            for mb in 0..32u8 {
                if !g.generates(&[encode(ma, a), encode(mb, b)]) {
                    frattini = false;
                    break 'pairs;
                }
            }
        }
        if !frattini {
            return fail("not a Frattini extension");
        }
        let three = a5.find_perm(&crate::Perm::parse("(1 2 3)", 5).unwrap()).unwrap();
        let order3 = (0..32u8).filter(|&m| g.elt_order(encode(m, three)) == 3).count();
        Ok(G1Certificate {
            order: g.order(),
            perfect,
            centerless,
            involutions,
            v_quotient_order: q.order(),
            v_quotient_perfect: qperf,
            v_quotient_involutions: qinv,
            even_order_lifts_double: even_double,
            odd_order_half_preserve: odd_half,
            frattini,
            order3_over_3cycle: order3,
            dim_h2: self.cocycle.report.dim_h2,
        })
    }

    /// Full preimage of the subgroup of A5 generated by `h0`. Returns the group
    /// and its embedding into G1.
    pub fn pullback(&self, h0: &[Elt]) -> Result<(Group, Vec<Elt>)> {
        let a5 = self.a5();
        if h0.iter().any(|&x| x as usize >= a5.order()) {
            return Err(Error::Invalid("generator outside A5".into()));
        }
        let sub = a5.closure(h0);
        let mut member = [false; 60];
        for &x in &sub {
            member[x as usize] = true;
        }
        let elts: Vec<Elt> = (0..1920u32).filter(|&x| member[proj(x) as usize]).collect();
        let mut gens: Vec<Elt> = h0.iter().map(|&x| encode(0, x)).collect();
        gens.extend((0..5).map(|k| encode(1 << k, 0)));
        let closed = self.group.closure(&gens);
        if closed != elts {
            return Err(Error::Certify("pullback generators do not generate the preimage".into()));
        }
        Ok(self.group.subgroup(&elts, &gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Perm;

    #[test]
    fn g1_certificate() {
        let g1 = G1::build().unwrap();
        let c = g1.certify().unwrap();
        assert_eq!(c.order, 1920);
        assert_eq!(c.involutions, 31);
        assert_eq!(c.order3_over_3cycle, 16);
        assert_eq!(c.dim_h2, 1);
        // the order-3 elements form a single class of size 320
        let o3: Vec<_> = g1.group.classes().iter().filter(|k| k.elt_order == 3).collect();
        assert_eq!(o3.len(), 1);
        assert_eq!(o3[0].size, 320);
    }

    #[test]
    fn pullbacks() {
        let g1 = G1::build().unwrap();
        let a5 = g1.a5();
        let a4: Vec<Elt> = ["(1 2 3)", "(2 3 4)"].iter().map(|t| a5.find_perm(&Perm::parse(t, 5).unwrap()).unwrap()).collect();
        assert_eq!(g1.pullback(&a4).unwrap().0.order(), 384);
        assert_eq!(g1.pullback(&[]).unwrap().0.order(), 32);
        assert_eq!(g1.pullback(a5.gens()).unwrap().0.order(), 1920);
    }
}

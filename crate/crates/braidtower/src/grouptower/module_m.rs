//! The 5-dimensional GF(2)[A5]-module M: functions on the six right cosets of
//! a dihedral D5 modulo the constant function.
//!
//! A vector is stored by its canonical lift (coordinate 0 cleared) and indexed
//! by the remaining five bits, so indices run over 0..32 and addition is xor.

use crate::permcore::{a5, Elt, FiniteGroup, Group, Perm};

pub type MVec = u8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum MClass {
    Zero,
    /// Nonzero augmentation-kernel vectors (even weight).
    V,
    /// Weight-3 lifts: the orbit fixed by 3-cycles.
    M3,
    /// Weight 1 or 5 lifts: the orbit fixed by 5-cycles.
    M5,
}

pub struct ModuleM {
    pub a5: Group,
    pub d5: Vec<Elt>,
    /// coset_perm[g][i] = image of coset i under right multiplication by g
    pub coset_perm: Vec<[u8; 6]>,
    act: Vec<[MVec; 32]>,
}

/// Canonical 5-bit index of a 6-bit vector.
#[inline]
pub fn canon6(v: u8) -> MVec {
    let v = if v & 1 == 1 { v ^ 0x3f } else { v };
    v >> 1
}

#[inline]
pub fn lift6(m: MVec) -> u8 {
    m << 1
}

pub fn classify(m: MVec) -> MClass {
    match (lift6(m)).count_ones() {
        0 => MClass::Zero,
        2 | 4 => MClass::V,
        3 => MClass::M3,
        _ => MClass::M5,
    }
}

impl ModuleM {
    pub fn build() -> ModuleM {
        let g = a5();
        let d5gens: Vec<Elt> = ["(1 3 4 2 5)", "(1 2)(3 4)"].iter().map(|t| g.find_perm(&Perm::parse(t, 5).unwrap()).unwrap()).collect();
        let d5 = g.closure(&d5gens);
        assert_eq!(d5.len(), 10);
        let (cosets, _) = g.coset_action(&d5, &[]);
        let mut reps = Vec::new();
        for x in 0..60u32 {
            if reps.len() == cosets[x as usize] as usize {
                reps.push(x);
            }
        }
        let coset_perm: Vec<[u8; 6]> = (0..60u32)
            .map(|a| {
                let mut p = [0u8; 6];
                for (i, &r) in reps.iter().enumerate() {
                    p[i] = cosets[g.mul(r, a) as usize] as u8;
                }
                p
            })
            .collect();
        let act = coset_perm
            .iter()
            .map(|p| {
                let mut t = [0u8; 32];
                for m in 0..32u8 {
                    let v = lift6(m);
                    let mut w = 0u8;
                    for i in 0..6 {
                        if v >> i & 1 == 1 {
                            w |= 1 << p[i];
                        }
                    }
                    t[m as usize] = canon6(w);
                }
                t
            })
            .collect();
        ModuleM { a5: g, d5, coset_perm, act }
    }

    /// m^g (right action).
    #[inline]
    pub fn act(&self, m: MVec, g: Elt) -> MVec {
        self.act[g as usize][m as usize]
    }

    /// Nonzero vectors fixed by g.
    pub fn fixed(&self, g: Elt) -> Vec<MVec> {
        (1..32).filter(|&m| self.act(m, g) == m).collect()
    }

    /// Orbit sizes of A5 on M minus 0, sorted descending.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut seen = [false; 32];
        let mut out = Vec::new();
        for m in 1..32u8 {
            if seen[m as usize] {
                continue;
            }
            let mut c = 0;
            for x in (0..60).map(|g| self.act(m, g)) {
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    c += 1;
                }
            }
            out.push(c);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbits_and_fixed_vectors() {
        let m = ModuleM::build();
        assert_eq!(m.orbit_sizes(), vec![15, 10, 6]);
        // class sizes by weight agree with orbit sizes
        let count = |c| (1..32u8).filter(|&x| classify(x) == c).count();
        assert_eq!((count(MClass::V), count(MClass::M3), count(MClass::M5)), (15, 10, 6));
        // V is a subspace of dimension 4
        let v: Vec<u8> = (0..32u8).filter(|&x| matches!(classify(x), MClass::V | MClass::Zero)).collect();
        assert_eq!(v.len(), 16);
        assert!(v.iter().all(|&a| v.iter().all(|&b| v.contains(&(a ^ b)))));
        let g = &m.a5;
        for a in 0..60u32 {
            match g.elt_order(a) {
                3 => {
                    let f = m.fixed(a);
                    assert_eq!(f.len(), 1);
                    assert_eq!(classify(f[0]), MClass::M3);
                }
                5 => {
                    let f = m.fixed(a);
                    assert_eq!(f.len(), 1);
                    assert_eq!(classify(f[0]), MClass::M5);
                }
                _ => {}
            }
        }
        // homomorphism
        for a in 0..60u32 {
            for b in 0..60u32 {
                for x in 0..32u8 {
                    assert_eq!(m.act(m.act(x, a), b), m.act(x, g.mul(a, b)));
                }
            }
        }
    }
}

use num_bigint::BigUint;

use super::bsgs::Bsgs;
use super::group::Group;
use super::perm::Perm;
use crate::error::{Error, Result};

/// A permutation group given by generators; order via BSGS, elements on demand.
pub struct PermGroup {
    pub degree: usize,
    pub gens: Vec<Perm>,
    pub bsgs: Bsgs,
}

impl PermGroup {
    pub fn generate(gens: &[Perm]) -> Result<PermGroup> {
        let degree = gens.first().ok_or_else(|| Error::Invalid("empty generator list".into()))?.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::Degree(degree, g.degree()));
            }
        }
        Ok(PermGroup { degree, gens: gens.to_vec(), bsgs: Bsgs::new(degree, gens) })
    }

    pub fn order(&self) -> BigUint {
        self.bsgs.order()
    }

    /// Enumerate all elements, failing past `cap`.
    pub fn enumerate(&self, cap: usize) -> Result<Group> {
        Group::from_perms(&self.gens, cap)
    }

    pub fn is_transitive(&self) -> bool {
        orbits(self.degree, &self.gens).len() == 1
    }

    pub fn is_even(&self) -> bool {
        self.gens.iter().all(|g| g.is_even())
    }
}

/// Orbits of the group generated by `gens` on {0..n}, each sorted, ordered by least point.
pub fn orbits(n: usize, gens: &[Perm]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orb = vec![s as u32];
        let mut k = 0;
        while k < orb.len() {
            let x = orb[k];
            k += 1;
            for g in gens {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orb.push(y);
                }
            }
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

/// A bijection f with f(x^a_i) = f(x)^b_i for all i, if one exists.
/// The group generated by `a` must be transitive.
pub fn are_conjugate_triples(a: &[Perm], b: &[Perm]) -> Option<Perm> {
    let n = a.first()?.degree();
    if a.len() != b.len() || b.iter().any(|p| p.degree() != n) {
        return None;
    }
    'start: for y0 in 0..n as u32 {
        let mut f = vec![u32::MAX; n];
        let mut used = vec![false; n];
        f[0] = y0;
        used[y0 as usize] = true;
        let mut queue = vec![0u32];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            k += 1;
            for (p, q) in a.iter().zip(b) {
                let (x2, y2) = (p.apply(x), q.apply(f[x as usize]));
                if f[x2 as usize] == u32::MAX {
                    if used[y2 as usize] {
                        continue 'start;
                    }
                    f[x2 as usize] = y2;
                    used[y2 as usize] = true;
                    queue.push(x2);
                } else if f[x2 as usize] != y2 {
                    continue 'start;
                }
            }
        }
        if queue.len() == n {
            return Some(Perm::from_images(f));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_order() {
        let g = PermGroup::generate(&[Perm::parse("(1 2 3 4 5)", 5).unwrap(), Perm::parse("(1 2 3)", 5).unwrap()]).unwrap();
        assert_eq!(g.order(), BigUint::from(60u32));
        assert!(g.is_transitive() && g.is_even());
        assert!(matches!(g.enumerate(10), Err(Error::Overflow { cap: 10, .. })));
    }

    #[test]
    fn conjugate_triples() {
        let a: Vec<Perm> = ["(1 2 3)", "(1 2)"].iter().map(|t| Perm::parse(t, 3).unwrap()).collect();
        let h = Perm::parse("(1 3)", 3).unwrap();
        let b: Vec<Perm> = a.iter().map(|p| p.conj(&h)).collect();
        let f = are_conjugate_triples(&a, &b).unwrap();
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.conj(&f), *q);
        }
        let c: Vec<Perm> = ["(1 2 3)", "(2 3)"].iter().map(|t| Perm::parse(t, 3).unwrap()).collect();
        assert!(are_conjugate_triples(&a, &[c[0].clone(), Perm::parse("(1 3 2)", 3).unwrap()]).is_none());
        let _ = c;
    }
}

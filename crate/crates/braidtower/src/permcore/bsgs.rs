//! Deterministic Schreier-Sims.

use num_bigint::BigUint;

use super::perm::Perm;

struct Level {
    base: u32,
    gens: Vec<usize>,
    // trans[y] = u with base^u = y
    trans: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

pub struct Bsgs {
    n: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(n: usize, gens: &[Perm]) -> Bsgs {
        let mut b = Bsgs { n, strong: Vec::new(), levels: Vec::new() };
        for g in gens {
            assert_eq!(g.degree(), n);
            if !g.is_identity() {
                b.strong.push(g.clone());
            }
        }
        if b.strong.is_empty() {
            return b;
        }
        // Initial base: every strong generator moves some base point.
        let mut base: Vec<u32> = Vec::new();
        for g in &b.strong {
            if base.iter().all(|&x| g.apply(x) == x) {
                let p = (0..n as u32).find(|&x| g.apply(x) != x).unwrap();
                base.push(p);
            }
        }
        for &p in &base {
            b.levels.push(Level { base: p, gens: Vec::new(), trans: Vec::new(), orbit: Vec::new() });
        }
        for i in 0..b.levels.len() {
            b.refresh(i);
        }
        b.run();
        b
    }

    fn refresh(&mut self, i: usize) {
        let fixed: Vec<u32> = self.levels[..i].iter().map(|l| l.base).collect();
        let gens: Vec<usize> = (0..self.strong.len()).filter(|&s| fixed.iter().all(|&x| self.strong[s].apply(x) == x)).collect();
        let bp = self.levels[i].base;
        let mut trans: Vec<Option<Perm>> = vec![None; self.n];
        trans[bp as usize] = Some(Perm::identity(self.n));
        let mut orbit = vec![bp];
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k];
            k += 1;
            for &s in &gens {
                let z = self.strong[s].apply(y);
                if trans[z as usize].is_none() {
                    trans[z as usize] = Some(trans[y as usize].as_ref().unwrap().mul(&self.strong[s]));
                    orbit.push(z);
                }
            }
        }
        let l = &mut self.levels[i];
        l.gens = gens;
        l.trans = trans;
        l.orbit = orbit;
    }

    /// Sift from level `from`; returns residue and the level where it dropped out.
    fn strip(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let y = h.apply(self.levels[i].base);
            match &self.levels[i].trans[y as usize] {
                None => return (h, i),
                Some(u) => h = h.mul(&u.inv()),
            }
        }
        (h, self.levels.len())
    }

    fn run(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let iu = i as usize;
            let orbit = self.levels[iu].orbit.clone();
            let gens = self.levels[iu].gens.clone();
            for &y in &orbit {
                for &s in &gens {
                    let uy = self.levels[iu].trans[y as usize].clone().unwrap();
                    let z = self.strong[s].apply(y);
                    let uz = self.levels[iu].trans[z as usize].as_ref().unwrap();
                    let h = uy.mul(&self.strong[s]).mul(&uz.inv());
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = self.strip(&h, iu + 1);
                    if j < self.levels.len() || !res.is_identity() {
                        if j == self.levels.len() {
                            let p = (0..self.n as u32).find(|&x| res.apply(x) != x).unwrap();
                            self.levels.push(Level { base: p, gens: Vec::new(), trans: Vec::new(), orbit: Vec::new() });
                        }
                        self.strong.push(res);
                        for l in iu + 1..=j.min(self.levels.len() - 1) {
                            self.refresh(l);
                        }
                        i = j.min(self.levels.len() - 1) as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn order_u128(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (r, j) = self.strip(g, 0);
        j == self.levels.len() && r.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Generators of the stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        if k >= self.levels.len() {
            return Vec::new();
        }
        self.levels[k].gens.iter().map(|&s| self.strong[s].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_and_alternating() {
        let n = 7;
        let c = Perm::from_images((1..n as u32).chain([0]).collect());
        let t = Perm::from_cycles(n, &[&[0, 1]]);
        assert_eq!(Bsgs::new(n, &[c.clone(), t]).order_u128(), Some(5040));
        let t3 = Perm::from_cycles(n, &[&[0, 1, 2]]);
        assert_eq!(Bsgs::new(n, &[c, t3]).order_u128(), Some(2520));
    }

    #[test]
    fn membership() {
        let g = Perm::parse("(1 2 3 4 5)", 5).unwrap();
        let h = Perm::parse("(1 2 3)", 5).unwrap();
        let b = Bsgs::new(5, &[g, h]);
        assert!(b.contains(&Perm::parse("(1 2)(3 4)", 5).unwrap()));
        assert!(!b.contains(&Perm::parse("(1 2)", 5).unwrap()));
    }
}

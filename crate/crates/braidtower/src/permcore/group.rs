//! Finite groups with a full multiplication table and conjugacy data.
//!
//! Elements are `u32` indices; index 0 is always the identity and the index
//! order is the total order used for canonical forms.

use std::collections::HashMap;
use std::fmt;

use super::perm::Perm;
use crate::error::{Error, Result};

pub type Elt = u32;

pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn mul(&self, a: Elt, b: Elt) -> Elt;
    fn inv(&self, a: Elt) -> Elt;
    fn identity(&self) -> Elt {
        0
    }
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: Elt,
    pub size: usize,
    pub elt_order: u32,
    /// Centralizer of `rep`, sorted.
    pub centralizer: Vec<Elt>,
}

#[derive(Clone)]
pub struct Group {
    n: usize,
    table: Vec<Elt>,
    inverse: Vec<Elt>,
    orders: Vec<u32>,
    gens: Vec<Elt>,
    perms: Option<Vec<Perm>>,
    labels: Option<Vec<String>>,
    class_of: Vec<u32>,
    to_rep: Vec<Elt>,
    classes: Vec<ConjClass>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, {} classes)", self.n, self.classes.len())
    }
}

impl FiniteGroup for Group {
    fn order(&self) -> usize {
        self.n
    }
    #[inline]
    fn mul(&self, a: Elt, b: Elt) -> Elt {
        self.table[a as usize * self.n + b as usize]
    }
    #[inline]
    fn inv(&self, a: Elt) -> Elt {
        self.inverse[a as usize]
    }
}

impl Group {
    /// Build from any multiplication rule on {0..n}; 0 must be the identity.
    pub fn from_fn(n: usize, gens: Vec<Elt>, mul: impl Fn(Elt, Elt) -> Elt + Sync) -> Group {
        use rayon::prelude::*;
        let mut table = vec![0; n * n];
        table.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = mul(a as Elt, b as Elt);
            }
        });
        Group::from_table(n, table, gens)
    }

    fn from_table(n: usize, table: Vec<Elt>, gens: Vec<Elt>) -> Group {
        let mut inverse = vec![0; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row.iter().position(|&x| x == 0).expect("no inverse");
            inverse[a] = b as Elt;
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a as Elt;
            let mut k = 1;
            while x != 0 {
                x = table[x as usize * n + a];
                k += 1;
            }
            orders[a] = k;
        }
        let mut g = Group { n, table, inverse, orders, gens, perms: None, labels: None, class_of: Vec::new(), to_rep: Vec::new(), classes: Vec::new() };
        g.compute_classes();
        g
    }

    /// Enumerate the group generated by `gens` by closure. Elements are
    /// indexed in lexicographic order of their image lists.
    pub fn from_perms(gens: &[Perm], cap: usize) -> Result<Group> {
        if gens.is_empty() {
            return Err(Error::Invalid("empty generator list".into()));
        }
        let deg = gens[0].degree();
        for g in gens {
            if g.degree() != deg {
                return Err(Error::Degree(deg, g.degree()));
            }
        }
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let id = Perm::identity(deg);
        let mut elts = vec![id.clone()];
        seen.insert(id, ());
        let mut k = 0;
        while k < elts.len() {
            let x = elts[k].clone();
            k += 1;
            for g in gens {
                let y = x.mul(g);
                if !seen.contains_key(&y) {
                    if elts.len() >= cap {
                        return Err(Error::Overflow { cap, partial: elts.len() });
                    }
                    seen.insert(y.clone(), ());
                    elts.push(y);
                }
            }
        }
        elts.sort();
        Ok(Group::from_perm_list(elts, gens))
    }

    /// Elements must be sorted with the identity first and closed under multiplication.
    fn from_perm_list(elts: Vec<Perm>, gens: &[Perm]) -> Group {
        use rayon::prelude::*;
        let index: HashMap<&Perm, Elt> = elts.iter().enumerate().map(|(i, p)| (p, i as Elt)).collect();
        let n = elts.len();
        let mut table = vec![0; n * n];
        table.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = index[&elts[a].mul(&elts[b])];
            }
        });
        let gen_idx = gens.iter().map(|g| index[g]).collect();
        let mut g = Group::from_table(n, table, gen_idx);
        g.perms = Some(elts);
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Group {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn gens(&self) -> &[Elt] {
        &self.gens
    }

    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn perm(&self, a: Elt) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[a as usize])
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].degree())
    }

    /// Index of a permutation, if it lies in this (perm-backed) group.
    pub fn find_perm(&self, p: &Perm) -> Option<Elt> {
        let ps = self.perms.as_ref()?;
        ps.binary_search(p).ok().map(|i| i as Elt)
    }

    pub fn label(&self, a: Elt) -> String {
        if let Some(p) = &self.perms {
            return p[a as usize].to_string();
        }
        if let Some(l) = &self.labels {
            return l[a as usize].clone();
        }
        format!("#{a}")
    }

    #[inline]
    pub fn elt_order(&self, a: Elt) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: Elt, e: i64) -> Elt {
        let o = self.orders[a as usize] as i64;
        let e = e.rem_euclid(o);
        let mut x = 0;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    /// `b^-1 a b`
    #[inline]
    pub fn conj(&self, a: Elt, b: Elt) -> Elt {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn commutator(&self, a: Elt, b: Elt) -> Elt {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn product(&self, xs: &[Elt]) -> Elt {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    // ---------------------------------------------------------------- classes

    fn compute_classes(&mut self) {
        let n = self.n;
        let gens: Vec<Elt> = if self.gens.is_empty() { (0..n as Elt).collect() } else { self.gens.clone() };
        let mut class_of = vec![u32::MAX; n];
        let mut to_rep = vec![0; n];
        let mut classes = Vec::new();
        for r in 0..n as Elt {
            if class_of[r as usize] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            // BFS: from_rep[y] = t with r^t = y
            let mut members = vec![r];
            let mut from_rep: HashMap<Elt, Elt> = HashMap::new();
            from_rep.insert(r, 0);
            class_of[r as usize] = cid;
            let mut k = 0;
            while k < members.len() {
                let y = members[k];
                k += 1;
                let ty = from_rep[&y];
                for &s in &gens {
                    let z = self.conj(y, s);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = cid;
                        from_rep.insert(z, self.mul(ty, s));
                        members.push(z);
                    }
                }
            }
            for &y in &members {
                to_rep[y as usize] = self.inv(from_rep[&y]);
            }
            let centralizer: Vec<Elt> = (0..n as Elt).filter(|&g| self.mul(r, g) == self.mul(g, r)).collect();
            debug_assert_eq!(centralizer.len() * members.len(), n);
            classes.push(ConjClass { rep: r, size: members.len(), elt_order: self.orders[r as usize], centralizer });
        }
        self.class_of = class_of;
        self.to_rep = to_rep;
        self.classes = classes;
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    #[inline]
    pub fn class_of(&self, a: Elt) -> u32 {
        self.class_of[a as usize]
    }

    /// `t` with `a^t` equal to the class representative.
    #[inline]
    pub fn to_rep(&self, a: Elt) -> Elt {
        self.to_rep[a as usize]
    }

    pub fn class_elements(&self, c: u32) -> Vec<Elt> {
        (0..self.n as Elt).filter(|&x| self.class_of[x as usize] == c).collect()
    }

    pub fn centralizer(&self, a: Elt) -> Vec<Elt> {
        (0..self.n as Elt).filter(|&g| self.mul(a, g) == self.mul(g, a)).collect()
    }

    // ---------------------------------------------------------------- subgroups

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elt]) -> Vec<Elt> {
        let mut mark = vec![false; self.n];
        mark[0] = true;
        let mut elts = vec![0];
        let mut k = 0;
        while k < elts.len() {
            let x = elts[k];
            k += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !mark[y as usize] {
                    mark[y as usize] = true;
                    elts.push(y);
                }
            }
        }
        elts.sort_unstable();
        elts
    }

    pub fn subgroup_order(&self, gens: &[Elt]) -> usize {
        self.closure(gens).len()
    }

    pub fn generates(&self, gens: &[Elt]) -> bool {
        self.subgroup_order(gens) == self.n
    }

    pub fn normal_closure(&self, xs: &[Elt]) -> Vec<Elt> {
        let all_gens: Vec<Elt> = if self.gens.is_empty() { (0..self.n as Elt).collect() } else { self.gens.clone() };
        let mut gens: Vec<Elt> = xs.to_vec();
        loop {
            let h = self.closure(&gens);
            let mut member = vec![false; self.n];
            for &x in &h {
                member[x as usize] = true;
            }
            let mut grew = false;
            for &x in &gens.clone() {
                for &s in &all_gens {
                    let y = self.conj(x, s);
                    if !member[y as usize] {
                        gens.push(y);
                        member[y as usize] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }

    pub fn derived_subgroup(&self) -> Vec<Elt> {
        let gens: Vec<Elt> = if self.gens.is_empty() { (0..self.n as Elt).collect() } else { self.gens.clone() };
        let mut comms = Vec::new();
        for &a in &gens {
            for &b in &gens {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&comms)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().len() == self.n
    }

    pub fn center(&self) -> Vec<Elt> {
        let gens: Vec<Elt> = if self.gens.is_empty() { (0..self.n as Elt).collect() } else { self.gens.clone() };
        (0..self.n as Elt).filter(|&z| gens.iter().all(|&s| self.mul(z, s) == self.mul(s, z))).collect()
    }

    pub fn is_normal(&self, h: &[Elt]) -> bool {
        let mut member = vec![false; self.n];
        for &x in h {
            member[x as usize] = true;
        }
        let gens: Vec<Elt> = if self.gens.is_empty() { (0..self.n as Elt).collect() } else { self.gens.clone() };
        h.iter().all(|&x| gens.iter().all(|&s| member[self.conj(x, s) as usize]))
    }

    /// Subgroup on the given sorted, closed element set. Returns the group and
    /// the embedding (new index -> old index).
    pub fn subgroup(&self, elements: &[Elt], gens: &[Elt]) -> (Group, Vec<Elt>) {
        let mut pos = vec![u32::MAX; self.n];
        for (i, &x) in elements.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        assert_eq!(elements[0], 0, "subgroup must contain the identity first");
        let m = elements.len();
        let mut table = vec![0; m * m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                let c = pos[self.mul(a, b) as usize];
                assert!(c != u32::MAX, "element set not closed");
                table[i * m + j] = c;
            }
        }
        let new_gens = gens.iter().map(|&g| pos[g as usize]).collect();
        let mut g = Group::from_table(m, table, new_gens);
        if let Some(p) = &self.perms {
            g.perms = Some(elements.iter().map(|&x| p[x as usize].clone()).collect());
        } else if let Some(l) = &self.labels {
            g.labels = Some(elements.iter().map(|&x| l[x as usize].clone()).collect());
        }
        (g, elements.to_vec())
    }

    /// Quotient by a normal subgroup; returns the quotient and the projection.
    pub fn quotient(&self, normal: &[Elt]) -> Result<(Group, Vec<Elt>)> {
        if !self.is_normal(normal) {
            return Err(Error::Invalid("subgroup is not normal".into()));
        }
        let mut coset = vec![u32::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n as Elt {
            if coset[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &h in normal {
                coset[self.mul(h, x) as usize] = id;
            }
        }
        let m = reps.len();
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = coset[self.mul(reps[i], reps[j]) as usize];
            }
        }
        let gens = self.gens.iter().map(|&g| coset[g as usize]).collect();
        Ok((Group::from_table(m, table, gens), coset))
    }

    pub fn involutions(&self) -> usize {
        self.orders.iter().filter(|&&o| o == 2).count()
    }

    /// Induced permutation action of an element on right cosets `H x`.
    /// Cosets are numbered by least element; returns the coset table and images.
    pub fn coset_action(&self, h: &[Elt], gens: &[Elt]) -> (Vec<u32>, Vec<Perm>) {
        let mut coset = vec![u32::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n as Elt {
            if coset[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &y in h {
                coset[self.mul(y, x) as usize] = id;
            }
        }
        let perms = gens.iter().map(|&g| Perm::from_images(reps.iter().map(|&r| coset[self.mul(r, g) as usize]).collect())).collect();
        (coset, perms)
    }
}

/// Full symmetric group on n points.
pub fn symmetric(n: usize) -> Group {
    let c = Perm::from_images((1..n as u32).chain([0]).collect());
    let t = Perm::from_cycles(n, &[&[0, 1]]);
    Group::from_perms(&[c, t], usize::MAX).unwrap()
}

/// Alternating group on n >= 3 points.
pub fn alternating(n: usize) -> Group {
    let gens: Vec<Perm> = (2..n as u32).map(|k| Perm::from_cycles(n, &[&[0, 1, k]])).collect();
    Group::from_perms(&gens, usize::MAX).unwrap()
}

/// A5 with its standard generators (1 2 3 4 5), (1 2 3).
pub fn a5() -> Group {
    let g = [Perm::parse("(1 2 3 4 5)", 5).unwrap(), Perm::parse("(1 2 3)", 5).unwrap()];
    Group::from_perms(&g, usize::MAX).unwrap()
}

/// Dihedral group of order 2N acting on Z/N: x -> x+1 and x -> -x.
pub fn dihedral(n: usize) -> Group {
    let rot = Perm::from_images((0..n as u32).map(|x| (x + 1) % n as u32).collect());
    let refl = Perm::from_images((0..n as u32).map(|x| (n as u32 - x) % n as u32).collect());
    Group::from_perms(&[rot, refl], usize::MAX).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_classes() {
        let g = a5();
        assert_eq!(g.order(), 60);
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        let x = g.find_perm(&Perm::parse("(1 2 3 4 5)", 5).unwrap()).unwrap();
        assert_eq!(g.centralizer(x).len(), 5);
        assert_eq!(g.classes()[g.class_of(0) as usize].size, 1);
        for a in 0..60 {
            let r = g.classes()[g.class_of(a) as usize].rep;
            assert_eq!(g.conj(a, g.to_rep(a)), r);
            assert!(r <= a);
        }
        assert!(g.is_perfect());
        assert_eq!(g.center(), vec![0]);
    }

    #[test]
    fn quotient_and_subgroup() {
        let s4 = symmetric(4);
        let v4: Vec<Elt> = ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"].iter().map(|t| s4.find_perm(&Perm::parse(t, 4).unwrap()).unwrap()).collect();
        let v = s4.closure(&v4);
        let (q, _) = s4.quotient(&v).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_perfect());
        let (sub, emb) = s4.subgroup(&v, &v4[1..]);
        assert_eq!(sub.order(), 4);
        assert_eq!(emb.len(), 4);
    }
}

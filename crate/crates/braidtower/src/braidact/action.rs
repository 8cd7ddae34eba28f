use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nielsen::{Canon, Tuple};
use crate::permcore::{permgroup_orbits, Elt, FiniteGroup, Group, Perm};

/// Apply q_i (or its inverse) in place; `i` is 1-based.
pub fn apply_q(g: &Group, t: &mut [Elt], i: usize, inverse: bool) {
    let (a, b) = (t[i - 1], t[i]);
    if inverse {
        t[i - 1] = b;
        t[i] = g.conj(a, b);
    } else {
        t[i - 1] = g.product(&[a, b, g.inv(a)]);
        t[i] = a;
    }
}

/// Right action of a braid word; letter `i > 0` is q_i and `-i` its inverse.
pub fn braid_apply(g: &Group, word: &[i32], t: &[Elt]) -> Result<Tuple> {
    let mut out = t.to_vec();
    for &l in word {
        let i = l.unsigned_abs() as usize;
        if i == 0 || i >= t.len() {
            return Err(Error::Invalid(format!("braid letter {l} out of range for r = {}", t.len())));
        }
        apply_q(g, &mut out, i, l < 0);
    }
    Ok(out)
}

/// The braid generators as permutations of a closed set of Nielsen classes.
pub struct BraidAction {
    r: usize,
    classes: Vec<Tuple>,
    index: HashMap<Tuple, u32>,
    q: Vec<Perm>,
}

impl BraidAction {
    pub fn new(canon: &Canon, classes: Vec<Tuple>) -> Result<BraidAction> {
        let r = classes.first().map(|t| t.len()).ok_or_else(|| Error::Invalid("empty Nielsen class".into()))?;
        let index: HashMap<Tuple, u32> = classes.iter().enumerate().map(|(i, t)| (t.clone(), i as u32)).collect();
        let g = canon.group();
        let mut q = Vec::new();
        for i in 1..r {
            let img: Vec<Option<u32>> = classes
                .par_iter()
                .map(|t| {
                    let mut u = t.clone();
                    apply_q(g, &mut u, i, false);
                    index.get(&canon.canonical(&u)).copied()
                })
                .collect();
            let img: Vec<u32> = img.into_iter().collect::<Option<_>>().ok_or_else(|| Error::Certify("class set not closed under the braid action".into()))?;
            q.push(Perm::from_images(img));
        }
        Ok(BraidAction { r, classes, index, q })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Tuple] {
        &self.classes
    }

    pub fn class(&self, i: u32) -> &Tuple {
        &self.classes[i as usize]
    }

    /// Index of a canonical tuple.
    pub fn index_of(&self, t: &[Elt]) -> Option<u32> {
        self.index.get(t).copied()
    }

    /// q_i, 1-based.
    pub fn q(&self, i: usize) -> &Perm {
        &self.q[i - 1]
    }

    pub fn word(&self, w: &[i32]) -> Perm {
        let mut acc = Perm::identity(self.len());
        for &l in w {
            let p = &self.q[l.unsigned_abs() as usize - 1];
            acc = if l > 0 { acc.mul(p) } else { acc.mul(&p.inv()) };
        }
        acc
    }

    /// q_1 q_2 ... q_{r-1}
    pub fn sh(&self) -> Perm {
        self.word(&(1..self.r as i32).collect::<Vec<_>>())
    }

    pub fn gamma0(&self) -> Perm {
        self.word(&[1, 2])
    }

    pub fn gamma1(&self) -> Perm {
        self.word(&[1, 2, 1])
    }

    pub fn gamma_inf(&self) -> Perm {
        self.word(&[2])
    }

    /// Generators q1 q3^-1 and (q1 q2 q3)^2 of Q''.
    pub fn qpp_gens(&self) -> [Perm; 2] {
        [self.word(&[1, -3]), self.word(&[1, 2, 3, 1, 2, 3])]
    }

    /// Orbits of the Hurwitz monodromy group, ordered by least class.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        permgroup_orbits(self.len(), &self.q)
    }
}

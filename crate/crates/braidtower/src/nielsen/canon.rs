//! Canonical forms under inner and absolute equivalence.

use std::collections::BTreeMap;

use super::spec::ClassSpec;
use crate::error::{Error, Result};
use crate::permcore::{are_conjugate_triples, symmetric, Elt, FiniteGroup, Group, Perm};

pub type Tuple = Vec<Elt>;

/// Canonicalizer: conjugate the first entry to its class representative, then
/// minimize over the centralizer of that representative. With outer
/// automorphisms attached, the absolute form is the minimum over a transversal.
#[derive(Clone)]
pub struct Canon<'g> {
    g: &'g Group,
    /// Automorphisms as element maps, one per nontrivial coset of Inn(G).
    outer: Vec<Vec<Elt>>,
}

impl<'g> Canon<'g> {
    pub fn inner(g: &'g Group) -> Canon<'g> {
        Canon { g, outer: Vec::new() }
    }

    pub fn with_automorphisms(g: &'g Group, autos: Vec<Vec<Elt>>) -> Canon<'g> {
        let c = Canon::inner(g);
        let outer = outer_transversal(&c, autos);
        Canon { g, outer }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn is_absolute(&self) -> bool {
        !self.outer.is_empty()
    }

    /// |N'/Inn(G)| as seen by this canonicalizer.
    pub fn outer_count(&self) -> usize {
        self.outer.len() + 1
    }

    pub fn outer(&self) -> &[Vec<Elt>] {
        &self.outer
    }

    pub fn inner_form(&self, t: &[Elt]) -> Tuple {
        let g = self.g;
        let x = g.to_rep(t[0]);
        let rep = g.conj(t[0], x);
        let cent = &g.classes()[g.class_of(rep) as usize].centralizer;
        let mut best: Tuple = t.iter().map(|&a| g.conj(a, x)).collect();
        let mut cand = best.clone();
        for &z in cent {
            if z == 0 {
                continue;
            }
            let y = g.mul(x, z);
            let mut less = false;
            let mut k = 1;
            while k < t.len() {
                let v = g.conj(t[k], y);
                cand[k] = v;
                if !less {
                    if v > best[k] {
                        break;
                    }
                    if v < best[k] {
                        less = true;
                    }
                }
                k += 1;
            }
            if less && k == t.len() {
                best[1..].copy_from_slice(&cand[1..]);
            }
        }
        best
    }

    pub fn canonical(&self, t: &[Elt]) -> Tuple {
        let mut best = self.inner_form(t);
        for a in &self.outer {
            let img: Tuple = t.iter().map(|&x| a[x as usize]).collect();
            let c = self.inner_form(&img);
            if c < best {
                best = c;
            }
        }
        best
    }
}

fn outer_transversal(c: &Canon, autos: Vec<Vec<Elt>>) -> Vec<Vec<Elt>> {
    let g = c.g;
    let gens = g.gens().to_vec();
    let key = |a: &Vec<Elt>| c.inner_form(&gens.iter().map(|&s| a[s as usize]).collect::<Vec<_>>());
    let inner_key = c.inner_form(&gens);
    let mut seen = BTreeMap::new();
    seen.insert(inner_key, ());
    let mut out = Vec::new();
    for a in autos {
        let k = key(&a);
        if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(k) {
            e.insert(());
            out.push(a);
        }
    }
    out
}

/// Element map of conjugation by a permutation normalizing `g`.
pub fn automorphism_of_perm(g: &Group, f: &Perm) -> Result<Vec<Elt>> {
    let perms = g.perms().ok_or_else(|| Error::Invalid("group has no permutation representation".into()))?;
    perms.iter().map(|p| g.find_perm(&p.conj(f)).ok_or_else(|| Error::Invalid(format!("{f} does not normalize the group")))).collect()
}

/// Automorphisms induced by the group generated by `nprime` (which must normalize `g`).
pub fn automorphisms_from_generators(g: &Group, nprime: &[Perm]) -> Result<Vec<Vec<Elt>>> {
    if nprime.is_empty() {
        return Ok(Vec::new());
    }
    let gen_maps: Vec<Vec<Elt>> = nprime.iter().map(|f| automorphism_of_perm(g, f)).collect::<Result<_>>()?;
    // closure in Aut(G) mod Inn(G), tracked by inner-canonical generator images
    let c = Canon::inner(g);
    let gens = g.gens().to_vec();
    let key = |a: &Vec<Elt>| c.inner_form(&gens.iter().map(|&s| a[s as usize]).collect::<Vec<_>>());
    let id: Vec<Elt> = (0..g.order() as Elt).collect();
    let mut seen = BTreeMap::new();
    seen.insert(key(&id), ());
    let mut all = vec![id];
    let mut k = 0;
    while k < all.len() {
        let a = all[k].clone();
        k += 1;
        for m in &gen_maps {
            let b: Vec<Elt> = a.iter().map(|&x| m[x as usize]).collect();
            let kb = key(&b);
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(kb) {
                e.insert(());
                all.push(b);
            }
            if all.len() > 100_000 {
                return Err(Error::Overflow { cap: 100_000, partial: all.len() });
            }
        }
    }
    Ok(all)
}

/// Element permutations of the whole normalizer of `g` in S_n (mod Inn(G)),
/// restricted to those preserving the class multiset of `spec` when given.
pub fn normalizer_automorphisms(g: &Group, spec: Option<&ClassSpec>) -> Result<Vec<Vec<Elt>>> {
    let perms = g.perms().ok_or_else(|| Error::Invalid("absolute equivalence needs a permutation group or --nprime".into()))?;
    let n = perms[0].degree();
    let gen_perms: Vec<Perm> = g.gens().iter().map(|&s| perms[s as usize].clone()).collect();
    let transitive = crate::permcore::permgroup_orbits(n, &gen_perms).len() == 1;
    let mut conjugators: Vec<Perm> = Vec::new();
    if transitive {
        let (a, b) = generating_pair(g).ok_or_else(|| Error::Invalid("group is not 2-generated".into()))?;
        let (pa, pb) = (&perms[a as usize], &perms[b as usize]);
        let (ta, tb, tab) = (pa.cycle_type(), pb.cycle_type(), pa.mul(pb).cycle_type());
        let xs: Vec<Elt> = (0..g.order() as Elt).filter(|&x| perms[x as usize].cycle_type() == ta).collect();
        let ys: Vec<Elt> = (0..g.order() as Elt).filter(|&y| perms[y as usize].cycle_type() == tb).collect();
        for &x in &xs {
            for &y in &ys {
                if perms[g.mul(x, y) as usize].cycle_type() != tab {
                    continue;
                }
                if let Some(f) = are_conjugate_triples(&[pa.clone(), pb.clone()], &[perms[x as usize].clone(), perms[y as usize].clone()]) {
                    conjugators.push(f);
                }
            }
        }
    } else if n <= 8 {
        let s = symmetric(n);
        for f in s.perms().unwrap() {
            if gen_perms.iter().all(|p| g.find_perm(&p.conj(f)).is_some()) {
                conjugators.push(f.clone());
            }
        }
    } else {
        return Err(Error::Invalid("normalizer search needs a transitive group or degree <= 8; pass --nprime".into()));
    }
    let c = Canon::inner(g);
    let gens = g.gens().to_vec();
    let mut seen = BTreeMap::new();
    let mut autos = Vec::new();
    for f in &conjugators {
        let a = automorphism_of_perm(g, f)?;
        if let Some(spec) = spec {
            let cm = class_map(g, &a);
            if spec.map_classes(|c| cm[c as usize]) != *spec {
                continue;
            }
        }
        let key = c.inner_form(&gens.iter().map(|&s| a[s as usize]).collect::<Vec<_>>());
        if seen.insert(key, ()).is_none() {
            autos.push(a);
        }
    }
    Ok(autos)
}

/// Induced permutation of conjugacy classes.
pub fn class_map(g: &Group, a: &[Elt]) -> Vec<u32> {
    g.classes().iter().map(|c| g.class_of(a[c.rep as usize])).collect()
}

/// A pair generating `g`, preferring the stored generators.
pub fn generating_pair(g: &Group) -> Option<(Elt, Elt)> {
    let gens = g.gens();
    if gens.len() == 2 && g.generates(gens) {
        return Some((gens[0], gens[1]));
    }
    let mut reps: Vec<&crate::permcore::ConjClass> = g.classes().iter().collect();
    reps.sort_by_key(|c| std::cmp::Reverse(c.elt_order));
    for c in reps {
        for x in 0..g.order() as Elt {
            if g.generates(&[c.rep, x]) {
                return Some((c.rep, x));
            }
        }
    }
    None
}

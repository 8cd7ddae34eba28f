use rayon::prelude::*;

use super::canon::{Canon, Tuple};
use super::spec::ClassSpec;
use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup, Group};

/// Number of inner iterations `enumerate_nielsen` would perform.
pub fn iteration_estimate(g: &Group, spec: &ClassSpec) -> u128 {
    let size = |slot: &Vec<u32>| slot.iter().map(|&c| g.classes()[c as usize].size as u128).sum::<u128>();
    spec.arrangements()
        .iter()
        .map(|arr| {
            let firsts = spec.slots()[arr[0]].len() as u128;
            firsts * arr[1..arr.len() - 1].iter().map(|&i| size(&spec.slots()[i])).product::<u128>()
        })
        .sum()
}

/// Canonical representatives (sorted) of the Nielsen classes of `spec`, under
/// the equivalence carried by `canon`.
pub fn enumerate_nielsen(canon: &Canon, spec: &ClassSpec, budget: u128) -> Result<Vec<Tuple>> {
    let g = canon.group();
    let est = iteration_estimate(g, spec);
    if est > budget {
        return Err(Error::Budget { estimate: est, budget });
    }
    let r = spec.r();
    let elems: Vec<Vec<Elt>> = spec
        .slots()
        .iter()
        .map(|s| {
            let mut v: Vec<Elt> = s.iter().flat_map(|&c| g.class_elements(c)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut in_slot = vec![vec![false; g.classes().len()]; r];
    for (i, s) in spec.slots().iter().enumerate() {
        for &c in s {
            in_slot[i][c as usize] = true;
        }
    }
    // work items: (arrangement, first entry, second entry)
    let mut items = Vec::new();
    for arr in spec.arrangements() {
        for &c in &spec.slots()[arr[0]] {
            let g1 = g.classes()[c as usize].rep;
            for &g2 in &elems[arr[1]] {
                items.push((arr.clone(), g1, g2));
            }
        }
    }
    let chunks: Vec<Vec<Tuple>> = items
        .par_iter()
        .map(|(arr, g1, g2)| {
            let mut out = Vec::new();
            let mut t = vec![0; r];
            t[0] = *g1;
            t[1] = *g2;
            fill(canon, arr, &elems, &in_slot, &mut t, 2, g.mul(*g1, *g2), &mut out);
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();
    let mut all: Vec<Tuple> = chunks.into_iter().flatten().collect();
    all.par_sort_unstable();
    all.dedup();
    let keep: Vec<bool> = all.par_iter().map(|t| g.generates(t)).collect();
    Ok(all.into_iter().zip(keep).filter_map(|(t, k)| k.then_some(t)).collect())
}

#[allow(clippy::too_many_arguments)]
fn fill(canon: &Canon, arr: &[usize], elems: &[Vec<Elt>], in_slot: &[Vec<bool>], t: &mut Tuple, k: usize, prod: Elt, out: &mut Vec<Tuple>) {
    let g = canon.group();
    let r = t.len();
    if k == r - 1 {
        let last = g.inv(prod);
        if in_slot[arr[r - 1]][g.class_of(last) as usize] {
            t[r - 1] = last;
            out.push(canon.canonical(t));
        }
        return;
    }
    for &x in &elems[arr[k]] {
        t[k] = x;
        fill(canon, arr, elems, in_slot, t, k + 1, g.mul(prod, x), out);
    }
}

/// ord(g2 g3), the middle product order.
pub fn mpr(g: &Group, t: &[Elt]) -> u32 {
    g.elt_order(g.mul(t[1], t[2]))
}

use rayon::prelude::*;

use super::kappa::{khat, KappaVariant};
use crate::braidact::{BraidAction, MOrbit, Reduced};
use crate::error::{Error, Result};
use crate::nielsen::Canon;
use crate::permcore::Perm;

/// khat as a permutation of reduced classes (certified constant on Q'' orbits).
pub fn reduced_kappa(canon: &Canon, ba: &BraidAction, red: &Reduced, v: KappaVariant) -> Result<Perm> {
    let g = canon.group();
    let img: Vec<u32> = (0..red.len() as u32)
        .into_par_iter()
        .map(|r| {
            let mut out = None;
            for &x in red.members(r) {
                let k = canon.canonical(&khat(g, ba.class(x), v)?);
                let y = red.red_of(ba.index_of(&k).ok_or_else(|| Error::Certify("khat leaves the Nielsen class".into()))?);
                if *out.get_or_insert(y) != y {
                    return Err(Error::Certify("khat not constant on Q'' orbits".into()));
                }
            }
            Ok(out.unwrap())
        })
        .collect::<Result<_>>()?;
    Ok(Perm::from_images(img))
}

/// c gamma c = gamma^-1 for gamma_1 and gamma_inf.
pub fn is_reflection(c: &Perm, red: &Reduced) -> bool {
    c.mul(c).is_identity() && c.mul(&red.gamma1).mul(c) == red.gamma1.inv() && c.mul(&red.gamma_inf).mul(c) == red.gamma_inf.inv()
}

/// The conjugation over (1, oo): the first of khat_4, khat_0 that reverses gamma_1 and gamma_inf.
pub fn conjugation_over_1_inf(canon: &Canon, ba: &BraidAction, red: &Reduced) -> Result<(KappaVariant, Perm)> {
    for v in [KappaVariant::K4, KappaVariant::K0] {
        let c = reduced_kappa(canon, ba, red, v)?;
        if is_reflection(&c, red) {
            return Ok((v, c));
        }
    }
    Err(Error::Certify("no complex conjugation operator reverses gamma_1 and gamma_inf".into()))
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct RealLocusReport {
    /// local indices of real reduced classes over each interval
    pub over_1_inf: Vec<u32>,
    pub over_0_1: Vec<u32>,
    pub over_minf_0: Vec<u32>,
    /// fixed points of the khat_2 operator on the orbit (count over (-oo, 1))
    pub khat2_fixed: usize,
    pub components: usize,
}

/// Real points of one orbit's cover. `c` acts on all reduced classes.
pub fn real_locus(orbit: &MOrbit, c: &Perm, k2: &Perm) -> Result<RealLocusReport> {
    let pts = &orbit.points;
    let lc = |l: u32| c.apply(pts[l as usize]);
    let local = |r: u32| orbit.local(r);
    let fixed = |f: &dyn Fn(u32) -> Option<u32>| -> Vec<u32> { (0..pts.len() as u32).filter(|&l| f(l) == Some(l)).collect() };
    let over_1_inf = fixed(&|l| local(lc(l)));
    // c gamma_1 and c gamma_inf, applied right to left in the right action: first c then gamma
    let over_0_1 = fixed(&|l| local(lc(l)).map(|m| orbit.gamma1.apply(m)));
    let over_minf_0 = fixed(&|l| local(lc(l)).map(|m| orbit.gamma_inf.apply(m)));
    let khat2_fixed = (0..pts.len()).filter(|&l| k2.apply(pts[l]) == pts[l]).count();
    let components = real_components(orbit, &over_1_inf, &over_0_1, &over_minf_0)?;
    Ok(RealLocusReport { over_1_inf, over_0_1, over_minf_0, khat2_fixed, components })
}

/// Connected components of the real locus: arcs over the three intervals
/// joined at the points over j = 1, inf, 0 (cycles of gamma_1, gamma_inf, gamma_0).
pub fn real_components(orbit: &MOrbit, over_1_inf: &[u32], over_0_1: &[u32], over_minf_0: &[u32]) -> Result<usize> {
    let n = orbit.degree();
    let cyc_id = |p: &Perm| {
        let mut id = vec![0usize; n];
        for (k, c) in p.cycles().iter().enumerate() {
            for &x in c {
                id[x as usize] = k;
            }
        }
        (id, p.cycles().iter().map(|c| c.len()).collect::<Vec<_>>())
    };
    let (c1, l1) = cyc_id(&orbit.gamma1);
    let (ci, li) = cyc_id(&orbit.gamma_inf);
    let (c0, l0) = cyc_id(&orbit.gamma0);
    // vertex numbering: gamma_1 cycles, then gamma_inf, then gamma_0
    let (o_inf, o_0) = (l1.len(), l1.len() + li.len());
    let nv = o_0 + l0.len();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    // (vertex, side) incidences for the parity check
    let mut inc: Vec<[usize; 2]> = vec![[0, 0]; nv];
    let mut used = vec![false; nv];
    let mut join = |a: usize, b: usize, sa: usize, sb: usize, parent: &mut Vec<usize>| {
        inc[a][sa] += 1;
        inc[b][sb] += 1;
        used[a] = true;
        used[b] = true;
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    };
    for &x in over_1_inf {
        join(c1[x as usize], o_inf + ci[x as usize], 1, 0, &mut parent);
    }
    for &x in over_0_1 {
        join(o_0 + c0[x as usize], c1[x as usize], 1, 0, &mut parent);
    }
    for &x in over_minf_0 {
        join(o_inf + ci[x as usize], o_0 + c0[x as usize], 1, 0, &mut parent);
    }
    let lens: Vec<usize> = l1.iter().chain(&li).chain(&l0).copied().collect();
    for v in 0..nv {
        if !used[v] {
            continue;
        }
        let [a, b] = inc[v];
        let ok = if lens[v] % 2 == 1 { a == 1 && b == 1 } else { (a, b) == (2, 0) || (a, b) == (0, 2) };
        if !ok {
            return Err(Error::Certify(format!("real arcs at a branch point of local length {} arrive as ({a},{b})", lens[v])));
        }
    }
    let mut roots: Vec<usize> = (0..nv).filter(|&v| used[v]).map(|v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::action::BraidAction;
use super::reduced::{MOrbit, Reduced};
use crate::error::{Error, Result};
use crate::nielsen::{hm_structure, mpr, HmTag, Projection};
use crate::permcore::{Elt, FiniteGroup, Group, Perm};

#[derive(Clone, Debug, serde::Serialize)]
pub struct CuspOrbit {
    /// local indices within the orbit, in gamma_inf cycle order from the least
    pub elements: Vec<u32>,
    pub u: u32,
    pub v: usize,
    pub a: usize,
    pub hm_tag: HmTag,
}

impl CuspOrbit {
    pub fn label(&self) -> String {
        format!("O({},{};{})", self.u, self.v, self.a)
    }
}

/// Tag every class: H-M and near H-M first, then complements, the antipode of
/// the class on its q2 cycle (q2^10 on a length-20 cycle).
pub fn hm_tags(g: &Group, ba: &BraidAction, proj: Option<Projection>) -> Result<Vec<HmTag>> {
    let mut tags: Vec<HmTag> = ba.classes().par_iter().map(|t| hm_structure(g, t, proj, proj.is_some())).collect::<Result<_>>()?;
    for cyc in ba.q(2).cycles() {
        if cyc.len() % 2 != 0 {
            continue;
        }
        let half = cyc.len() / 2;
        for (k, &x) in cyc.iter().enumerate() {
            let comp = match tags[x as usize] {
                HmTag::Hm => HmTag::ComplementHm,
                HmTag::NearHm => HmTag::ComplementNearHm,
                _ => continue,
            };
            let y = cyc[(k + half) % cyc.len()];
            if tags[y as usize] == HmTag::None {
                tags[y as usize] = comp;
            }
        }
    }
    Ok(tags)
}

/// gamma_inf cycles of an orbit with (u, v; a) labels. `tags` is indexed by class.
pub fn cusp_orbits(g: &Group, ba: &BraidAction, red: &Reduced, orbit: &MOrbit, tags: Option<&[HmTag]>) -> Result<Vec<CuspOrbit>> {
    let mut cusps = Vec::new();
    for cyc in orbit.gamma_inf.cycles() {
        let mut u = None;
        let mut tag = HmTag::None;
        for &l in &cyc {
            for &x in red.members(orbit.points[l as usize]) {
                let m = mpr(g, ba.class(x));
                if *u.get_or_insert(m) != m {
                    return Err(Error::Certify("middle product order varies along a cusp".into()));
                }
                if let Some(t) = tags {
                    tag = tag.min(t[x as usize]);
                }
            }
        }
        cusps.push(CuspOrbit { v: cyc.len(), elements: cyc, u: u.unwrap(), a: 0, hm_tag: tag });
    }
    cusps.sort_by(|x, y| (x.u, x.v, x.elements[0]).cmp(&(y.u, y.v, y.elements[0])));
    let mut count: BTreeMap<(u32, usize), usize> = BTreeMap::new();
    for c in &mut cusps {
        let k = count.entry((c.u, c.v)).or_default();
        *k += 1;
        c.a = *k;
    }
    Ok(cusps)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ShIncidence {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
    /// block id per row; blocks are connected components of the nonzero pattern
    pub blocks: Vec<usize>,
}

impl ShIncidence {
    pub fn is_symmetric(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.matrix.iter().map(|r| r.iter().sum()).collect()
    }

    /// Principal submatrix on the given rows.
    pub fn submatrix(&self, rows: &[usize]) -> Vec<Vec<u32>> {
        rows.iter().map(|&i| rows.iter().map(|&j| self.matrix[i][j]).collect()).collect()
    }

    pub fn to_table(&self) -> String {
        let w = self.labels.iter().map(|l| l.len()).max().unwrap_or(1).max(3);
        let mut s = format!("{:w$}", "");
        for l in &self.labels {
            s += &format!(" {l:>w$}");
        }
        s.push('\n');
        for (l, row) in self.labels.iter().zip(&self.matrix) {
            s += &format!("{l:w$}");
            for v in row {
                s += &format!(" {v:>w$}");
            }
            s.push('\n');
        }
        s
    }
}

/// A[i][j] = |(O_i) sh ∩ O_j| for cusp orbits given as point sets of `sh`.
pub fn sh_incidence_from(cusps: &[(String, Vec<u32>)], sh: &Perm) -> ShIncidence {
    let mut owner = vec![usize::MAX; sh.degree()];
    for (i, (_, pts)) in cusps.iter().enumerate() {
        for &x in pts {
            owner[x as usize] = i;
        }
    }
    let n = cusps.len();
    let mut matrix = vec![vec![0u32; n]; n];
    for (i, (_, pts)) in cusps.iter().enumerate() {
        for &x in pts {
            matrix[i][owner[sh.apply(x) as usize]] += 1;
        }
    }
    let mut blocks: Vec<usize> = (0..n).collect();
    fn find(b: &mut [usize], x: usize) -> usize {
        if b[x] != x {
            let r = find(b, b[x]);
            b[x] = r;
        }
        b[x]
    }
    for i in 0..n {
        for j in 0..n {
            if matrix[i][j] != 0 {
                let (a, b) = (find(&mut blocks, i), find(&mut blocks, j));
                blocks[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut blocks, i)).collect();
    let mut ids = BTreeMap::new();
    let blocks = roots
        .iter()
        .map(|r| {
            let k = ids.len();
            *ids.entry(*r).or_insert(k)
        })
        .collect();
    ShIncidence { labels: cusps.iter().map(|c| c.0.clone()).collect(), matrix, blocks }
}

/// sh-incidence of the cusps of one reduced orbit.
pub fn sh_incidence(orbit: &MOrbit, cusps: &[CuspOrbit]) -> ShIncidence {
    let named: Vec<(String, Vec<u32>)> = cusps.iter().map(|c| (c.label(), c.elements.clone())).collect();
    sh_incidence_from(&named, &orbit.sh)
}

/// General r: cusps are cycles of q_v on inner classes, sh = q_1 ... q_{r-1}.
pub fn sh_incidence_general(ba: &BraidAction, v: usize) -> Result<ShIncidence> {
    if v == 0 || v >= ba.r() {
        return Err(Error::Invalid(format!("q_{v} out of range")));
    }
    let named: Vec<(String, Vec<u32>)> = ba.q(v).cycles().into_iter().enumerate().map(|(i, c)| (format!("C{}:{}", i + 1, c.len()), c)).collect();
    Ok(sh_incidence_from(&named, &ba.sh()))
}

/// Whether B = P A P^T for some permutation matrix P.
pub fn equivalent_up_to_permutation(a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let sig = |m: &[Vec<u32>], i: usize| {
        let mut r = m[i].clone();
        r.sort_unstable();
        let mut c: Vec<u32> = m.iter().map(|row| row[i]).collect();
        c.sort_unstable();
        (m[i][i], r, c)
    };
    let sa: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(k: usize, a: &[Vec<u32>], b: &[Vec<u32>], sa: &[(u32, Vec<u32>, Vec<u32>)], sb: &[(u32, Vec<u32>, Vec<u32>)], map: &mut [usize], used: &mut [bool]) -> bool {
        if k == a.len() {
            return true;
        }
        for j in 0..a.len() {
            if used[j] || sa[k] != sb[j] {
                continue;
            }
            if (0..k).all(|i| a[k][i] == b[j][map[i]] && a[i][k] == b[map[i]][j]) {
                map[k] = j;
                used[j] = true;
                if go(k + 1, a, b, sa, sb, map, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(0, a, b, &sa, &sb, &mut map, &mut used)
}

/// mu = (twist orbit length of the middle pair) / (reduced gamma_inf width) for class `x`.
/// The twist orbit can be longer than the q2 cycle of the inner class when the
/// returning tuple is conjugate by an element centralizing g1 and g4.
pub fn shortening_type(g: &Group, ba: &BraidAction, red: &Reduced, x: u32) -> Result<usize> {
    let t = ba.class(x);
    let len = q2_orbit_length(g, t[1], t[2])?.direct as usize;
    let rx = red.red_of(x);
    let width = red.gamma_inf.cycles().into_iter().find(|c| c.contains(&rx)).unwrap().len();
    if !len.is_multiple_of(width) {
        return Err(Error::Certify(format!("twist length {len} not a multiple of width {width}")));
    }
    Ok(len / width)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Q2Orbit {
    pub o: u32,
    pub predicted: u32,
    pub direct: u32,
    /// true when the length-o branch of the formula applied
    pub odd_branch: bool,
}

/// Length of the orbit of (a, b) under (a, b) -> (a b a^-1, a). The closed
/// form assumes a and b do not commute; a commuting pair is reported as a
/// certification failure.
pub fn q2_orbit_length(g: &Group, a: Elt, b: Elt) -> Result<Q2Orbit> {
    let ab = g.mul(a, b);
    let n = g.elt_order(ab);
    let central = (0..n as i64).filter(|&k| {
        let z = g.pow(ab, k);
        g.mul(z, a) == g.mul(a, z) && g.mul(z, b) == g.mul(b, z)
    });
    let o = n / central.count() as u32;
    let mut odd_branch = false;
    if o % 2 == 1 {
        let y = g.pow(g.mul(b, a), (o as i64 - 1) / 2);
        odd_branch = g.elt_order(g.mul(y, b)) == 2;
    }
    let predicted = if odd_branch { o } else { 2 * o };
    let (mut x, mut y) = (a, b);
    let mut direct = 0;
    loop {
        (x, y) = (g.product(&[x, y, g.inv(x)]), x);
        direct += 1;
        if (x, y) == (a, b) {
            break;
        }
    }
    if direct != predicted {
        return Err(Error::Certify(format!("q2 orbit formula predicts {predicted}, iteration gives {direct}")));
    }
    Ok(Q2Orbit { o, predicted, direct, odd_branch })
}

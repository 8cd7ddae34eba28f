//! j-line covers from reduced orbits: branch cycles, genus, fineness,
//! monodromy, and ramification between tower levels.

use num_bigint::BigUint;

use crate::braidact::{q2_orbit_length, BraidAction, CuspOrbit, MOrbit, Reduced};
use crate::error::{Error, Result};
use crate::nielsen::{mpr, Canon, Projection};
use crate::permcore::{Bsgs, Group, Perm};

#[derive(Clone, Debug, serde::Serialize)]
pub struct JCover {
    pub degree: usize,
    #[serde(serialize_with = "ser_perm")]
    pub gamma0: Perm,
    #[serde(serialize_with = "ser_perm")]
    pub gamma1: Perm,
    #[serde(serialize_with = "ser_perm")]
    pub gamma_inf: Perm,
    pub tr0: usize,
    pub tr1: usize,
    pub cusp_widths: Vec<usize>,
    pub genus: u64,
}

fn ser_perm<S: serde::Serializer>(p: &Perm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Branch cycles of the cover attached to an orbit, with product one certified.
pub fn branch_cycles(orbit: &MOrbit) -> Result<JCover> {
    let (g0, g1, gi) = (orbit.gamma0.clone(), orbit.gamma1.clone(), orbit.gamma_inf.clone());
    if !g0.mul(&g1).mul(&gi).is_identity() {
        return Err(Error::Certify("gamma_0 gamma_1 gamma_inf != 1".into()));
    }
    if !g0.pow(3).is_identity() || !g1.pow(2).is_identity() {
        return Err(Error::Certify("gamma_0^3 or gamma_1^2 acts nontrivially".into()));
    }
    let mut cusp_widths: Vec<usize> = gi.cycles().iter().map(|c| c.len()).collect();
    cusp_widths.sort_unstable();
    let mut c = JCover { degree: orbit.degree(), tr0: g0.fixed_points(), tr1: g1.fixed_points(), gamma0: g0, gamma1: g1, gamma_inf: gi, cusp_widths, genus: 0 };
    c.genus = genus(&c)?;
    Ok(c)
}

/// Riemann-Hurwitz: 2(N + g - 1) = 2(N - tr0)/3 + (N - tr1)/2 + sum (v - 1).
pub fn genus(c: &JCover) -> Result<u64> {
    let n = c.degree as i64;
    let (a, b) = (n - c.tr0 as i64, n - c.tr1 as i64);
    if (2 * a) % 3 != 0 || b % 2 != 0 {
        return Err(Error::Certify(format!("fixed point counts {} / {} incompatible with degree {n}", c.tr0, c.tr1)));
    }
    let rhs = 2 * a / 3 + b / 2 + c.cusp_widths.iter().map(|&v| v as i64 - 1).sum::<i64>();
    if rhs % 2 != 0 || rhs / 2 - n + 1 < 0 {
        return Err(Error::Certify(format!("non-integral or negative genus (ramification total {rhs})")));
    }
    Ok((rhs / 2 - n + 1) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fineness {
    NotBFine,
    BFine,
    Fine,
}

/// b-fine: every Q''-orbit behind the orbit has length 4; fine: also gamma_0, gamma_1 fixed-point free.
pub fn moduli_fineness(red: &Reduced, orbit: &MOrbit) -> Fineness {
    if !orbit.points.iter().all(|&p| red.members(p).len() == 4) {
        return Fineness::NotBFine;
    }
    if orbit.gamma0.fixed_points() == 0 && orbit.gamma1.fixed_points() == 0 {
        Fineness::Fine
    } else {
        Fineness::BFine
    }
}

pub fn monodromy_order(c: &JCover) -> Result<BigUint> {
    if c.degree > 512 {
        return Err(Error::Invalid(format!("degree {} above the monodromy cap 512", c.degree)));
    }
    Ok(Bsgs::new(c.degree, &[c.gamma0.clone(), c.gamma1.clone(), c.gamma_inf.clone()]).order())
}

/// Reduced class below each reduced class of `upper`, checked constant on Q'' orbits.
pub fn level_map(upper: (&BraidAction, &Reduced), lower: (&Canon, &BraidAction, &Reduced), proj: Projection) -> Result<Vec<u32>> {
    let (uba, ured) = upper;
    let (lcanon, lba, lred) = lower;
    (0..ured.len() as u32)
        .map(|r| {
            let mut img = None;
            for &x in ured.members(r) {
                let t = lcanon.canonical(&proj.apply(uba.class(x)));
                let i = lba.index_of(&t).ok_or_else(|| Error::Certify("projected tuple not in the lower Nielsen class".into()))?;
                let y = lred.red_of(i);
                if *img.get_or_insert(y) != y {
                    return Err(Error::Certify("level map not constant on Q'' orbits".into()));
                }
            }
            Ok(img.unwrap())
        })
        .collect()
}

/// Monodromy of the fiber over one lower point: the stabilizer of a block acting on it.
/// `block_of[i]` is the lower point under local point i of `upper`.
pub fn relative_monodromy_order(upper: &MOrbit, block_of: &[u32]) -> Result<BigUint> {
    let gens = [upper.gamma0.clone(), upper.gamma1.clone(), upper.gamma_inf.clone()];
    let n = upper.degree();
    // block action must be well defined
    let mut blocks: Vec<u32> = block_of.to_vec();
    blocks.sort_unstable();
    blocks.dedup();
    let bidx = |b: u32| blocks.binary_search(&b).unwrap();
    let mut image = vec![vec![usize::MAX; gens.len()]; blocks.len()];
    for x in 0..n as u32 {
        for (k, s) in gens.iter().enumerate() {
            let (b, c) = (bidx(block_of[x as usize]), bidx(block_of[s.apply(x) as usize]));
            if image[b][k] == usize::MAX {
                image[b][k] = c;
            } else if image[b][k] != c {
                return Err(Error::Certify("fibers do not form a block system".into()));
            }
        }
    }
    // transversal of the block action from block 0 by words in the generators
    let mut trans: Vec<Option<Perm>> = vec![None; blocks.len()];
    trans[0] = Some(Perm::identity(n));
    let mut queue = vec![0];
    let mut k = 0;
    while k < queue.len() {
        let b = queue[k];
        k += 1;
        for (j, s) in gens.iter().enumerate() {
            let c = image[b][j];
            if trans[c].is_none() {
                trans[c] = Some(trans[b].as_ref().unwrap().mul(s));
                queue.push(c);
            }
        }
    }
    if trans.iter().any(|t| t.is_none()) {
        return Err(Error::Invalid("block action is not transitive".into()));
    }
    let fiber: Vec<u32> = (0..n as u32).filter(|&x| bidx(block_of[x as usize]) == 0).collect();
    let pos = |x: u32| fiber.binary_search(&x).unwrap() as u32;
    let mut schreier = Vec::new();
    for b in 0..blocks.len() {
        for (j, s) in gens.iter().enumerate() {
            let c = image[b][j];
            let h = trans[b].as_ref().unwrap().mul(s).mul(&trans[c].as_ref().unwrap().inv());
            schreier.push(Perm::from_images(fiber.iter().map(|&x| pos(h.apply(x))).collect()));
        }
    }
    Ok(Bsgs::new(fiber.len(), &schreier).order())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CuspIndex {
    pub ind: usize,
    pub alpha: u32,
    pub alpha_upper: u32,
    pub beta: u32,
    pub mu: usize,
    pub mu_upper: usize,
}

fn cusp_data(g: &Group, ba: &BraidAction, red: &Reduced, orbit: &MOrbit, cusp: &CuspOrbit) -> Result<(u32, usize, u32)> {
    let x = red.members(orbit.points[cusp.elements[0] as usize])[0];
    let t = ba.class(x);
    let q = q2_orbit_length(g, t[1], t[2])?;
    let alpha = if q.odd_branch { 1 } else { 2 };
    Ok((mpr(g, t), q.direct as usize / cusp.v, alpha))
}

/// ind = v'/v, certified against alpha' beta mu / (alpha mu').
pub fn relative_cusp_index(
    upper: (&Group, &BraidAction, &Reduced, &MOrbit, &CuspOrbit),
    lower: (&Group, &BraidAction, &Reduced, &MOrbit, &CuspOrbit),
    map: &[u32],
) -> Result<CuspIndex> {
    let (ug, uba, ured, uorb, ucusp) = upper;
    let (lg, lba, lred, lorb, lcusp) = lower;
    let below = map[uorb.points[ucusp.elements[0] as usize] as usize];
    if !lcusp.elements.iter().any(|&l| lorb.points[l as usize] == below) {
        return Err(Error::Invalid(format!("{} does not lie over {}", ucusp.label(), lcusp.label())));
    }
    let (u1, mu1, a1) = cusp_data(ug, uba, ured, uorb, ucusp)?;
    let (u0, mu0, a0) = cusp_data(lg, lba, lred, lorb, lcusp)?;
    if u1 % u0 != 0 || ucusp.v % lcusp.v != 0 {
        return Err(Error::Certify("cusp data not divisible".into()));
    }
    let beta = u1 / u0;
    let num = a1 as usize * beta as usize * mu0;
    let den = a0 as usize * mu1;
    let ind = ucusp.v / lcusp.v;
    if !num.is_multiple_of(den) || num / den != ind {
        return Err(Error::Certify(format!("index factorization {num}/{den} disagrees with width ratio {ind}")));
    }
    Ok(CuspIndex { ind, alpha: a0, alpha_upper: a1, beta, mu: mu0, mu_upper: mu1 })
}

use super::action::BraidAction;
use crate::error::{Error, Result};
use crate::permcore::{permgroup_orbits, Perm};

/// Classes modulo Q'' with the induced action of gamma_0, gamma_1, gamma_inf and sh.
pub struct Reduced {
    red_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    pub gamma0: Perm,
    pub gamma1: Perm,
    pub gamma_inf: Perm,
    pub sh: Perm,
}

impl Reduced {
    pub fn new(ba: &BraidAction) -> Result<Reduced> {
        if ba.r() != 4 {
            return Err(Error::Invalid("reduced classes are defined for r = 4".into()));
        }
        let z = ba.word(&[1, -3, 1, -3]);
        if !z.is_identity() {
            return Err(Error::Certify("(q1 q3^-1)^2 acts nontrivially on inner classes".into()));
        }
        let members = permgroup_orbits(ba.len(), &ba.qpp_gens());
        let mut red_of = vec![0; ba.len()];
        for (i, m) in members.iter().enumerate() {
            for &x in m {
                red_of[x as usize] = i as u32;
            }
        }
        let induce = |p: Perm, name: &str| -> Result<Perm> {
            let img = members
                .iter()
                .map(|m| {
                    let y = red_of[p.apply(m[0]) as usize];
                    if m.iter().all(|&x| red_of[p.apply(x) as usize] == y) {
                        Ok(y)
                    } else {
                        Err(Error::Certify(format!("{name} is not well defined on reduced classes")))
                    }
                })
                .collect::<Result<Vec<u32>>>()?;
            Ok(Perm::from_images(img))
        };
        let gamma0 = induce(ba.gamma0(), "gamma_0")?;
        let gamma1 = induce(ba.gamma1(), "gamma_1")?;
        let gamma_inf = induce(ba.gamma_inf(), "gamma_inf")?;
        let sh = induce(ba.sh(), "sh")?;
        Ok(Reduced { red_of, members, gamma0, gamma1, gamma_inf, sh })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Reduced class of an inner (or absolute) class index.
    pub fn red_of(&self, x: u32) -> u32 {
        self.red_of[x as usize]
    }

    /// Q''-orbit of classes behind a reduced class.
    pub fn members(&self, r: u32) -> &[u32] {
        &self.members[r as usize]
    }

    pub fn qpp_orbit_sizes(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.len()).collect()
    }
}

/// An orbit of the reduced mapping class group with local branch cycles.
#[derive(Clone, Debug)]
pub struct MOrbit {
    /// reduced class indices, sorted; local index i refers to points[i]
    pub points: Vec<u32>,
    pub gamma0: Perm,
    pub gamma1: Perm,
    pub gamma_inf: Perm,
    pub sh: Perm,
}

impl MOrbit {
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn local(&self, reduced: u32) -> Option<u32> {
        self.points.binary_search(&reduced).ok().map(|i| i as u32)
    }
}

fn restrict(p: &Perm, points: &[u32]) -> Perm {
    Perm::from_images(points.iter().map(|&x| points.binary_search(&p.apply(x)).unwrap() as u32).collect())
}

/// Orbits of <gamma_inf, sh> (equivalently of gamma_0, gamma_1) on reduced classes.
pub fn mbar4_orbits(red: &Reduced) -> Vec<MOrbit> {
    permgroup_orbits(red.len(), &[red.gamma_inf.clone(), red.sh.clone()])
        .into_iter()
        .map(|points| MOrbit {
            gamma0: restrict(&red.gamma0, &points),
            gamma1: restrict(&red.gamma1, &points),
            gamma_inf: restrict(&red.gamma_inf, &points),
            sh: restrict(&red.sh, &points),
            points,
        })
        .collect()
}

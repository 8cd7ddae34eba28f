//! Group and class-list strings, and the loaded objects they denote.

use std::fmt;

use anyhow::{anyhow, bail, Context};
use braidtower::grouptower::g1::proj;
use braidtower::grouptower::G1;
use braidtower::nielsen::{ClassSpec, Projection};
use braidtower::permcore::{alternating, dihedral, symmetric};
use braidtower::{Elt, FiniteGroup, Group, Perm};

/// Closure cap for groups given by generators; the multiplication table is quadratic in the order.
pub const GENERATED_GROUP_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Alternating(usize),
    Symmetric(usize),
    Dihedral(usize),
    G1A5,
    /// G1(A5) pulled back to the copy of A4 fixing 5.
    G1A5OverA4,
    Generators(Vec<Perm>),
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn max_point(cycles: &str) -> usize {
    cycles.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(1)
}

impl GroupSpec {
    pub fn parse(s: &str) -> anyhow::Result<GroupSpec> {
        let s = s.trim();
        let number = |rest: &str| rest.parse::<usize>().ok().filter(|&n| n >= 1);
        match s {
            "G1A5" => return Ok(GroupSpec::G1A5),
            "G1A5|A4" => return Ok(GroupSpec::G1A5OverA4),
            _ => {}
        }
        if let Some(n) = s.strip_prefix('A').and_then(number) {
            return Ok(GroupSpec::Alternating(n));
        }
        if let Some(n) = s.strip_prefix('S').and_then(number) {
            return Ok(GroupSpec::Symmetric(n));
        }
        if let Some(n) = s.strip_prefix('D').and_then(number) {
            if n < 3 {
                bail!("dihedral group D{n}: need N >= 3");
            }
            return Ok(GroupSpec::Dihedral(n));
        }
        if !s.starts_with('(') {
            bail!("unknown group `{s}` (expected An, Sn, Dn, G1A5, G1A5|A4 or generators like \"(1 2 3),(3 4 5)\")");
        }
        let parts = split_top_level(s);
        let n = parts.iter().map(|p| max_point(p)).max().unwrap_or(1);
        let gens = parts.iter().map(|p| Perm::parse(p, n).with_context(|| format!("generator `{p}`"))).collect::<anyhow::Result<Vec<_>>>()?;
        Ok(GroupSpec::Generators(gens))
    }

    pub fn load(&self) -> anyhow::Result<Loaded> {
        let plain = |g: Group| Loaded { own: Some(g), g1: None, lower: None, map: Vec::new(), via: None };
        Ok(match self {
            GroupSpec::Alternating(n) => plain(alternating(*n)),
            GroupSpec::Symmetric(n) => plain(symmetric(*n)),
            GroupSpec::Dihedral(n) => plain(dihedral(*n)),
            GroupSpec::Generators(gens) => plain(Group::from_perms(gens, GENERATED_GROUP_CAP)?),
            GroupSpec::G1A5 => {
                let g1 = G1::build()?;
                let map = (0..g1.group.order() as Elt).map(proj).collect();
                Loaded { own: None, lower: Some(g1.a5().clone()), g1: Some(g1), map, via: None }
            }
            GroupSpec::G1A5OverA4 => {
                let g1 = G1::build()?;
                let a5 = g1.a5();
                let find = |c: &str| a5.find_perm(&Perm::parse(c, 5).expect("fixed cycle")).expect("3-cycle in A5");
                let gens = [find("(1 2 3)"), find("(2 3 4)")];
                let (a4, inc) = a5.subgroup(&a5.closure(&gens), &gens);
                let (g, via) = g1.pullback(&gens)?;
                let map = via.iter().map(|&x| inc.iter().position(|&y| y == proj(x)).expect("pullback lies over A4") as Elt).collect();
                Loaded { own: Some(g), lower: Some(a4), g1: Some(g1), map, via: Some(via) }
            }
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::G1A5 => write!(f, "G1A5"),
            GroupSpec::G1A5OverA4 => write!(f, "G1A5|A4"),
            GroupSpec::Generators(gens) => {
                let s: Vec<String> = gens.iter().map(|p| if p.is_identity() { "()".into() } else { p.to_string() }).collect();
                write!(f, "{}", s.join(","))
            }
        }
    }
}

/// The group a job runs in, with the projection to the level below for tower groups.
pub struct Loaded {
    own: Option<Group>,
    pub g1: Option<G1>,
    /// level below (A5 or A4) for tower groups
    pub lower: Option<Group>,
    map: Vec<Elt>,
    /// inclusion into G1 for pulled-back groups
    pub via: Option<Vec<Elt>>,
}

impl Loaded {
    pub fn group(&self) -> &Group {
        self.own.as_ref().or(self.g1.as_ref().map(|g| &g.group)).expect("a group is loaded")
    }

    pub fn projection(&self) -> Option<Projection<'_>> {
        self.lower.as_ref().map(|lower| Projection { lower, map: &self.map })
    }

    /// The permutation group in which class names are read.
    fn naming_group(&self) -> &Group {
        self.lower.as_ref().unwrap_or_else(|| self.group())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassToken {
    /// all classes of k-cycles
    Cycle(usize),
    /// all classes of involutions
    Involution,
    /// the class of one element
    Element(Perm),
}

impl fmt::Display for ClassToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassToken::Cycle(k) => write!(f, "{k}cyc"),
            ClassToken::Involution => write!(f, "inv"),
            ClassToken::Element(p) => write!(f, "{p}"),
        }
    }
}

/// An ordered multiset of class tokens, one per branch point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassList(pub Vec<ClassToken>);

impl ClassList {
    pub fn parse(s: &str) -> anyhow::Result<ClassList> {
        let mut out = Vec::new();
        for part in split_top_level(s.trim()) {
            let (body, mult) = match part.rsplit_once('*') {
                Some((b, m)) => (b.trim(), m.trim().parse::<usize>().map_err(|_| anyhow!("bad multiplicity in `{part}`"))?),
                None => (part, 1),
            };
            if mult == 0 {
                bail!("zero multiplicity in `{part}`");
            }
            let tok = if body == "inv" {
                ClassToken::Involution
            } else if let Some(k) = body.strip_suffix("cyc") {
                ClassToken::Cycle(k.parse().ok().filter(|&k: &usize| k >= 2).ok_or_else(|| anyhow!("bad cycle length in `{body}`"))?)
            } else if body.starts_with('(') {
                ClassToken::Element(Perm::parse(body, max_point(body)).with_context(|| format!("class representative `{body}`"))?)
            } else {
                bail!("unknown class token `{body}` (expected kcyc, inv or a cycle string)");
            };
            out.extend(std::iter::repeat_n(tok, mult));
        }
        if out.len() < 2 {
            bail!("need at least two branch cycles, got {}", out.len());
        }
        Ok(ClassList(out))
    }

    /// Class slots in the loaded group. Names are read in the permutation
    /// group (the level below, for tower groups); over a lower class a tower
    /// slot takes the lifting classes of least element order.
    pub fn to_spec(&self, lg: &Loaded) -> anyhow::Result<ClassSpec> {
        let named = lg.naming_group();
        let degree = named.degree().ok_or_else(|| anyhow!("group has no permutation representation"))?;
        let slots = self
            .0
            .iter()
            .map(|tok| -> anyhow::Result<Vec<u32>> {
                let lower: Vec<u32> = match tok {
                    ClassToken::Element(p) => {
                        if p.degree() > degree {
                            bail!("{p} moves points beyond degree {degree}");
                        }
                        let p = Perm::from_images((0..degree as u32).map(|x| if (x as usize) < p.degree() { p.apply(x) } else { x }).collect());
                        vec![named.class_of(named.find_perm(&p).ok_or_else(|| anyhow!("{p} is not in the group"))?)]
                    }
                    _ => (0..named.classes().len() as u32)
                        .filter(|&c| {
                            let rep = named.perm(named.classes()[c as usize].rep).expect("permutation group");
                            let ty: Vec<usize> = rep.cycle_type().into_iter().filter(|&l| l > 1).collect();
                            match tok {
                                ClassToken::Cycle(k) => ty == [*k],
                                _ => rep.order() == 2,
                            }
                        })
                        .collect(),
                };
                if lower.is_empty() {
                    bail!("no class of the group matches `{tok}`");
                }
                Ok(match lg.projection() {
                    None => lower,
                    Some(p) => lift_classes(lg.group(), &p, &lower),
                })
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(ClassSpec::from_slots(slots)?)
    }
}

fn lift_classes(g: &Group, p: &Projection, lower: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for &c in lower {
        let over: Vec<u32> = (0..g.classes().len() as u32).filter(|&k| p.lower.class_of(p.map[g.classes()[k as usize].rep as usize]) == c).collect();
        let least = over.iter().map(|&k| g.classes()[k as usize].elt_order).min();
        out.extend(over.into_iter().filter(|&k| Some(g.classes()[k as usize].elt_order) == least));
    }
    out.sort_unstable();
    out
}

impl fmt::Display for ClassList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let j = (i..self.0.len()).find(|&j| self.0[j] != self.0[i]).unwrap_or(self.0.len());
            parts.push(if j - i > 1 { format!("{}*{}", self.0[i], j - i) } else { self.0[i].to_string() });
            i = j;
        }
        write!(f, "{}", parts.join(","))
    }
}

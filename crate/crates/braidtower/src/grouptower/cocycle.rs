//! A nontrivial class in H^2(A5, M), found by linear algebra over GF(2).
//!
//! Unknowns are the values c(g, s) for s in the two generators. Values on all
//! of A5 x A5 follow from c(g, hs) = c(g,h)^s + c(gh,s) + c(h,s) along a BFS
//! spanning tree of the Cayley graph; the remaining Cayley edges give the
//! constraints. Gauge: c(g, s) = 0 whenever g -> gs is a tree edge.

use std::path::Path;

use sha2::{Digest, Sha256};

use super::gf2::{self, Echelon, Insert};
use super::module_m::{MVec, ModuleM};
use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup};

const FW: usize = 10; // form words: up to 640 unknown bits
type Form = [u64; FW];
type MForm = [Form; 5];

const ZF: Form = [0; FW];
const ZM: MForm = [ZF; 5];

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct H2Report {
    pub unknowns: usize,
    pub gauge_fixed: usize,
    pub equations: usize,
    pub dim_gauged_cocycles: usize,
    pub dim_z1: usize,
    pub dim_h2: usize,
    /// Rank of f -> df on normalized cochains f (f(1) = 0).
    pub normalized_coboundary_dim: usize,
}

#[derive(Clone)]
pub struct Cocycle2 {
    /// table[g * 60 + h] = c(g, h)
    pub table: Vec<MVec>,
    pub report: H2Report,
}

impl Cocycle2 {
    #[inline]
    pub fn get(&self, g: Elt, h: Elt) -> MVec {
        self.table[g as usize * 60 + h as usize]
    }
}

fn xor_f(a: &mut Form, b: &Form) {
    for i in 0..FW {
        a[i] ^= b[i];
    }
}

fn xor_m(a: &mut MForm, b: &MForm) {
    for k in 0..5 {
        xor_f(&mut a[k], &b[k]);
    }
}

/// Right action of a coset permutation on a vector of linear forms.
fn act_form(m: &MForm, p: &[u8; 6]) -> MForm {
    let mut y = [ZF; 6];
    for i in 1..6 {
        y[p[i] as usize] = m[i - 1];
    }
    let mut out = ZM;
    for i in 1..6 {
        out[i - 1] = y[i];
        xor_f(&mut out[i - 1], &y[0]);
    }
    out
}

fn eval(f: &MForm, x: &[u64]) -> MVec {
    let mut m = 0;
    for k in 0..5 {
        let par = f[k].iter().zip(x).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1;
        m |= (par as u8) << k;
    }
    m
}

struct Tree {
    gens: [Elt; 2],
    order: Vec<Elt>,
    parent: Vec<Option<(Elt, usize)>>,
}

fn cayley_tree(m: &ModuleM) -> Tree {
    let g = &m.a5;
    let gens = [g.gens()[0], g.gens()[1]];
    let mut parent = vec![None; 60];
    let mut seen = [false; 60];
    seen[0] = true;
    let mut order = vec![0];
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        k += 1;
        for (s, &gs) in gens.iter().enumerate() {
            let y = g.mul(x, gs);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = Some((x, s));
                order.push(y);
            }
        }
    }
    assert_eq!(order.len(), 60);
    Tree { gens, order, parent }
}

/// f defined from f(a), f(b) along the tree so that df vanishes on tree edges.
fn propagate(m: &ModuleM, t: &Tree, fa: MVec, fb: MVec) -> [MVec; 60] {
    let mut f = [0u8; 60];
    let fs = [fa, fb];
    for &h in &t.order[1..] {
        let (p, s) = t.parent[h as usize].unwrap();
        f[h as usize] = if p == 0 { fs[s] } else { m.act(f[p as usize], t.gens[s]) ^ fs[s] };
    }
    f
}

pub fn solve_h2(m: &ModuleM) -> Result<Cocycle2> {
    let g = &m.a5;
    let t = cayley_tree(m);
    let is_tree = |x: Elt, s: usize| t.parent[g.mul(x, t.gens[s]) as usize] == Some((x, s));

    // unknown bit blocks
    let mut var = vec![[usize::MAX; 2]; 60];
    let mut nvars = 0;
    for x in 0..60u32 {
        for s in 0..2 {
            if !is_tree(x, s) {
                var[x as usize][s] = nvars;
                nvars += 5;
            }
        }
    }
    assert!(nvars <= FW * 64);
    let unk = |x: Elt, s: usize| -> MForm {
        let mut f = ZM;
        let v = var[x as usize][s];
        if v != usize::MAX {
            for k in 0..5 {
                gf2::flip(&mut f[k], v + k);
            }
        }
        f
    };

    // c_ext[g][h] as forms
    let mut cext = vec![ZM; 3600];
    for &h in &t.order[1..] {
        let (p, s) = t.parent[h as usize].unwrap();
        for x in 0..60u32 {
            let mut f = act_form(&cext[x as usize * 60 + p as usize], &m.coset_perm[t.gens[s] as usize]);
            xor_m(&mut f, &unk(g.mul(x, p), s));
            xor_m(&mut f, &unk(p, s));
            cext[x as usize * 60 + h as usize] = f;
        }
    }

    let w = gf2::words(nvars);
    let mut ech = Echelon::new(nvars);
    let mut equations = 0;
    for hp in 0..60u32 {
        for s in 0..2 {
            let h = g.mul(hp, t.gens[s]);
            if t.parent[h as usize] == Some((hp, s)) {
                continue;
            }
            for x in 0..60u32 {
                let mut f = cext[x as usize * 60 + h as usize];
                xor_m(&mut f, &act_form(&cext[x as usize * 60 + hp as usize], &m.coset_perm[t.gens[s] as usize]));
                xor_m(&mut f, &unk(g.mul(x, hp), s));
                xor_m(&mut f, &unk(hp, s));
                for row in f.iter() {
                    equations += 1;
                    ech.insert(row[..w].to_vec());
                }
            }
        }
    }
    let null = ech.nullspace();

    // crossed homomorphisms
    let mut z1 = 0usize;
    for fa in 0..32u8 {
        for fb in 0..32u8 {
            let f = propagate(m, &t, fa, fb);
            let ok = (0..60u32).all(|x| (0..2).all(|s| m.act(f[x as usize], t.gens[s]) ^ f[t.gens[s] as usize] ^ f[g.mul(x, t.gens[s]) as usize] == 0));
            if ok {
                z1 += 1;
            }
        }
    }
    let dim_z1 = z1.trailing_zeros() as usize;
    assert_eq!(1usize << dim_z1, z1);

    // gauge coboundaries
    let mut cob = Echelon::new(nvars);
    for i in 0..10 {
        let (fa, fb) = if i < 5 { (1u8 << i, 0) } else { (0, 1u8 << (i - 5)) };
        let f = propagate(m, &t, fa, fb);
        let mut v = vec![0u64; w];
        for x in 0..60u32 {
            for s in 0..2 {
                let d = m.act(f[x as usize], t.gens[s]) ^ f[t.gens[s] as usize] ^ f[g.mul(x, t.gens[s]) as usize];
                let b = var[x as usize][s];
                if b == usize::MAX {
                    if d != 0 {
                        return Err(Error::Certify("gauge coboundary nonzero on a tree edge".into()));
                    }
                    continue;
                }
                for k in 0..5 {
                    if d >> k & 1 == 1 {
                        gf2::flip(&mut v, b + k);
                    }
                }
            }
        }
        cob.insert(v);
    }
    if cob.rank() != 10 - dim_z1 {
        return Err(Error::Certify(format!("gauge coboundary rank {} != 10 - dim Z1 ({})", cob.rank(), dim_z1)));
    }
    let dim_h2 = null.len() - cob.rank();
    let pick = null.iter().find(|v| matches!(cob.clone().insert((*v).clone()), Insert::Independent)).ok_or_else(|| Error::Certify("H^2(A5, M) vanished".into()))?;
    let mut x = pick.clone();
    x.resize(FW, 0);
    let table: Vec<MVec> = cext.iter().map(|f| eval(f, &x)).collect();
    let mut c =
        Cocycle2 { table, report: H2Report { unknowns: 600, gauge_fixed: 600 - nvars, equations, dim_gauged_cocycles: null.len(), dim_z1, dim_h2, normalized_coboundary_dim: 0 } };
    verify_cocycle(m, &c)?;
    let (cob_dim, is_cob) = coboundary_test(m, &c);
    if is_cob {
        return Err(Error::Certify("chosen cocycle is a coboundary".into()));
    }
    c.report.normalized_coboundary_dim = cob_dim;
    Ok(c)
}

/// Cocycle identity on all triples, plus normalization.
pub fn verify_cocycle(m: &ModuleM, c: &Cocycle2) -> Result<()> {
    let g = &m.a5;
    for a in 0..60u32 {
        if c.get(a, 0) != 0 || c.get(0, a) != 0 {
            return Err(Error::Certify("cocycle not normalized".into()));
        }
    }
    for a in 0..60u32 {
        for b in 0..60u32 {
            let ab = g.mul(a, b);
            let cab = c.get(a, b);
            for d in 0..60u32 {
                let lhs = m.act(cab, d) ^ c.get(ab, d);
                let rhs = c.get(b, d) ^ c.get(a, g.mul(b, d));
                if lhs != rhs {
                    return Err(Error::Certify(format!("cocycle identity fails at ({a},{b},{d})")));
                }
            }
        }
    }
    Ok(())
}

/// Returns (rank of d on normalized 1-cochains, whether c is a coboundary).
pub fn coboundary_test(m: &ModuleM, c: &Cocycle2) -> (usize, bool) {
    let g = &m.a5;
    let n = 59 * 5;
    let fvar = |x: Elt| -> MForm {
        let mut f = ZM;
        if x != 0 {
            for k in 0..5 {
                gf2::flip(&mut f[k], (x as usize - 1) * 5 + k);
            }
        }
        f
    };
    let w = gf2::words(n + 1);
    let mut hom = Echelon::new(n);
    let mut aug = Echelon::new(n);
    let mut consistent = true;
    for a in 0..60u32 {
        for b in 0..60u32 {
            let mut f = act_form(&fvar(a), &m.coset_perm[b as usize]);
            xor_m(&mut f, &fvar(b));
            xor_m(&mut f, &fvar(g.mul(a, b)));
            let rhs = c.get(a, b);
            for k in 0..5 {
                let mut row = f[k][..w].to_vec();
                hom.insert(row.clone());
                if rhs >> k & 1 == 1 {
                    gf2::flip(&mut row, n);
                }
                if let Insert::Inconsistent = aug.insert(row) {
                    consistent = false;
                }
            }
        }
    }
    (hom.rank(), consistent)
}

/// A coboundary df built from an arbitrary 1-cochain; used to test `verify_cocycle`.
pub fn coboundary_of(m: &ModuleM, f: &[MVec; 60]) -> Cocycle2 {
    let g = &m.a5;
    let mut table = vec![0; 3600];
    for a in 0..60u32 {
        for b in 0..60u32 {
            table[a as usize * 60 + b as usize] = m.act(f[a as usize], b) ^ f[b as usize] ^ f[g.mul(a, b) as usize];
        }
    }
    Cocycle2 { table, report: H2Report { unknowns: 0, gauge_fixed: 0, equations: 0, dim_gauged_cocycles: 0, dim_z1: 0, dim_h2: 0, normalized_coboundary_dim: 0 } }
}

const MAGIC: &[u8; 8] = b"BTCOC\x00\x01\n";

/// Load the cocycle from `path` when present and valid, otherwise solve and write it.
pub fn load_or_solve(m: &ModuleM, path: Option<&Path>) -> Result<Cocycle2> {
    if let Some(p) = path {
        if let Ok(bytes) = std::fs::read(p) {
            if let Some(c) = decode(&bytes) {
                if verify_cocycle(m, &c).is_ok() && !coboundary_test(m, &c).1 {
                    return Ok(c);
                }
            }
        }
    }
    let c = solve_h2(m)?;
    if let Some(p) = path {
        let _ = std::fs::write(p, encode(&c));
    }
    Ok(c)
}

fn encode(c: &Cocycle2) -> Vec<u8> {
    let r = &c.report;
    let mut body = Vec::new();
    for v in [r.unknowns, r.gauge_fixed, r.equations, r.dim_gauged_cocycles, r.dim_z1, r.dim_h2, r.normalized_coboundary_dim] {
        body.extend_from_slice(&(v as u32).to_le_bytes());
    }
    body.extend_from_slice(&c.table);
    let mut out = MAGIC.to_vec();
    out.extend_from_slice(&Sha256::digest(&body));
    out.extend_from_slice(&body);
    out
}

fn decode(bytes: &[u8]) -> Option<Cocycle2> {
    if bytes.len() != 8 + 32 + 28 + 3600 || &bytes[..8] != MAGIC {
        return None;
    }
    let body = &bytes[40..];
    if Sha256::digest(body).as_slice() != &bytes[8..40] {
        return None;
    }
    let u = |i: usize| u32::from_le_bytes(body[4 * i..4 * i + 4].try_into().unwrap()) as usize;
    let table = body[28..].to_vec();
    if table.iter().any(|&x| x >= 32) {
        return None;
    }
    Some(Cocycle2 {
        table,
        report: H2Report { unknowns: u(0), gauge_fixed: u(1), equations: u(2), dim_gauged_cocycles: u(3), dim_z1: u(4), dim_h2: u(5), normalized_coboundary_dim: u(6) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h2_is_one_dimensional() {
        let m = ModuleM::build();
        let c = solve_h2(&m).unwrap();
        assert_eq!(c.report.dim_h2, 1);
        assert_eq!(c.report.gauge_fixed, 295);
        assert_eq!(c.report.equations, 18300);
        // H^1(A5, M) has dimension 1 and M has no fixed vectors: Z^1 = 5 + 1
        assert_eq!(c.report.dim_z1, 6);
        assert_eq!(c.report.normalized_coboundary_dim, 295 - c.report.dim_z1);
    }

    #[test]
    fn coboundaries_pass_identity() {
        let m = ModuleM::build();
        let mut f = [0u8; 60];
        for (i, x) in f.iter_mut().enumerate().skip(1) {
            *x = ((i * 7 + 3) % 32) as u8;
        }
        let d = coboundary_of(&m, &f);
        verify_cocycle(&m, &d).unwrap();
        assert!(coboundary_test(&m, &d).1);
    }

    #[test]
    fn cache_round_trip() {
        let m = ModuleM::build();
        let dir = std::env::temp_dir().join(format!("bt-cocycle-{}", std::process::id()));
        let c1 = load_or_solve(&m, Some(&dir)).unwrap();
        let c2 = load_or_solve(&m, Some(&dir)).unwrap();
        assert_eq!(c1.table, c2.table);
        assert_eq!(c1.report, c2.report);
        let _ = std::fs::remove_file(&dir);
    }
}

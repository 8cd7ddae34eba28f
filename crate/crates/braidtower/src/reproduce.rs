//! Golden-value suites: each runs a full pipeline and compares against
//! embedded expectations, every one labelled with where the value comes from.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::braidact::*;
use crate::error::{parse_err, Error, Result};
use crate::grouptower::{g1::proj, spin_sep_rep, tower_arith, G1};
use crate::jline::*;
use crate::liftinv::{obstruction_report, orbit_invariants, Embedding};
use crate::nielsen::*;
use crate::permcore::{a5, Elt, FiniteGroup, Group, Perm};
use crate::realpts::*;
use crate::spincover::order_of_lift;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Level0,
    Level1,
    Dihedral,
    Obstruction,
    Tower,
    A4Tower,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Level0, Suite::Level1, Suite::Dihedral, Suite::Obstruction, Suite::Tower, Suite::A4Tower];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Level0 => "level0",
            Suite::Level1 => "level1",
            Suite::Dihedral => "dihedral",
            Suite::Obstruction => "obstruction",
            Suite::Tower => "tower",
            Suite::A4Tower => "a4tower",
        }
    }

    pub fn is_stretch(self) -> bool {
        self == Suite::A4Tower
    }

    pub fn run(self) -> Result<SuiteReport> {
        let mut r = Recorder::new(self);
        match self {
            Suite::Level0 => level0(&mut r)?,
            Suite::Level1 => level1(&mut r)?,
            Suite::Dihedral => dihedral(&mut r)?,
            Suite::Obstruction => obstruction(&mut r)?,
            Suite::Tower => tower(&mut r),
            Suite::A4Tower => a4tower(&mut r)?,
        }
        Ok(r.finish())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| parse_err(s, "unknown suite (level0, level1, dihedral, obstruction, tower, a4tower)"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub citation: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub stretch: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}{}\n", self.suite.as_str(), if self.stretch { " (stretch)" } else { "" });
        for c in &self.checks {
            s += &format!("  [{}] {}: {}\n", if c.pass { "ok" } else { "FAIL" }, c.name, c.computed);
            if !c.pass {
                s += &format!("        expected {} ({})\n", c.expected, c.citation);
            }
        }
        s += &format!("{} {}/{} checks\n", if self.passed() { "PASS" } else { "FAIL" }, self.checks.iter().filter(|c| c.pass).count(), self.checks.len());
        s
    }
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(suite: Suite) -> Recorder {
        Recorder { suite, checks: Vec::new() }
    }

    fn eq<T: Debug + PartialEq>(&mut self, name: &str, citation: &'static str, expected: T, computed: T) {
        let pass = expected == computed;
        self.checks.push(Check { name: name.into(), citation, expected: format!("{expected:?}"), computed: format!("{computed:?}"), pass });
    }

    fn holds(&mut self, name: &str, citation: &'static str, ok: bool) {
        self.eq(name, citation, true, ok);
    }

    fn finish(self) -> SuiteReport {
        SuiteReport { suite: self.suite, stretch: self.suite.is_stretch(), checks: self.checks }
    }
}

fn elt(g: &Group, cycles: &str) -> Result<Elt> {
    let n = g.degree().ok_or_else(|| Error::Invalid("group has no permutation representation".into()))?;
    g.find_perm(&Perm::parse(cycles, n)?).ok_or_else(|| Error::Invalid(format!("{cycles} not in the group")))
}

/// Nielsen class with its braid action, reduced classes and M4-bar orbits.
pub struct Level<'g> {
    pub canon: Canon<'g>,
    pub ba: BraidAction,
    pub red: Reduced,
    pub orbits: Vec<MOrbit>,
}

impl<'g> Level<'g> {
    pub fn build(canon: Canon<'g>, spec: &ClassSpec) -> Result<Level<'g>> {
        let ni = enumerate_nielsen(&canon, spec, u128::MAX)?;
        let ba = BraidAction::new(&canon, ni)?;
        let red = Reduced::new(&ba)?;
        let orbits = mbar4_orbits(&red);
        Ok(Level { canon, ba, red, orbits })
    }

    fn braid_orbit_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.ba.orbits().iter().map(|o| o.len()).collect();
        v.sort_unstable();
        v
    }

    /// Index of the M4-bar orbit containing inner class `x`.
    pub fn orbit_of(&self, x: u32) -> usize {
        let r = self.red.red_of(x);
        self.orbits.iter().position(|o| o.local(r).is_some()).expect("every reduced class lies in an orbit")
    }
}

fn a5_3cycles(g: &Group) -> Result<ClassSpec> {
    ClassSpec::from_reps(g, &[elt(g, "(1 2 3)")?; 4])
}

fn g1_3cycles(g1: &G1) -> Result<ClassSpec> {
    let g = &g1.group;
    let c3 = g.classes().iter().position(|c| c.elt_order == 3).ok_or_else(|| Error::Certify("G1 has no order-3 class".into()))? as u32;
    ClassSpec::from_slots(vec![vec![c3]; 4])
}

const L0_CENSUS: &str = "level 0 census: 3-cycle quadruples in A5 form 9 absolute and 18 inner classes, one braid orbit";
const L0_JLINE: &str = "level 0 j-line cover: branch cycles and cusp widths of the absolute and inner reduced covers";
const L0_SHINC: &str = "level 0 sh-incidence table, inner reduced classes labelled 5-5:1, 5-5:2, 3-3:1, 3-3:2, 1-2";
const L0_REAL: &str = "level 0 real points: absolute 3 per interval; inner 4 over (1,inf) and 2 over each other interval";

fn level0(r: &mut Recorder) -> Result<()> {
    let g = a5();
    let spec = a5_3cycles(&g)?;
    let inner = Level::build(Canon::inner(&g), &spec)?;
    let abs = Level::build(Canon::with_automorphisms(&g, normalizer_automorphisms(&g, Some(&spec))?), &spec)?;
    r.eq("inner class count", L0_CENSUS, 18, inner.ba.len());
    r.eq("absolute class count", L0_CENSUS, 9, abs.ba.len());
    r.eq("inner braid orbits", L0_CENSUS, vec![18], inner.braid_orbit_sizes());
    r.eq("absolute braid orbits", L0_CENSUS, vec![9], abs.braid_orbit_sizes());
    r.eq("inner Q'' orbits trivial", L0_CENSUS, 18, inner.red.len());

    let expect: [(&str, &Level, Vec<usize>, usize, BigUint); 2] =
        [("absolute", &abs, vec![1, 3, 5], 1, BigUint::from(181440u32)), ("inner", &inner, vec![2, 3, 3, 5, 5], 0, BigUint::from(181440u32) << 9)];
    for (name, lv, widths, tr1, mono) in expect {
        r.eq(&format!("{name} M4-bar orbits"), L0_JLINE, 1, lv.orbits.len());
        let cov = branch_cycles(&lv.orbits[0])?;
        r.eq(&format!("{name} cusp widths"), L0_JLINE, widths, cov.cusp_widths.clone());
        r.eq(&format!("{name} genus"), L0_JLINE, 0, cov.genus);
        r.eq(&format!("{name} gamma_1 fixed points"), L0_JLINE, tr1, cov.tr1);
        r.eq(&format!("{name} geometric monodromy order"), L0_JLINE, mono, monodromy_order(&cov)?);
    }

    let cusps = cusp_orbits(&g, &inner.ba, &inner.red, &inner.orbits[0], None)?;
    let sh = sh_incidence(&inner.orbits[0], &cusps);
    let table = vec![vec![0, 2, 1, 1, 1], vec![2, 0, 1, 1, 1], vec![1, 1, 0, 1, 0], vec![1, 1, 1, 0, 0], vec![1, 1, 0, 0, 0]];
    r.holds("inner sh-incidence equals the table up to relabeling", L0_SHINC, equivalent_up_to_permutation(&sh.matrix, &table));

    for (name, lv, counts) in [("absolute", &abs, (3, 3, 3)), ("inner", &inner, (4, 2, 2))] {
        let (_, c) = conjugation_over_1_inf(&lv.canon, &lv.ba, &lv.red)?;
        let k2 = reduced_kappa(&lv.canon, &lv.ba, &lv.red, KappaVariant::K2)?;
        let rl = real_locus(&lv.orbits[0], &c, &k2)?;
        r.eq(&format!("{name} real points over (1,inf), (0,1), (-inf,0)"), L0_REAL, counts, (rl.over_1_inf.len(), rl.over_0_1.len(), rl.over_minf_0.len()));
    }
    Ok(())
}

const L1_G1: &str = "G1 certification: order 1920, perfect, centerless, 31 involutions, dim H^2(A5, M) = 1";
const L1_CENSUS: &str = "level 1 census: 2304 inner classes in two braid orbits of 1152, Q'' orbits of length 4";
const L1_HM: &str = "level 1 H-M and near H-M reps: 16 of each, one per length-20 q2 orbit";
const L1_SHAPES: &str = "level 1 branch cycle description: gamma_inf cycle shapes on the two orbits";
const L1_GENUS: &str = "level 1 genera 12 (orbit with H-M reps) and 9";
const L1_REL: &str = "level 1 relative monodromy over level 0";
const L1_BLOCK: &str = "level 1 sh-incidence of the width-20 cusps on the H-M orbit";
const L1_BGV: &str = "level 1 cusps with 3 | mpr: over each width-3 level-0 cusp, six of width 12 and four of width 6; 6-12 cusps meet H-M orbits once";
const L1_WIDTH2: &str = "level 1 width-2 cusps: 16 classes with u = 1 shift to H-M reps; 16 in (2,2) orbits shift to complements of near H-M reps";
const L1_TYPES: &str = "level 1 cusp types: fourteen (2,4), eight length 6, eight length 10, four non-H-M length 20";
const L1_INDEX: &str = "level 1 cusp ramification index factorization over level 0";
const L1_LIFT: &str = "level 1 lifting invariant through the degree-40 spin separating representation";
const L1_REAL: &str = "level 1 real points: 16 reduced classes over (1,inf), all on the H-M orbit, one real component";

fn multiset(pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut v: Vec<usize> = pairs.iter().flat_map(|&(w, k)| std::iter::repeat_n(w, k)).collect();
    v.sort_unstable();
    v
}

fn level1(r: &mut Recorder) -> Result<()> {
    let g1 = G1::build()?;
    let cert = g1.certify()?;
    r.eq("G1 order, involutions, dim H^2", L1_G1, (1920, 31, 1), (cert.order, cert.involutions, cert.dim_h2));
    r.holds("G1 perfect and centerless", L1_G1, cert.perfect && cert.centerless);

    let g = &g1.group;
    let lg = a5();
    let lower = Level::build(Canon::inner(&lg), &a5_3cycles(&lg)?)?;
    let up = Level::build(Canon::inner(g), &g1_3cycles(&g1)?)?;
    r.eq("inner class count", L1_CENSUS, 2304, up.ba.len());
    r.eq("braid orbits", L1_CENSUS, vec![1152, 1152], up.braid_orbit_sizes());
    let mut qpp = up.red.qpp_orbit_sizes();
    qpp.dedup();
    r.eq("Q'' orbit lengths", L1_CENSUS, vec![4], qpp);
    r.eq("M4-bar orbit degrees", L1_CENSUS, vec![288, 288], up.orbits.iter().map(|o| o.degree()).collect::<Vec<_>>());

    let map: Vec<Elt> = (0..g.order() as Elt).map(proj).collect();
    let projection = Projection { lower: g1.a5(), map: &map };
    let tags = hm_tags(g, &up.ba, Some(projection))?;
    let count = |t: HmTag| tags.iter().filter(|&&x| x == t).count();
    r.eq("H-M and near H-M classes", L1_HM, (16, 16), (count(HmTag::Hm), count(HmTag::NearHm)));
    let per_cycle: Vec<(usize, usize)> =
        up.ba.q(2).cycles().iter().map(|c| (c.len(), c.iter().filter(|&&x| matches!(tags[x as usize], HmTag::Hm | HmTag::NearHm)).count())).filter(|&(_, k)| k > 0).collect();
    r.eq("q2 orbits holding an H-M or near H-M rep (length, reps)", L1_HM, vec![(20, 1); 32], per_cycle);

    let hm_class = tags.iter().position(|&t| t == HmTag::Hm).unwrap() as u32;
    let plus = up.orbit_of(hm_class);
    let near_orbits: Vec<usize> = (0..tags.len()).filter(|&x| tags[x] == HmTag::NearHm).map(|x| up.orbit_of(x as u32)).collect();
    r.holds("near H-M reps lie on the H-M orbit", L1_HM, near_orbits.iter().all(|&o| o == plus));
    let order = [plus, 1 - plus];

    let covers: Vec<JCover> = order.iter().map(|&i| branch_cycles(&up.orbits[i])).collect::<Result<_>>()?;
    r.eq("gamma_inf shape, H-M orbit", L1_SHAPES, multiset(&[(2, 4), (4, 6), (12, 8), (20, 8)]), covers[0].cusp_widths.clone());
    r.eq("gamma_inf shape, other orbit", L1_SHAPES, multiset(&[(4, 8), (6, 8), (10, 8), (12, 4), (20, 4)]), covers[1].cusp_widths.clone());
    r.eq("gamma_0 and gamma_1 fixed points", L1_SHAPES, vec![(0, 0), (0, 0)], covers.iter().map(|c| (c.tr0, c.tr1)).collect::<Vec<_>>());
    r.eq("genera", L1_GENUS, vec![12, 9], covers.iter().map(|c| c.genus).collect::<Vec<_>>());
    r.eq("moduli fineness", L1_GENUS, vec![Fineness::Fine; 2], order.iter().map(|&i| moduli_fineness(&up.red, &up.orbits[i])).collect::<Vec<_>>());

    let lm = level_map((&up.ba, &up.red), (&lower.canon, &lower.ba, &lower.red), projection)?;
    let rel: Vec<BigUint> = order
        .iter()
        .map(|&i| {
            let o = &up.orbits[i];
            let blocks: Vec<u32> = o.points.iter().map(|&p| lm[p as usize]).collect();
            relative_monodromy_order(o, &blocks)
        })
        .collect::<Result<_>>()?;
    r.eq("relative monodromy orders", L1_REL, vec![BigUint::from(192u32); 2], rel);

    let cusps: Vec<Vec<CuspOrbit>> = order.iter().map(|&i| cusp_orbits(g, &up.ba, &up.red, &up.orbits[i], Some(&tags))).collect::<Result<_>>()?;
    let sh_plus = sh_incidence(&up.orbits[plus], &cusps[0]);
    let rows = |f: &dyn Fn(&CuspOrbit) -> bool| -> Vec<usize> { (0..cusps[0].len()).filter(|&i| f(&cusps[0][i])).collect() };
    let w20 = rows(&|c| c.u == 10 && c.v == 20);
    let table = vec![
        vec![0, 0, 0, 4, 0, 0, 2, 2],
        vec![0, 0, 4, 0, 2, 2, 0, 0],
        vec![0, 4, 0, 0, 0, 0, 2, 2],
        vec![4, 0, 0, 0, 2, 2, 0, 0],
        vec![0, 2, 0, 2, 0, 0, 0, 4],
        vec![0, 2, 0, 2, 0, 0, 4, 0],
        vec![2, 0, 2, 0, 0, 4, 0, 0],
        vec![2, 0, 2, 0, 4, 0, 0, 0],
    ];
    r.holds("width-20 block equals the table up to relabeling", L1_BLOCK, equivalent_up_to_permutation(&sh_plus.submatrix(&w20), &table));
    let w12 = rows(&|c| c.u == 6 && c.v == 12);
    let cross: Vec<u32> = w12.iter().flat_map(|&i| w20.iter().map(move |&j| (i, j))).map(|(i, j)| sh_plus.matrix[i][j]).collect();
    r.holds("each 6-12 cusp of the H-M orbit meets each H-M and near H-M cusp once", L1_BGV, w12.len() == 8 && cross.iter().all(|&x| x == 1));

    let all: Vec<(usize, &CuspOrbit)> = cusps.iter().enumerate().flat_map(|(k, cs)| cs.iter().map(move |c| (order[k], c))).collect();
    let mut types: BTreeMap<(u32, usize), usize> = BTreeMap::new();
    for (_, c) in &all {
        *types.entry((c.u, c.v)).or_default() += 1;
    }
    r.eq("(1,2) and (2,2) cusps", L1_WIDTH2, (2, 2), (types[&(1, 2)], types[&(2, 2)]));
    r.eq("(2,4), (6,6), (10,10) cusps", L1_TYPES, (14, 8, 8), (types[&(2, 4)], types[&(6, 6)], types[&(10, 10)]));
    let non_hm20 = all.iter().filter(|(_, c)| c.v == 20 && c.hm_tag == HmTag::None).count();
    r.eq("length-20 cusps without H-M or near H-M reps", L1_TYPES, 4, non_hm20);

    let members = |o: usize, c: &CuspOrbit| -> Vec<u32> { c.elements.iter().flat_map(|&e| up.red.members(up.orbits[o].points[e as usize]).to_vec()).collect() };
    let sh = up.ba.sh();
    let shifted = |o: usize, c: &CuspOrbit| -> Vec<HmTag> {
        let mut v: Vec<HmTag> = members(o, c).iter().map(|&x| tags[sh.apply(x) as usize]).collect();
        v.sort();
        v.dedup();
        v
    };
    let u1: Vec<(usize, &CuspOrbit)> = all.iter().copied().filter(|(_, c)| c.u == 1).collect();
    r.eq("classes with u = 1", L1_WIDTH2, 16, u1.iter().map(|(o, c)| members(*o, c).len()).sum::<usize>());
    r.holds("u = 1 classes shift to H-M reps", L1_WIDTH2, u1.iter().all(|(o, c)| shifted(*o, c) == vec![HmTag::Hm]));
    let t22: Vec<(usize, &CuspOrbit)> = all.iter().copied().filter(|(_, c)| (c.u, c.v) == (2, 2)).collect();
    r.eq("classes in (2,2) cusps", L1_WIDTH2, 16, t22.iter().map(|(o, c)| members(*o, c).len()).sum::<usize>());
    r.holds("(2,2) classes shift to complements of near H-M reps", L1_WIDTH2, t22.iter().all(|(o, c)| shifted(*o, c) == vec![HmTag::ComplementNearHm]));

    let lcusps = cusp_orbits(&lg, &lower.ba, &lower.red, &lower.orbits[0], None)?;
    let lorb = &lower.orbits[0];
    let below = |o: usize, c: &CuspOrbit| -> Result<&CuspOrbit> {
        let b = lm[up.orbits[o].points[c.elements[0] as usize] as usize];
        lcusps.iter().find(|lc| lc.elements.iter().any(|&e| lorb.points[e as usize] == b)).ok_or_else(|| Error::Certify("no level-0 cusp below".into()))
    };
    let mut over3: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut factorized = 0;
    for &(o, c) in &all {
        let lc = below(o, c)?;
        if lc.v == 3 {
            let e = over3.entry(lc.label()).or_default();
            match c.v {
                12 => e.0 += 1,
                6 => e.1 += 1,
                _ => {}
            }
        }
        relative_cusp_index((g, &up.ba, &up.red, &up.orbits[o], c), (&lg, &lower.ba, &lower.red, lorb, lc), &lm)?;
        factorized += 1;
    }
    r.eq("(width 12, width 6) cusps over each width-3 level-0 cusp", L1_BGV, vec![(6, 4); 2], over3.into_values().collect::<Vec<_>>());
    r.eq("cusps with certified index factorization", L1_INDEX, 58, factorized);

    let rep = spin_sep_rep(&g1)?;
    let (s, orbs) = orbit_invariants(g, &up.ba, Embedding::SpinSep(&rep, None))?;
    r.eq("orbit invariants", L1_LIFT, 2, orbs.len());
    let side = |o: usize| -> Vec<i8> {
        let mut v: Vec<i8> = (0..s.len()).filter(|&x| up.orbit_of(x as u32) == o).map(|x| s[x]).collect();
        v.dedup();
        v
    };
    r.eq("invariant on the H-M orbit, then the other", L1_LIFT, (vec![1], vec![-1]), (side(order[0]), side(order[1])));

    let (_, c) = conjugation_over_1_inf(&up.canon, &up.ba, &up.red)?;
    let k2 = reduced_kappa(&up.canon, &up.ba, &up.red, KappaVariant::K2)?;
    let real: Vec<(usize, usize)> = order.iter().map(|&i| real_locus(&up.orbits[i], &c, &k2).map(|rl| (rl.over_1_inf.len(), rl.components))).collect::<Result<_>>()?;
    r.eq("(real points over (1,inf), components) per orbit", L1_REAL, vec![(16, 1), (0, 0)], real);
    let lifts: Vec<u64> = (0..tags.len())
        .filter(|&x| tags[x] == HmTag::NearHm)
        .map(|x| {
            let cj = real_involution(g, up.ba.class(x as u32))?.ok_or_else(|| Error::Certify("near H-M rep without conjugator".into()))?;
            order_of_lift(rep.image(cj))
        })
        .collect::<Result<_>>()?;
    r.eq("near H-M conjugators lift to order 4", L1_REAL, vec![4; 16], lifts);
    Ok(())
}

const DIHEDRAL: &str = "dihedral reference: four involutions in D_N, N = p^(k+1), give p^(k+1) + p^k absolute classes";

fn dihedral(r: &mut Recorder) -> Result<()> {
    for (p, k) in [(5, 0), (5, 1), (7, 0)] {
        let d = dihedral_reference(p, k)?;
        let tag = format!("p = {p}, k = {k}");
        r.eq(&format!("{tag}: absolute, inner"), DIHEDRAL, (d.expected_absolute as usize, d.expected_inner as usize), (d.absolute, d.inner));
        r.eq(&format!("{tag}: Q'' acts trivially on absolute classes"), DIHEDRAL, d.absolute, d.reduced_absolute);
        r.holds(&format!("{tag}: q2 widths include 1 and N"), DIHEDRAL, d.q2_widths.contains(&1) && d.q2_widths.contains(&(d.n as usize)));
    }
    Ok(())
}

const OBS_553: &str = "obstruction: 5+ 5- 3 has 6 inner classes, all with invariant +1";
const OBS_555: &str = "obstruction: 5+ 5+ 5+ has one inner class, invariant -1";
const OBS_5523: &str = "obstruction: 5+ 5+ 3 has 3 inner classes, invariant -1";
const OBS_EMPTY: &str = "obstruction: 5+ 5+ 5- is empty";
const OBS_SPLIT: &str = "obstruction: four-branch-point classes split into two braid orbits separated by the invariant";
const OBS_NOHM: &str = "obstruction: 5+ 5- 3 3 contains no H-M rep";

/// (class count, sorted (orbit size, invariant), H-M shaped classes)
type Census = (usize, Vec<(usize, i8)>, usize);

fn obstruction(r: &mut Recorder) -> Result<()> {
    let g = a5();
    let (p, m, t) = (elt(&g, "(1 2 3 4 5)")?, elt(&g, "(1 3 5 2 4)")?, elt(&g, "(1 2 3)")?);
    let run = |reps: &[Elt]| -> Result<Census> {
        let (cls, orbs) = obstruction_report(&g, &ClassSpec::from_reps(&g, reps)?, Embedding::Standard, u128::MAX)?;
        let mut o: Vec<(usize, i8)> = orbs.iter().map(|x| (x.size, x.invariant)).collect();
        o.sort();
        Ok((cls.len(), o, cls.iter().filter(|c| is_hm_shape(&g, c)).count()))
    };
    let (n, o, _) = run(&[p, m, t])?;
    r.eq("5+ 5- 3: classes, orbits", OBS_553, (6, vec![(6, 1)]), (n, o));
    let (n, o, _) = run(&[p, p, p])?;
    r.eq("5+ 5+ 5+: classes, orbits", OBS_555, (1, vec![(1, -1)]), (n, o));
    let (n, o, _) = run(&[p, p, t])?;
    r.eq("5+ 5+ 3: classes, orbits", OBS_5523, (3, vec![(3, -1)]), (n, o));
    let (n, _, _) = run(&[p, p, m])?;
    r.eq("5+ 5+ 5-: classes", OBS_EMPTY, 0, n);
    let (n, o, _) = run(&[p, p, m, m])?;
    r.eq("5+ 5+ 5- 5-: classes, orbits", OBS_SPLIT, (42, vec![(12, -1), (30, 1)]), (n, o));
    let (n, o, hm) = run(&[p, m, t, t])?;
    r.eq("5+ 5- 3 3: classes, orbits", OBS_SPLIT, (204, vec![(60, 1), (144, -1)]), (n, o));
    r.eq("5+ 5- 3 3: H-M reps", OBS_NOHM, 0, hm);
    Ok(())
}

const TOWER: &str = "tower arithmetic: rk' = 1 + (rk - 1) p^rk, g' - 1 = p^rk (g - 1) from (p, rk, g) = (2, 5, 21)";

fn tower(r: &mut Recorder) {
    let (rk1, g1) = tower_arith(2, 5, 21, 1);
    r.eq("level 1 (rank, genus)", TOWER, (BigUint::from(129u32), BigUint::from(641u32)), (rk1, g1));
    let two = BigUint::from(2u32);
    let (rk2, g2) = tower_arith(2, 5, 21, 2);
    r.eq("level 2 rank", TOWER, BigUint::one() + Pow::pow(&two, 136u32), rk2);
    r.eq("level 2 genus (value of the recursion; 1 + 5 * 2^14 does not satisfy it)", TOWER, BigUint::one() + BigUint::from(5u32) * Pow::pow(&two, 136u32), g2);
}

const A4_L0: &str = "A4 tower level 0: 3+ 3+ 3- 3- has two braid orbits separated by the invariant";
const A4_L1: &str = "A4 tower level 1 over G1(A4): six components of genera 1, 1, 3 (+ side) and 0, 0, 3 (- side); real points only on the + side";

fn a4tower(r: &mut Recorder) -> Result<()> {
    let g1 = G1::build()?;
    let a5g = g1.a5();
    let gens = vec![elt(a5g, "(1 2 3)")?, elt(a5g, "(2 3 4)")?];
    let (a4, emb4) = a5g.subgroup(&a5g.closure(&gens), &gens);
    let (p, m) = (elt(&a4, "(1 2 3)")?, elt(&a4, "(1 3 2)")?);
    let spec0 = ClassSpec::from_reps(&a4, &[p, p, m, m])?;
    let low = Level::build(Canon::inner(&a4), &spec0)?;
    let (_, lorbs) = orbit_invariants(&a4, &low.ba, Embedding::Standard)?;
    let mut inv0: Vec<i8> = lorbs.iter().map(|o| o.invariant).collect();
    inv0.sort();
    r.eq("level 0 braid orbits", A4_L0, 2, lorbs.len());
    r.eq("level 0 invariants", A4_L0, vec![-1, 1], inv0);

    let (g, emb) = g1.pullback(&gens)?;
    r.eq("G1(A4) order", A4_L1, 384, g.order());
    let map: Vec<Elt> = emb.iter().map(|&x| emb4.iter().position(|&y| y == proj(x)).unwrap() as Elt).collect();
    let slot = |c: Elt| -> Vec<u32> {
        let target = a4.class_of(c);
        (0..g.classes().len() as u32).filter(|&k| g.classes()[k as usize].elt_order == 3 && a4.class_of(map[g.classes()[k as usize].rep as usize]) == target).collect()
    };
    let spec1 = ClassSpec::from_slots(vec![slot(p), slot(p), slot(m), slot(m)])?;
    let up = Level::build(Canon::inner(&g), &spec1)?;
    r.eq("level 1 M4-bar orbits", A4_L1, 6, up.orbits.len());
    let rep = spin_sep_rep(&g1)?;
    let (s, _) = orbit_invariants(&g, &up.ba, Embedding::SpinSep(&rep, Some(&emb)))?;
    let (_, c) = conjugation_over_1_inf(&up.canon, &up.ba, &up.red)?;
    let k2 = reduced_kappa(&up.canon, &up.ba, &up.red, KappaVariant::K2)?;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for o in &up.orbits {
        let cov = branch_cycles(o)?;
        let x = up.red.members(o.points[0])[0];
        let rl = real_locus(o, &c, &k2)?;
        let real = rl.over_1_inf.len() + rl.over_0_1.len() + rl.over_minf_0.len() > 0;
        let side = if s[x as usize] == 1 { &mut plus } else { &mut minus };
        side.push((cov.genus, real));
    }
    plus.sort();
    minus.sort();
    r.eq("+ side (genus, has real points)", A4_L1, vec![(1, true), (1, true), (3, true)], plus);
    r.eq("- side (genus, has real points)", A4_L1, vec![(0, false), (0, false), (3, false)], minus);
    Ok(())
}

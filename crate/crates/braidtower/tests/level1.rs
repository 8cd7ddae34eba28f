use braidtower::braidact::*;
use braidtower::grouptower::g1::{mpart, proj};
use braidtower::grouptower::{classify, spin_sep_rep, MClass, G1};
use braidtower::liftinv::*;
use braidtower::nielsen::*;
use braidtower::realpts::*;
use braidtower::reproduce::Level;
use braidtower::{Elt, FiniteGroup, Perm};

struct Fixture {
    g1: G1,
    map: Vec<Elt>,
}

impl Fixture {
    fn new() -> Fixture {
        let g1 = G1::build().unwrap();
        let map = (0..1920).map(proj).collect();
        Fixture { g1, map }
    }

    fn level(&self) -> Level<'_> {
        let g = &self.g1.group;
        let c3 = g.classes().iter().position(|c| c.elt_order == 3).unwrap() as u32;
        Level::build(Canon::inner(g), &ClassSpec::from_slots(vec![vec![c3]; 4]).unwrap()).unwrap()
    }

    fn projection(&self) -> Projection<'_> {
        Projection { lower: self.g1.a5(), map: &self.map }
    }
}

#[test]
fn near_hm_reps_from_hm_reps() {
    let fx = Fixture::new();
    let g = &fx.g1.group;
    let lv = fx.level();
    let tags = hm_tags(g, &lv.ba, Some(fx.projection())).unwrap();
    let q10 = lv.ba.q(2).pow(10);
    let mut made = std::collections::BTreeSet::new();
    for (x, t) in lv.ba.classes().iter().enumerate() {
        if tags[x] != HmTag::Hm {
            continue;
        }
        let s = near_hm_synthesize(g, fx.projection(), t[0], t[2]).unwrap();
        let c = g.pow(g.mul(t[0], t[2]), 5);
        assert_eq!(proj(c), 0);
        assert_eq!(classify(mpart(c)), MClass::M5);
        let y = lv.ba.index_of(&lv.canon.canonical(&s)).unwrap();
        assert_eq!(tags[y as usize], HmTag::NearHm);
        // the antipode on the q2 cycle is the complement
        assert_eq!(tags[q10.apply(y) as usize], HmTag::ComplementNearHm);
        assert_eq!(tags[q10.apply(x as u32) as usize], HmTag::ComplementHm);
        made.insert(y);
    }
    assert_eq!(made.len(), 16);
}

#[test]
fn perturbation_normal_form_matches_degree_40() {
    let fx = Fixture::new();
    let g = &fx.g1.group;
    let lv = fx.level();
    let rep = spin_sep_rep(&fx.g1).unwrap();
    let (s, _) = orbit_invariants(g, &lv.ba, Embedding::SpinSep(&rep, None)).unwrap();
    let mut per_orbit = [0usize; 2];
    let mut total = 0;
    for (i, t) in lv.ba.classes().iter().enumerate() {
        if let Some((a, b)) = perturbation_types(&fx.g1, t) {
            total += 1;
            assert_eq!(s[i], if a == b { 1 } else { -1 });
            per_orbit[lv.orbit_of(i as u32)] += 1;
        }
    }
    assert_eq!(total, 256);
    assert_eq!(per_orbit.iter().sum::<usize>(), 256);
}

#[test]
fn conjugation_operators() {
    let fx = Fixture::new();
    let g = &fx.g1.group;
    let lv = fx.level();
    let mut fixed = Vec::new();
    for v in [KappaVariant::K0, KappaVariant::K2, KappaVariant::K4] {
        let c = reduced_kappa(&lv.canon, &lv.ba, &lv.red, v).unwrap();
        assert!(c.mul(&c).is_identity(), "{v:?}");
        fixed.push(c.fixed_points());
    }
    assert_eq!(fixed[0], fixed[2]);
    let (v, c) = conjugation_over_1_inf(&lv.canon, &lv.ba, &lv.red).unwrap();
    assert_eq!(v, KappaVariant::K4);
    assert!(is_reflection(&c, &lv.red));
    assert!(!is_reflection(&reduced_kappa(&lv.canon, &lv.ba, &lv.red, KappaVariant::K0).unwrap(), &lv.red));
    assert_eq!(c.fixed_points(), 16);
    // a real reduced class is never fixed by khat_4 on the nose: the conjugation is a nontrivial element
    for r in (0..lv.red.len() as u32).filter(|&r| c.apply(r) == r) {
        for &x in lv.red.members(r) {
            let t = lv.ba.class(x);
            let k = khat(g, t, KappaVariant::K4).unwrap();
            assert_ne!(&k, t);
        }
    }
    assert!(KappaVariant::new(1, 1).is_err());
}

#[test]
fn level_map_is_equivariant() {
    let fx = Fixture::new();
    let lv = fx.level();
    let a5 = fx.g1.a5();
    let x = a5.find_perm(&Perm::parse("(1 2 3)", 5).unwrap()).unwrap();
    let low = Level::build(Canon::inner(a5), &ClassSpec::from_reps(a5, &[x; 4]).unwrap()).unwrap();
    let lm = jline_map(&lv, &low, fx.projection());
    for (up, down) in [(&lv.red.gamma0, &low.red.gamma0), (&lv.red.gamma1, &low.red.gamma1), (&lv.red.gamma_inf, &low.red.gamma_inf)] {
        for r in 0..lv.red.len() as u32 {
            assert_eq!(lm[up.apply(r) as usize], down.apply(lm[r as usize]));
        }
    }
    // fibers have 32 reduced classes over each of the 18 below
    let mut fiber = vec![0; low.red.len()];
    for &b in &lm {
        fiber[b as usize] += 1;
    }
    assert!(fiber.iter().all(|&k| k == 32));
}

fn jline_map(up: &Level, low: &Level, p: Projection) -> Vec<u32> {
    braidtower::jline::level_map((&up.ba, &up.red), (&low.canon, &low.ba, &low.red), p).unwrap()
}

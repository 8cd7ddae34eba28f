use braidtower::braidact::*;
use braidtower::grouptower::G1;
use braidtower::nielsen::*;
use braidtower::permcore::{a5, Elt, FiniteGroup, Group, Perm};

fn elt(g: &Group, s: &str) -> Elt {
    g.find_perm(&Perm::parse(s, 5).unwrap()).unwrap()
}

fn action(g: &Group, r: usize) -> BraidAction {
    let x = elt(g, "(1 2 3)");
    let canon = Canon::inner(g);
    let spec = ClassSpec::from_reps(g, &vec![x; r]).unwrap();
    BraidAction::new(&canon, enumerate_nielsen(&canon, &spec, u128::MAX).unwrap()).unwrap()
}

#[test]
fn braid_relations_five_branch_points() {
    let g = a5();
    let ba = action(&g, 5);
    assert_eq!(ba.len(), 684);
    for i in 1..4 {
        let (a, b) = (ba.q(i), ba.q(i + 1));
        assert_eq!(a.mul(b).mul(a), b.mul(a).mul(b), "q{i} q{} braid relation", i + 1);
    }
    for (i, j) in [(1, 3), (1, 4), (2, 4)] {
        assert_eq!(ba.q(i).mul(ba.q(j)), ba.q(j).mul(ba.q(i)));
    }
    let sh = ba.sh();
    for i in 1..4 {
        assert_eq!(sh.mul(ba.q(i)).mul(&sh.inv()), *ba.q(i + 1));
    }
    // sh^r conjugates by the product, trivial on inner classes
    assert!(sh.pow(5).is_identity());
    // the sphere relation q1 q2 q3 q4 q4 q3 q2 q1
    assert!(ba.word(&[1, 2, 3, 4, 4, 3, 2, 1]).is_identity());
    let s = sh_incidence_general(&ba, 2).unwrap();
    let mut sums = s.row_sums();
    let mut lens: Vec<u32> = ba.q(2).cycles().iter().map(|c| c.len() as u32).collect();
    sums.sort();
    lens.sort();
    assert_eq!(sums, lens);
}

#[test]
fn braid_words_on_tuples() {
    let g = a5();
    let t = vec![elt(&g, "(1 2 3)"), elt(&g, "(1 3 2)"), elt(&g, "(1 4 5)"), elt(&g, "(1 5 4)")];
    assert_eq!(braid_apply(&g, &[2, -2, 1, 3, -3, -1], &t).unwrap(), t);
    let u = braid_apply(&g, &[1, 2, 3], &t).unwrap();
    assert_eq!(g.product(&u), 0);
    assert!(braid_apply(&g, &[4], &t).is_err());
}

#[test]
fn reduced_action_level0() {
    let g = a5();
    let ba = action(&g, 4);
    let [a, b] = ba.qpp_gens();
    assert_eq!(a.mul(&b), b.mul(&a));
    let red = Reduced::new(&ba).unwrap();
    let orbits = mbar4_orbits(&red);
    assert_eq!(orbits.len(), 1);
    let o = &orbits[0];
    assert!(o.gamma0.pow(3).is_identity());
    assert!(o.gamma1.pow(2).is_identity());
    assert!(o.gamma0.mul(&o.gamma1).mul(&o.gamma_inf).is_identity());
}

#[test]
fn q2_orbit_formula() {
    let g = a5();
    let threes: Vec<Elt> = (0..60).filter(|&x| g.elt_order(x) == 3).collect();
    let mut lengths = std::collections::BTreeSet::new();
    for &a in &threes {
        for &b in threes.iter().filter(|&&b| g.mul(a, b) != g.mul(b, a)) {
            lengths.insert(q2_orbit_length(&g, a, b).unwrap().direct);
        }
    }
    assert_eq!(lengths.into_iter().collect::<Vec<_>>(), vec![3, 4, 5]);
    let a = elt(&g, "(1 2 3)");
    // product of order 2: twice the order
    assert_eq!(q2_orbit_length(&g, a, elt(&g, "(1 2 4)")).unwrap().direct, 4);
    assert!(q2_orbit_length(&g, a, a).is_err());

    let g1 = G1::build().unwrap();
    let h = &g1.group;
    let t3: Vec<Elt> = (0..1920).filter(|&x| h.elt_order(x) == 3).step_by(7).collect();
    for &a in &t3 {
        for &b in t3.iter().filter(|&&b| h.mul(a, b) != h.mul(b, a)) {
            q2_orbit_length(h, a, b).unwrap();
        }
    }
}

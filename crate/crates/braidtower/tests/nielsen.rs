use braidtower::nielsen::*;
use braidtower::permcore::{a5, dihedral, symmetric, Elt, FiniteGroup, Group, Perm};
use braidtower::{class_product_count, Error};
use num_bigint::BigUint;

fn elt(g: &Group, s: &str) -> Elt {
    g.find_perm(&Perm::parse(s, g.degree().unwrap()).unwrap()).unwrap()
}

/// Generating tuples with product 1 and entries in the given class lists
/// (in order), counted by brute force over the first r - 1 entries.
fn brute_tuples(g: &Group, slots: &[Vec<Elt>]) -> usize {
    let r = slots.len();
    let mut count = 0;
    let mut idx = vec![0usize; r - 1];
    'outer: loop {
        let head: Vec<Elt> = idx.iter().enumerate().map(|(k, &i)| slots[k][i]).collect();
        let last = g.inv(g.product(&head));
        if slots[r - 1].contains(&last) {
            let mut t = head.clone();
            t.push(last);
            if g.generates(&t) {
                count += 1;
            }
        }
        for k in (0..r - 1).rev() {
            idx[k] += 1;
            if idx[k] < slots[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    count
}

#[test]
fn a5_three_cycles_against_brute_force() {
    let g = a5();
    let x = elt(&g, "(1 2 3)");
    let spec = ClassSpec::from_reps(&g, &[x; 4]).unwrap();
    let cls = g.class_elements(g.class_of(x));
    let tuples = brute_tuples(&g, &vec![cls; 4]);
    // A5 and S5 act freely on generating tuples
    let inner = enumerate_nielsen(&Canon::inner(&g), &spec, u128::MAX).unwrap();
    assert_eq!(inner.len() * 60, tuples);
    let abs = Canon::with_automorphisms(&g, normalizer_automorphisms(&g, Some(&spec)).unwrap());
    assert_eq!(abs.outer_count(), 2);
    assert_eq!(enumerate_nielsen(&abs, &spec, u128::MAX).unwrap().len() * 120, tuples);
}

#[test]
fn mixed_classes_against_brute_force() {
    let g = a5();
    let (p, m, t) = (elt(&g, "(1 2 3 4 5)"), elt(&g, "(1 3 5 2 4)"), elt(&g, "(1 2 3)"));
    let canon = Canon::inner(&g);
    for reps in [vec![p, m, t], vec![p, p, t], vec![p, p, p], vec![p, m, t, t]] {
        let spec = ClassSpec::from_reps(&g, &reps).unwrap();
        let tuples: usize = spec
            .arrangements()
            .iter()
            .map(|arr| {
                let slots: Vec<Vec<Elt>> = arr.iter().map(|&k| g.class_elements(spec.slots()[k][0])).collect();
                brute_tuples(&g, &slots)
            })
            .sum();
        let ni = enumerate_nielsen(&canon, &spec, u128::MAX).unwrap();
        assert_eq!(ni.len() * 60, tuples, "{reps:?}");
        for c in &ni {
            assert_eq!(g.product(c), 0);
            assert!(g.generates(c));
            assert_eq!(canon.canonical(c), *c);
        }
    }
}

#[test]
fn dihedral_inner_against_brute_force() {
    for n in [5usize, 7, 25] {
        let g = dihedral(n);
        let refl = g.classes().iter().position(|c| c.elt_order == 2).unwrap() as u32;
        let spec = ClassSpec::from_slots(vec![vec![refl]; 4]).unwrap();
        let tuples = brute_tuples(&g, &vec![g.class_elements(refl); 4]);
        let ni = enumerate_nielsen(&Canon::inner(&g), &spec, u128::MAX).unwrap();
        assert_eq!(ni.len() * 2 * n, tuples, "N = {n}");
    }
}

#[test]
fn class_algebra_counts() {
    let g = a5();
    let x = elt(&g, "(1 2 3)");
    let c3 = g.class_of(x);
    let c5 = g.class_of(elt(&g, "(1 2 3 4 5)"));
    let classes = [c3, c5, c3];
    for target in [0, x, elt(&g, "(1 2)(3 4)")] {
        let mut brute = 0u64;
        for &a in &g.class_elements(c3) {
            for &b in &g.class_elements(c5) {
                for &c in &g.class_elements(c3) {
                    if g.product(&[a, b, c, target]) == 0 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(class_product_count::<u64>(&g, &classes, target).unwrap(), brute);
        assert_eq!(class_product_count::<BigUint>(&g, &classes, target).unwrap(), BigUint::from(brute));
    }
    assert!(class_product_count::<u64>(&g, &[99], 0).is_err());
}

#[test]
fn normalizer_of_a_transitive_subgroup() {
    let s5 = symmetric(5);
    let s = s5.perms().unwrap();
    let gens = [Perm::parse("(1 2 3 4 5)", 5).unwrap(), Perm::parse("(2 5)(3 4)", 5).unwrap()];
    let d5 = Group::from_perms(&gens, 1000).unwrap();
    assert_eq!(d5.order(), 10);
    // N_{S5}(D5) has order 20, so two outer classes
    assert_eq!(normalizer_automorphisms(&d5, None).unwrap().len(), 2);
    let brute = s.iter().filter(|p| gens.iter().all(|g| d5.find_perm(&g.conj(p)).is_some())).count();
    assert_eq!(brute, 20);
}

#[test]
fn budget_and_parsing() {
    let g = a5();
    let x = elt(&g, "(1 2 3)");
    let spec = ClassSpec::from_reps(&g, &[x; 4]).unwrap();
    assert!(iteration_estimate(&g, &spec) > 1);
    assert!(matches!(enumerate_nielsen(&Canon::inner(&g), &spec, 1), Err(Error::Budget { .. })));
    for m in ["inner", "absolute", "reduced-inner", "reduced-absolute"] {
        assert_eq!(m.parse::<Mode>().unwrap().as_str(), m);
    }
    assert!(matches!("outer".parse::<Mode>(), Err(Error::Parse { .. })));
    assert!(ClassSpec::from_slots(vec![vec![1]; 2]).is_err());
}

#[test]
fn class_spec_arrangements() {
    let g = a5();
    let (p, t) = (elt(&g, "(1 2 3 4 5)"), elt(&g, "(1 2 3)"));
    let spec = ClassSpec::from_reps(&g, &[p, p, t, t]).unwrap();
    assert_eq!(spec.arrangements().len(), 6);
    let (cp, ct) = (g.class_of(p), g.class_of(t));
    assert!(spec.admits(&[ct, cp, ct, cp]));
    assert!(!spec.admits(&[ct, ct, ct, cp]));
}

#[test]
fn hm_shape_and_middle_product() {
    let g = a5();
    let a = elt(&g, "(1 2 3)");
    let b = elt(&g, "(1 4 5)");
    let t = vec![a, g.inv(a), b, g.inv(b)];
    assert!(is_hm_shape(&g, &t));
    assert_eq!(mpr(&g, &t), g.elt_order(g.mul(g.inv(a), b)));
    assert_eq!(hm_structure(&g, &t, None, false).unwrap(), HmTag::Hm);
    assert!(!is_hm_shape(&g, &[a, b, g.inv(a), g.inv(b)]));
}

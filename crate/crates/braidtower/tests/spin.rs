use braidtower::permcore::{a5, FiniteGroup, Perm};
use braidtower::spincover::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn clifford_oracle_all_pairs_small() {
    for n in 2..=4 {
        let r = clifford_oracle_check(n, None).unwrap();
        assert_eq!(r.pairs, (2 * (1..=n).product::<usize>()).pow(2));
        assert_eq!(r.mismatches, 0, "n = {n}");
    }
}

#[test]
fn clifford_oracle_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [5, 6] {
        let mut pick = |k: usize| rng.gen_range(0..k);
        let r = clifford_oracle_check(n, Some((100_000, &mut pick))).unwrap();
        assert_eq!((r.pairs, r.mismatches), (100_000, 0), "n = {n}");
    }
}

#[test]
fn clifford_scalars_agree() {
    // the same element computed over the rationals and the integers
    let n = 4;
    let x = CliffordQ::transposition(n, 1).mul(&CliffordQ::transposition(n, 3));
    let y = CliffordZ::transposition(n, 1).mul(&CliffordZ::transposition(n, 3));
    let sx = SpinElement::generator(n, 1).mul(&SpinElement::generator(n, 3));
    assert!(x.equals(&CliffordQ::from_spin(&sx)));
    assert!(y.equals(&CliffordZ::from_spin(&sx)));
    assert!(x.mul(&x).equals(&CliffordQ::one(n).neg()));
}

fn involutions(n: usize) -> Vec<Perm> {
    fn rec(free: &[u32], cur: &mut Vec<(u32, u32)>, n: usize, out: &mut Vec<Perm>) {
        if cur.len().is_multiple_of(2) && !cur.is_empty() {
            let cycles: Vec<[u32; 2]> = cur.iter().map(|&(a, b)| [a, b]).collect();
            let refs: Vec<&[u32]> = cycles.iter().map(|c| &c[..]).collect();
            out.push(Perm::from_cycles(n, &refs));
        }
        // choose the next pair with first point larger than the previous first point
        let start = cur.last().map_or(0, |&(a, _)| a + 1);
        for i in 0..free.len() {
            let a = free[i];
            if a < start {
                continue;
            }
            for j in i + 1..free.len() {
                let b = free[j];
                let mut rest = free.to_vec();
                rest.retain(|&x| x != a && x != b);
                cur.push((a, b));
                rec(&rest, cur, n, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&(0..n as u32).collect::<Vec<_>>(), &mut Vec::new(), n, &mut out);
    out
}

#[test]
fn even_involution_lift_orders() {
    for n in 4..=10 {
        let inv = involutions(n);
        let expected: usize = (1..=n / 2).filter(|k| k % 2 == 0).map(|k| count_involutions(n, k)).sum();
        assert_eq!(inv.len(), expected, "n = {n}");
        for p in &inv {
            let k = p.cycle_type().iter().filter(|&&c| c == 2).count();
            let want = if k % 4 == 0 { 2 } else { 4 };
            assert_eq!(order_of_lift(p).unwrap(), want, "{p}");
        }
    }
}

fn count_involutions(n: usize, k: usize) -> usize {
    let f = |m: usize| (1..=m).product::<usize>();
    f(n) / (f(n - 2 * k) * f(k) * (1 << k))
}

#[test]
fn serre_formula_exhaustive_a5() {
    let g = a5();
    let perms = g.perms().unwrap();
    let odd: Vec<u32> = (1..60).filter(|&x| g.elt_order(x) % 2 == 1).collect();
    let mut checked = 0;
    for r in 2..=4 {
        let mut idx = vec![0usize; r - 1];
        'outer: loop {
            let head: Vec<u32> = idx.iter().map(|&i| odd[i]).collect();
            let last = g.inv(g.product(&head));
            if last != 0 && g.elt_order(last) % 2 == 1 {
                let t: Vec<Perm> = head.iter().chain(std::iter::once(&last)).map(|&x| perms[x as usize].clone()).collect();
                let s = serre_formula(&t).unwrap();
                if s.applicable {
                    assert_eq!(s.sign, product_sign(&t).unwrap(), "{t:?}");
                    checked += 1;
                }
            }
            for k in (0..r - 1).rev() {
                idx[k] += 1;
                if idx[k] < odd.len() {
                    continue 'outer;
                }
                idx[k] = 0;
            }
            break;
        }
    }
    // (5,5): 24; (5,3,3) in every order; (3,3,3,3) transitive genus 0
    assert!(checked > 1000, "{checked}");
}

#[test]
fn quaternion_from_commuting_involutions() {
    let x = Perm::parse("(1 2)(3 4)", 5).unwrap();
    let y = Perm::parse("(1 3)(2 4)", 5).unwrap();
    assert!(quaternion_check(&x, &y));
    let z = Perm::parse("(1 2)(3 4)(5 6)(7 8)", 8).unwrap();
    let w = Perm::parse("(1 3)(2 4)(5 7)(6 8)", 8).unwrap();
    assert!(!quaternion_check(&z, &w));
}

#[test]
fn word_arithmetic_at_degree_40() {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let random = |rng: &mut ChaCha8Rng| {
        let mut x = SpinElement::identity(40);
        for _ in 0..60 {
            x = x.mul(&SpinElement::generator(40, rng.gen_range(1..40)));
        }
        x
    };
    for _ in 0..200 {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b).perm(), a.perm().mul(&b.perm()));
        assert!(a.mul(&a.inv()).is_identity());
        assert_eq!(SpinElement::lift(&a.perm()).perm(), a.perm());
    }
}

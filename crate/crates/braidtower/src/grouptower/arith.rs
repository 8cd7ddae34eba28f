use num_bigint::BigUint;
use num_traits::{One, Pow};

/// Rank of the kernel and genus at level `k`, from
/// rk' = 1 + (rk - 1) p^rk and g' - 1 = p^rk (g - 1).
pub fn tower_arith(p: u32, rk0: u64, g0: u64, k: usize) -> (BigUint, BigUint) {
    let mut rk = BigUint::from(rk0);
    let mut g = BigUint::from(g0);
    let pb = BigUint::from(p);
    for _ in 0..k {
        let e: u32 = (&rk).try_into().expect("rank exponent too large to materialize");
        let pk = Pow::pow(&pb, e);
        g = &pk * (&g - BigUint::one()) + BigUint::one();
        rk = BigUint::one() + (&rk - BigUint::one()) * &pk;
    }
    (rk, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_tower() {
        let two = BigUint::from(2u32);
        assert_eq!(tower_arith(2, 5, 21, 0), (BigUint::from(5u32), BigUint::from(21u32)));
        let (rk1, g1) = tower_arith(2, 5, 21, 1);
        assert_eq!(rk1, BigUint::from(129u32));
        assert_eq!(g1, BigUint::from(641u32));
        let (rk2, g2) = tower_arith(2, 5, 21, 2);
        assert_eq!(rk2, BigUint::one() + Pow::pow(&two, 136u32));
        assert_eq!(g2, BigUint::one() + BigUint::from(5u32) * Pow::pow(&two, 136u32));
    }

    #[test]
    fn monotone() {
        for p in [2u32, 3, 5] {
            for rk in 2..5u64 {
                for g in 2..5u64 {
                    let (r1, g1) = tower_arith(p, rk, g, 1);
                    assert!(r1 > BigUint::from(rk) && g1 > BigUint::from(g));
                }
            }
        }
    }
}

//! The double cover of S_n: sign-exact word arithmetic, canonical odd-order
//! lifts, Serre's formula, and a dense Clifford oracle.

mod clifford;
mod element;
mod serre;

use num_rational::Ratio;

pub use clifford::CliffordDense;
pub use element::{canonical_odd_lift, order_of_lift, product_sign, SpinElement};
pub use serre::{ind, omega, serre_formula, SerreResult};

use crate::error::{Error, Result};
use crate::permcore::{symmetric, Perm};

pub type CliffordQ = CliffordDense<Ratio<i64>>;
pub type CliffordZ = CliffordDense<i64>;

#[derive(Clone, Debug, serde::Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub pairs: usize,
    pub mismatches: usize,
}

/// All elements of the double cover of S_n (n <= 8), in a fixed order.
pub fn all_spin_elements(n: usize) -> Vec<SpinElement> {
    let s = symmetric(n);
    let mut out = Vec::new();
    for p in s.perms().unwrap() {
        let x = SpinElement::lift(p);
        out.push(x.clone());
        out.push(x.negate());
    }
    out
}

/// Compare word multiplication with the dense Clifford model, on all pairs
/// (`samples = None`) or on pseudo-random pairs drawn by `pick`.
pub fn clifford_oracle_check(n: usize, samples: Option<(usize, &mut dyn FnMut(usize) -> usize)>) -> Result<OracleReport> {
    if n > 8 {
        return Err(Error::Invalid("dense oracle limited to n <= 8".into()));
    }
    let elts = all_spin_elements(n);
    let dense: Vec<CliffordZ> = elts.iter().map(CliffordZ::from_spin).collect();
    let index: std::collections::HashMap<&SpinElement, usize> = elts.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut mismatches = 0;
    let mut pairs = 0;
    let mut check = |i: usize, j: usize| {
        let w = elts[i].mul(&elts[j]);
        let k = index[&w];
        if dense[i].mul(&dense[j]) != dense[k] {
            mismatches += 1;
        }
        pairs += 1;
    };
    match samples {
        None => {
            for i in 0..elts.len() {
                for j in 0..elts.len() {
                    check(i, j);
                }
            }
        }
        Some((count, pick)) => {
            for _ in 0..count {
                let i = pick(elts.len());
                let j = pick(elts.len());
                check(i, j);
            }
        }
    }
    Ok(OracleReport { n, pairs, mismatches })
}

/// Lifts of two commuting distinct involutions of A5 generate a quaternion group.
pub fn quaternion_check(x: &Perm, y: &Perm) -> bool {
    let gens = [SpinElement::lift(x), SpinElement::lift(y)];
    let mut elts = vec![SpinElement::identity(x.degree())];
    let mut k = 0;
    while k < elts.len() {
        let a = elts[k].clone();
        k += 1;
        for g in &gens {
            let b = a.mul(g);
            if !elts.contains(&b) {
                elts.push(b);
            }
        }
        if elts.len() > 8 {
            return false;
        }
    }
    elts.len() == 8 && elts.iter().filter(|e| e.order() == 4).count() == 6
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_small() {
        for n in 2..=4 {
            let r = clifford_oracle_check(n, None).unwrap();
            assert_eq!(r.mismatches, 0, "n = {n}");
        }
    }
}

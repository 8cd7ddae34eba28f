//! Dense Clifford algebra with e_i^2 = 1, used as an oracle for the word engine.
//! An element is 2^(-k/2) * sum c_S e_S over subsets S of {1..n}.

use std::ops::Neg;

use num_traits::Num;

use super::element::SpinElement;

#[derive(Clone, Debug)]
pub struct CliffordDense<T> {
    n: usize,
    coeffs: Vec<T>,
    half_pow2: u32,
}

fn blade_sign(a: usize, b: usize) -> bool {
    // parity of pairs (x in a, y in b) with x > y
    let mut swaps = 0;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps % 2 == 1
}

impl<T: Num + Clone + Neg<Output = T>> CliffordDense<T> {
    pub fn scalar(n: usize, c: T) -> Self {
        assert!(n <= 8);
        let mut coeffs = vec![T::zero(); 1 << n];
        coeffs[0] = c;
        CliffordDense { n, coeffs, half_pow2: 0 }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    /// (e_i - e_{i+1}) / sqrt 2, the image of the generator s_i (1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut x = Self::scalar(n, T::zero());
        x.coeffs[1 << (i - 1)] = T::one();
        x.coeffs[1 << i] = T::zero() - T::one();
        x.half_pow2 = 1;
        x
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = vec![T::zero(); 1 << self.n];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let t = ca.clone() * cb.clone();
                let slot = &mut out[a ^ b];
                *slot = if blade_sign(a, b) { slot.clone() - t } else { slot.clone() + t };
            }
        }
        CliffordDense { n: self.n, coeffs: out, half_pow2: self.half_pow2 + other.half_pow2 }
    }

    pub fn neg(&self) -> Self {
        CliffordDense { n: self.n, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(), half_pow2: self.half_pow2 }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exact equality after clearing the sqrt 2 denominators.
    pub fn equals(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let (lo, hi) = if self.half_pow2 <= other.half_pow2 { (self, other) } else { (other, self) };
        let d = hi.half_pow2 - lo.half_pow2;
        if d % 2 == 1 {
            return lo.is_zero() && hi.is_zero();
        }
        let two = T::one() + T::one();
        let mut scale = T::one();
        for _ in 0..d / 2 {
            scale = scale * two.clone();
        }
        lo.coeffs.iter().zip(&hi.coeffs).all(|(a, b)| a.clone() * scale.clone() == b.clone())
    }

    /// Image of a spin element: sign times the product of its canonical word.
    pub fn from_spin(x: &SpinElement) -> Self {
        let n = x.n();
        let mut acc = Self::one(n);
        for i in x.word() {
            acc = acc.mul(&Self::transposition(n, i));
        }
        if x.sign() < 0 {
            acc.neg()
        } else {
            acc
        }
    }
}

impl<T: Num + Clone + Neg<Output = T>> PartialEq for CliffordDense<T> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{CliffordQ, CliffordZ};

    #[test]
    fn generator_relations() {
        let n = 4;
        let s = |i| CliffordZ::transposition(n, i);
        assert_eq!(s(1).mul(&s(1)), CliffordZ::one(n));
        assert_eq!(s(1).mul(&s(3)), s(3).mul(&s(1)).neg());
        assert_eq!(s(1).mul(&s(2)).mul(&s(1)), s(2).mul(&s(1)).mul(&s(2)));
        let q = CliffordQ::transposition(3, 1);
        assert_eq!(q.mul(&q), CliffordQ::one(3));
        assert!(CliffordZ::one(3) != CliffordZ::one(3).neg());
    }
}

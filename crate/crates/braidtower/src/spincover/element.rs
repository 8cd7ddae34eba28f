//! Elements of the double cover of S_n as sign * W(pi).
//!
//! W(pi) = rho_2 rho_3 ... rho_n with rho_k = s_{k-1} s_{k-2} ... s_{j_k}
//! (empty when j_k = k), where j_k = (k)pi' for the successive quotients pi'.
//! Generators satisfy s_i^2 = 1, s_i s_j = -s_j s_i for |i-j| > 1 and the
//! braid relation with sign +1.

use std::fmt;

use crate::error::{Error, Result};
use crate::permcore::Perm;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpinElement {
    /// code[k] = j_k for k in 2..=n (1-based); entries 0 and 1 unused
    code: Vec<u8>,
    neg: bool,
}

impl fmt::Debug for SpinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.neg { "-" } else { "+" }, self.perm())
    }
}

impl SpinElement {
    pub fn identity(n: usize) -> SpinElement {
        assert!(n <= 255);
        SpinElement { code: (0..=n as u8).collect(), neg: false }
    }

    /// The central element of order 2.
    pub fn zhat(n: usize) -> SpinElement {
        SpinElement { neg: true, ..SpinElement::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.code.len() - 1
    }

    pub fn sign(&self) -> i8 {
        if self.neg {
            -1
        } else {
            1
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.neg && self.is_central()
    }

    /// True for 1 and zhat.
    pub fn is_central(&self) -> bool {
        self.code.iter().enumerate().skip(2).all(|(k, &j)| j as usize == k)
    }

    /// +W(pi).
    pub fn lift(p: &Perm) -> SpinElement {
        let n = p.degree();
        assert!(n <= 255);
        // work with 1-based image array; right-multiplying by s_i swaps the values i, i+1
        let mut img: Vec<u8> = std::iter::once(0).chain(p.images().iter().map(|&x| x as u8 + 1)).collect();
        let mut pos: Vec<u8> = vec![0; n + 1];
        for x in 1..=n {
            pos[img[x] as usize] = x as u8;
        }
        let mut code: Vec<u8> = (0..=n as u8).collect();
        for k in (2..=n).rev() {
            let j = img[k] as usize;
            code[k] = j as u8;
            // pi <- pi * rho_k^{-1} = pi * s_j s_{j+1} ... s_{k-1}
            for i in j..k {
                let (a, b) = (pos[i] as usize, pos[i + 1] as usize);
                img.swap(a, b);
                pos.swap(i, i + 1);
            }
            debug_assert_eq!(img[k] as usize, k);
        }
        SpinElement { code, neg: false }
    }

    /// Generator s_i (1-based, i in 1..n).
    pub fn generator(n: usize, i: usize) -> SpinElement {
        let mut e = SpinElement::identity(n);
        e.mul_letter(i);
        e
    }

    /// The canonical word as 1-based letters.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for k in 2..self.code.len() {
            let j = self.code[k] as usize;
            for i in (j..k).rev() {
                w.push(i);
            }
        }
        w
    }

    pub fn perm(&self) -> Perm {
        let n = self.n();
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut pos: Vec<u32> = (0..n as u32).collect();
        for i in self.word() {
            let (a, b) = (pos[i - 1] as usize, pos[i] as usize);
            img.swap(a, b);
            pos.swap(i - 1, i);
        }
        Perm::from_images(img)
    }

    /// Right-multiply by s_m, rewriting to canonical form.
    pub fn mul_letter(&mut self, m: usize) {
        let n = self.n();
        debug_assert!(m >= 1 && m < n);
        let mut m = m;
        let mut k = n;
        loop {
            let j = self.code[k] as usize;
            if m + 1 == j {
                self.code[k] = (j - 1) as u8;
                return;
            }
            if m == j {
                self.code[k] = (j + 1) as u8;
                return;
            }
            if (k - j) % 2 == 1 {
                self.neg = !self.neg;
            }
            if m > j {
                m -= 1;
            }
            k -= 1;
        }
    }

    pub fn mul(&self, other: &SpinElement) -> SpinElement {
        assert_eq!(self.n(), other.n());
        let mut r = self.clone();
        for i in other.word() {
            r.mul_letter(i);
        }
        r.neg ^= other.neg;
        r
    }

    pub fn inv(&self) -> SpinElement {
        let mut r = SpinElement::identity(self.n());
        for i in self.word().into_iter().rev() {
            r.mul_letter(i);
        }
        r.neg ^= self.neg;
        r
    }

    pub fn negate(&self) -> SpinElement {
        SpinElement { code: self.code.clone(), neg: !self.neg }
    }

    pub fn pow(&self, e: u64) -> SpinElement {
        let mut acc = SpinElement::identity(self.n());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let d = self.perm().order();
        if self.pow(d).is_identity() {
            d
        } else {
            2 * d
        }
    }
}

/// The unique lift of an odd-order even permutation having the same order.
pub fn canonical_odd_lift(g: &Perm) -> Result<SpinElement> {
    let d = g.order();
    if d.is_multiple_of(2) {
        return Err(Error::Invalid(format!("{g} has even order {d}")));
    }
    if !g.is_even() {
        return Err(Error::Invalid(format!("{g} is odd")));
    }
    let x = SpinElement::lift(g);
    Ok(if x.pow(d).is_identity() { x } else { x.negate() })
}

/// Order of a lift of an even permutation (for odd order, of the canonical lift).
pub fn order_of_lift(g: &Perm) -> Result<u64> {
    if !g.is_even() {
        return Err(Error::Invalid(format!("{g} is odd")));
    }
    if g.order() % 2 == 1 {
        return Ok(g.order());
    }
    Ok(SpinElement::lift(g).order())
}

/// Sign of the product of canonical lifts of odd-order even entries with product 1.
pub fn product_sign(tuple: &[Perm]) -> Result<i8> {
    let n = tuple.first().ok_or_else(|| Error::Invalid("empty tuple".into()))?.degree();
    let mut acc = SpinElement::identity(n);
    let mut prod = Perm::identity(n);
    for g in tuple {
        prod = prod.mul(g);
        acc = acc.mul(&canonical_odd_lift(g)?);
    }
    if !prod.is_identity() {
        return Err(Error::Invalid("tuple product is not 1".into()));
    }
    debug_assert!(acc.is_central());
    Ok(acc.sign())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &str, n: usize) -> Perm {
        Perm::parse(t, n).unwrap()
    }

    #[test]
    fn lift_round_trip() {
        for t in ["()", "(1 2)", "(1 3 2 5)(4 6)", "(1 6)(2 5)(3 4)"] {
            let x = p(t, 6);
            assert_eq!(SpinElement::lift(&x).perm(), x);
        }
    }

    #[test]
    fn relations() {
        let n = 5;
        let s = |i| SpinElement::generator(n, i);
        for i in 1..n {
            assert!(s(i).mul(&s(i)).is_identity());
        }
        assert_eq!(s(1).mul(&s(3)), s(3).mul(&s(1)).negate());
        assert_eq!(s(1).mul(&s(2)).mul(&s(1)), s(2).mul(&s(1)).mul(&s(2)));
    }

    #[test]
    fn lift_orders() {
        assert_eq!(order_of_lift(&p("(1 2)(3 4)", 8)).unwrap(), 4);
        assert_eq!(order_of_lift(&p("(1 2)(3 4)(5 6)(7 8)", 8)).unwrap(), 2);
        assert_eq!(order_of_lift(&p("(1 2 3)", 5)).unwrap(), 3);
        assert!(order_of_lift(&p("(1 2)", 5)).is_err());
        let z = SpinElement::lift(&p("(1 2)(3 4)", 5));
        assert_eq!(z.mul(&z), SpinElement::zhat(5));
    }

    #[test]
    fn canonical_lifts() {
        let g = p("(1 2 3 4 5)", 5);
        let x = canonical_odd_lift(&g).unwrap();
        assert!(x.pow(5).is_identity());
        assert!(canonical_odd_lift(&Perm::identity(5)).unwrap().is_identity());
        let t = SpinElement::lift(&p("(1 2 3)", 5));
        let mut powers = [t.pow(3).sign(), t.negate().pow(3).sign()];
        powers.sort();
        assert_eq!(powers, [-1, 1]);
        assert!(canonical_odd_lift(&p("(1 2)(3 4)", 5)).is_err());
    }

    #[test]
    fn product_signs() {
        let t = |v: &[&str]| v.iter().map(|x| p(x, 5)).collect::<Vec<_>>();
        assert_eq!(product_sign(&t(&["(1 2 3)", "(1 3 2)", "(1 4 5)", "(1 5 4)"])).unwrap(), 1);
        let g = p("(1 2 3 4 5)", 5).pow(3);
        assert_eq!(product_sign(&[g, p("(3 5 1)", 5), p("(2 4 1)", 5)]).unwrap(), -1);
        assert_eq!(product_sign(&t(&["(1 2 3)", "(1 2 3)", "(1 2 3)"])).unwrap(), 1);
        assert!(product_sign(&t(&["(1 2 3)", "(1 2 3)"])).is_err());
    }
}

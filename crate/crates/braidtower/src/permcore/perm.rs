use std::fmt;

use crate::error::{parse_err, Error, Result};

/// A permutation of {1..n}, stored 0-based. Composition is a right action:
/// `x^(a*b) = (x^a)^b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { img: (0..n as u32).collect() }
    }

    /// From 0-based images; panics if not a bijection.
    pub fn from_images(img: Vec<u32>) -> Perm {
        let p = Perm { img };
        assert!(p.is_bijection(), "images do not form a bijection");
        p
    }

    /// From 1-based images, as written in tables.
    pub fn from_images1(img: &[u32]) -> Result<Perm> {
        let n = img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in img {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(parse_err(x.to_string(), "not a bijection on 1..n"));
            }
            seen[x as usize - 1] = true;
            out.push(x - 1);
        }
        Ok(Perm { img: out })
    }

    /// Build from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Perm {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                img[x as usize] = c[(k + 1) % c.len()];
            }
        }
        Perm::from_images(img)
    }

    fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.img.len()];
        for &x in &self.img {
            let x = x as usize;
            if x >= seen.len() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    /// 1-based images.
    pub fn images1(&self) -> Vec<u32> {
        self.img.iter().map(|x| x + 1).collect()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.img[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::Degree(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// `self` first, then `other`. Degrees must agree.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { img: self.img.iter().map(|&x| other.img[x as usize]).collect() }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Perm { img }
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        e = e.abs();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`
    pub fn conj(&self, g: &Perm) -> Perm {
        g.inv().mul(self).mul(g)
    }

    /// Disjoint cycles (0-based) including fixed points, ordered by least element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s as u32];
            seen[s] = true;
            let mut x = self.img[s];
            while x as usize != s {
                seen[x as usize] = true;
                c.push(x);
                x = self.img[x as usize];
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths, sorted descending, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer_lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> usize {
        self.img.iter().enumerate().filter(|(i, &x)| *i as u32 == x).count()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Parse disjoint-cycle notation over {1..n}; "()" is the identity.
    pub fn parse(text: &str, n: usize) -> Result<Perm> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        let t = text.trim();
        if t.is_empty() {
            return Err(parse_err(text, "empty permutation"));
        }
        let mut rest = t;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                let tok: String = rest.chars().take_while(|c| *c != '(').collect();
                return Err(parse_err(tok.trim(), "expected `(`"));
            }
            let close = rest.find(')').ok_or_else(|| parse_err(rest, "unbalanced parenthesis"))?;
            let body = &rest[1..close];
            if body.contains('(') {
                return Err(parse_err(&rest[..=close], "nested parenthesis"));
            }
            let mut cyc = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                let v: usize = tok.parse().map_err(|_| parse_err(tok, "not a positive integer"))?;
                if v == 0 || v > n {
                    return Err(parse_err(tok, format!("point out of range 1..{n}")));
                }
                if used[v - 1] {
                    return Err(parse_err(tok, "repeated point"));
                }
                used[v - 1] = true;
                cyc.push(v as u32 - 1);
            }
            for (k, &x) in cyc.iter().enumerate() {
                img[x as usize] = cyc[(k + 1) % cyc.len()];
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Perm { img })
    }
}

fn num_integer_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() == 1 {
                continue;
            }
            any = true;
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_images() {
        let p = Perm::parse("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images1(), vec![2, 3, 1, 5, 4]);
        assert!(Perm::parse("()", 4).unwrap().is_identity());
    }

    #[test]
    fn right_action() {
        let a = Perm::parse("(1 2)", 3).unwrap();
        let b = Perm::parse("(2 3)", 3).unwrap();
        assert_eq!(a.mul(&b).to_string(), "(1 3 2)");
        let c = Perm::parse("(1 2 3)", 3).unwrap();
        assert!(c.mul(&c).mul(&c).is_identity());
        assert!(c.mul(&c.inv()).is_identity());
    }

    #[test]
    fn print_sorted_by_least_point() {
        let p = Perm::parse("(6 7 3)(5 1 4 9 8)", 9).unwrap();
        assert_eq!(p.to_string(), "(1 4 9 8 5)(3 6 7)");
    }

    #[test]
    fn parse_errors_name_token() {
        match Perm::parse("(1 2 2)", 3) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "2"),
            e => panic!("{e:?}"),
        }
        match Perm::parse("(1 7)", 5) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "7"),
            e => panic!("{e:?}"),
        }
        assert!(Perm::parse("(1 2", 3).is_err());
        assert!(Perm::parse("(1 (2))", 3).is_err());
        assert!(Perm::parse("1 2", 3).is_err());
    }
}

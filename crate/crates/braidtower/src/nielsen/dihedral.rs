use super::canon::{normalizer_automorphisms, Canon};
use super::enumerate::enumerate_nielsen;
use super::spec::ClassSpec;
use crate::braidact::{BraidAction, Reduced};
use crate::error::{Error, Result};
use crate::permcore::dihedral;

#[derive(Clone, Debug, serde::Serialize)]
pub struct DihedralReport {
    pub p: u64,
    pub k: u32,
    pub n: u64,
    pub absolute: usize,
    pub inner: usize,
    pub reduced_absolute: usize,
    pub expected_absolute: u64,
    pub expected_inner: u64,
    /// q2 cycle lengths on absolute classes, sorted, with repetition
    pub q2_widths: Vec<usize>,
}

impl DihedralReport {
    pub fn passes(&self) -> bool {
        self.absolute as u64 == self.expected_absolute
            && self.inner as u64 == self.expected_inner
            && self.reduced_absolute == self.absolute
            && self.q2_widths.contains(&1)
            && self.q2_widths.contains(&(self.n as usize))
    }
}

fn phi(n: u64) -> u64 {
    (1..=n).filter(|&a| num_integer::gcd(a, n) == 1).count() as u64
}

/// Nielsen classes of four involutions in D_N, N = p^(k+1), acting on Z/N.
pub fn dihedral_reference(p: u64, k: u32) -> Result<DihedralReport> {
    let n = p.pow(k + 1);
    if p.is_multiple_of(2) || n > 343 {
        return Err(Error::Invalid(format!("need odd p with p^(k+1) <= 343, got {p}^{}", k + 1)));
    }
    let g = dihedral(n as usize);
    let refl = g.classes().iter().position(|c| c.elt_order == 2).unwrap() as u32;
    let spec = ClassSpec::from_slots(vec![vec![refl]; 4])?;
    let inner_canon = Canon::inner(&g);
    let inner = enumerate_nielsen(&inner_canon, &spec, u128::MAX)?;
    let abs_canon = Canon::with_automorphisms(&g, normalizer_automorphisms(&g, Some(&spec))?);
    let abs = enumerate_nielsen(&abs_canon, &spec, u128::MAX)?;
    let ba = BraidAction::new(&abs_canon, abs.clone())?;
    let mut q2_widths: Vec<usize> = ba.q(2).cycles().iter().map(|c| c.len()).collect();
    q2_widths.sort_unstable();
    let red = Reduced::new(&ba)?;
    Ok(DihedralReport {
        p,
        k,
        n,
        absolute: abs.len(),
        inner: inner.len(),
        reduced_absolute: red.len(),
        expected_absolute: n + n / p,
        expected_inner: (n + n / p) * phi(n) / 2,
        q2_widths,
    })
}

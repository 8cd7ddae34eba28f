use crate::error::{Error, Result};
use crate::permcore::permgroup_orbits;
use crate::permcore::Perm;

/// sum over cycles of (s^2 - 1) / 8; defined for odd-order permutations.
pub fn omega(g: &Perm) -> u64 {
    g.cycles().iter().map(|c| (c.len() * c.len() - 1) as u64 / 8).sum()
}

/// index = n - number of cycles
pub fn ind(g: &Perm) -> usize {
    g.degree() - g.cycles().len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SerreResult {
    pub applicable: bool,
    pub sign: i8,
}

/// (-1)^(sum omega), applicable only for transitive genus-0 tuples.
pub fn serre_formula(tuple: &[Perm]) -> Result<SerreResult> {
    let n = tuple.first().ok_or_else(|| Error::Invalid("empty tuple".into()))?.degree();
    if tuple.iter().any(|g| g.order() % 2 == 0) {
        return Err(Error::Invalid("entries must have odd order".into()));
    }
    let transitive = permgroup_orbits(n, tuple).len() == 1;
    let genus0 = tuple.iter().map(ind).sum::<usize>() == 2 * (n - 1);
    let w: u64 = tuple.iter().map(omega).sum();
    Ok(SerreResult { applicable: transitive && genus0, sign: if w.is_multiple_of(2) { 1 } else { -1 } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omegas() {
        assert_eq!(omega(&Perm::parse("(1 2 3)", 5).unwrap()), 1);
        assert_eq!(omega(&Perm::parse("(1 2 3 4 5)", 5).unwrap()), 3);
        let hm: Vec<Perm> = ["(1 2 3)", "(1 3 2)", "(1 4 5)", "(1 5 4)"].iter().map(|t| Perm::parse(t, 5).unwrap()).collect();
        assert_eq!(serre_formula(&hm).unwrap(), SerreResult { applicable: true, sign: 1 });
        let t = Perm::parse("(1 2 3)", 3).unwrap();
        assert!(!serre_formula(&[t.clone(), t.clone(), t]).unwrap().applicable);
    }
}

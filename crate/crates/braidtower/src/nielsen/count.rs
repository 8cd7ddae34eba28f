use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::permcore::{Elt, FiniteGroup, Group};

/// Number of (u_1..u_r), u_i in class C_i, with u_1 ... u_r g = 1, by iterated
/// convolution of class indicator functions.
pub fn class_product_count<T: Clone + Zero + One>(g: &Group, classes: &[u32], target: Elt) -> Result<T> {
    let n = g.order();
    if target as usize >= n {
        return Err(Error::Invalid(format!("element {target} not in group")));
    }
    let members: Vec<Vec<Elt>> = classes
        .iter()
        .map(|&c| if (c as usize) < g.classes().len() { Ok(g.class_elements(c)) } else { Err(Error::Invalid(format!("class {c} not in group"))) })
        .collect::<Result<_>>()?;
    let mut f = vec![T::zero(); n];
    f[0] = T::one();
    for cls in &members {
        let mut next = vec![T::zero(); n];
        for (z, fz) in f.iter().enumerate() {
            if fz.is_zero() {
                continue;
            }
            for &y in cls {
                let w = g.mul(z as Elt, y) as usize;
                next[w] = next[w].clone() + fz.clone();
            }
        }
        f = next;
    }
    Ok(f[g.inv(target) as usize].clone())
}

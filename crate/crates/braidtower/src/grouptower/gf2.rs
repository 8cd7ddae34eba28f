//! Dense GF(2) row reduction on packed u64 rows.

pub type Row = Vec<u64>;

pub fn words(width: usize) -> usize {
    width.div_ceil(64)
}

#[inline]
pub fn get(r: &[u64], i: usize) -> bool {
    r[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub fn flip(r: &mut [u64], i: usize) {
    r[i / 64] ^= 1 << (i % 64);
}

#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn lowest_bit(r: &[u64], limit: usize) -> Option<usize> {
    for (w, &x) in r.iter().enumerate() {
        if x != 0 {
            let i = w * 64 + x.trailing_zeros() as usize;
            return (i < limit).then_some(i);
        }
    }
    None
}

/// Echelon basis with pivots at the lowest set bit. Columns at index >= `width`
/// (an augmented right-hand side) are never pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    // pivot column -> row
    rows: Vec<Option<Row>>,
    rank: usize,
}

pub enum Insert {
    Independent,
    Dependent,
    /// Row reduced to zero on the coefficient columns but not on the rhs.
    Inconsistent,
}

impl Echelon {
    pub fn new(width: usize) -> Echelon {
        Echelon { width, rows: vec![None; width], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn reduce(&self, row: &mut [u64]) {
        while let Some(p) = lowest_bit_from(row, self.width, &self.rows) {
            xor_into(row, self.rows[p].as_ref().unwrap());
        }
    }

    pub fn insert(&mut self, mut row: Row) -> Insert {
        self.reduce(&mut row);
        match lowest_bit(&row, self.width) {
            Some(p) => {
                self.rows[p] = Some(row);
                self.rank += 1;
                Insert::Independent
            }
            None => {
                if row.iter().any(|&x| x != 0) {
                    Insert::Inconsistent
                } else {
                    Insert::Dependent
                }
            }
        }
    }

    /// Basis of {x : row . x = 0 for every inserted row}, one vector per free column,
    /// in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Row> {
        let w = words(self.width);
        // fully reduce
        let mut red: Vec<Option<Row>> = self.rows.clone();
        for p in (0..self.width).rev() {
            if red[p].is_none() {
                continue;
            }
            let rp = red[p].clone().unwrap();
            for q in 0..p {
                if let Some(rq) = red[q].as_mut() {
                    if get(rq, p) {
                        xor_into(rq, &rp);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for f in 0..self.width {
            if red[f].is_some() {
                continue;
            }
            let mut v = vec![0u64; w];
            flip(&mut v, f);
            for p in 0..self.width {
                if let Some(rp) = &red[p] {
                    if get(rp, f) {
                        flip(&mut v, p);
                    }
                }
            }
            out.push(v);
        }
        out
    }
}

fn lowest_bit_from(row: &[u64], width: usize, rows: &[Option<Row>]) -> Option<usize> {
    // lowest set coefficient bit that has a pivot row
    for (w, &x) in row.iter().enumerate() {
        let mut bits = x;
        while bits != 0 {
            let i = w * 64 + bits.trailing_zeros() as usize;
            if i >= width {
                return None;
            }
            if rows[i].is_some() {
                return Some(i);
            }
            bits &= bits - 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_nullspace() {
        // x0 + x1 = 0, x1 + x2 = 0 over 3 vars -> nullspace spanned by 111
        let mut e = Echelon::new(3);
        e.insert(vec![0b011]);
        e.insert(vec![0b110]);
        assert!(matches!(e.insert(vec![0b101]), Insert::Dependent));
        let ns = e.nullspace();
        assert_eq!(ns, vec![vec![0b111]]);
    }

    #[test]
    fn inconsistency_detected() {
        // x0 = 1, x0 = 0 with rhs in column 1 of width 1
        let mut e = Echelon::new(1);
        e.insert(vec![0b11]);
        assert!(matches!(e.insert(vec![0b01]), Insert::Inconsistent));
    }
}

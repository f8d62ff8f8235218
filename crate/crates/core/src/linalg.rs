//! Exact dense linear algebra over a field.

use crate::field::Field;

/// Row space kept in reduced row echelon form as rows are added.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        EchelonBasis { field, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `row` against the basis; returns the residue.
    pub fn reduce(&self, row: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut r = row.to_vec();
        for (basis_row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(basis_row) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
        r
    }

    /// Adds a row; returns `false` if it was already in the span.
    pub fn insert(&mut self, row: &[F::Elem]) -> bool {
        assert_eq!(row.len(), self.ncols);
        let f = self.field.clone();
        let mut r = self.reduce(row);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("pivot is nonzero");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // keep the basis fully reduced in the new pivot column
        for existing in self.rows.iter_mut() {
            if f.is_zero(&existing[p]) {
                continue;
            }
            let c = existing[p].clone();
            for (x, b) in existing.iter_mut().zip(&r) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![f.zero(); self.ncols];
            v[free] = f.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = f.neg(&row[free]);
            }
            out.push(v);
        }
        out
    }
}

/// Reduced row echelon form of `rows`: the nonzero rows and their pivot columns.
pub fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut basis = EchelonBasis::new(field.clone(), ncols);
    for r in rows {
        basis.insert(r);
    }
    (basis.rows, basis.pivots)
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    rref(field, rows).0.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rationals, Ring};

    fn m(rows: &[&[i64]]) -> Vec<Vec<num_rational::BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| Rationals.from_i64(v)).collect()).collect()
    }

    #[test]
    fn rref_and_nullspace() {
        let rows = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let (r, piv) = rref(&Rationals, &rows);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, m(&[&[1, 0, 1], &[0, 1, 1]]));
        let mut b = EchelonBasis::new(Rationals, 3);
        for row in &rows {
            b.insert(row);
        }
        let ns = b.nullspace();
        assert_eq!(ns, m(&[&[-1, -1, 1]]));
        assert_eq!(rank(&Rationals, &rows), 2);
    }
}

//! Dense exact linear algebra over the coefficient field.
//!
//! This is the independent counting route used to audit Gröbner-derived
//! dimensions, to pick minimal generators, and to extract kernels of graded
//! maps degree by degree.

use crate::field::{Coeff, CoeffField};

/// Incremental row-echelon space: rows are inserted one at a time and kept in
/// reduced echelon form, so rank growth and membership are O(rows · len).
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: CoeffField,
    len: usize,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: CoeffField, len: usize) -> Self {
        RowSpace { field, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored rows in place; the result has zeros in
    /// every pivot column.
    pub fn reduce(&self, row: &mut [Coeff]) {
        debug_assert_eq!(row.len(), self.len);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if self.field.is_zero(&row[p]) {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                *x = self.field.sub(x, &self.field.mul(&factor, y));
            }
        }
    }

    /// Insert a row; returns true when it was independent (rank grew).
    pub fn insert(&mut self, mut row: Vec<Coeff>) -> bool {
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|c| !self.field.is_zero(c)) else {
            return false;
        };
        let inv = self.field.inv(&row[p]).expect("nonzero pivot");
        for x in row.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        // back-substitute into existing rows to keep reduced form
        for r in self.rows.iter_mut() {
            if !self.field.is_zero(&r[p]) {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    *x = self.field.sub(x, &self.field.mul(&f, y));
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, row: &[Coeff]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|c| self.field.is_zero(c))
    }
}

/// Rank of a dense matrix given as rows.
pub fn rank(field: &CoeffField, rows: &[Vec<Coeff>], len: usize) -> usize {
    let mut space = RowSpace::new(field.clone(), len);
    for r in rows {
        space.insert(r.clone());
    }
    space.rank()
}

/// Basis of the kernel of the linear map with the given columns: returns
/// coefficient vectors `v` (one entry per column) with `sum v_i col_i = 0`.
pub fn kernel(field: &CoeffField, columns: &[Vec<Coeff>], len: usize) -> Vec<Vec<Coeff>> {
    let ncols = columns.len();
    // augment each column with an identity tag; echelonize over the value part
    let mut space = RowSpace::new(field.clone(), len + ncols);
    let mut out = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        debug_assert_eq!(col.len(), len);
        let mut row: Vec<Coeff> = col.clone();
        row.extend((0..ncols).map(|j| if j == i { field.one() } else { field.zero() }));
        // reduce only against rows whose pivot is in the value part
        let mut r = row.clone();
        space.reduce(&mut r);
        if r[..len].iter().all(|c| field.is_zero(c)) {
            // dependent: the tag part encodes the kernel vector
            out.push(r[len..].to_vec());
            // do not insert: keeping dependent rows out preserves the invariant
            // that all stored pivots sit in the value part
        } else {
            space.insert(row);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> CoeffField {
        CoeffField::default_prime()
    }

    fn v(field: &CoeffField, xs: &[i64]) -> Vec<Coeff> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn rank_of_identity() {
        let field = f();
        let rows = vec![v(&field, &[1, 0]), v(&field, &[0, 1])];
        assert_eq!(rank(&field, &rows, 2), 2);
    }

    #[test]
    fn rank_detects_dependence() {
        let field = f();
        let rows = vec![v(&field, &[1, 2, 3]), v(&field, &[2, 4, 6]), v(&field, &[0, 1, 1])];
        assert_eq!(rank(&field, &rows, 3), 2);
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let field = f();
        // columns (1,0), (0,1), (1,1): kernel spanned by (1,1,-1)
        let cols = vec![v(&field, &[1, 0]), v(&field, &[0, 1]), v(&field, &[1, 1])];
        let ker = kernel(&field, &cols, 2);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        // verify: k0*(1,0) + k1*(0,1) + k2*(1,1) = 0
        let c0 = field.add(&k[0], &k[2]);
        let c1 = field.add(&k[1], &k[2]);
        assert!(field.is_zero(&c0) && field.is_zero(&c1));
        assert!(!k.iter().all(|c| field.is_zero(c)));
    }

    #[test]
    fn membership_in_row_space() {
        let field = f();
        let mut space = RowSpace::new(field.clone(), 3);
        space.insert(v(&field, &[1, 1, 0]));
        space.insert(v(&field, &[0, 1, 1]));
        assert!(space.contains(&v(&field, &[1, 2, 1])));
        assert!(!space.contains(&v(&field, &[1, 0, 1])));
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl GfMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> GfMatrix {
        GfMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, size: usize) -> GfMatrix {
        let mut m = GfMatrix::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<GfMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &x in row {
                data.push(field.check(x)?);
            }
        }
        Ok(GfMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Elem>]) -> Result<GfMatrix> {
        let mut m = GfMatrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!(
                    "column {j} has {} entries, expected {rows}",
                    col.len()
                )));
            }
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, field.check(x)?);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut t = GfMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = GfMatrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector `x` times this matrix.
    pub fn vec_mul(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        if x.len() != self.rows {
            return Err(Error::Shape(format!(
                "vector of length {} against {} rows",
                x.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(a, g));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    m.add_row_multiple(i, r, f.neg(factor));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : M x = 0}`, one basis vector per row.
    pub fn kernel(&self) -> GfMatrix {
        let f = &self.field;
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = GfMatrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            k.set(b, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(b, pc, f.neg(red.get(r, fc)));
            }
        }
        k
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn scale_row(&mut self, r: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), s);
            self.set(r, c, v);
        }
    }

    /// `row[dst] += s * row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self
                .field
                .add(self.get(dst, c), self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> GfMatrix {
        let mut m = GfMatrix::zeros(&self.field, self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn identity_rank_and_kernel() {
        let f = gf(2);
        let id = GfMatrix::identity(&f, 3);
        assert_eq!(id.rank(), 3);
        assert_eq!(id.kernel().rows(), 0);
    }

    #[test]
    fn all_ones_row() {
        let f = gf(2);
        let m = GfMatrix::from_rows(&f, &[vec![1, 1, 1, 1], vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.rank(), 3);
        let prod = m.mul(&k.transpose()).unwrap();
        assert!(prod.to_rows().iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn simplex_generator_rank() {
        let f = gf(2);
        let cols: Vec<Vec<Elem>> = (1u32..8)
            .map(|v| vec![v >> 2 & 1, v >> 1 & 1, v & 1])
            .collect();
        let m = GfMatrix::from_columns(&f, 3, &cols).unwrap();
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kernel_is_orthogonal_over_gf9() {
        let f = gf(9);
        let m = GfMatrix::from_rows(&f, &[vec![1, 2, 3, 4, 5], vec![0, 1, 7, 8, 6]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.rows() + m.rank(), 5);
        let prod = m.mul(&k.transpose()).unwrap();
        assert!(prod.to_rows().iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn rank_invariant_under_row_operations() {
        let f = gf(5);
        let mut m =
            GfMatrix::from_rows(&f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2]])
                .unwrap();
        let r = m.rank();
        m.swap_rows(0, 2);
        assert_eq!(m.rank(), r);
        m.scale_row(1, 3);
        assert_eq!(m.rank(), r);
    }

    #[test]
    fn shape_errors() {
        let f = gf(3);
        assert!(matches!(
            GfMatrix::from_rows(&f, &[vec![0, 1], vec![1]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            GfMatrix::from_rows(&f, &[vec![0, 3]]),
            Err(Error::ElementOutOfRange { elem: 3, q: 3 })
        ));
    }
}

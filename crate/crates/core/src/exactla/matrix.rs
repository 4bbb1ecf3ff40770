use std::fmt;

use super::{LinAlgError, Rational, SubspaceBasis};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from explicit rows; all rows must share one length.
    /// An empty row list yields a `0 × cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a * &other[(k, c)];
                    out[(r, c)] += &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    /// Reduced row echelon form.
    ///
    /// Columns are scanned left to right; within a column the pivot is the
    /// first nonzero entry at or below the current pivot row.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let inv = m[(pivot_row, col)].recip().expect("pivot is nonzero");
            for c in col..m.cols {
                m[(pivot_row, c)] = &m[(pivot_row, c)] * &inv;
            }
            for r in 0..m.rows {
                if r == pivot_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = &factor * &m[(pivot_row, c)];
                    m[(r, c)] -= &delta;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Canonical basis of `{ v : self · v = 0 }`.
    pub fn nullspace(&self) -> SubspaceBasis {
        let Echelon { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&reduced[(r, free)];
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.cols, vectors).expect("nullspace vectors have ambient length")
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn rref_proportional_rows() {
        let e = Matrix::from_i64(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(e.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(e.rank(), 1);
        assert_eq!(e.pivots, vec![0]);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(3);
        let e = id.rref();
        assert_eq!(e.reduced, id);
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn rref_two_by_three() {
        // Row2 ← row2; row1 ← row1 − row2 gives [[1,0,-1],[0,1,1]].
        let m = Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
        let e = m.rref();
        assert_eq!(e.reduced, Matrix::from_i64(&[&[1, 0, -1], &[0, 1, 1]]));
        assert_eq!(e.rank(), 2);
        // Undo the one elementary operation used: R1 = E1 + E2 with E = rref.
        let undo = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(undo.mul(&e.reduced).unwrap(), m);
    }

    #[test]
    fn rref_needs_row_swap() {
        let e = Matrix::from_i64(&[&[0, 3], &[2, 0]]).rref();
        assert_eq!(e.reduced, Matrix::identity(2));
    }

    #[test]
    fn nullspace_of_identity_is_trivial() {
        let ns = Matrix::identity(2).nullspace();
        assert_eq!(ns.dim(), 0);
        assert_eq!(ns.ambient_dim(), 2);
    }

    #[test]
    fn nullspace_single_equation() {
        let ns = Matrix::from_i64(&[&[1, 1]]).nullspace();
        assert_eq!(ns.dim(), 1);
        // Canonical form has leading entry 1.
        assert_eq!(ns.vectors(), &[ints(&[1, -1])]);
    }

    #[test]
    fn nullspace_of_zero_matrix_is_standard_basis() {
        let ns = Matrix::zeros(3, 4).nullspace();
        assert_eq!(ns.dim(), 4);
        for (i, v) in ns.vectors().iter().enumerate() {
            let mut e = ints(&[0, 0, 0, 0]);
            e[i] = Rational::one();
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn nullspace_of_empty_row_matrix() {
        let m = Matrix::from_rows(3, vec![]).unwrap();
        assert_eq!(m.nullspace().dim(), 3);
    }

    #[test]
    fn mul_vec_checks_length() {
        let m = Matrix::identity(2);
        assert!(m.mul_vec(&ints(&[1, 2, 3])).is_err());
        assert_eq!(m.mul_vec(&ints(&[1, 2])).unwrap(), ints(&[1, 2]));
    }
}

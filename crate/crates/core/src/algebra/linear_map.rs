use serde::{Deserialize, Serialize};

use crate::exactla::{LinAlgError, Matrix, Rational};

/// Linear map in the chosen basis: column `j` is the image of `e_j`, so the
/// entry at `(row r, column c)` is the coefficient of `e_r` in `f(e_c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap(Matrix);

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap(matrix)
    }

    pub fn identity(n: usize) -> Self {
        LinearMap(Matrix::identity(n))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap(Matrix::zeros(rows, cols))
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let mut m = Matrix::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        LinearMap(m)
    }

    /// Map sending `e_from` to `e_to` and every other basis vector to zero.
    pub fn elementary(n: usize, to: usize, from: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m[(to, from)] = Rational::one();
        LinearMap(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        self.0.mul_vec(v)
    }

    pub fn image_of_basis(&self, j: usize) -> Vec<Rational> {
        self.0.column(j)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, LinAlgError> {
        self.0.mul(&other.0).map(LinearMap)
    }

    pub fn scale(&self, s: &Rational) -> LinearMap {
        LinearMap(self.0.scale(s))
    }

    /// Column-major flattening: the images of `e_1, …, e_n` concatenated.
    pub fn flatten(&self) -> Vec<Rational> {
        self.0.transpose().entries().to_vec()
    }

    /// Inverse of [`LinearMap::flatten`] for an `n × n` map.
    pub fn from_flat(n: usize, flat: &[Rational]) -> Result<LinearMap, LinAlgError> {
        let columns_as_rows = Matrix::from_entries(n, n, flat.to_vec())?;
        Ok(LinearMap(columns_as_rows.transpose()))
    }

    /// Rows of rational strings, the shape used in machine-readable output.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows())
            .map(|r| self.0.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl Serialize for LinearMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Rational>> = (0..self.rows()).map(|r| self.0.row(r).to_vec()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinearMap {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(cols, rows)
            .map(LinearMap)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int_vector;

    #[test]
    fn flatten_is_column_major() {
        let m = LinearMap::new(Matrix::from_i64(&[&[1, 2], &[3, 4]]));
        assert_eq!(m.flatten(), int_vector(&[1, 3, 2, 4]));
        assert_eq!(LinearMap::from_flat(2, &m.flatten()).unwrap(), m);
    }

    #[test]
    fn columns_are_images() {
        let m = LinearMap::new(Matrix::from_i64(&[&[1, 2], &[3, 4]]));
        assert_eq!(m.apply(&int_vector(&[0, 1])).unwrap(), int_vector(&[2, 4]));
        assert_eq!(m.image_of_basis(1), int_vector(&[2, 4]));
        let e = LinearMap::elementary(2, 1, 0);
        assert_eq!(e.apply(&int_vector(&[5, 7])).unwrap(), int_vector(&[0, 5]));
    }

    #[test]
    fn serde_rows_of_strings() {
        let m = LinearMap::diagonal(&[Rational::new(1, 2), Rational::from_int(-3)]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","0"],["0","-3"]]"#);
        assert_eq!(serde_json::from_str::<LinearMap>(&s).unwrap(), m);
        assert!(serde_json::from_str::<LinearMap>(r#"[["1"],["0","1"]]"#).is_err());
    }
}

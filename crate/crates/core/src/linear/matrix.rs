use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A linear map `K^cols -> K^rows` stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a map from its rows; `cols` is needed when there are none.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// The `n × 1` column vector with the given entries.
    pub fn column(entries: Vec<Rational>) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    /// The `1 × n` row vector with the given entries.
    pub fn row(entries: Vec<Rational>) -> Self {
        Self {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: &Rational) {
        self.data[r * self.cols + c] += value;
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn has_shape(&self, rows: usize, cols: usize) -> bool {
        self.rows == rows && self.cols == cols
    }

    /// `self ∘ rhs`. Panics if the inner dimensions differ.
    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "composing {}x{} after {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut out = LinearMap::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`, with `self` as the slow index.
    pub fn tensor(&self, rhs: &LinearMap) -> LinearMap {
        let (rows, cols) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = LinearMap::zero(rows, cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if !b.is_zero() {
                            out.data[(r1 * rhs.rows + r2) * cols + c1 * rhs.cols + c2] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Tensor product of several maps, left to right.
    pub fn tensor_all(maps: &[&LinearMap]) -> LinearMap {
        maps.iter().fold(LinearMap::identity(1), |acc, m| acc.tensor(m))
    }

    pub fn add(&self, rhs: &LinearMap) -> LinearMap {
        assert!(self.has_shape(rhs.rows, rhs.cols), "adding maps of different shapes");
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    /// Columns (domain basis vectors) on which the two maps differ.
    pub fn differing_columns(&self, rhs: &LinearMap) -> Vec<usize> {
        assert!(self.has_shape(rhs.rows, rhs.cols), "comparing maps of different shapes");
        (0..self.cols)
            .filter(|&c| (0..self.rows).any(|r| self.get(r, c) != rhs.get(r, c)))
            .collect()
    }
}

/// The flip `X ⊗ Y -> Y ⊗ X` for `dim X = m`, `dim Y = n`.
pub fn flip(m: usize, n: usize) -> LinearMap {
    let mut out = LinearMap::zero(m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            out.set(j * m + i, i * n + j, Rational::one());
        }
    }
    out
}

/// Decodes a tensor basis index into its factor indices.
pub fn split_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        if d > 0 {
            *slot = index % d;
            index /= d;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::rational;

    fn m(rows: &[&[i64]]) -> LinearMap {
        let cols = rows.first().map_or(0, |r| r.len());
        LinearMap::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rational(x, 1)).collect()).collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn kronecker_uses_first_factor_as_slow_index() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let k = a.tensor(&b);
        assert_eq!(
            k,
            m(&[&[0, 1, 0, 2], &[1, 0, 2, 0], &[0, 3, 0, 4], &[3, 0, 4, 0]])
        );
    }

    #[test]
    fn flip_swaps_legs() {
        let f = flip(2, 3);
        // e_1 ⊗ e_2 (index 5) goes to e_2 ⊗ e_1 (index 2 * 2 + 1)
        assert_eq!(f.get(5, 5), &rational(1, 1));
        assert_eq!(f.compose(&flip(3, 2)), LinearMap::identity(6));
        assert_eq!(split_index(5, &[2, 3]), vec![1, 2]);
    }

    #[test]
    fn composition_and_naturality() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[5], &[6], &[7]]);
        // flip ∘ (a ⊗ b) = (b ⊗ a) ∘ flip
        let lhs = flip(2, 3).compose(&a.tensor(&b));
        let rhs = b.tensor(&a).compose(&flip(2, 1));
        assert_eq!(lhs, rhs);
        assert!(LinearMap::zero(2, 2).is_zero());
        assert_eq!(a.compose(&LinearMap::identity(2)), a);
        assert!(LinearMap::from_rows(vec![vec![rational(1, 1)]], 2).is_err());
    }
}

use std::ops::{Index, IndexMut};

use crate::linalg::Matrix;
use crate::poly::PolyQ;
use crate::rational::Q;

/// Dense matrix with [`PolyQ`] entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<PolyQ>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, data: vec![PolyQ::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<PolyQ>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_rational(m: &Matrix) -> Self {
        let mut out = PolyMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out[(i, j)] = PolyQ::constant(m[(i, j)].clone());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<PolyQ> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[PolyQ]) {
        assert_eq!(col.len(), self.rows);
        for (i, p) in col.iter().enumerate() {
            self[(i, j)] = p.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(PolyQ::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &PolyQ)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, p)| ((k / self.cols, k % self.cols), p))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `m * self` for a rational matrix `m`.
    pub fn left_mul_rational(&self, m: &Matrix) -> PolyMatrix {
        assert_eq!(m.cols(), self.rows, "dimension mismatch in product");
        let mut out = PolyMatrix::zeros(m.rows(), self.cols);
        for i in 0..m.rows() {
            for k in 0..m.cols() {
                let a = &m[(i, k)];
                if num_traits::Zero::is_zero(a) {
                    continue;
                }
                for j in 0..self.cols {
                    let b = &self[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &b.scale(a);
                    }
                }
            }
        }
        out
    }

    /// `self * m` for a rational matrix `m`.
    pub fn right_mul_rational(&self, m: &Matrix) -> PolyMatrix {
        self.transpose().left_mul_rational(&m.transpose()).transpose()
    }

    pub fn mul_vec(&self, v: &[PolyQ]) -> Vec<PolyQ> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = PolyQ::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Entrywise evaluation `y -> point`.
    pub fn eval(&self, point: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].eval(point);
            }
        }
        m
    }

    pub fn max_var(&self) -> usize {
        self.data.iter().map(PolyQ::max_var).max().unwrap_or(0)
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((self.rows.min(other.rows), self.cols.min(other.cols)));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = PolyQ;
    fn index(&self, (i, j): (usize, usize)) -> &PolyQ {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut PolyQ {
        &mut self.data[i * self.cols + j]
    }
}

//! Realization matrices of affine arrangements with the hyperplane at infinity
//! appended as the last row.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::index_set::{IndexSet, MAX_INDEX};
use crate::linalg::Matrix;
use crate::rational::Q;

/// `n` hyperplanes in `C^ell`. Row `i` (1-based, `i <= n`) holds
/// `(b_{i,0}, b_{i,1}, ..., b_{i,ell})` for the hyperplane
/// `b_{i,0} + sum_j b_{i,j} u_j = 0`; row `n + 1` is `(1, 0, ..., 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    ell: usize,
    rows: Matrix,
}

impl Arrangement {
    /// Validates and appends the hyperplane at infinity.
    pub fn new(ell: usize, finite_rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = finite_rows.len();
        if ell == 0 {
            return Err(Error::DimensionMismatch("ell must be at least 1".into()));
        }
        if n + 1 > MAX_INDEX {
            return Err(Error::DimensionMismatch(format!("at most {} hyperplanes supported", MAX_INDEX - 1)));
        }
        for (i, row) in finite_rows.iter().enumerate() {
            if row.len() != ell + 1 {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    ell + 1
                )));
            }
            if row.iter().all(Zero::is_zero) {
                return Err(Error::ZeroRow(i + 1));
            }
            if row[1..].iter().all(Zero::is_zero) {
                return Err(Error::NoAffinePart(i + 1));
            }
        }
        let linear = Matrix::from_rows(finite_rows.iter().map(|r| r[1..].to_vec()).collect());
        if n < ell || linear.rank() < ell {
            return Err(Error::NotEssential(ell));
        }
        let mut rows = finite_rows;
        let mut infinity = vec![Q::zero(); ell + 1];
        infinity[0] = Q::from_integer(1.into());
        rows.push(infinity);
        Ok(Arrangement { n, ell, rows: Matrix::from_rows(rows) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The full `(n+1) x (ell+1)` matrix.
    pub fn matrix(&self) -> &Matrix {
        &self.rows
    }

    /// Row `i`, 1-based, `1 <= i <= n + 1`.
    pub fn row(&self, i: usize) -> &[Q] {
        self.rows.row(i - 1)
    }

    /// All of `[n+1]`.
    pub fn ground_set(&self) -> IndexSet {
        IndexSet::range(self.n + 1)
    }

    fn check_subset(&self, s: IndexSet) -> Result<()> {
        if !s.is_subset(self.ground_set()) {
            return Err(Error::BadIndexSet {
                set: s.to_string(),
                reason: format!("indices must lie in 1..={}", self.n + 1),
            });
        }
        Ok(())
    }

    /// The submatrix `N_S` with rows indexed by `s`.
    pub fn submatrix(&self, s: IndexSet) -> Matrix {
        let idx: Vec<usize> = s.iter().map(|i| i - 1).collect();
        if idx.is_empty() {
            return Matrix::zeros(0, self.ell + 1);
        }
        self.rows.select_rows(&idx)
    }

    pub fn rank(&self, s: IndexSet) -> usize {
        self.submatrix(s).rank()
    }

    /// `Delta_I(b)`: the determinant of the rows indexed by an
    /// `(ell+1)`-subset `I`.
    pub fn minor_det(&self, rows: &[usize]) -> Result<Q> {
        let set = IndexSet::from_slice(rows);
        if set.len() != rows.len() {
            return Err(Error::BadIndexSet { set: format!("{rows:?}"), reason: "repeated index".into() });
        }
        if rows.len() != self.ell + 1 {
            return Err(Error::BadIndexSet {
                set: format!("{rows:?}"),
                reason: format!("expected {} indices", self.ell + 1),
            });
        }
        self.check_subset(set)?;
        Ok(determinant(self.submatrix(set)))
    }

    /// `m_S = |S| - rank N_S`.
    pub fn multiplicity(&self, s: IndexSet) -> Result<usize> {
        if s.is_empty() {
            return Err(Error::BadIndexSet { set: s.to_string(), reason: "empty set".into() });
        }
        self.check_subset(s)?;
        Ok(s.len() - self.rank(s))
    }
}

/// Multiplicities `m_S(T')` for the sets of a relative dependence family.
pub trait MultiplicitySource {
    fn multiplicity_of(&self, s: IndexSet) -> Result<usize>;
}

impl MultiplicitySource for Arrangement {
    fn multiplicity_of(&self, s: IndexSet) -> Result<usize> {
        self.multiplicity(s)
    }
}

/// Explicit multiplicities, defaulting to 1 for unlisted sets. Used for
/// hand-built degenerations that have no realization.
#[derive(Clone, Debug, Default)]
pub struct FixedMultiplicities(pub BTreeMap<IndexSet, usize>);

impl MultiplicitySource for FixedMultiplicities {
    fn multiplicity_of(&self, s: IndexSet) -> Result<usize> {
        Ok(self.0.get(&s).copied().unwrap_or(1))
    }
}

fn determinant(mut m: Matrix) -> Q {
    let n = m.rows();
    let mut det = Q::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            for j in 0..n {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(c, j)].clone();
                m[(c, j)] = tmp;
            }
            det = -det;
        }
        let pivot = m[(c, c)].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[(r, c)].is_zero() {
                continue;
            }
            let f = &m[(r, c)] / &pivot;
            for j in c..n {
                let v = &f * &m[(c, j)];
                m[(r, j)] -= v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Q>> {
        v.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    fn figure1() -> Arrangement {
        Arrangement::new(2, rows(&[&[0, 1, -1], &[0, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap()
    }

    #[test]
    fn appends_infinity() {
        let a = figure1();
        assert_eq!(a.n(), 4);
        assert_eq!(a.row(5), &[q(1), q(0), q(0)]);
    }

    #[test]
    fn minors() {
        let a = figure1();
        assert_eq!(a.minor_det(&[1, 2, 3]).unwrap(), q(0));
        assert_eq!(a.minor_det(&[3, 4, 5]).unwrap(), q(1));
        assert!(a.minor_det(&[1, 1, 2]).is_err());
        assert!(a.minor_det(&[1, 2]).is_err());
        assert!(a.minor_det(&[1, 2, 9]).is_err());
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = Matrix::from_rows(rows(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]));
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(determinant(m), q(0));
        let m = Matrix::from_rows(rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(determinant(m), q(-1));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Arrangement::new(2, rows(&[&[0, 0, 0], &[0, 1, 0]])), Err(Error::ZeroRow(1)));
        assert_eq!(Arrangement::new(2, rows(&[&[3, 0, 0], &[0, 1, 0]])), Err(Error::NoAffinePart(1)));
        assert!(matches!(Arrangement::new(2, rows(&[&[0, 1], &[0, 1, 0]])), Err(Error::DimensionMismatch(_))));
        assert_eq!(Arrangement::new(2, rows(&[&[0, 1, 0], &[1, 1, 0]])), Err(Error::NotEssential(2)));
    }

    #[test]
    fn multiplicity_examples() {
        let a1 = Arrangement::new(2, rows(&[&[0, 1, -1], &[0, 1, 0], &[0, 1, 1], &[1, 1, 1]])).unwrap();
        assert_eq!(a1.multiplicity(IndexSet::from_slice(&[3, 4, 5])).unwrap(), 1);
        let a2 = Arrangement::new(2, rows(&[&[0, 1, 0], &[0, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap();
        assert_eq!(a2.multiplicity(IndexSet::from_slice(&[1, 2])).unwrap(), 1);
        assert_eq!(figure1().multiplicity(IndexSet::from_slice(&[1, 4])).unwrap(), 0);
        assert!(figure1().multiplicity(IndexSet::EMPTY).is_err());
    }
}

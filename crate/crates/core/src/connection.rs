//! Orlik-Solomon cohomology over the rationals, induced combinatorial
//! connection matrices, the general position projection to local system
//! cohomology and the conjugation solver.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::aomoto::{aomoto_boundary, tilde_omega_s, GradedMap};
use crate::combinatorics::CombinatorialType;
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::linalg::Matrix;
use crate::os_algebra::OsAlgebra;
use crate::rational::{fmt_q, is_nonnegative_integer, parse_q, Q};

/// Weights `λ_1..λ_n`; `λ_{n+1}` denotes `-λ_[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    lambda: Vec<Q>,
}

impl Weights {
    pub fn new(lambda: Vec<Q>) -> Self {
        Weights { lambda }
    }

    pub fn for_n(lambda: Vec<Q>, n: usize) -> Result<Self> {
        if lambda.len() != n {
            return Err(Error::WeightLength { got: lambda.len(), expected: n });
        }
        Ok(Weights { lambda })
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn values(&self) -> &[Q] {
        &self.lambda
    }

    /// `λ_j`, 1-based; `j = n+1` gives `-λ_[n]`.
    pub fn get(&self, j: usize) -> Q {
        if j == self.n() + 1 {
            -self.total()
        } else {
            self.lambda[j - 1].clone()
        }
    }

    pub fn total(&self) -> Q {
        self.lambda.iter().fold(Q::zero(), |a, x| a + x)
    }

    /// `λ_J = sum_{j in J} λ_j`.
    pub fn sum(&self, j: IndexSet) -> Q {
        j.iter().fold(Q::zero(), |a, i| a + self.get(i))
    }

    pub fn product(&self, j: IndexSet) -> Q {
        j.iter().fold(Q::one(), |a, i| a * self.get(i))
    }

    /// `λ_j ∉ Z≥0` and `-λ_[n] ∉ Z≥0`.
    pub fn check_general_position(&self) -> Result<()> {
        for j in 1..=self.n() + 1 {
            let v = self.get(j);
            if is_nonnegative_integer(&v) {
                return Err(Error::Resonant(format!("λ_{j} = {} is a nonnegative integer", fmt_q(&v))));
            }
        }
        Ok(())
    }

    /// Every condition `λ_X ∉ Z≥0` checked for `t`, with `X` the label.
    pub fn resonance_conditions(&self, t: &CombinatorialType, extra_edges: &[IndexSet]) -> Vec<(IndexSet, Q)> {
        dense_edges(t, extra_edges).into_iter().map(|x| (x, self.sum(x))).collect()
    }

    /// Nonresonance for `t` over singletons, circuit closures and declared edges.
    pub fn check_nonresonant(&self, t: &CombinatorialType, extra_edges: &[IndexSet]) -> Result<()> {
        if self.n() != t.n() {
            return Err(Error::WeightLength { got: self.n(), expected: t.n() });
        }
        for (x, v) in self.resonance_conditions(t, extra_edges) {
            if is_nonnegative_integer(&v) {
                return Err(Error::Resonant(format!("λ over {} is {}", x.label(), fmt_q(&v))));
            }
        }
        Ok(())
    }
}

impl FromStr for Weights {
    type Err = Error;

    /// Comma-separated rationals, e.g. `1/2,1/3,-2`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',').map(|x| parse_q(x.trim())).collect::<Result<Vec<_>>>().map(Weights::new)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda.iter().map(fmt_q).collect::<Vec<_>>().join(","))
    }
}

/// Singletons of `[n+1]`, flat closures of circuits, and user edges.
/// Closure: `i ∈ cl(C)` iff some circuit `D` has `i ∈ D ⊆ C ∪ {i}`.
pub fn dense_edges(t: &CombinatorialType, extra: &[IndexSet]) -> Vec<IndexSet> {
    let ground = IndexSet::range(t.n() + 1);
    let mut out: BTreeSet<IndexSet> = ground.iter().map(IndexSet::singleton).collect();
    for &c in t.circuits() {
        let mut closure = c;
        for i in ground.difference(c).iter() {
            let grown = c.with(i);
            if t.circuits().iter().any(|d| d.contains(i) && d.is_subset(grown)) {
                closure = closure.with(i);
            }
        }
        out.insert(closure);
    }
    out.extend(extra.iter().copied());
    out.into_iter().collect()
}

/// `H^q(A(T), a_λ)` presented as cocycles modulo coboundaries, with chosen
/// representatives. All matrices act on nbc coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyPresentation {
    pub degree: usize,
    pub cocycles: Matrix,
    pub coboundaries: Matrix,
    pub representatives: Matrix,
    /// `[coboundaries | representatives]`, a basis of the cocycle space.
    frame: Matrix,
}

impl CohomologyPresentation {
    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    /// Quotient coordinates of a cocycle.
    pub fn project(&self, v: &[Q]) -> Result<Vec<Q>> {
        let full = self
            .frame
            .solve_unique(v)
            .map_err(|_| Error::InvariantViolation(format!("degree {}: vector is not a cocycle", self.degree)))?;
        Ok(full[self.coboundaries.cols()..].to_vec())
    }

    /// Replaces the representatives, which must be cocycles spanning the
    /// quotient.
    pub fn with_representatives(&self, reps: Matrix) -> Result<Self> {
        if reps.rows() != self.cocycles.rows() || reps.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} representatives of length {}",
                self.dim(),
                self.cocycles.rows()
            )));
        }
        let frame = self.coboundaries.hcat(&reps);
        if frame.rank() != frame.cols() || self.cocycles.hcat(&reps).rank() != self.cocycles.cols() {
            return Err(Error::InvariantViolation("representatives are not independent cocycles modulo coboundaries".into()));
        }
        Ok(CohomologyPresentation { representatives: reps, frame, ..self.clone() })
    }
}

fn specialized_boundary(alg: &OsAlgebra, q: usize, w: &Weights) -> Result<Matrix> {
    if q >= alg.ell() {
        return Ok(Matrix::zeros(0, alg.betti(q)));
    }
    Ok(aomoto_boundary(alg, q)?.matrix.eval(w.values()))
}

fn columns(m: &Matrix, idx: &[usize]) -> Matrix {
    if idx.is_empty() {
        Matrix::zeros(m.rows(), 0)
    } else {
        m.select_columns(idx)
    }
}

/// Kernel columns as a matrix with `rows` rows.
fn kernel_matrix(d: &Matrix, rows: usize) -> Matrix {
    if d.rows() == 0 {
        return Matrix::identity(rows);
    }
    let k = d.kernel();
    if k.is_empty() {
        Matrix::zeros(rows, 0)
    } else {
        Matrix::from_columns(rows, &k)
    }
}

pub fn os_cohomology(alg: &OsAlgebra, w: &Weights, q: usize) -> Result<CohomologyPresentation> {
    if q > alg.ell() {
        return Err(Error::DegreeOutOfRange { degree: q, max: alg.ell() });
    }
    if w.n() != alg.n() {
        return Err(Error::WeightLength { got: w.n(), expected: alg.n() });
    }
    let b = alg.betti(q);
    let cocycles = kernel_matrix(&specialized_boundary(alg, q, w)?, b);
    let coboundaries = if q == 0 {
        Matrix::zeros(b, 0)
    } else {
        let d = specialized_boundary(alg, q - 1, w)?;
        columns(&d, &d.independent_columns())
    };
    if cocycles.hcat(&coboundaries).rank() != cocycles.cols() {
        return Err(Error::InvariantViolation(format!("degree {q}: coboundaries are not cocycles")));
    }
    let mut frame = coboundaries.clone();
    let mut picked = Vec::new();
    for j in 0..cocycles.cols() {
        let trial = frame.hcat(&columns(&cocycles, &[j]));
        if trial.rank() == trial.cols() {
            frame = trial;
            picked.push(j);
        }
    }
    let representatives = columns(&cocycles, &picked);
    Ok(CohomologyPresentation { degree: q, cocycles, coboundaries, representatives, frame })
}

/// `Ω_C^q`: the map induced by `ω_λ` on `ker/im`, in the representatives'
/// coordinates. Columns are images of representatives.
pub fn induced_connection(
    alg: &OsAlgebra,
    omega: &GradedMap,
    w: &Weights,
    q: usize,
    representatives: Option<Matrix>,
) -> Result<(CohomologyPresentation, Matrix)> {
    let mut h = os_cohomology(alg, w, q)?;
    if let Some(r) = representatives {
        h = h.with_representatives(r)?;
    }
    let b = alg.betti(q);
    let omega_l = match omega.block(q) {
        Some(block) => block.matrix.eval(w.values()),
        None => Matrix::zeros(b, b),
    };
    let z = &h.cocycles;
    if z.cols() > 0 && z.hcat(&omega_l.mul(z)).rank() != z.cols() {
        return Err(Error::InvariantViolation(format!("degree {q}: ω_λ does not preserve cocycles")));
    }
    let bd = &h.coboundaries;
    if bd.cols() > 0 && bd.hcat(&omega_l.mul(bd)).rank() != bd.cols() {
        return Err(Error::InvariantViolation(format!("degree {q}: ω_λ does not preserve coboundaries")));
    }
    let cols: Vec<Vec<Q>> = (0..h.dim())
        .map(|i| h.project(&omega_l.mul_vec(&h.representatives.column(i))))
        .collect::<Result<_>>()?;
    let m = if cols.is_empty() { Matrix::zeros(0, 0) } else { Matrix::from_columns(h.dim(), &cols) };
    Ok((h, m))
}

/// βnbc tuples of the general position type: `ell`-subsets of `{2..n}`.
pub fn beta_nbc(n: usize, ell: usize) -> Vec<IndexSet> {
    IndexSet::subsets_of_size(IndexSet::range(n).without(1), ell)
}

/// Matrix of `A^ℓ(G) -> H^ℓ(G; L)`, columns all `ℓ`-tuples, rows the βnbc
/// monomials `η_K = λ_K a_K` (product of weights).
pub fn gp_projection(n: usize, ell: usize, w: &Weights) -> Result<Matrix> {
    if w.n() != n {
        return Err(Error::WeightLength { got: w.n(), expected: n });
    }
    w.check_general_position()?;
    let rows = beta_nbc(n, ell);
    let cols = IndexSet::subsets_of_size(IndexSet::range(n), ell);
    let row_of = |k: IndexSet| rows.iter().position(|r| *r == k).expect("βnbc tuple");
    let mut p = Matrix::zeros(rows.len(), cols.len());
    for (j, k) in cols.iter().enumerate() {
        let denom = w.product(*k);
        if denom.is_zero() {
            return Err(Error::Resonant(format!("zero weight on {}", k.label())));
        }
        if !k.contains(1) {
            p[(row_of(*k), j)] = denom.recip();
            continue;
        }
        let rest = k.without(1);
        for i in IndexSet::range(n).difference(*k).iter() {
            // η_{(i,K')} = (-1)^{#K' below i} η_{sorted}
            let sign = if rest.rank_of(i) % 2 == 0 { Q::one() } else { -Q::one() };
            p[(row_of(rest.with(i)), j)] -= sign / &denom;
        }
    }
    Ok(p)
}

/// `Ω_L(G_J, G)` in the βnbc basis, solving `P ω̃_J(λ) = Ω P`.
pub fn aomoto_kita(n: usize, ell: usize, j: IndexSet, w: &Weights) -> Result<Matrix> {
    if j.len() != ell + 1 {
        return Err(Error::BadIndexSet { set: j.to_string(), reason: format!("expected {} indices", ell + 1) });
    }
    let p = gp_projection(n, ell, w)?;
    let m = tilde_omega_s(n, ell, j, ell)?.matrix.eval(w.values());
    solve_conjugate(&p, &m)
}

/// The unique `Ω` with `P M = Ω P`, for `P` of full row rank.
pub fn solve_conjugate(p: &Matrix, m: &Matrix) -> Result<Matrix> {
    if m.rows() != p.cols() || m.cols() != p.cols() {
        return Err(Error::DimensionMismatch(format!(
            "P is {}x{} but M is {}x{}",
            p.rows(),
            p.cols(),
            m.rows(),
            m.cols()
        )));
    }
    let rank = p.rank();
    if rank < p.rows() {
        return Err(Error::NotFullRowRank { rank, rows: p.rows() });
    }
    let pm = p.mul(m);
    let pt = p.transpose();
    let mut omega = Matrix::zeros(p.rows(), p.rows());
    for i in 0..p.rows() {
        let x = pt
            .solve_unique(pm.row(i))
            .map_err(|_| Error::NoSolution(format!("row {} of P·M is outside the row space of P", i + 1)))?;
        for (k, v) in x.into_iter().enumerate() {
            omega[(i, k)] = v;
        }
    }
    Ok(omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::rational::{frac, q};

    fn figure1_type() -> CombinatorialType {
        let rows = [[0, 1, -1], [0, 1, 0], [0, 1, 1], [1, 0, 1]];
        let a = Arrangement::new(2, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap();
        CombinatorialType::from_arrangement(&a)
    }

    fn weights(v: &[(i64, i64)]) -> Weights {
        Weights::new(v.iter().map(|&(a, b)| frac(a, b)).collect())
    }

    #[test]
    fn parse_and_sums() {
        let w: Weights = "1/2, 1/3,-2".parse().unwrap();
        assert_eq!(w.sum(IndexSet::from_slice(&[1, 2])), frac(5, 6));
        assert_eq!(w.get(4), frac(7, 6));
        assert!("1/2,x".parse::<Weights>().is_err());
    }

    #[test]
    fn figure_one_conditions() {
        let t = figure1_type();
        let w = weights(&[(1, 2), (1, 3), (1, 5), (1, 7)]);
        let labels: Vec<String> = dense_edges(&t, &[]).iter().map(|x| x.label()).collect();
        assert_eq!(labels, ["1", "123", "2", "3", "4", "5"]);
        assert!(w.check_nonresonant(&t, &[]).is_ok());
        let bad = weights(&[(1, 3), (1, 3), (1, 3), (-1, 2)]);
        assert!(matches!(bad.check_nonresonant(&t, &[]), Err(Error::Resonant(_))));
        assert!(weights(&[(1, 2)]).check_nonresonant(&t, &[]).is_err());
    }

    #[test]
    fn figure_one_cohomology_dims() {
        let alg = OsAlgebra::new(&figure1_type()).unwrap();
        let w = weights(&[(1, 2), (1, 3), (1, 5), (1, 7)]);
        let dims: Vec<usize> = (0..=2).map(|d| os_cohomology(&alg, &w, d).unwrap().dim()).collect();
        assert_eq!(dims, [0, 0, 2]);
        let zero = weights(&[(0, 1); 4]);
        let dims: Vec<usize> = (0..=2).map(|d| os_cohomology(&alg, &zero, d).unwrap().dim()).collect();
        assert_eq!(dims, [1, 4, 5]);
    }

    #[test]
    fn conjugate_solver() {
        let p = Matrix::from_rows(vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]]);
        assert_eq!(solve_conjugate(&p, &Matrix::identity(3)).unwrap(), Matrix::identity(2));
        let m = Matrix::from_rows(vec![vec![q(2), q(0), q(0)], vec![q(0), q(3), q(0)], vec![q(0), q(0), q(5)]]);
        assert!(matches!(solve_conjugate(&p, &m), Err(Error::NoSolution(_))));
        let singular = Matrix::from_rows(vec![vec![q(1), q(0), q(1)], vec![q(0), q(0), q(0)]]);
        assert_eq!(solve_conjugate(&singular, &Matrix::identity(3)), Err(Error::NotFullRowRank { rank: 1, rows: 2 }));
    }

    #[test]
    fn gp_projection_examples() {
        let w = weights(&[(1, 2), (1, 3), (1, 5)]);
        let p = gp_projection(3, 2, &w).unwrap();
        // only βnbc tuple is 23; columns 12, 13, 23
        assert_eq!(p.rows(), 1);
        assert_eq!(p[(0, 2)], q(15));
        // a_12 -> -(1/(λ1λ2)) η_(3,2) = +η_23/(λ1λ2)
        assert_eq!(p[(0, 0)], q(6));
        assert_eq!(p[(0, 1)], -q(10));
        assert!(gp_projection(3, 2, &weights(&[(1, 1), (1, 3), (1, 5)])).is_err());
    }
}

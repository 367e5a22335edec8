//! The Aomoto complex `(A_R, a_y)`, the formal connection endomorphisms
//! `ω̃_S`, their weighted sum `ω̃(T',T)` and the induced map on `A_R(T)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arrangement::{Arrangement, MultiplicitySource};
use crate::combinatorics::{relative_dep, CombinatorialType};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::linalg::Matrix;
use crate::os_algebra::{ideal_span, BasisIndex, OsAlgebra, OsElement};
use crate::poly::PolyQ;
use crate::polymat::PolyMatrix;
use crate::rational::{fmt_q, Q};
use crate::sweep::{self, Strategy};

/// One degree of a graded map: columns indexed by the source basis, rows by
/// the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub matrix: PolyMatrix,
}

impl Block {
    pub fn new(rows: Vec<String>, cols: Vec<String>, matrix: PolyMatrix) -> Result<Self> {
        if matrix.rows() != rows.len() || matrix.cols() != cols.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but labels give {}x{}",
                matrix.rows(),
                matrix.cols(),
                rows.len(),
                cols.len()
            )));
        }
        Ok(Block { rows, cols, matrix })
    }

    pub fn zero(rows: Vec<String>, cols: Vec<String>) -> Self {
        let matrix = PolyMatrix::zeros(rows.len(), cols.len());
        Block { rows, cols, matrix }
    }
}

/// A family of matrices over `Q[y_1..y_n]` indexed by source degree.
/// `shift` is the degree change (0 for endomorphisms, 1 for boundaries).
/// Absent degrees are zero maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub source: String,
    pub target: String,
    pub shift: usize,
    pub n: usize,
    blocks: BTreeMap<usize, Block>,
}

impl GradedMap {
    pub fn new(source: &str, target: &str, shift: usize, n: usize) -> Self {
        GradedMap { source: source.into(), target: target.into(), shift, n, blocks: BTreeMap::new() }
    }

    pub fn insert(&mut self, degree: usize, block: Block) {
        self.blocks.insert(degree, block);
    }

    pub fn block(&self, degree: usize) -> Option<&Block> {
        self.blocks.get(&degree)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks.iter().map(|(q, b)| (*q, b))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|b| b.matrix.is_zero())
    }

    /// First disagreement with `other`, described by degree, labels and entries.
    pub fn first_difference(&self, other: &GradedMap) -> Option<String> {
        if self.shift != other.shift {
            return Some(format!("degree shift {} vs {}", self.shift, other.shift));
        }
        let degrees: std::collections::BTreeSet<usize> =
            self.blocks.keys().chain(other.blocks.keys()).copied().collect();
        for q in degrees {
            match (self.block(q), other.block(q)) {
                (Some(a), Some(b)) => {
                    if a.rows != b.rows || a.cols != b.cols {
                        return Some(format!("degree {q}: basis labels differ"));
                    }
                    if let Some((i, j)) = a.matrix.first_difference(&b.matrix) {
                        return Some(format!(
                            "degree {q}, row {} column {}: `{}` vs `{}`",
                            a.rows[i],
                            a.cols[j],
                            a.matrix[(i, j)],
                            b.matrix[(i, j)]
                        ));
                    }
                }
                (Some(x), None) | (None, Some(x)) if !x.matrix.is_zero() => {
                    return Some(format!("degree {q} present on one side only"));
                }
                _ => {}
            }
        }
        None
    }
}

impl fmt::Display for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "map {} -> {} (shift {})", self.source, self.target, self.shift)?;
        for (q, b) in &self.blocks {
            writeln!(f, "degree {q}: {} x {}", b.rows.len(), b.cols.len())?;
            let cells: Vec<Vec<String>> = (0..b.matrix.rows())
                .map(|i| (0..b.matrix.cols()).map(|j| b.matrix[(i, j)].to_string()).collect())
                .collect();
            let width = cells.iter().flatten().chain(&b.cols).map(String::len).max().unwrap_or(1);
            let label_w = b.rows.iter().map(String::len).max().unwrap_or(0);
            write!(f, "  {:label_w$}", "")?;
            for c in &b.cols {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
            for (i, row) in cells.iter().enumerate() {
                write!(f, "  {:label_w$}", b.rows[i])?;
                for c in row {
                    write!(f, " {c:>width$}")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// The general position type on `n` hyperplanes in dimension `ell`.
pub fn general_position(n: usize, ell: usize) -> Result<CombinatorialType> {
    CombinatorialType::from_dependent_sets(n, ell, std::iter::empty())
}

fn check_map_degree(q: usize, ell: usize) -> Result<()> {
    if q > ell {
        return Err(Error::DegreeOutOfRange { degree: q, max: ell });
    }
    Ok(())
}

/// Matrix of `a_y ∧ · : A^q_R(T) -> A^{q+1}_R(T)` in nbc bases.
pub fn aomoto_boundary(alg: &OsAlgebra, q: usize) -> Result<Block> {
    if q >= alg.ell() {
        return Err(Error::DegreeOutOfRange { degree: q, max: alg.ell().saturating_sub(1) });
    }
    let src = alg.nbc(q)?;
    let dst = alg.nbc(q + 1)?;
    let a_y = OsElement::a_y(alg.n());
    let mut m = PolyMatrix::zeros(dst.len(), src.len());
    for (j, t) in src.items().iter().enumerate() {
        let image = a_y.wedge(&OsElement::monomial(*t));
        m.set_column(j, &alg.reduce(&image, q + 1)?);
    }
    Block::new(dst.labels(), src.labels(), m)
}

/// The whole Aomoto complex as a graded map of shift 1.
pub fn aomoto_complex(alg: &OsAlgebra, tag: &str) -> Result<GradedMap> {
    let mut out = GradedMap::new(tag, tag, 1, alg.n());
    for q in 0..alg.ell() {
        out.insert(q, aomoto_boundary(alg, q)?);
    }
    Ok(out)
}

/// Position of `i` within `t`, 1-based.
fn position(t: IndexSet, i: usize) -> usize {
    t.rank_of(i) + 1
}

fn sign(k: usize) -> PolyQ {
    if k % 2 == 0 {
        PolyQ::one()
    } else {
        -&PolyQ::one()
    }
}

/// `ω̃_S(a_T)` on `A_R(G)` for a set `S ⊆ [n+1]`, untruncated.
pub fn tilde_omega_on_monomial(n: usize, s: IndexSet, t: IndexSet) -> OsElement {
    let inf = n + 1;
    let q = s.len() - 1;
    let p = t.len();
    if !s.contains(inf) {
        if p == q && t.is_subset(s) {
            let j = s.difference(t).first().expect("S has one more element");
            let mut seq = vec![j];
            seq.extend(t.iter());
            return OsElement::ordered_monomial(&seq).boundary().scale(&PolyQ::var(j));
        }
        if p == q + 1 && t == s {
            return OsElement::a_y(n).wedge(&OsElement::monomial(t).boundary());
        }
        return OsElement::zero();
    }
    let u = s.without(inf);
    if p == q {
        if t == u {
            let rest = IndexSet::range(n).difference(t);
            return OsElement::monomial(t).scale(&-&PolyQ::var_sum(rest.iter()));
        }
        if q >= 1 && t.intersection(u).len() == q - 1 {
            let ik = t.difference(u).first().expect("one index of T outside U");
            let j = u.difference(t).first().expect("one index of U outside T");
            let k = position(t, ik);
            let mut seq = vec![j];
            seq.extend(t.without(ik).iter());
            return OsElement::ordered_monomial(&seq).scale(&(&sign(k - 1) * &PolyQ::var(j)));
        }
        return OsElement::zero();
    }
    if p == q + 1 && u.is_subset(t) {
        let ik = t.difference(u).first().expect("one index of T outside U");
        let k = position(t, ik);
        return OsElement::a_y(n).wedge(&OsElement::monomial(u)).scale(&sign(k));
    }
    OsElement::zero()
}

fn check_s(n: usize, ell: usize, s: IndexSet) -> Result<()> {
    if !(2..=ell + 1).contains(&s.len()) {
        return Err(Error::BadIndexSet { set: s.to_string(), reason: format!("size must lie in 2..={}", ell + 1) });
    }
    if !s.is_subset(IndexSet::range(n + 1)) {
        return Err(Error::BadIndexSet { set: s.to_string(), reason: format!("indices must lie in 1..={}", n + 1) });
    }
    Ok(())
}

fn endomorphism_block(
    basis: &BasisIndex,
    f: impl Fn(IndexSet) -> OsElement,
) -> Result<Block> {
    let mut m = PolyMatrix::zeros(basis.len(), basis.len());
    for (j, t) in basis.items().iter().enumerate() {
        let image = f(*t);
        if !image.is_zero() {
            m.set_column(j, &image.coordinates(basis)?);
        }
    }
    Block::new(basis.labels(), basis.labels(), m)
}

/// Degree-`q` block of `ω̃_S` on the full monomial basis of `A^q_R(G)`.
pub fn tilde_omega_s(n: usize, ell: usize, s: IndexSet, q: usize) -> Result<Block> {
    check_s(n, ell, s)?;
    check_map_degree(q, ell)?;
    let basis = BasisIndex::all_monomials(n, q);
    endomorphism_block(&basis, |t| tilde_omega_on_monomial(n, s, t).truncate(ell))
}

/// All degrees of `ω̃_S`.
pub fn tilde_omega_s_map(n: usize, ell: usize, s: IndexSet) -> Result<GradedMap> {
    let mut out = GradedMap::new("G", "G", 0, n);
    for q in 0..=ell {
        out.insert(q, tilde_omega_s(n, ell, s, q)?);
    }
    Ok(out)
}

/// `ω̃(T',T) = sum m_S ω̃_S` over the given weighted sets.
pub fn tilde_omega_pair(n: usize, ell: usize, weighted: &[(IndexSet, usize)]) -> Result<GradedMap> {
    tilde_omega_pair_with(n, ell, weighted, Strategy::default())
}

pub fn tilde_omega_pair_with(
    n: usize,
    ell: usize,
    weighted: &[(IndexSet, usize)],
    strategy: Strategy,
) -> Result<GradedMap> {
    for (s, _) in weighted {
        check_s(n, ell, *s)?;
    }
    let degrees: Vec<usize> = (0..=ell).collect();
    let blocks = sweep::map(strategy, &degrees, |&q| {
        let basis = BasisIndex::all_monomials(n, q);
        endomorphism_block(&basis, |t| {
            weighted.iter().fold(OsElement::zero(), |acc, (s, m)| {
                let image = tilde_omega_on_monomial(n, *s, t).truncate(ell);
                acc.add(&image.scale(&PolyQ::constant(Q::from_integer((*m as i64).into()))))
            })
        })
    });
    let mut out = GradedMap::new("G", "G", 0, n);
    for (q, b) in degrees.into_iter().zip(blocks) {
        out.insert(q, b?);
    }
    Ok(out)
}

/// `Dep(T',T)` paired with multiplicities `m_S(T')`.
pub fn weighted_relative_dep(
    tprime: &CombinatorialType,
    t: &CombinatorialType,
    mult: &dyn MultiplicitySource,
) -> Result<Vec<(IndexSet, usize)>> {
    relative_dep(tprime, t)?
        .sets()
        .filter(|s| s.len() <= t.ell() + 1)
        .map(|s| Ok((s, mult.multiplicity_of(s)?)))
        .collect()
}

/// Outcome of [`verify_ideal_invariance`]; violations are data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvarianceReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn apply_block(block: &Block, basis: &BasisIndex, x: &OsElement) -> Result<Vec<PolyQ>> {
    Ok(block.matrix.mul_vec(&x.coordinates(basis)?))
}

/// Checks `p(ω̃(g)) = 0` for every spanning element `g = a_K ∧ r_T` of the
/// ideal of `alg`'s type, in every degree.
pub fn verify_ideal_invariance(alg: &OsAlgebra, tilde: &GradedMap) -> Result<InvarianceReport> {
    verify_ideal_invariance_with(alg, tilde, Strategy::default())
}

pub fn verify_ideal_invariance_with(alg: &OsAlgebra, tilde: &GradedMap, strategy: Strategy) -> Result<InvarianceReport> {
    let mut report = InvarianceReport::default();
    for q in 0..=alg.ell() {
        let Some(block) = tilde.block(q) else { continue };
        let basis = alg.monomials(q)?;
        let p = alg.projection(q)?;
        let span = ideal_span(alg.ty(), q);
        let results = sweep::map(strategy, &span, |g| -> Result<Option<String>> {
            let image = apply_block(block, basis, g)?;
            let reduced = crate::os_algebra::apply_rational(p, &image);
            Ok(reduced.iter().any(|c| !c.is_zero()).then(|| {
                format!("degree {q}: image of {g} reduces to {}", OsElement::from_coordinates(alg.nbc(q).unwrap(), &reduced))
            }))
        });
        for r in results {
            report.checked += 1;
            if let Some(v) = r? {
                report.violations.push(v);
            }
        }
    }
    Ok(report)
}

/// The map `ω(T',T)` on `A_R(T)` induced by `tilde`: column `J` is
/// `p(ω̃(a_J))`. Gated on ideal invariance; the square `p ω̃ = ω p` is
/// rechecked on the result.
pub fn induced_omega(alg: &OsAlgebra, tilde: &GradedMap) -> Result<GradedMap> {
    let report = verify_ideal_invariance(alg, tilde)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::IdealInvarianceFailure(v.clone()));
    }
    let mut out = GradedMap::new("T", "T", 0, alg.n());
    for q in 0..=alg.ell() {
        let nbc = alg.nbc(q)?;
        let mono = alg.monomials(q)?;
        let p = alg.projection(q)?;
        let wt = match tilde.block(q) {
            Some(b) => b.matrix.clone(),
            None => PolyMatrix::zeros(mono.len(), mono.len()),
        };
        let pw = wt.left_mul_rational(p);
        let mut m = PolyMatrix::zeros(nbc.len(), nbc.len());
        for (j, t) in nbc.items().iter().enumerate() {
            let col = mono.position(*t).expect("nbc tuples are monomials");
            m.set_column(j, &pw.column(col));
        }
        if m.right_mul_rational(p) != pw {
            return Err(Error::InvariantViolation(format!("degree {q}: p∘ω̃ differs from ω∘p")));
        }
        out.insert(q, Block::new(nbc.labels(), nbc.labels(), m)?);
    }
    Ok(out)
}

/// A degeneration pair `(T', T)` with its formal and induced connections.
#[derive(Clone, Debug)]
pub struct DegenerationPair {
    pub algebra: OsAlgebra,
    pub weighted: Vec<(IndexSet, usize)>,
    pub tilde: GradedMap,
}

impl DegenerationPair {
    pub fn from_types(t: &CombinatorialType, tprime: &CombinatorialType, mult: &dyn MultiplicitySource) -> Result<Self> {
        let weighted = weighted_relative_dep(tprime, t, mult)?;
        let tilde = tilde_omega_pair(t.n(), t.ell(), &weighted)?;
        Ok(DegenerationPair { algebra: OsAlgebra::new(t)?, weighted, tilde })
    }

    /// Multiplicities are read off the realization of `T'`.
    pub fn from_arrangements(t: &Arrangement, tprime: &Arrangement) -> Result<Self> {
        Self::from_types(&CombinatorialType::from_arrangement(t), &CombinatorialType::from_arrangement(tprime), tprime)
    }

    pub fn induced(&self) -> Result<GradedMap> {
        induced_omega(&self.algebra, &self.tilde)
    }

    pub fn invariance(&self) -> Result<InvarianceReport> {
        verify_ideal_invariance(&self.algebra, &self.tilde)
    }
}

/// One failing entry of a cochain check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainMismatch {
    pub degree: usize,
    pub row: String,
    pub col: String,
    pub lhs: PolyQ,
    pub rhs: PolyQ,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CochainReport {
    pub degrees: Vec<usize>,
    pub mismatches: Vec<CochainMismatch>,
}

impl CochainReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for CochainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "cochain check passed in degrees {:?}", self.degrees);
        }
        for m in &self.mismatches {
            writeln!(
                f,
                "degree {}: entry ({}, {}) has d∘f = {} but f∘d = {}",
                m.degree, m.row, m.col, m.lhs, m.rhs
            )?;
        }
        Ok(())
    }
}

/// Checks `d_q ∘ f_q = f_{q+1} ∘ d_q` for every boundary block `d_q`, where
/// `f` is an endomorphism; missing blocks of `f` are zero.
pub fn verify_cochain(map: &GradedMap, boundary: &GradedMap) -> Result<CochainReport> {
    if map.shift != 0 || boundary.shift != 1 {
        return Err(Error::DimensionMismatch("expected an endomorphism and a boundary of shift 1".into()));
    }
    let mut report = CochainReport::default();
    for (q, d) in boundary.blocks() {
        let dm = &d.matrix;
        let fq = map.block(q).map_or_else(|| PolyMatrix::zeros(dm.cols(), dm.cols()), |b| b.matrix.clone());
        let fq1 = map.block(q + 1).map_or_else(|| PolyMatrix::zeros(dm.rows(), dm.rows()), |b| b.matrix.clone());
        if fq.rows() != dm.cols() || fq1.cols() != dm.rows() {
            return Err(Error::DimensionMismatch(format!("degree {q}: map and boundary sizes disagree")));
        }
        let lhs = dm.mul(&fq);
        let rhs = fq1.mul(dm);
        report.degrees.push(q);
        for ((i, j), l) in lhs.entries() {
            let r = &rhs[(i, j)];
            if l != r {
                report.mismatches.push(CochainMismatch {
                    degree: q,
                    row: d.rows[i].clone(),
                    col: d.cols[j].clone(),
                    lhs: l.clone(),
                    rhs: r.clone(),
                });
            }
        }
    }
    Ok(report)
}

/// Entrywise evaluation `y -> lambda`.
pub fn specialize(map: &GradedMap, lambda: &[Q]) -> Result<GradedMap> {
    if lambda.len() != map.n {
        return Err(Error::WeightLength { got: lambda.len(), expected: map.n });
    }
    let mut out = GradedMap::new(&map.source, &map.target, map.shift, map.n);
    for (q, b) in map.blocks() {
        let m = PolyMatrix::from_rational(&b.matrix.eval(lambda));
        out.insert(q, Block::new(b.rows.clone(), b.cols.clone(), m)?);
    }
    Ok(out)
}

/// Rational matrix of one degree of a specialized map.
pub fn specialized_block(map: &GradedMap, q: usize, lambda: &[Q]) -> Result<Matrix> {
    if lambda.len() != map.n {
        return Err(Error::WeightLength { got: lambda.len(), expected: map.n });
    }
    Ok(map.block(q).map_or_else(|| Matrix::zeros(0, 0), |b| b.matrix.eval(lambda)))
}

/// Compact text of a rational matrix.
pub fn format_rational(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| fmt_q(&m[(i, j)])).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

//! Exterior algebra on `a_1, ..., a_n` with polynomial coefficients, the
//! operator `∂`, the Orlik-Solomon ideal of a type and its nbc basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::combinatorics::CombinatorialType;
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::linalg::Matrix;
use crate::poly::PolyQ;
use crate::rational::Q;
use crate::sweep::{self, Strategy};

/// Finite sum of monomials `a_T` (strictly increasing tuples `T ⊆ [n]`) with
/// polynomial coefficients. Tuples of length `q` live in degree `q`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OsElement {
    terms: BTreeMap<IndexSet, PolyQ>,
}

/// Sign of the permutation sorting the concatenation `(s, t)` of two
/// disjoint increasing tuples.
fn merge_sign(s: IndexSet, t: IndexSet) -> i32 {
    let inversions: usize = t.iter().map(|x| s.len() - s.rank_of(x + 1)).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl OsElement {
    pub fn zero() -> Self {
        OsElement::default()
    }

    /// The unit `1 = a_∅`.
    pub fn one() -> Self {
        OsElement::monomial(IndexSet::EMPTY)
    }

    pub fn monomial(t: IndexSet) -> Self {
        OsElement::term(PolyQ::one(), t)
    }

    pub fn generator(j: usize) -> Self {
        OsElement::monomial(IndexSet::singleton(j))
    }

    pub fn term(coef: PolyQ, t: IndexSet) -> Self {
        let mut x = OsElement::zero();
        x.add_term(t, coef);
        x
    }

    /// `a_{(i_1, ..., i_k)}` for an arbitrary index sequence; repeated
    /// indices give zero.
    pub fn ordered_monomial(indices: &[usize]) -> Self {
        indices
            .iter()
            .fold(OsElement::one(), |acc, &j| acc.wedge(&OsElement::generator(j)))
    }

    /// `a_y = sum_j y_j a_j`.
    pub fn a_y(n: usize) -> Self {
        let mut x = OsElement::zero();
        for j in 1..=n {
            x.add_term(IndexSet::singleton(j), PolyQ::var(j));
        }
        x
    }

    pub fn add_term(&mut self, t: IndexSet, coef: PolyQ) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(t).or_default();
        *slot += &coef;
        if slot.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &PolyQ)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: IndexSet) -> PolyQ {
        self.terms.get(&t).cloned().unwrap_or_default()
    }

    /// Degree if homogeneous (the zero element reports `None`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|t| t.len());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn component(&self, q: usize) -> OsElement {
        OsElement {
            terms: self.terms.iter().filter(|(t, _)| t.len() == q).map(|(t, p)| (*t, p.clone())).collect(),
        }
    }

    /// Drops every component of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> OsElement {
        OsElement {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.len() <= max_degree)
                .map(|(t, p)| (*t, p.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &PolyQ) -> OsElement {
        let mut out = OsElement::zero();
        for (t, p) in &self.terms {
            out.add_term(*t, p * c);
        }
        out
    }

    pub fn add(&self, other: &OsElement) -> OsElement {
        let mut out = self.clone();
        for (t, p) in &other.terms {
            out.add_term(*t, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &OsElement) -> OsElement {
        let mut out = self.clone();
        for (t, p) in &other.terms {
            out.add_term(*t, -p);
        }
        out
    }

    /// Exterior product with sign normalization; overlapping tuples vanish.
    pub fn wedge(&self, other: &OsElement) -> OsElement {
        let mut out = OsElement::zero();
        for (s, p) in &self.terms {
            for (t, q) in &other.terms {
                if !s.is_disjoint(*t) {
                    continue;
                }
                let c = p * q;
                let c = if merge_sign(*s, *t) < 0 { -&c } else { c };
                out.add_term(s.union(*t), c);
            }
        }
        out
    }

    /// `∂a_T = sum_k (-1)^{k-1} a_{T_k}`, extended linearly; `∂1 = 0`.
    pub fn boundary(&self) -> OsElement {
        let mut out = OsElement::zero();
        for (t, p) in &self.terms {
            for (k, face) in t.facets() {
                out.add_term(face, if k % 2 == 1 { p.clone() } else { -p });
            }
        }
        out
    }

    /// Coordinates of the degree-`q` component in the given monomial basis.
    /// Errors if a monomial is missing from the basis.
    pub fn coordinates(&self, basis: &BasisIndex) -> Result<Vec<PolyQ>> {
        let mut v = vec![PolyQ::zero(); basis.len()];
        for (t, p) in &self.terms {
            let i = basis.position(*t).ok_or_else(|| {
                Error::InvariantViolation(format!("monomial a[{}] is outside the basis", t.comma_list()))
            })?;
            v[i] = p.clone();
        }
        Ok(v)
    }

    pub fn from_coordinates(basis: &BasisIndex, coords: &[PolyQ]) -> OsElement {
        let mut x = OsElement::zero();
        for (t, p) in basis.items().iter().zip(coords) {
            x.add_term(*t, p.clone());
        }
        x
    }
}

/// Free functions mirroring the algebra operations.
pub fn wedge(x: &OsElement, y: &OsElement) -> OsElement {
    x.wedge(y)
}

pub fn boundary_del(x: &OsElement) -> OsElement {
    x.boundary()
}

impl fmt::Debug for OsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms by degree, then lexicographically: `a[2] + (y1+y3) * a[1,3] + (-y4) * a[3,4]`.
impl fmt::Display for OsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<(&IndexSet, &PolyQ)> = self.terms.iter().collect();
        sorted.sort_by_key(|(t, _)| (t.len(), **t));
        let parts: Vec<String> = sorted
            .into_iter()
            .map(|(t, p)| {
                let mono = format!("a[{}]", t.comma_list());
                let text = p.to_string();
                if p == &PolyQ::one() {
                    mono
                } else if p.terms().count() == 1 && !text.starts_with('-') {
                    format!("{text} * {mono}")
                } else {
                    format!("({text}) * {mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for OsElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::MalformedElement { input: s.to_string(), reason };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(OsElement::zero());
        }
        if compact.is_empty() {
            return Err(bad("empty".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for ch in compact.chars() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                return Err(bad("unbalanced brackets".into()));
            }
            if depth == 0 && (ch == '+' || ch == '-') && !cur.ends_with('*') {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if !terms.is_empty() || neg {
                    return Err(bad("doubled sign".into()));
                }
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if depth != 0 {
            return Err(bad("unbalanced brackets".into()));
        }
        if cur.is_empty() {
            return Err(bad("trailing sign".into()));
        }
        terms.push((neg, cur));

        let mut out = OsElement::zero();
        for (neg, term) in terms {
            let (coef_text, mono_text) = match term.rfind("a[") {
                Some(0) => ("", term.as_str()),
                Some(pos) => {
                    let (c, m) = term.split_at(pos);
                    let c = c.strip_suffix('*').ok_or_else(|| bad(format!("missing `*` in `{term}`")))?;
                    (c, m)
                }
                None => return Err(bad(format!("term `{term}` has no monomial a[...]"))),
            };
            let inner = mono_text
                .strip_prefix("a[")
                .and_then(|m| m.strip_suffix(']'))
                .ok_or_else(|| bad(format!("bad monomial `{mono_text}`")))?;
            let indices: Vec<usize> = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|x| x.parse::<usize>().ok().filter(|&i| (1..crate::index_set::MAX_INDEX).contains(&i)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| bad(format!("bad indices `{inner}`")))?
            };
            let coef = if coef_text.is_empty() {
                PolyQ::one()
            } else {
                let body = coef_text
                    .strip_prefix('(')
                    .and_then(|c| c.strip_suffix(')'))
                    .unwrap_or(coef_text);
                body.parse::<PolyQ>().map_err(|e| bad(e.to_string()))?
            };
            let coef = if neg { -&coef } else { coef };
            out = out.add(&OsElement::ordered_monomial(&indices).scale(&coef));
        }
        Ok(out)
    }
}

/// An ordered list of monomials with reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisIndex {
    items: Vec<IndexSet>,
    lookup: HashMap<IndexSet, usize>,
}

impl BasisIndex {
    pub fn new(items: Vec<IndexSet>) -> Self {
        let lookup = items.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        BasisIndex { items, lookup }
    }

    /// All `q`-subsets of `[n]` in lexicographic order.
    pub fn all_monomials(n: usize, q: usize) -> Self {
        BasisIndex::new(IndexSet::subsets_of_size(IndexSet::range(n), q))
    }

    pub fn items(&self) -> &[IndexSet] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn position(&self, t: IndexSet) -> Option<usize> {
        self.lookup.get(&t).copied()
    }

    pub fn labels(&self) -> Vec<String> {
        self.items.iter().map(|t| format!("a[{}]", t.comma_list())).collect()
    }
}

/// `r_T = a_U` if `T = U ∪ {n+1}`, else `∂a_T`, for every circuit of `t`.
pub fn ideal_generators(t: &CombinatorialType) -> Vec<(IndexSet, OsElement)> {
    let inf = t.n() + 1;
    t.circuits()
        .iter()
        .map(|&c| {
            let r = if c.contains(inf) {
                OsElement::monomial(c.without(inf))
            } else {
                OsElement::monomial(c).boundary()
            };
            (c, r)
        })
        .collect()
}

/// nbc `q`-tuples: `S ⊆ [n]` with `S ∪ {n+1}` independent and containing no
/// circuit with its least element removed. Lexicographic order.
pub fn nbc_basis(t: &CombinatorialType, q: usize) -> Result<Vec<IndexSet>> {
    if q > t.ell() {
        return Err(Error::DegreeOutOfRange { degree: q, max: t.ell() });
    }
    let inf = t.n() + 1;
    let broken: Vec<IndexSet> = t
        .circuits()
        .iter()
        .map(|c| c.without(c.first().expect("circuits are nonempty")))
        .collect();
    Ok(IndexSet::subsets_of_size(IndexSet::range(t.n()), q)
        .into_iter()
        .filter(|s| !t.contains_dependent(s.with(inf)))
        .filter(|s| !broken.iter().any(|b| b.is_subset(*s)))
        .collect())
}

pub fn betti(t: &CombinatorialType, q: usize) -> Result<usize> {
    nbc_basis(t, q).map(|b| b.len())
}

/// Degree-`q` spanning set `{a_K ∧ r_T}` of the ideal, as elements of the
/// general position algebra.
pub fn ideal_span(t: &CombinatorialType, q: usize) -> Vec<OsElement> {
    let gens = ideal_generators(t);
    let mut out = Vec::new();
    for (c, r) in &gens {
        let d = c.len() - 1;
        if d > q {
            continue;
        }
        for k in IndexSet::subsets_of_size(IndexSet::range(t.n()), q - d) {
            let g = OsElement::monomial(k).wedge(r);
            if !g.is_zero() {
                out.push(g);
            }
        }
    }
    out
}

/// The Orlik-Solomon algebra `A(T)` presented as a quotient of the general
/// position algebra, with the projection `p` to nbc coordinates per degree.
#[derive(Clone, Debug)]
pub struct OsAlgebra {
    ty: CombinatorialType,
    monomials: Vec<BasisIndex>,
    nbc: Vec<BasisIndex>,
    projection: Vec<Matrix>,
}

impl OsAlgebra {
    pub fn new(t: &CombinatorialType) -> Result<Self> {
        Self::with_strategy(t, Strategy::default())
    }

    pub fn with_strategy(t: &CombinatorialType, strategy: Strategy) -> Result<Self> {
        let degrees: Vec<usize> = (0..=t.ell()).collect();
        let built = sweep::map(strategy, &degrees, |&q| -> Result<(BasisIndex, BasisIndex, Matrix)> {
            let mono = BasisIndex::all_monomials(t.n(), q);
            let nbc = BasisIndex::new(nbc_basis(t, q)?);
            let p = projection_matrix(t, q, &mono, &nbc)?;
            Ok((mono, nbc, p))
        });
        let mut monomials = Vec::new();
        let mut nbc = Vec::new();
        let mut projection = Vec::new();
        for b in built {
            let (m, b, p) = b?;
            monomials.push(m);
            nbc.push(b);
            projection.push(p);
        }
        Ok(OsAlgebra { ty: t.clone(), monomials, nbc, projection })
    }

    pub fn ty(&self) -> &CombinatorialType {
        &self.ty
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    pub fn ell(&self) -> usize {
        self.ty.ell()
    }

    fn check_degree(&self, q: usize) -> Result<()> {
        if q > self.ell() {
            return Err(Error::DegreeOutOfRange { degree: q, max: self.ell() });
        }
        Ok(())
    }

    pub fn nbc(&self, q: usize) -> Result<&BasisIndex> {
        self.check_degree(q)?;
        Ok(&self.nbc[q])
    }

    pub fn monomials(&self, q: usize) -> Result<&BasisIndex> {
        self.check_degree(q)?;
        Ok(&self.monomials[q])
    }

    pub fn betti(&self, q: usize) -> usize {
        self.nbc.get(q).map_or(0, BasisIndex::len)
    }

    /// Matrix of `p: A^q(G) -> A^q(T)` (rows: nbc tuples, columns: all monomials).
    pub fn projection(&self, q: usize) -> Result<&Matrix> {
        self.check_degree(q)?;
        Ok(&self.projection[q])
    }

    /// nbc coordinates of a homogeneous degree-`q` element (zero allowed).
    pub fn reduce(&self, x: &OsElement, q: usize) -> Result<Vec<PolyQ>> {
        self.check_degree(q)?;
        if x.terms().any(|(t, _)| t.len() != q) {
            return Err(Error::DimensionMismatch(format!("element {x} is not homogeneous of degree {q}")));
        }
        let coords = x.coordinates(&self.monomials[q])?;
        Ok(apply_rational(&self.projection[q], &coords))
    }

    /// nbc coordinates of every nonzero homogeneous component.
    pub fn reduce_gradewise(&self, x: &OsElement) -> Result<BTreeMap<usize, Vec<PolyQ>>> {
        let mut out = BTreeMap::new();
        for q in 0..=self.ell() {
            let c = x.component(q);
            if !c.is_zero() {
                out.insert(q, self.reduce(&c, q)?);
            }
        }
        if let Some((t, _)) = x.terms().find(|(t, _)| t.len() > self.ell()) {
            return Err(Error::DegreeOutOfRange { degree: t.len(), max: self.ell() });
        }
        Ok(out)
    }
}

/// Rational matrix times polynomial vector.
pub fn apply_rational(m: &Matrix, v: &[PolyQ]) -> Vec<PolyQ> {
    (0..m.rows())
        .map(|i| {
            let mut acc = PolyQ::zero();
            for (j, x) in v.iter().enumerate() {
                let c = &m[(i, j)];
                if !c.is_zero() && !x.is_zero() {
                    acc += &x.scale(c);
                }
            }
            acc
        })
        .collect()
}

fn rational_coordinates(x: &OsElement, basis: &BasisIndex) -> Result<Vec<Q>> {
    let mut v = vec![Q::zero(); basis.len()];
    for (t, p) in x.terms() {
        let i = basis
            .position(*t)
            .ok_or_else(|| Error::InvariantViolation(format!("monomial a[{}] outside basis", t.comma_list())))?;
        if p.degree().unwrap_or(0) > 0 {
            return Err(Error::InvariantViolation("ideal generator with non-constant coefficient".into()));
        }
        v[i] = p.eval(&[]);
    }
    Ok(v)
}

/// Echelonizes the ideal span with non-nbc monomials ordered first. Because
/// nbc monomials span a complement of the ideal, the pivots must be exactly
/// the non-nbc columns; then `a_m ≡ -sum_J c_{m,J} a_J` for each row
/// `e_m + sum_J c_{m,J} e_J`.
fn projection_matrix(t: &CombinatorialType, q: usize, mono: &BasisIndex, nbc: &BasisIndex) -> Result<Matrix> {
    let non_nbc: Vec<usize> = (0..mono.len()).filter(|&i| nbc.position(mono.items()[i]).is_none()).collect();
    let nbc_cols: Vec<usize> = nbc
        .items()
        .iter()
        .map(|t| mono.position(*t).expect("nbc tuples are monomials"))
        .collect();
    let order: Vec<usize> = non_nbc.iter().chain(&nbc_cols).copied().collect();

    let mut p = Matrix::zeros(nbc.len(), mono.len());
    for (j, &col) in nbc_cols.iter().enumerate() {
        p[(j, col)] = Q::one();
    }
    if non_nbc.is_empty() {
        return Ok(p);
    }
    let rows: Vec<Vec<Q>> = ideal_span(t, q)
        .iter()
        .map(|g| {
            let v = rational_coordinates(g, mono)?;
            Ok(order.iter().map(|&i| v[i].clone()).collect())
        })
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::InvariantViolation(format!(
            "degree {q}: {} non-nbc monomials but the ideal is empty",
            non_nbc.len()
        )));
    }
    let (r, pivots) = Matrix::from_rows(rows).rref();
    if pivots != (0..non_nbc.len()).collect::<Vec<_>>() {
        return Err(Error::InvariantViolation(format!(
            "degree {q}: nbc monomials do not span a complement of the ideal (rank {}, expected {})",
            pivots.len(),
            non_nbc.len()
        )));
    }
    for (row, &m) in non_nbc.iter().enumerate() {
        for (j, &col) in nbc_cols.iter().enumerate() {
            let _ = col;
            let c = &r[(row, non_nbc.len() + j)];
            if !c.is_zero() {
                p[(j, m)] = -c.clone();
            }
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Arrangement;
    use crate::rational::q;

    fn s(v: &[usize]) -> IndexSet {
        IndexSet::from_slice(v)
    }
    fn e(text: &str) -> OsElement {
        text.parse().unwrap()
    }
    fn figure1_type() -> CombinatorialType {
        let rows = [[0, 1, -1], [0, 1, 0], [0, 1, 1], [1, 0, 1]];
        let a = Arrangement::new(2, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap();
        CombinatorialType::from_arrangement(&a)
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(OsElement::generator(2).wedge(&OsElement::generator(1)), e("-a[1,2]"));
        assert!(OsElement::generator(1).wedge(&OsElement::generator(1)).is_zero());
        assert_eq!(e("y1 * a[1] + y2 * a[2]").wedge(&e("a[3]")), e("y1 * a[1,3] + y2 * a[2,3]"));
        assert_eq!(OsElement::ordered_monomial(&[3, 1, 2]), e("a[1,2,3]"));
        assert_eq!(OsElement::ordered_monomial(&[2, 1, 3]), e("-a[1,2,3]"));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_del(&e("a[1,2,3]")), e("a[2,3] - a[1,3] + a[1,2]"));
        assert!(boundary_del(&boundary_del(&e("a[1,2,3,4]"))).is_zero());
        assert_eq!(boundary_del(&e("a[1,2]")), e("a[2] - a[1]"));
        assert_eq!(boundary_del(&e("a[4]")), OsElement::one());
        assert!(boundary_del(&OsElement::one()).is_zero());
    }

    #[test]
    fn text_form() {
        let x = e("(y1+y3) * a[1,3] - a[2] + (-y4)*a[3,4]");
        assert_eq!(x.to_string(), "(-1) * a[2] + (y1+y3) * a[1,3] + (-y4) * a[3,4]");
        assert_eq!(x.to_string().parse::<OsElement>().unwrap(), x);
        assert_eq!(e("y2 * a[2,1]"), e("(-y2) * a[1,2]"));
        for bad in ["", "a[1", "y1 a[1]", "a[0]", "a[1] +", "b[1]"] {
            assert!(bad.parse::<OsElement>().is_err(), "{bad}");
        }
    }

    #[test]
    fn ideal_generators_of_figure_one() {
        let gens = ideal_generators(&figure1_type());
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].0, s(&[1, 2, 3]));
        assert_eq!(gens[0].1, e("a[2,3] - a[1,3] + a[1,2]"));
    }

    #[test]
    fn ideal_generators_through_infinity() {
        let a1 = Arrangement::new(
            2,
            [[0, 1, -1], [0, 1, 0], [0, 1, 1], [1, 1, 1]]
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
        .unwrap();
        let gens = ideal_generators(&CombinatorialType::from_arrangement(&a1));
        let r = gens.iter().find(|(c, _)| *c == s(&[3, 4, 5])).unwrap();
        assert_eq!(r.1, e("a[3,4]"));
    }

    #[test]
    fn nbc_of_figure_one() {
        let t = figure1_type();
        let labels = |q| nbc_basis(&t, q).unwrap().iter().map(|x| x.label()).collect::<Vec<_>>();
        assert_eq!(labels(2), ["12", "13", "14", "24", "34"]);
        assert_eq!(labels(1), ["1", "2", "3", "4"]);
        assert_eq!(nbc_basis(&t, 0).unwrap(), vec![IndexSet::EMPTY]);
        assert!(nbc_basis(&t, 3).is_err());
        assert_eq!((0..=2).map(|q| betti(&t, q).unwrap()).collect::<Vec<_>>(), [1, 4, 5]);
    }

    #[test]
    fn reduction_matches_the_displayed_projection() {
        let alg = OsAlgebra::new(&figure1_type()).unwrap();
        let coords = alg.reduce(&e("a[2,3]"), 2).unwrap();
        let x = OsElement::from_coordinates(alg.nbc(2).unwrap(), &coords);
        assert_eq!(x, e("a[1,3] - a[1,2]"));
        let unit = alg.reduce(&e("a[2,4]"), 2).unwrap();
        assert_eq!(unit.iter().filter(|p| !p.is_zero()).count(), 1);
        let ideal = OsElement::generator(4).wedge(&ideal_generators(alg.ty())[0].1);
        assert!(ideal.is_zero() || alg.reduce(&ideal, 3).is_err());
        assert!(alg.reduce(&e("a[1]"), 2).is_err());
    }
}

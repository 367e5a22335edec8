//! Sparse multivariate polynomials in `y1, ..., yn` with exact rational
//! coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};

/// Exponent vector stored sparsely as `(variable, exponent)` pairs with
/// increasing variable index and nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(&x)) => {
                    out.push(x);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { format!("y{v}") } else { format!("y{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyQ {
    terms: BTreeMap<Monomial, Q>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = PolyQ::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        PolyQ::constant(Q::one())
    }

    /// The variable `y_i`.
    pub fn var(i: usize) -> Self {
        let mut p = PolyQ::zero();
        p.add_term(Monomial::var(i), Q::one());
        p
    }

    /// `sum_{i in vars} y_i`.
    pub fn var_sum<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        let mut p = PolyQ::zero();
        for i in vars {
            p.add_term(Monomial::var(i), Q::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest variable index appearing.
    pub fn max_var(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous_linear(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 1)
    }

    pub fn scale(&self, c: &Q) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Evaluates at `y_i = point[i - 1]`; panics if a variable exceeds the point length.
    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = &point[v - 1];
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `y1+y3`, `-y4`, `-1/2*y1^2*y2+3`, `0`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if m.0.is_empty() {
                write!(f, "{}", fmt_q(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_q(&abs))?;
            }
        }
        Ok(())
    }
}

impl FromStr for PolyQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::MalformedPolynomial {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // Split into signed terms at top-level + and -.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (idx, ch) in compact.chars().enumerate() {
            if ch == '+' || ch == '-' {
                let after_operator = cur.ends_with('*') || cur.ends_with('/') || cur.ends_with('^');
                if idx == 0 && cur.is_empty() {
                    neg = ch == '-';
                    continue;
                }
                if after_operator {
                    return Err(bad("sign after operator"));
                }
                if cur.is_empty() {
                    return Err(bad("doubled sign"));
                }
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("trailing sign"));
        }
        pieces.push((neg, cur));

        let mut p = PolyQ::zero();
        for (neg, term) in pieces {
            let mut coef = Q::one();
            let mut mono = Monomial::one();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if let Some(rest) = factor.strip_prefix('y') {
                    let (var, exp) = match rest.split_once('^') {
                        Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (rest, 1),
                    };
                    let var: usize = var.parse().map_err(|_| bad("bad variable index"))?;
                    if var == 0 {
                        return Err(bad("variables start at y1"));
                    }
                    if exp > 0 {
                        mono = mono.mul(&Monomial(vec![(var, exp)]));
                    }
                } else {
                    coef *= parse_q(factor).map_err(|_| bad("bad coefficient"))?;
                }
            }
            if neg {
                coef = -coef;
            }
            p.add_term(mono, coef);
        }
        Ok(p)
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&PolyQ> for PolyQ {
    fn add_assign(&mut self, rhs: &PolyQ) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        let mut out = PolyQ::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl From<Q> for PolyQ {
    fn from(c: Q) -> Self {
        PolyQ::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn p(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("y1+y3").to_string(), "y1+y3");
        assert_eq!(p("-y4").to_string(), "-y4");
        assert_eq!(p(" -y1 - y2 ").to_string(), "-y1-y2");
        assert_eq!(p("y2 + y1 - y2").to_string(), "y1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("1/2*y1^2*y3 - 3").to_string(), "-3+1/2*y1^2*y3");
        assert_eq!(p("2*y1*3"), p("6*y1"));
    }

    #[test]
    fn parse_errors() {
        for s in ["", "y", "y0", "y1+", "+-y1", "y1*", "x1", "1/0*y1"] {
            assert!(s.parse::<PolyQ>().is_err(), "{s}");
        }
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p("y1+y2");
        let b = p("y1-y2");
        assert_eq!(&a * &b, p("y1^2-y2^2"));
        assert!((&a - &a).is_zero());
        assert_eq!(a.eval(&[frac(1, 2), frac(1, 3)]), frac(5, 6));
        assert_eq!(p("y1^2+1").eval(&[q(3)]), q(10));
        assert_eq!(a.degree(), Some(1));
        assert_eq!(PolyQ::zero().degree(), None);
    }
}

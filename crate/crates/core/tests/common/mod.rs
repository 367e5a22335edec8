//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's elimination, nbc or ideal code.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gm_core::rational::{frac, q};
use gm_core::{Arrangement, IndexSet, Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn arrangement(ell: usize, rows: &[&[i64]]) -> Arrangement {
    Arrangement::new(ell, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).expect("valid arrangement")
}

pub fn arrangement_q(ell: usize, rows: &[&[(i64, i64)]]) -> Arrangement {
    Arrangement::new(ell, rows.iter().map(|r| r.iter().map(|&(a, b)| frac(a, b)).collect()).collect())
        .expect("valid arrangement")
}

/// Leibniz expansion.
pub fn leibniz_det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Q::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(p: &mut Vec<usize>, k: usize, m: &[Vec<Q>], total: &mut Q) {
    if k == p.len() {
        let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut t = if inversions % 2 == 0 { Q::one() } else { -Q::one() };
        for (r, &c) in p.iter().enumerate() {
            t *= &m[r][c];
        }
        *total += t;
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, m, total);
        p.swap(k, i);
    }
}

fn subsets(universe: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if universe.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in universe.iter().enumerate() {
        for mut rest in subsets(&universe[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// `S` dependent iff every `|S| x |S|` minor of its rows vanishes.
pub fn brute_dependent(a: &Arrangement) -> BTreeSet<IndexSet> {
    let ground: Vec<usize> = (1..=a.n() + 1).collect();
    let cols: Vec<usize> = (0..=a.ell()).collect();
    let mut out = BTreeSet::new();
    for k in 2..=a.ell() + 1 {
        for s in subsets(&ground, k) {
            let all_zero = subsets(&cols, k).iter().all(|c| {
                let m: Vec<Vec<Q>> = s.iter().map(|&i| c.iter().map(|&j| a.row(i)[j].clone()).collect()).collect();
                leibniz_det(&m).is_zero()
            });
            if all_zero {
                out.insert(IndexSet::from_slice(&s));
            }
        }
    }
    out
}

pub fn minimal(sets: &BTreeSet<IndexSet>) -> BTreeSet<IndexSet> {
    sets.iter().filter(|s| !sets.iter().any(|t| t != *s && t.is_subset(**s))).copied().collect()
}

/// Sparse exterior algebra element over rationals, keyed by bitmask.
pub type Ext = BTreeMap<u64, Q>;

fn add(x: &mut Ext, k: u64, c: Q) {
    let e = x.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        x.remove(&k);
    }
}

pub fn ext_wedge(x: &Ext, y: &Ext) -> Ext {
    let mut out = Ext::new();
    for (a, c) in x {
        for (b, d) in y {
            if a & b != 0 {
                continue;
            }
            // sign: pairs (i in a, j in b) with i > j
            let mut swaps = 0;
            for j in 0..64 {
                if b >> j & 1 == 1 {
                    swaps += (a >> (j + 1)).count_ones();
                }
            }
            let v = c * d;
            add(&mut out, a | b, if swaps % 2 == 0 { v } else { -v });
        }
    }
    out
}

pub fn ext_boundary(x: &Ext) -> Ext {
    let mut out = Ext::new();
    for (a, c) in x {
        let mut k = 0;
        for i in 0..64 {
            if a >> i & 1 == 1 {
                add(&mut out, a & !(1 << i), if k % 2 == 0 { c.clone() } else { -c.clone() });
                k += 1;
            }
        }
    }
    out
}

pub fn ext_mono(s: IndexSet) -> Ext {
    // IndexSet bit i-1 is index i, matching the mask convention here
    Ext::from([(s.bits(), Q::one())])
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let v = &f * &rows[r][j];
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim A^q(T)` as `C(n,q)` minus the rank of the ideal span in degree `q`,
/// from circuits alone.
pub fn quotient_dim(n: usize, circuits: &BTreeSet<IndexSet>, degree: usize) -> usize {
    let inf = n + 1;
    let universe: Vec<usize> = (1..=n).collect();
    let basis: Vec<u64> = subsets(&universe, degree).iter().map(|s| IndexSet::from_slice(s).bits()).collect();
    let mut rows = Vec::new();
    for c in circuits {
        let r = if c.contains(inf) { ext_mono(c.without(inf)) } else { ext_boundary(&ext_mono(*c)) };
        let d = c.len() - 1;
        if d > degree {
            continue;
        }
        for k in subsets(&universe, degree - d) {
            let g = ext_wedge(&ext_mono(IndexSet::from_slice(&k)), &r);
            if !g.is_empty() {
                rows.push(basis.iter().map(|b| g.get(b).cloned().unwrap_or_else(Q::zero)).collect());
            }
        }
    }
    basis.len() - if rows.is_empty() { 0 } else { rank(rows) }
}

/// Arrangements with small integer coefficients, so degeneracies are common.
pub fn small_arrangement(ell: usize, n_max: usize) -> impl Strategy<Value = Arrangement> {
    (ell..=n_max)
        .prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(-2i64..=2, ell + 1), n))
        .prop_filter_map("invalid arrangement", move |rows| {
            Arrangement::new(ell, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).ok()
        })
}

pub fn small_rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=7).prop_map(|(a, b)| frac(a, b))
}

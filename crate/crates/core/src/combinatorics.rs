//! Dependent sets, circuits, relative dependence and the combinatorial side of
//! codimension-one degenerations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arrangement::{Arrangement, MultiplicitySource};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::sweep::{self, Strategy};

/// Dependence data `Dep(T)_q` for `2 <= q <= ell + 1` together with circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialType {
    n: usize,
    ell: usize,
    dep: BTreeMap<usize, BTreeSet<IndexSet>>,
    circuits: BTreeSet<IndexSet>,
}

impl CombinatorialType {
    /// Dependence data of a realization: `S` is dependent iff `rank N_S < |S|`.
    pub fn from_arrangement(arr: &Arrangement) -> Self {
        Self::from_arrangement_with(arr, Strategy::default())
    }

    pub fn from_arrangement_with(arr: &Arrangement, strategy: Strategy) -> Self {
        let ground = arr.ground_set();
        let mut dep = BTreeMap::new();
        for q in 2..=arr.ell() + 1 {
            let candidates = IndexSet::subsets_of_size(ground, q);
            let found: BTreeSet<IndexSet> =
                sweep::filter(strategy, &candidates, |s| arr.rank(*s) < s.len()).into_iter().collect();
            dep.insert(q, found);
        }
        Self::assemble(arr.n(), arr.ell(), dep)
    }

    /// A type given directly by its dependent sets. Sets larger than
    /// `ell + 1` are ignored. No realizability is implied; this exists for
    /// hand-built negative controls.
    pub fn from_dependent_sets<I: IntoIterator<Item = IndexSet>>(n: usize, ell: usize, sets: I) -> Result<Self> {
        let ground = IndexSet::range(n + 1);
        let mut dep: BTreeMap<usize, BTreeSet<IndexSet>> = (2..=ell + 1).map(|q| (q, BTreeSet::new())).collect();
        for s in sets {
            if !s.is_subset(ground) || s.len() < 2 {
                return Err(Error::BadIndexSet {
                    set: s.to_string(),
                    reason: format!("dependent sets must have at least 2 indices in 1..={}", n + 1),
                });
            }
            if let Some(level) = dep.get_mut(&s.len()) {
                level.insert(s);
            }
        }
        Ok(Self::assemble(n, ell, dep))
    }

    fn assemble(n: usize, ell: usize, dep: BTreeMap<usize, BTreeSet<IndexSet>>) -> Self {
        let all: Vec<IndexSet> = dep.values().flatten().copied().collect();
        let circuits = all
            .iter()
            .filter(|s| !all.iter().any(|t| t != *s && t.is_subset(**s)))
            .copied()
            .collect();
        CombinatorialType { n, ell, dep, circuits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `Dep(T)_q`; empty outside `2..=ell+1`.
    pub fn dep(&self, q: usize) -> BTreeSet<IndexSet> {
        self.dep.get(&q).cloned().unwrap_or_default()
    }

    pub fn dep_by_size(&self) -> &BTreeMap<usize, BTreeSet<IndexSet>> {
        &self.dep
    }

    pub fn all_dependent(&self) -> impl Iterator<Item = IndexSet> + '_ {
        self.dep.values().flatten().copied()
    }

    /// Inclusion-minimal dependent sets of size at most `ell + 1`.
    pub fn circuits(&self) -> &BTreeSet<IndexSet> {
        &self.circuits
    }

    /// Only meaningful for `|s| <= ell + 1`; larger sets are reported dependent.
    pub fn is_dependent(&self, s: IndexSet) -> bool {
        if s.len() > self.ell + 1 {
            return true;
        }
        self.dep.get(&s.len()).is_some_and(|d| d.contains(&s))
    }

    /// Contains a dependent subset (checked through circuits).
    pub fn contains_dependent(&self, s: IndexSet) -> bool {
        s.len() > self.ell + 1 || self.circuits.iter().any(|c| c.is_subset(s))
    }

    pub fn is_general_position(&self) -> bool {
        self.dep.values().all(BTreeSet::is_empty)
    }

    pub fn ground_set(&self) -> IndexSet {
        IndexSet::range(self.n + 1)
    }
}

impl fmt::Display for CombinatorialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, sets) in &self.dep {
            let labels: Vec<String> = sets.iter().map(|s| s.label()).collect();
            writeln!(f, "Dep_{q} = {{{}}}", labels.join(", "))?;
        }
        let labels: Vec<String> = self.circuits.iter().map(|s| s.label()).collect();
        write!(f, "circuits = {{{}}}", labels.join(", "))
    }
}

/// `Dep(T') \ Dep(T)`, graded by cardinality, `|S| <= ell + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelativeDep {
    pub by_size: BTreeMap<usize, BTreeSet<IndexSet>>,
}

impl RelativeDep {
    pub fn sets(&self) -> impl Iterator<Item = IndexSet> + '_ {
        self.by_size.values().flatten().copied()
    }

    pub fn contains(&self, s: IndexSet) -> bool {
        self.by_size.get(&s.len()).is_some_and(|d| d.contains(&s))
    }

    pub fn is_empty(&self) -> bool {
        self.by_size.values().all(BTreeSet::is_empty)
    }

    pub fn len(&self) -> usize {
        self.by_size.values().map(BTreeSet::len).sum()
    }

    /// Sorted by size, then lexicographically.
    pub fn to_vec(&self) -> Vec<IndexSet> {
        self.sets().collect()
    }
}

impl fmt::Display for RelativeDep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.sets().map(|s| s.label()).collect();
        write!(f, "{{{}}}", labels.join(", "))
    }
}

pub fn relative_dep(tprime: &CombinatorialType, t: &CombinatorialType) -> Result<RelativeDep> {
    if (tprime.n, tprime.ell) != (t.n, t.ell) {
        return Err(Error::DimensionMismatch(format!(
            "types live on different ground data: (n={}, ell={}) vs (n={}, ell={})",
            tprime.n, tprime.ell, t.n, t.ell
        )));
    }
    let mut by_size = BTreeMap::new();
    for (q, sets) in &t.dep {
        let other = tprime.dep.get(q).cloned().unwrap_or_default();
        if let Some(missing) = sets.iter().find(|s| !other.contains(s)) {
            return Err(Error::NotADegeneration(missing.label()));
        }
        let extra: BTreeSet<IndexSet> = other.difference(sets).copied().collect();
        if !extra.is_empty() {
            by_size.insert(*q, extra);
        }
    }
    Ok(RelativeDep { by_size })
}

/// A Type II family (`fixed = p`) or Type III family (`fixed = m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub fixed: usize,
    pub members: Vec<IndexSet>,
}

/// How the relative dependent sets sit around one circuit `T`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Classification {
    pub circuit: IndexSet,
    /// `|S ∩ T| < |T| - 1`: never `T`-relevant.
    pub type_one: Vec<IndexSet>,
    /// Contain a facet of `T` but are too large to act on `r_T`'s degree.
    pub out_of_degree: Vec<IndexSet>,
    /// Facets `T_p` lying in the relative family.
    pub facets: Vec<IndexSet>,
    pub type_two: Vec<Family>,
    pub type_three: Vec<Family>,
    /// Sets `T_p^m` lying in both a Type II and a Type III family.
    pub intersections: Vec<IndexSet>,
}

impl Classification {
    pub fn is_mixed(&self) -> bool {
        !self.type_two.is_empty() && !self.type_three.is_empty()
    }

    /// Sets of size `|T|` that are relevant to `T`.
    pub fn relevant_top(&self) -> BTreeSet<IndexSet> {
        self.type_two
            .iter()
            .chain(&self.type_three)
            .flat_map(|f| f.members.iter().copied())
            .collect()
    }
}

/// Sorts the members of `rel` around the circuit `circuit` of `t` into
/// Type I sets, facets, and Type II / Type III families.
pub fn classify_relevant(t: &CombinatorialType, circuit: IndexSet, rel: &RelativeDep) -> Result<Classification> {
    if !t.circuits.contains(&circuit) {
        return Err(Error::BadIndexSet { set: circuit.to_string(), reason: "not a circuit of the type".into() });
    }
    let tsize = circuit.len();
    let q = tsize - 1;
    let outside = t.ground_set().difference(circuit);
    let mut out = Classification { circuit, ..Default::default() };
    let mut tops: BTreeSet<IndexSet> = BTreeSet::new();
    for s in rel.sets() {
        let meet = s.intersection(circuit).len();
        if circuit.is_subset(s) {
            return Err(Error::NotTeraoDegeneration(format!(
                "{} contains the circuit {}",
                s.label(),
                circuit.label()
            )));
        }
        if meet < q {
            out.type_one.push(s);
        } else if s.len() == q {
            out.facets.push(s);
        } else if s.len() == q + 1 {
            tops.insert(s);
        } else {
            out.out_of_degree.push(s);
        }
    }
    let t_pm = |p: usize, m: usize| circuit.without(p).with(m);
    for p in circuit.iter() {
        let members: Vec<IndexSet> = outside.iter().map(|m| t_pm(p, m)).collect();
        if q >= 2 && !members.is_empty() && members.iter().all(|s| tops.contains(s)) {
            out.type_two.push(Family { fixed: p, members });
        }
    }
    for m in outside.iter() {
        let members: Vec<IndexSet> = circuit.iter().map(|p| t_pm(p, m)).collect();
        if members.iter().all(|s| tops.contains(s)) {
            out.type_three.push(Family { fixed: m, members });
        }
    }
    let covered = out.relevant_top();
    if let Some(stray) = tops.iter().find(|s| !covered.contains(s)) {
        return Err(Error::NotTeraoDegeneration(format!(
            "{} is relevant to circuit {} but completes no Type II or Type III family",
            stray.label(),
            circuit.label()
        )));
    }
    for f2 in &out.type_two {
        for f3 in &out.type_three {
            out.intersections.push(t_pm(f2.fixed, f3.fixed));
        }
    }
    out.intersections.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the necessary conditions for a codimension-one cover. Passing
/// does not prove the pair is a cover: excluding intermediate realizable
/// types is not attempted.
#[derive(Clone, Debug, Default)]
pub struct CoverReport {
    pub entries: Vec<CheckEntry>,
    pub classifications: Vec<Classification>,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.entries.push(CheckEntry { name, passed, detail: detail.into() });
    }
}

impl fmt::Display for CoverReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "[{}] {}: {}", if e.passed { "pass" } else { "FAIL" }, e.name, e.detail)?;
        }
        Ok(())
    }
}

pub fn check_cover_necessary(
    tprime: &CombinatorialType,
    t: &CombinatorialType,
    mult: &dyn MultiplicitySource,
) -> Result<CoverReport> {
    let rel = relative_dep(tprime, t)?;
    let mut report = CoverReport::default();

    report.push(
        "strict degeneration",
        !rel.is_empty(),
        if rel.is_empty() { "relative dependence is empty".to_string() } else { format!("Dep(T',T) = {rel}") },
    );

    // Two circuit facets of a set force every facet to be dependent.
    let mut closure_failures = Vec::new();
    let circuits: Vec<IndexSet> = tprime.circuits.iter().copied().collect();
    let mut seen = BTreeSet::new();
    for (i, a) in circuits.iter().enumerate() {
        for b in &circuits[i + 1..] {
            let u = a.union(*b);
            if a.len() != b.len() || u.len() != a.len() + 1 || u.len() > t.ell + 1 || !seen.insert(u) {
                continue;
            }
            if let Some((_, bad)) = u.facets().find(|(_, f)| !tprime.is_dependent(*f)) {
                closure_failures.push(format!("{} (facet {} independent)", u.label(), bad.label()));
            }
        }
    }
    report.push(
        "facet closure",
        closure_failures.is_empty(),
        if closure_failures.is_empty() { "holds".to_string() } else { closure_failures.join("; ") },
    );

    let mut facet_failures = Vec::new();
    let mut mult_failures = Vec::new();
    let mut mult_notes = Vec::new();
    for &circuit in t.circuits.iter() {
        let facets_in_rel: Vec<IndexSet> = circuit.facets().map(|(_, f)| f).filter(|f| rel.contains(*f)).collect();
        if facets_in_rel.len() > 1 {
            let labels: Vec<String> = facets_in_rel.iter().map(|s| s.label()).collect();
            facet_failures.push(format!("circuit {}: facets {} all degenerate", circuit.label(), labels.join(", ")));
        }
        let class = match classify_relevant(t, circuit, &rel) {
            Ok(c) => c,
            Err(e) => {
                facet_failures.push(format!("circuit {}: {e}", circuit.label()));
                continue;
            }
        };
        for fam in &class.type_two {
            let facet = circuit.without(fam.fixed);
            if !rel.contains(facet) {
                facet_failures.push(format!(
                    "circuit {}: Type II family at p={} without its facet {}",
                    circuit.label(),
                    fam.fixed,
                    facet.label()
                ));
            }
        }
        if class.type_two.len() > 1 {
            facet_failures.push(format!("circuit {}: more than one Type II family", circuit.label()));
        }
        for s in class.relevant_top() {
            let expected = if class.intersections.contains(&s) { 2 } else { 1 };
            let got = mult.multiplicity_of(s)?;
            if got != expected {
                mult_failures.push(format!("m_{} = {got}, expected {expected}", s.label()));
            } else {
                mult_notes.push(format!("m_{} = {got}", s.label()));
            }
        }
        report.classifications.push(class);
    }
    report.push(
        "facet uniqueness",
        facet_failures.is_empty(),
        if facet_failures.is_empty() {
            "at most one facet per circuit, matching its Type II family".to_string()
        } else {
            facet_failures.join("; ")
        },
    );
    report.push(
        "multiplicities",
        mult_failures.is_empty(),
        if mult_failures.is_empty() {
            if mult_notes.is_empty() { "no relevant sets".to_string() } else { mult_notes.join(", ") }
        } else {
            mult_failures.join("; ")
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::FixedMultiplicities;
    use crate::rational::q;

    fn arr(rows: &[[i64; 3]]) -> Arrangement {
        Arrangement::new(2, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    fn s(v: &[usize]) -> IndexSet {
        IndexSet::from_slice(v)
    }

    fn fig() -> Arrangement {
        arr(&[[0, 1, -1], [0, 1, 0], [0, 1, 1], [1, 0, 1]])
    }
    fn fig1() -> Arrangement {
        arr(&[[0, 1, -1], [0, 1, 0], [0, 1, 1], [1, 1, 1]])
    }
    fn fig2() -> Arrangement {
        arr(&[[0, 1, 0], [0, 1, 0], [0, 1, 1], [1, 0, 1]])
    }
    fn fig3() -> Arrangement {
        arr(&[[0, 1, -1], [0, 1, 0], [0, 1, 1], [0, 0, 1]])
    }

    #[test]
    fn figure_one_dependence() {
        let t = CombinatorialType::from_arrangement(&fig());
        assert!(t.dep(2).is_empty());
        assert_eq!(t.dep(3), [s(&[1, 2, 3])].into());
        assert_eq!(t.circuits(), &[s(&[1, 2, 3])].into());
        let t3 = CombinatorialType::from_arrangement(&fig3());
        assert_eq!(t3.dep(3), [s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[2, 3, 4])].into());
    }

    #[test]
    fn relative_dependence_of_the_three_degenerations() {
        let t = CombinatorialType::from_arrangement(&fig());
        let labels = |a: &Arrangement| {
            let r = relative_dep(&CombinatorialType::from_arrangement(a), &t).unwrap();
            r.sets().map(|s| s.label()).collect::<Vec<_>>()
        };
        assert_eq!(labels(&fig1()), ["345"]);
        assert_eq!(labels(&fig2()), ["12", "124", "125"]);
        assert_eq!(labels(&fig3()), ["124", "134", "234"]);
        assert!(relative_dep(&t, &t).unwrap().is_empty());
        let t1 = CombinatorialType::from_arrangement(&fig1());
        assert!(matches!(relative_dep(&t, &t1), Err(Error::NotADegeneration(_))));
    }

    #[test]
    fn classification_examples() {
        let t = CombinatorialType::from_arrangement(&fig());
        let c = s(&[1, 2, 3]);
        let rel2 = relative_dep(&CombinatorialType::from_arrangement(&fig2()), &t).unwrap();
        let k2 = classify_relevant(&t, c, &rel2).unwrap();
        assert_eq!(k2.facets, vec![s(&[1, 2])]);
        assert_eq!(k2.type_two, vec![Family { fixed: 3, members: vec![s(&[1, 2, 4]), s(&[1, 2, 5])] }]);
        assert!(k2.type_three.is_empty());

        let rel3 = relative_dep(&CombinatorialType::from_arrangement(&fig3()), &t).unwrap();
        let k3 = classify_relevant(&t, c, &rel3).unwrap();
        assert_eq!(k3.type_three.len(), 1);
        assert_eq!(k3.type_three[0].fixed, 4);
        assert!(k3.type_two.is_empty() && k3.facets.is_empty());

        let rel1 = relative_dep(&CombinatorialType::from_arrangement(&fig1()), &t).unwrap();
        let k1 = classify_relevant(&t, c, &rel1).unwrap();
        assert_eq!(k1.type_one, vec![s(&[3, 4, 5])]);
        assert!(k1.relevant_top().is_empty());
    }

    #[test]
    fn incomplete_family_is_rejected() {
        let t = CombinatorialType::from_arrangement(&fig());
        let tp = CombinatorialType::from_dependent_sets(4, 2, [s(&[1, 2, 3]), s(&[1, 2, 4])]).unwrap();
        let rel = relative_dep(&tp, &t).unwrap();
        assert!(matches!(classify_relevant(&t, s(&[1, 2, 3]), &rel), Err(Error::NotTeraoDegeneration(_))));
    }

    #[test]
    fn cover_checks_on_figure_one() {
        let t = CombinatorialType::from_arrangement(&fig());
        for a in [fig1(), fig2(), fig3()] {
            let tp = CombinatorialType::from_arrangement(&a);
            let report = check_cover_necessary(&tp, &t, &a).unwrap();
            assert!(report.passed(), "{report}");
        }
        let same = check_cover_necessary(&t, &t, &fig()).unwrap();
        assert!(!same.passed());
    }

    #[test]
    fn fabricated_type_two_without_facet_fails_uniqueness() {
        let t = CombinatorialType::from_arrangement(&fig());
        let tp = CombinatorialType::from_dependent_sets(4, 2, [s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[1, 2, 5])]).unwrap();
        let report = check_cover_necessary(&tp, &t, &FixedMultiplicities::default()).unwrap();
        let failed: Vec<_> = report.failures().map(|e| e.name).collect();
        assert!(failed.contains(&"facet uniqueness"), "{report}");
    }
}

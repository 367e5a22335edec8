//! The four-line example: bundled goldens and a report comparing every
//! computed matrix against them.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use crate::aomoto::{aomoto_complex, specialized_block, DegenerationPair, GradedMap};
use crate::arrangement::Arrangement;
use crate::combinatorics::CombinatorialType;
use crate::connection::{induced_connection, solve_conjugate, Weights};
use crate::error::{Error, Result};
use crate::format::{parse_arrangement, parse_graded_map};
use crate::index_set::IndexSet;
use crate::linalg::Matrix;
use crate::os_algebra::OsAlgebra;
use crate::rational::{frac, Q};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/figure1/", $name)))),*]
    };
}

const BUNDLED: &[(&str, &str)] = bundled!(
    "A.toml",
    "A1.toml",
    "A2.toml",
    "A3.toml",
    "mu1.toml",
    "omega2_T1.toml",
    "omega2_T2.toml",
    "omega2_T3.toml",
    "OmegaC_T1.toml",
    "OmegaC_T2.toml",
    "OmegaC_T3.toml",
    "upsilon.toml",
    "Omega1.toml",
    "Omega2.toml",
    "Omega3.toml",
);

/// Golden file texts keyed by file name.
#[derive(Clone, Debug)]
pub struct Goldens {
    files: BTreeMap<String, String>,
}

impl Goldens {
    pub fn bundled() -> Self {
        Goldens { files: BUNDLED.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect() }
    }

    /// Same file names read from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let mut files = BTreeMap::new();
        for (name, _) in BUNDLED {
            let path = dir.join(name);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
            files.insert(name.to_string(), text);
        }
        Ok(Goldens { files })
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|(k, _)| *k)
    }

    pub fn text(&self, name: &str) -> Result<&str> {
        self.files.get(name).map(String::as_str).ok_or_else(|| Error::Format(format!("missing golden {name}")))
    }

    pub fn arrangement(&self, name: &str) -> Result<Arrangement> {
        parse_arrangement(self.text(name)?)
    }

    pub fn map(&self, name: &str) -> Result<GradedMap> {
        parse_graded_map(self.text(name)?).map_err(|e| Error::Format(format!("{name}: {e}")))
    }
}

/// Default nonresonant weights for the combinatorial connections.
pub fn nonresonant_weights() -> Vec<Weights> {
    [
        [frac(1, 2), frac(1, 3), frac(1, 5), frac(1, 7)],
        [frac(-1, 3), frac(2, 7), frac(5, 11), frac(-3, 13)],
        [frac(7, 4), frac(-5, 6), frac(3, 8), frac(9, 10)],
    ]
    .into_iter()
    .map(|v| Weights::new(v.to_vec()))
    .collect()
}

/// Resonant weights: `λ_{123} ∈ Z`, `λ_4 ∈ Z`, `λ_2 ∉ Z`.
pub fn resonant_weights() -> Vec<Weights> {
    [
        [frac(1, 3), frac(1, 3), frac(1, 3), frac(0, 1)],
        [frac(1, 2), frac(1, 3), frac(1, 6), frac(1, 1)],
        [frac(-1, 5), frac(2, 5), frac(4, 5), frac(-2, 1)],
    ]
    .into_iter()
    .map(|v| Weights::new(v.to_vec()))
    .collect()
}

/// βnbc representatives `η_24 = λ_2 λ_4 a_24`, `η_34 = λ_3 λ_4 a_34` in nbc
/// coordinates of `A^2(T)`.
pub fn beta_nbc_representatives(alg: &OsAlgebra, w: &Weights) -> Result<Matrix> {
    let nbc = alg.nbc(2)?;
    let mut m = Matrix::zeros(nbc.len(), 2);
    for (c, (i, j)) in [(2, 4), (3, 4)].into_iter().enumerate() {
        let row = nbc
            .position(IndexSet::from_slice(&[i, j]))
            .ok_or_else(|| Error::InvariantViolation(format!("a[{i},{j}] is not nbc")))?;
        m[(row, c)] = w.get(i) * w.get(j);
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ExampleReport {
    pub checks: Vec<ExampleCheck>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, result: std::result::Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(ExampleCheck { name: name.into(), passed, detail });
    }
}

impl fmt::Display for ExampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "ok" } else { "MISMATCH" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn matrix_diff(got: &Matrix, want: &Matrix) -> Option<String> {
    if (got.rows(), got.cols()) != (want.rows(), want.cols()) {
        return Some(format!("shape {}x{} vs {}x{}", got.rows(), got.cols(), want.rows(), want.cols()));
    }
    for i in 0..got.rows() {
        for j in 0..got.cols() {
            if got[(i, j)] != want[(i, j)] {
                return Some(format!("entry ({}, {}): computed {} expected {}", i + 1, j + 1, got[(i, j)], want[(i, j)]));
            }
        }
    }
    None
}

fn golden_block(g: &GradedMap, q: usize, w: &[Q]) -> Result<Matrix> {
    specialized_block(g, q, w)
}

/// The three degeneration pairs of the example, labelled `T1..T3`.
pub fn pairs(goldens: &Goldens) -> Result<Vec<(String, DegenerationPair)>> {
    let a = goldens.arrangement("A.toml")?;
    (1..=3)
        .map(|j| {
            let aj = goldens.arrangement(&format!("A{j}.toml"))?;
            Ok((format!("T{j}"), DegenerationPair::from_arrangements(&a, &aj)?))
        })
        .collect()
}

/// Computes every example matrix and compares with the goldens. With
/// `weights`, weight-dependent items are computed at those weights and
/// reported without golden comparison.
pub fn run_example(goldens: &Goldens, weights: Option<&Weights>) -> Result<ExampleReport> {
    let mut report = ExampleReport::default();
    let a = goldens.arrangement("A.toml")?;
    let t = CombinatorialType::from_arrangement(&a);
    let alg = OsAlgebra::new(&t)?;

    let mu = aomoto_complex(&alg, "T")?;
    let mu1 = mu.block(1).cloned();
    let golden_mu = goldens.map("mu1.toml")?;
    let mut only_mu1 = GradedMap::new("T", "T", 1, 4);
    if let Some(b) = mu1 {
        only_mu1.insert(1, b);
    }
    report.push("mu1", only_mu1.first_difference(&golden_mu).map_or(Ok("4x5 matches".into()), Err));

    let pairs = pairs(goldens)?;
    let mut induced = Vec::new();
    for (name, pair) in &pairs {
        let omega = pair.induced()?;
        let tilde1 = pair.tilde.block(1).map(|b| b.matrix.clone());
        let same = omega.block(1).map(|b| b.matrix.clone()) == tilde1;
        report.push(
            format!("omega1_{name}"),
            if same { Ok("equals the formal map in degree 1".into()) } else { Err("differs from the formal map".into()) },
        );
        let mut top = GradedMap::new("T", "T", 0, 4);
        top.insert(2, omega.block(2).cloned().expect("degree 2 block"));
        let golden = goldens.map(&format!("omega2_{name}.toml"))?;
        report.push(format!("omega2_{name}"), top.first_difference(&golden).map_or(Ok("5x5 matches".into()), Err));
        induced.push((name.clone(), omega));
    }

    let nonres = match weights {
        Some(w) => vec![w.clone()],
        None => nonresonant_weights(),
    };
    for (name, omega) in &induced {
        let golden = goldens.map(&format!("OmegaC_{name}.toml"))?;
        let mut results = Vec::new();
        for w in &nonres {
            let check = (|| -> std::result::Result<String, String> {
                w.check_nonresonant(&t, &[]).map_err(|e| e.to_string())?;
                let reps = beta_nbc_representatives(&alg, w).map_err(|e| e.to_string())?;
                let (_, m) = induced_connection(&alg, omega, w, 2, Some(reps)).map_err(|e| e.to_string())?;
                if weights.is_some() {
                    return Ok(format!("at λ = {w}: {}", crate::aomoto::format_rational(&m.transpose()).replace('\n', "; ")));
                }
                let want = golden_block(&golden, 2, w.values()).map_err(|e| e.to_string())?;
                match matrix_diff(&m, &want) {
                    None => Ok(format!("λ = {w}")),
                    Some(d) => Err(format!("λ = {w}: {d}")),
                }
            })();
            results.push(check);
        }
        let failed: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
        let label = if weights.is_some() { "golden skipped; " } else { "" };
        report.push(
            format!("OmegaC2_{name}"),
            if failed.is_empty() {
                Ok(format!("{label}{}", results.into_iter().flatten().collect::<Vec<_>>().join(", ")))
            } else {
                Err(failed.join("; "))
            },
        );
    }

    let upsilon = goldens.map("upsilon.toml")?;
    let ups = upsilon.block(2).ok_or_else(|| Error::Format("upsilon.toml needs a degree 2 block".into()))?;
    for (j, (name, omega)) in induced.iter().enumerate() {
        let golden = goldens.map(&format!("Omega{}.toml", j + 1))?;
        let g = golden.block(2).ok_or_else(|| Error::Format("Omega files need a degree 2 block".into()))?;
        let w2 = &omega.block(2).expect("degree 2 block").matrix;
        let lhs = ups.matrix.mul(w2);
        let rhs = g.matrix.mul(&ups.matrix);
        let mut result = match lhs.first_difference(&rhs) {
            None => Ok("polynomial identity holds".to_string()),
            Some((r, c)) => Err(format!("identity fails at ({}, {}): {} vs {}", r + 1, c + 1, lhs[(r, c)], rhs[(r, c)])),
        };
        if result.is_ok() {
            let res = match weights {
                Some(w) => vec![w.clone()],
                None => resonant_weights(),
            };
            for w in &res {
                let p = ups.matrix.eval(w.values());
                let m = w2.eval(w.values());
                match solve_conjugate(&p, &m) {
                    Ok(sol) if weights.is_some() => {
                        result = Ok(format!(
                            "golden skipped; at λ = {w}: {}",
                            crate::aomoto::format_rational(&sol.transpose()).replace('\n', "; ")
                        ));
                    }
                    Ok(sol) => {
                        if let Some(d) = matrix_diff(&sol, &g.matrix.eval(w.values())) {
                            result = Err(format!("solver at λ = {w}: {d}"));
                            break;
                        }
                    }
                    Err(e) => {
                        result = Err(format!("solver at λ = {w}: {e}"));
                        break;
                    }
                }
            }
            if weights.is_none() {
                if let Ok(s) = &mut result {
                    s.push_str(&format!("; solver agrees at {} resonant weights", res.len()));
                }
            }
        }
        report.push(format!("Omega{}_{name}", j + 1), result);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_goldens_parse() {
        let g = Goldens::bundled();
        for name in Goldens::names() {
            if name.starts_with('A') {
                g.arrangement(name).unwrap();
            } else {
                g.map(name).unwrap();
            }
        }
    }

    #[test]
    fn weight_sets_have_the_intended_kind() {
        let g = Goldens::bundled();
        let t = CombinatorialType::from_arrangement(&g.arrangement("A.toml").unwrap());
        for w in nonresonant_weights() {
            assert!(w.check_nonresonant(&t, &[]).is_ok());
        }
        for w in resonant_weights() {
            let v = w.values();
            assert!((&v[0] + &v[1] + &v[2]).is_integer() && v[3].is_integer() && !v[1].is_integer());
        }
    }
}

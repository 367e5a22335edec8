use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gm_core::aomoto::{
    aomoto_complex, general_position, specialize, tilde_omega_s_map, verify_cochain, DegenerationPair, GradedMap,
};
use gm_core::combinatorics::check_cover_necessary;
use gm_core::connection::{induced_connection, solve_conjugate, Weights};
use gm_core::example::{run_example, Goldens};
use gm_core::format::{graded_map_to_toml, parse_arrangement, parse_graded_map, Orientation};
use gm_core::os_algebra::OsAlgebra;
use gm_core::{Arrangement, CombinatorialType, Matrix};

#[derive(Parser)]
#[command(name = "gmconn", version, about = "Gauss-Manin connections of arrangement degenerations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Dependent sets, circuits and Betti numbers of an arrangement.
    Dep {
        /// Arrangement file (TOML).
        arrangement: PathBuf,
    },
    /// Formal and induced connection maps of a degeneration pair.
    Omega {
        /// Arrangement file of the base type T.
        t: PathBuf,
        /// Arrangement file of the degeneration T'.
        tprime: PathBuf,
        /// Show only this degree.
        #[arg(long)]
        degree: Option<usize>,
        /// Print the maps specialized at these weights, e.g. `1/2,-1/3,1/5,1/7`.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Connection matrix in cohomology, or via a projection fixture.
    Gm {
        /// Arrangement file of the base type T.
        t: PathBuf,
        /// Arrangement file of the degeneration T'.
        tprime: PathBuf,
        /// Comma-separated rational weights, one per finite hyperplane.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Cohomological degree.
        #[arg(long)]
        degree: usize,
        /// Graded map file of a surjection onto local system cohomology; the
        /// connection is then solved from it instead of the combinatorial one.
        #[arg(long)]
        projection: Option<PathBuf>,
    },
    /// Recompute the four-line example and diff against goldens.
    Example {
        /// Compute at these weights instead of the built-in sets; goldens are skipped.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Read goldens from this directory instead of the bundled copies.
        #[arg(long)]
        goldens: Option<PathBuf>,
    },
    /// Cover conditions, ideal invariance and cochain checks for a pair.
    Verify {
        /// Arrangement file of the base type T.
        t: PathBuf,
        /// Arrangement file of the degeneration T'.
        tprime: PathBuf,
    },
}

/// Report text plus whether every verification passed.
struct Outcome {
    text: String,
    passed: bool,
}

fn read_arrangement(path: &Path) -> Result<Arrangement> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_arrangement(&text).with_context(|| format!("invalid arrangement {}", path.display()))
}

fn parse_weights(text: &str, n: usize) -> Result<Weights> {
    let w: Weights = text.parse()?;
    Ok(Weights::for_n(w.values().to_vec(), n)?)
}

fn render(map: &GradedMap, format: Format) -> String {
    match format {
        Format::Text => map.to_string(),
        Format::Structured => graded_map_to_toml(map, Orientation::Column),
    }
}

fn only_degree(map: &GradedMap, degree: Option<usize>) -> GradedMap {
    let mut out = GradedMap::new(&map.source, &map.target, map.shift, map.n);
    for (q, b) in map.blocks() {
        if degree.is_none_or(|d| d == q) {
            out.insert(q, b.clone());
        }
    }
    out
}

const IMAGES: &str = "columns are images of basis vectors";

fn matrix_text(m: &Matrix, format: Format, label: &str, note: &str) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format!("\"{}\"", gm_core::rational::fmt_q(&m[(i, j)]))).collect::<Vec<_>>().join(", "))
        .collect();
    match format {
        Format::Text => format!(
            "{label} ({}x{}, {note})\n{}\n",
            m.rows(),
            m.cols(),
            gm_core::aomoto::format_rational(m)
        ),
        Format::Structured => format!(
            "name = \"{label}\"\norientation = \"column\"\nentries = [\n{}\n]\n",
            rows.iter().map(|r| format!("  [{r}],")).collect::<Vec<_>>().join("\n")
        ),
    }
}

fn cmd_dep(path: &Path) -> Result<Outcome> {
    let a = read_arrangement(path)?;
    let t = CombinatorialType::from_arrangement(&a);
    let alg = OsAlgebra::new(&t)?;
    let mut text = format!("n = {}, ell = {}\n", t.n(), t.ell());
    if t.is_general_position() {
        text.push_str("Dep empty\n");
    } else {
        text.push_str(&format!("{t}\n"));
    }
    let betti: Vec<String> = (0..=t.ell()).map(|q| alg.betti(q).to_string()).collect();
    text.push_str(&format!("betti = ({})\n", betti.join(", ")));
    Ok(Outcome { text, passed: true })
}

/// Runs the gating checks shared by `omega`, `gm` and `verify`.
fn pair_checks(pair: &DegenerationPair) -> Result<(Vec<String>, bool)> {
    let mut lines = Vec::new();
    let mut ok = true;
    let inv = pair.invariance()?;
    lines.push(format!(
        "ideal invariance: {} ({} spanning elements)",
        if inv.passed() { "pass" } else { "FAIL" },
        inv.checked
    ));
    lines.extend(inv.violations.iter().map(|v| format!("  {v}")));
    ok &= inv.passed();
    let n = pair.algebra.n();
    let ell = pair.algebra.ell();
    let g = OsAlgebra::new(&general_position(n, ell)?)?;
    let dg = aomoto_complex(&g, "G")?;
    let formal = verify_cochain(&pair.tilde, &dg)?;
    lines.push(format!("formal map is a cochain map: {}", if formal.passed() { "pass" } else { "FAIL" }));
    if !formal.passed() {
        lines.push(formal.to_string());
    }
    ok &= formal.passed();
    if inv.passed() {
        let induced = pair.induced()?;
        let dt = aomoto_complex(&pair.algebra, "T")?;
        let r = verify_cochain(&induced, &dt)?;
        lines.push(format!("induced map is a cochain map: {}", if r.passed() { "pass" } else { "FAIL" }));
        if !r.passed() {
            lines.push(r.to_string());
        }
        ok &= r.passed();
    }
    Ok((lines, ok))
}

fn load_pair(t: &Path, tprime: &Path) -> Result<DegenerationPair> {
    let a = read_arrangement(t)?;
    let b = read_arrangement(tprime)?;
    Ok(DegenerationPair::from_arrangements(&a, &b)?)
}

fn weighted_text(pair: &DegenerationPair) -> String {
    let parts: Vec<String> = pair.weighted.iter().map(|(s, m)| format!("{}:{m}", s.label())).collect();
    format!("Dep(T',T) with multiplicities: {{{}}}\n", parts.join(", "))
}

fn cmd_omega(t: &Path, tprime: &Path, degree: Option<usize>, weights: Option<&str>, format: Format) -> Result<Outcome> {
    let pair = load_pair(t, tprime)?;
    if pair.weighted.is_empty() {
        eprintln!("warning: empty relative dependence; all maps are zero");
    }
    let (checks, ok) = pair_checks(&pair)?;
    if !ok {
        return Ok(Outcome { text: format!("{}\nrefusing to emit maps\n", checks.join("\n")), passed: false });
    }
    let mut tilde = only_degree(&pair.tilde, degree);
    let mut induced = only_degree(&pair.induced()?, degree);
    if let Some(w) = weights {
        let w = parse_weights(w, pair.algebra.n())?;
        tilde = specialize(&tilde, w.values())?;
        induced = specialize(&induced, w.values())?;
    }
    let mut text = String::new();
    if format == Format::Text {
        text.push_str(&weighted_text(&pair));
        text.push_str(&checks.join("\n"));
        text.push_str("\n\nformal connection on A(G)\n");
        text.push_str(&render(&tilde, format));
        text.push_str("\ninduced connection on A(T)\n");
        text.push_str(&render(&induced, format));
    } else {
        text.push_str(&format!("# formal connection on A(G)\n{}", render(&tilde, format)));
        text.push_str(&format!("\n# induced connection on A(T)\n{}", render(&induced, format)));
    }
    Ok(Outcome { text, passed: true })
}

fn cmd_gm(t: &Path, tprime: &Path, weights: &str, degree: usize, projection: Option<&Path>, format: Format) -> Result<Outcome> {
    let pair = load_pair(t, tprime)?;
    let w = parse_weights(weights, pair.algebra.n())?;
    let (checks, ok) = pair_checks(&pair)?;
    if !ok {
        return Ok(Outcome { text: format!("{}\nrefusing to emit maps\n", checks.join("\n")), passed: false });
    }
    let induced = pair.induced()?;
    let omega = match projection {
        None => {
            let (h, m) = induced_connection(&pair.algebra, &induced, &w, degree, None)?;
            let mut text = format!("dim H^{degree} = {}\n", h.dim());
            text.push_str(&matrix_text(&h.representatives, format, "representatives", "columns are cocycles in nbc coordinates"));
            text.push_str(&matrix_text(&m, format, "Omega_C", IMAGES));
            return Ok(Outcome { text, passed: true });
        }
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            let fixture = parse_graded_map(&text).with_context(|| format!("invalid projection {}", path.display()))?;
            let block = fixture.block(degree).with_context(|| format!("projection has no degree {degree} block"))?;
            let p = block.matrix.eval(w.values());
            let b = pair.algebra.betti(degree);
            if p.cols() != b {
                bail!("projection has {} columns but A^{degree} has rank {b}", p.cols());
            }
            let m = induced.block(degree).map_or_else(|| Matrix::zeros(b, b), |x| x.matrix.eval(w.values()));
            solve_conjugate(&p, &m)?
        }
    };
    Ok(Outcome { text: matrix_text(&omega, format, "Omega", IMAGES), passed: true })
}

fn cmd_example(weights: Option<&str>, goldens: Option<&Path>) -> Result<Outcome> {
    let g = match goldens {
        Some(dir) => Goldens::from_dir(dir)?,
        None => Goldens::bundled(),
    };
    let w = weights.map(|s| parse_weights(s, 4)).transpose()?;
    let report = run_example(&g, w.as_ref())?;
    let mut text = report.to_string();
    text.push_str(if report.passed() { "all checks passed\n" } else { "golden mismatch\n" });
    Ok(Outcome { text, passed: report.passed() })
}

fn cmd_verify(t: &Path, tprime: &Path) -> Result<Outcome> {
    let a = read_arrangement(t)?;
    let b = read_arrangement(tprime)?;
    let ta = CombinatorialType::from_arrangement(&a);
    let tb = CombinatorialType::from_arrangement(&b);
    let cover = check_cover_necessary(&tb, &ta, &b)?;
    let pair = DegenerationPair::from_types(&ta, &tb, &b)?;
    let mut text = weighted_text(&pair);
    text.push_str(&cover.to_string());
    let (checks, ok) = pair_checks(&pair)?;
    text.push_str(&checks.join("\n"));
    text.push('\n');
    for (s, _) in &pair.weighted {
        let g = OsAlgebra::new(&general_position(ta.n(), ta.ell())?)?;
        let r = verify_cochain(&tilde_omega_s_map(ta.n(), ta.ell(), *s)?, &aomoto_complex(&g, "G")?)?;
        if !r.passed() {
            text.push_str(&format!("omega_{} is not a cochain map\n{r}", s.label()));
        }
    }
    let passed = ok && cover.passed();
    text.push_str(if passed { "all checks passed\n" } else { "verification failed\n" });
    Ok(Outcome { text, passed })
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Dep { arrangement } => cmd_dep(arrangement),
        Command::Omega { t, tprime, degree, weights } => cmd_omega(t, tprime, *degree, weights.as_deref(), cli.format),
        Command::Gm { t, tprime, weights, degree, projection } => {
            cmd_gm(t, tprime, weights, *degree, projection.as_deref(), cli.format)
        }
        Command::Example { weights, goldens } => cmd_example(weights.as_deref(), goldens.as_deref()),
        Command::Verify { t, tprime } => cmd_verify(t, tprime),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

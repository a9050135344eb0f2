//! Command-line front end.
//!
//! Every command produces a [`RunReport`]: human-readable lines followed by
//! a JSON section. A mathematical "no" (not an ideal, not a subideal) is a
//! successful run; exit code 1 is reserved for failed checks and 2 for
//! malformed input or unmet preconditions.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, ExpectedFacts};
use crate::corpus::{self, Config, Suite};
use crate::derivations::{derivation_algebra, derivation_tower, is_complete, Stabilization};
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Subspace};
use crate::liealg::{LieAlgebra, Subalgebra};
use crate::report::{subspace_json, vector_json, Check, Status};
use crate::transitivity::{
    counterexample_extension, is_self_normalizing, normalizer_tower, subideal_chain,
    SubidealVerdict,
};

#[derive(Debug, Parser)]
#[command(
    name = "lietrans",
    version,
    about = "Exact subideal and derivation computations for Lie algebras over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a structure-constant file and check the Lie axioms.
    Validate { file: PathBuf },
    /// Dimensions of center, derived algebra and radical; perfect/complete flags.
    Info {
        /// A file path or `catalog:NAME`.
        src: String,
    },
    /// Basis of the derivation algebra.
    Derivations { src: String },
    /// Derivation tower of a centerless algebra.
    Tower {
        src: String,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Decide whether a subalgebra is a subideal, with a chain when it is.
    Subideal {
        src: String,
        /// Semicolon-separated coordinate vectors, e.g. "1,0,0;0,1/2,1".
        #[arg(long)]
        sub: String,
    },
    /// Decide whether a subalgebra is an ideal.
    Ideal {
        src: String,
        #[arg(long)]
        sub: String,
        /// Containing subalgebra to test against instead of the whole algebra.
        #[arg(long = "in")]
        within: Option<String>,
    },
    /// Subideal that is not an ideal, built from a non-perfect algebra.
    Counterexample { src: String },
    /// Iterated normalizers of a subalgebra.
    NormalizerTower {
        src: String,
        #[arg(long)]
        sub: String,
    },
    /// Run the theorem-verification corpus.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of randomized subideal instances.
        #[arg(long, default_value_t = 60)]
        random: usize,
    },
    /// Built-in reference algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Perfect,
    Complete,
    Radical,
    Forms,
    Selfnorm,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Perfect => Suite::Perfect,
            SuiteArg::Complete => Suite::Complete,
            SuiteArg::Radical => Suite::Radical,
            SuiteArg::Forms => Suite::Forms,
            SuiteArg::Selfnorm => Suite::Selfnorm,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub lines: Vec<String>,
    #[serde(skip)]
    malformed: bool,
}

impl RunReport {
    fn new(command: String) -> Self {
        RunReport {
            command,
            checks: Vec::new(),
            lines: Vec::new(),
            malformed: false,
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn check(&mut self, name: &str, status: Status, detail: Value) {
        self.checks.push(Check::new(name, status, detail));
    }

    pub fn exit_code(&self) -> i32 {
        if self.malformed {
            2
        } else if self.checks.iter().any(|c| c.status.is_failure()) {
            1
        } else {
            0
        }
    }

    /// Human text, then a `--- json ---` separator and the JSON report.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str("--- json ---\n");
        out.push_str(&serde_json::to_string_pretty(self).expect("plain data"));
        out.push('\n');
        out
    }
}

/// Parses `argv` (including the program name) and runs the command.
/// `Err` carries clap's help/version/usage text and its exit code.
pub fn run<I, T>(argv: I) -> std::result::Result<RunReport, (String, i32)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv).map_err(|e| (e.render().to_string(), e.exit_code()))?;
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = RunReport::new(echo);
    if let Err(e) = dispatch(cli.command, &mut report) {
        report.malformed = true;
        report.line(format!("error: {e}"));
        report.checks.push(Check::error("input", &e));
    }
    Ok(report)
}

/// `catalog:NAME` or a file path.
pub fn resolve_source(src: &str) -> Result<LieAlgebra> {
    match src.strip_prefix("catalog:") {
        Some(name) => Ok(catalog::get(name)?.algebra),
        None => catalog::load(src),
    }
}

fn resolve_sub(g: &LieAlgebra, spec: &str) -> Result<Subalgebra> {
    let vectors = catalog::parse_basis_spec(spec, g.dim())?;
    Subalgebra::new(g.clone(), Subspace::span(g.dim(), vectors))
}

fn fmt_space(s: &Subspace) -> String {
    let rows: Vec<String> = s
        .basis_vectors()
        .iter()
        .map(|v| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("span{{{}}}", rows.join("; "))
}

fn matrix_json(m: &Mat) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vector_json(r)).collect())
}

fn name_of(g: &LieAlgebra) -> &str {
    g.name().unwrap_or("unnamed")
}

fn dispatch(command: Command, r: &mut RunReport) -> Result<()> {
    match command {
        Command::Validate { file } => {
            let g = catalog::load(&file)?;
            r.line(format!(
                "{}: valid Lie algebra of dimension {}",
                name_of(&g),
                g.dim()
            ));
            r.check(
                "valid",
                Status::Pass,
                json!({ "name": name_of(&g), "dim": g.dim() }),
            );
        }
        Command::Info { src } => info(&resolve_source(&src)?, r),
        Command::Derivations { src } => {
            let g = resolve_source(&src)?;
            let der = derivation_algebra(&g);
            r.line(format!("dim D({}) = {}", name_of(&g), der.dim()));
            r.line(format!("inner derivations: {}", der.inner().dim()));
            r.line(format!("complete: {}", is_complete(&g)));
            r.check(
                "derivations",
                Status::Pass,
                json!({
                    "dim": der.dim(),
                    "dim_inner": der.inner().dim(),
                    "complete": is_complete(&g),
                    "basis": der.realization().iter().map(matrix_json).collect::<Vec<_>>(),
                }),
            );
        }
        Command::Tower { src, max_steps } => {
            let g = resolve_source(&src)?;
            let tower = derivation_tower(&g, max_steps)?;
            let dims: Vec<usize> = tower.stages.iter().map(LieAlgebra::dim).collect();
            let stable_at = match tower.stabilized_at {
                Stabilization::At(n) => Some(n),
                Stabilization::ExceededBudget => None,
            };
            r.line(format!("tower dimensions: {dims:?}"));
            r.line(match stable_at {
                Some(n) => format!("stabilized at stage {n}"),
                None => "did not stabilize within the step budget".to_owned(),
            });
            r.check(
                "tower",
                Status::Pass,
                json!({ "dims": dims, "stabilized_at": stable_at }),
            );
        }
        Command::Subideal { src, sub } => {
            let g = resolve_source(&src)?;
            let h = resolve_sub(&g, &sub)?;
            match subideal_chain(&g, &h)? {
                SubidealVerdict::Subideal(chain) => {
                    r.line(format!("subideal: chain of length {}", chain.len()));
                    for link in chain.links() {
                        r.line(format!("  {}", fmt_space(link.space())));
                    }
                    let mut ok = true;
                    for pair in chain.links().windows(2) {
                        ok &= pair[0].is_ideal_of(&pair[1])?;
                    }
                    r.check(
                        "subideal",
                        Status::Pass,
                        json!({
                            "subideal": true,
                            "chain": chain.links().iter().map(|l| subspace_json(l.space())).collect::<Vec<_>>(),
                        }),
                    );
                    r.check(
                        "chain re-verifies",
                        Status::from_bool(ok),
                        json!({ "length": chain.len() }),
                    );
                }
                SubidealVerdict::NotSubideal { series } => {
                    let floor = series.last().expect("nonempty series");
                    r.line("not a subideal");
                    r.line(format!(
                        "  closure series stalls at {}",
                        fmt_space(floor.space())
                    ));
                    r.check(
                        "subideal",
                        Status::Pass,
                        json!({
                            "subideal": false,
                            "series": series.iter().map(|l| subspace_json(l.space())).collect::<Vec<_>>(),
                        }),
                    );
                }
            }
        }
        Command::Ideal { src, sub, within } => {
            let g = resolve_source(&src)?;
            let h = resolve_sub(&g, &sub)?;
            let k = match within {
                Some(spec) => resolve_sub(&g, &spec)?,
                None => Subalgebra::full(&g),
            };
            if !h.is_subset_of(&k)? {
                return Err(Error::Precondition(
                    "sub is not contained in the --in subalgebra".into(),
                ));
            }
            let ideal = h.is_ideal_of(&k)?;
            r.line(format!("ideal: {ideal}"));
            r.check("ideal", Status::Pass, json!({ "ideal": ideal }));
        }
        Command::Counterexample { src } => {
            let h = resolve_source(&src)?;
            let cert = counterexample_extension(&h)?;
            let ok = cert.verify() && cert.escapes();
            r.line(format!(
                "k = {} ⊕ abelianization (dim {}), ambient H(k) of dim {}",
                name_of(&h),
                cert.extension.dim(),
                cert.ambient.dim()
            ));
            for link in cert.chain.links() {
                r.line(format!("  chain link of dim {}", link.dim()));
            }
            r.line(format!(
                "  [X, f] = {:?} lies outside h",
                cert.escaping_value
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            ));
            r.check(
                "certificate",
                Status::from_bool(ok),
                json!({
                    "extension_dim": cert.extension.dim(),
                    "extension": catalog::to_text(&cert.extension),
                    "derivation": matrix_json(&cert.derivation),
                    "ambient_dim": cert.ambient.dim(),
                    "chain": cert.chain.links().iter().map(|l| subspace_json(l.space())).collect::<Vec<_>>(),
                    "witness_x": vector_json(&cert.witness_pair.0),
                    "witness_f": vector_json(&cert.witness_pair.1),
                    "escaping_value": vector_json(&cert.escaping_value),
                    "separating_functional": vector_json(&cert.separating_functional),
                }),
            );
        }
        Command::NormalizerTower { src, sub } => {
            let g = resolve_source(&src)?;
            let h = resolve_sub(&g, &sub)?;
            let tower = normalizer_tower(&g, &h)?;
            let top = tower.last().expect("nonempty tower");
            let dims: Vec<usize> = tower.iter().map(Subalgebra::dim).collect();
            r.line(format!("normalizer tower dimensions: {dims:?}"));
            r.line(format!("top: {}", fmt_space(top.space())));
            let normalizer_self = match tower.get(1) {
                Some(n) => is_self_normalizing(&g, n)?,
                None => true,
            };
            r.line(format!("N(h) self-normalizing: {normalizer_self}"));
            r.check(
                "normalizer tower",
                Status::Pass,
                json!({
                    "tower": tower.iter().map(|s| subspace_json(s.space())).collect::<Vec<_>>(),
                    "normalizer_self_normalizing": normalizer_self,
                }),
            );
        }
        Command::Verify {
            suite,
            seed,
            random,
        } => {
            let cfg = Config { seed, random };
            for run in corpus::run_suite(suite.into(), &cfg) {
                r.line(format!(
                    "criterion {:>2} [{}] {}: {} pass, {} skipped, {} fail, {} error",
                    run.id,
                    if run.passed() { "PASS" } else { "FAIL" },
                    run.title,
                    run.count(Status::Pass),
                    run.count(Status::HypothesisNotSatisfied),
                    run.count(Status::Fail),
                    run.count(Status::Error),
                ));
                for c in run.checks.iter().filter(|c| c.status.is_failure()) {
                    r.line(format!("  {} {}: {}", c.status.label(), c.name, c.detail));
                }
                r.checks.extend(run.checks);
            }
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in catalog::list() {
                    r.line(name);
                }
                r.check("catalog", Status::Pass, json!({ "names": catalog::list() }));
            }
            CatalogAction::Show { name } => {
                let e = catalog::get(&name)?;
                info(&e.algebra, r);
                r.line(format!("subalgebras: {}", tags(e.subalgebras.keys())));
                r.line(format!("forms: {}", tags(e.forms.keys())));
                r.line(format!("maps: {}", tags(e.maps.keys())));
                r.line(catalog::to_text(&e.algebra).trim_end());
                let recomputed = ExpectedFacts::compute(&e.algebra);
                r.check(
                    "recorded facts",
                    Status::from_bool(recomputed == e.expected),
                    json!({ "recorded": e.expected, "recomputed": recomputed }),
                );
            }
        },
    }
    Ok(())
}

fn tags<'a>(keys: impl Iterator<Item = &'a String>) -> String {
    let v: Vec<&str> = keys.map(String::as_str).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(", ")
    }
}

fn info(g: &LieAlgebra, r: &mut RunReport) {
    let center = g.center();
    let derived = g.derived_algebra();
    let radical = g.radical();
    let perfect = g.is_perfect();
    let complete = is_complete(g);
    r.line(format!("{}: dim {}", name_of(g), g.dim()));
    r.line(format!(
        "  center:  dim {} {}",
        center.dim(),
        fmt_space(center.space())
    ));
    r.line(format!(
        "  derived: dim {} {}",
        derived.dim(),
        fmt_space(derived.space())
    ));
    r.line(format!(
        "  radical: dim {} {}",
        radical.dim(),
        fmt_space(radical.space())
    ));
    r.line(format!("  perfect: {perfect}, complete: {complete}"));
    r.check(
        "info",
        Status::Pass,
        json!({
            "name": name_of(g),
            "dim": g.dim(),
            "center": subspace_json(center.space()),
            "derived": subspace_json(derived.space()),
            "radical": subspace_json(radical.space()),
            "perfect": perfect,
            "complete": complete,
            "semisimple": g.is_semisimple(),
            "solvable": g.is_solvable(),
            "nilpotent": g.is_nilpotent(),
        }),
    );
}

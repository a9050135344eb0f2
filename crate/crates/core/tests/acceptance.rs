//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::{derivation_dim_oracle, grid_subalgebras, subideal_oracle, Space};
use lietrans::corpus::{self, Config, CriterionRun};
use lietrans::derivations::derivation_space;
use lietrans::report::Status;
use lietrans::transitivity::subideal_chain;
use lietrans::{catalog, LieAlgebra, Subalgebra, Subspace};

fn summary(run: &CriterionRun) -> String {
    format!(
        "{} checks: {} pass, {} skipped, {} fail, {} error",
        run.checks.len(),
        run.count(Status::Pass),
        run.count(Status::HypothesisNotSatisfied),
        run.count(Status::Fail),
        run.count(Status::Error)
    )
}

fn failures(run: &CriterionRun) -> Vec<String> {
    run.checks
        .iter()
        .filter(|c| c.status.is_failure())
        .map(|c| format!("{} ({}): {}", c.name, c.status.label(), c.detail))
        .collect()
}

/// Instance counts per perfect algebra in the chain corpus.
fn per_base_counts(run: &CriterionRun) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for c in &run.checks {
        let base = c
            .name
            .trim_start_matches("c1/")
            .split('+')
            .next()
            .unwrap_or("");
        *counts.entry(base.to_owned()).or_insert(0) += 1;
    }
    counts
}

/// Extra requirements beyond "every check passed".
fn extra(id: u8, run: &CriterionRun, cfg: &Config) -> Result<(), String> {
    let has = |name: &str| run.checks.iter().find(|c| c.name == name);
    match id {
        1 => {
            let counts = per_base_counts(run);
            if counts.len() != 4 || counts.values().any(|&n| n < 20) {
                return Err(format!("fewer than 20 chains for some base: {counts:?}"));
            }
        }
        2 => {
            if run.checks.len() != 7 {
                return Err(
                    "expected abelian(1..4), heisenberg3, aff1, upper_triangular(3)".into(),
                );
            }
        }
        3 => {
            let w = has("c3/aff1+abelian(1)/non-characteristic").ok_or("missing witness")?;
            if w.status != Status::Pass {
                return Err("witness derivation failed".into());
            }
        }
        4 => {
            if run.checks.len() < 8 {
                return Err("too few centerless algebras".into());
            }
        }
        6 => {
            if run.checks.len() < 10 {
                return Err("fewer than 10 instances".into());
            }
        }
        7 | 8 => {
            let random = run.checks.iter().filter(|c| c.name.contains('#')).count();
            if random < 50 || random < cfg.random {
                return Err(format!("only {random} randomized instances"));
            }
            if !run.checks.iter().any(|c| c.name.contains(':')) {
                return Err("no catalog pairs".into());
            }
        }
        9 => {
            let skipped =
                has("c9/sl2/killing/cartan<=full").ok_or("missing Killing/span(H) case")?;
            if skipped.status != Status::HypothesisNotSatisfied {
                return Err("Killing form on span(H) was not skipped".into());
            }
            for name in ["so3", "so3_sum_so3", "sl2"] {
                let checked = run.checks.iter().any(|c| {
                    c.name.starts_with(&format!("c9/{name}/")) && c.status == Status::Pass
                });
                if !checked {
                    return Err(format!("no verified instance on {name}"));
                }
            }
        }
        10 => {
            if has("c10/sl2/eigenspaces").map(|c| c.status) != Some(Status::Pass) {
                return Err("eigenspace data mismatch".into());
            }
        }
        11 => {
            for tag in ["i", "ii", "v", "vi"] {
                let name = format!("c11/coverage/({tag})");
                if has(&name).map(|c| c.status) != Some(Status::Pass) {
                    return Err(format!("no verifying instance for ({tag})"));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn to_space(s: &Subspace) -> Space {
    Space::span(s.ambient_dim(), s.basis_vectors())
}

/// Oracle agreement on small algebras and derivation dimensions.
fn criterion_oracle(cfg: &Config) -> (bool, String) {
    let mut problems = Vec::new();
    let mut pairs = 0;

    let mut small: Vec<LieAlgebra> = (1..=3).map(LieAlgebra::abelian).collect();
    small.extend([
        catalog::heisenberg3(),
        catalog::aff1(),
        catalog::sl2(),
        catalog::so3(),
    ]);
    small.extend(
        corpus::random_solvable(cfg.seed, 12)
            .into_iter()
            .filter(|g| g.dim() <= 3),
    );
    for g in &small {
        let lattice = grid_subalgebras(g);
        let top = Space::span(
            g.dim(),
            (0..g.dim()).map(|i| common::unit(g.dim(), i)).collect(),
        );
        for h in &lattice {
            let sub = Subalgebra::new(g.clone(), Subspace::span(g.dim(), h.0.clone()))
                .expect("oracle lattice holds subalgebras");
            let ours = subideal_chain(g, &sub).expect("valid input");
            let theirs = subideal_oracle(g, &lattice, h, &top);
            pairs += 1;
            if ours.is_subideal() != theirs {
                problems.push(format!(
                    "{:?} h={:?}: lib {} oracle {theirs}",
                    g.name(),
                    h,
                    ours.is_subideal()
                ));
            }
            if let Some(chain) = ours.chain() {
                if to_space(chain.innermost().space()) != *h {
                    problems.push(format!("{:?}: chain does not start at h", g.name()));
                }
            }
        }
    }

    let mut derivation_algebras: Vec<LieAlgebra> = catalog::standard_entries()
        .into_iter()
        .map(|e| e.algebra)
        .collect();
    derivation_algebras.extend(corpus::random_solvable(cfg.seed, 12));
    derivation_algebras.extend(corpus::random_centerless_solvable(cfg.seed, 6));
    for g in &derivation_algebras {
        let ours = derivation_space(g).dim();
        let theirs = derivation_dim_oracle(g);
        if ours != theirs {
            problems.push(format!("dim D({:?}): lib {ours} oracle {theirs}", g.name()));
        }
    }
    for (g, expected) in [
        (LieAlgebra::abelian(1), 1),
        (LieAlgebra::abelian(2), 4),
        (LieAlgebra::abelian(3), 9),
        (LieAlgebra::abelian(4), 16),
        (catalog::heisenberg3(), 6),
        (catalog::sl2(), 3),
    ] {
        if derivation_dim_oracle(&g) != expected {
            problems.push(format!(
                "oracle disagrees with known dim D({:?}) = {expected}",
                g.name()
            ));
        }
    }

    let detail = format!(
        "{pairs} subideal verdicts on {} algebras, {} derivation dimensions",
        small.len(),
        derivation_algebras.len()
    );
    if problems.is_empty() {
        (true, detail)
    } else {
        (false, format!("{detail}; {}", problems.join("; ")))
    }
}

fn main() -> ExitCode {
    let cfg = Config::default();
    let mut all_ok = true;
    for id in 1..=11u8 {
        let start = Instant::now();
        let run = corpus::run_criterion(id, &cfg);
        let verdict = if run.passed() {
            extra(id, &run, &cfg)
        } else {
            Err(failures(&run).join("; "))
        };
        let ok = verdict.is_ok();
        all_ok &= ok;
        println!(
            "criterion {id:>2} {}: {} — {} [{:.1?}]",
            if ok { "PASS" } else { "FAIL" },
            run.title,
            summary(&run),
            start.elapsed()
        );
        if let Err(why) = verdict {
            println!("    {why}");
        }
    }
    let start = Instant::now();
    let (ok, detail) = criterion_oracle(&cfg);
    all_ok &= ok;
    println!(
        "criterion 12 {}: oracle equivalence — {detail} [{:.1?}]",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed()
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

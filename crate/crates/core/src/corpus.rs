//! Seeded instance generators and the theorem-verification suites.
//!
//! Every suite returns its checks in a fixed order: instances are generated
//! sequentially from the seed and evaluated in parallel with an
//! order-preserving collect, so output is identical across runs and thread
//! counts.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::catalog::{self, CatalogEntry};
use crate::derivations::{
    derivation_algebra, derivation_tower, holomorph, inner_commutator_identity_holds,
    is_characteristic, is_derivation, theorem_derived_check, Stabilization,
};
use crate::error::Result;
use crate::exactlin::{int, vector, Inertia, Mat, Rat, Subspace};
use crate::liealg::{LieAlgebra, LinMap, Subalgebra};
use crate::report::{subspace_json, vector_json, Check, Status};
use crate::transitivity::{
    cartan_eigenspaces, check_cartan_criterion, check_complete_subideal,
    check_perfect_transitivity, check_radical_intersection, check_self_normalizing_theorem,
    check_skew_form_criterion, counterexample_extension, levi_criterion, subideal_chain,
    CriterionOutcome, SelfNormHypothesis, SelfNormOutcome,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    /// Number of randomized (algebra, subideal) pairs for the radical suite.
    pub random: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            random: 60,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Perfect,
    Complete,
    Radical,
    Forms,
    Selfnorm,
    All,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Perfect => &[1, 2, 3],
            Suite::Complete => &[4, 5, 6],
            Suite::Radical => &[7, 8],
            Suite::Forms => &[9, 10],
            Suite::Selfnorm => &[11],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionRun {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionRun {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// At least one check ran and none failed or errored.
    pub fn passed(&self) -> bool {
        self.count(Status::Pass) > 0 && !self.checks.iter().any(|c| c.status.is_failure())
    }
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "perfect subideals are ideals",
        2 => "non-perfect algebras admit a non-ideal subideal",
        3 => "perfect ideals are characteristic",
        4 => "derivation algebra completeness check and tower stabilization",
        5 => "inner derivation commutator identity",
        6 => "complete subideals split off as ideals",
        7 => "radical of a subideal",
        8 => "three-way Levi criterion",
        9 => "skew-symmetric form criterion",
        10 => "Cartan eigenspace criterion",
        11 => "normalizers are self-normalizing",
        _ => "unknown criterion",
    }
}

pub fn run_criterion(id: u8, cfg: &Config) -> CriterionRun {
    let checks = match id {
        1 => criterion_perfect(cfg),
        2 => criterion_counterexample(),
        3 => criterion_characteristic(cfg),
        4 => criterion_derived_tower(cfg),
        5 => criterion_inner_identity(cfg),
        6 => criterion_complete(),
        7 => criterion_radical(cfg),
        8 => criterion_levi(cfg),
        9 => criterion_skew_form(),
        10 => criterion_cartan(),
        11 => criterion_self_normalizing(),
        _ => Vec::new(),
    };
    CriterionRun {
        id,
        title: title(id),
        checks,
    }
}

pub fn run_suite(suite: Suite, cfg: &Config) -> Vec<CriterionRun> {
    suite
        .criteria()
        .iter()
        .map(|&id| run_criterion(id, cfg))
        .collect()
}

// ---------------------------------------------------------------------------
// generators

/// Independent stream `stream` of the generator for `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn small_entry(rng: &mut ChaCha8Rng) -> Rat {
    if rng.random_bool(0.5) {
        Rat::zero()
    } else {
        int([-2, -1, 1, 2][rng.random_range(0..4)])
    }
}

/// Basis of the matrix Lie algebra generated by `gens` (all `n × n`).
pub fn matrix_lie_closure(n: usize, gens: &[Mat]) -> Vec<Mat> {
    let flat = |m: &Mat| m.entries().to_vec();
    let mut space = Subspace::span(n * n, gens.iter().map(flat).collect::<Vec<_>>());
    loop {
        let basis: Vec<Mat> = space
            .basis_vectors()
            .into_iter()
            .map(|v| Mat::from_entries(n, n, v))
            .collect();
        let mut vectors = space.basis_vectors();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                vectors.push(flat(&basis[a].commutator(&basis[b])));
            }
        }
        let next = Subspace::span(n * n, vectors);
        if next.dim() == space.dim() {
            return basis;
        }
        space = next;
    }
}

/// Subalgebra of upper triangular `n × n` matrices (strictly upper when
/// `strict`, hence nilpotent) generated by two or three random elements.
pub fn random_triangular_algebra(rng: &mut ChaCha8Rng, n: usize, strict: bool) -> LieAlgebra {
    let count = rng.random_range(2..=3);
    let gens: Vec<Mat> = (0..count)
        .map(|_| {
            Mat::from_fn(n, n, |r, c| {
                if c > r || (c == r && !strict) {
                    small_entry(rng)
                } else {
                    Rat::zero()
                }
            })
        })
        .collect();
    let basis = matrix_lie_closure(n, &gens);
    LieAlgebra::from_matrix_basis(&basis, None).expect("closure is a matrix Lie algebra")
}

/// Non-abelian solvable algebras: every third one nilpotent.
pub fn random_solvable(seed: u64, count: usize) -> Vec<LieAlgebra> {
    let mut r = rng(seed, 1);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let nilpotent = out.len() % 3 == 2;
        let g = if nilpotent {
            random_triangular_algebra(&mut r, 4, true)
        } else {
            random_triangular_algebra(&mut r, 3, false)
        };
        if g.dim() < 2 || g.dim() > 6 || g.is_abelian() {
            continue;
        }
        let kind = if nilpotent { "nilpotent" } else { "solvable" };
        out.push(g.with_name(&format!("{kind}#{}", out.len())));
    }
    out
}

/// Centerless solvable algebras of dimension 2..=6.
pub fn random_centerless_solvable(seed: u64, count: usize) -> Vec<LieAlgebra> {
    let mut r = rng(seed, 2);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 100 {
        attempts += 1;
        let g = random_triangular_algebra(&mut r, 3, false);
        if g.dim() < 2 || !g.center().space().is_zero() {
            continue;
        }
        out.push(g.with_name(&format!("centerless#{}", out.len())));
    }
    out
}

/// Random unimodular change of basis: a signed permutation followed by two
/// elementary shears `e_a += ±e_b`. Kept sparse so derived tensors stay small.
pub fn random_rebase(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let mut p = Mat::zeros(n, n);
    for (c, &r) in perm.iter().enumerate() {
        p.set(r, c, int(if rng.random_bool(0.5) { 1 } else { -1 }));
    }
    if n < 2 {
        return p;
    }
    for _ in 0..2 {
        let a = rng.random_range(0..n);
        let b = (a + rng.random_range(1..n)) % n;
        let mut shear = Mat::identity(n);
        shear.set(b, a, int(if rng.random_bool(0.5) { 1 } else { -1 }));
        p = &p * &shear;
    }
    p
}

fn full_image(f: &LinMap) -> Subalgebra {
    f.image_of(&Subspace::full(f.source().dim()))
}

fn transport(f: &LinMap, s: &Subalgebra) -> Subalgebra {
    f.image_of(s.space())
}

fn label(g: &LieAlgebra) -> String {
    g.name().unwrap_or("unnamed").to_owned()
}

/// `h ⊴ k ⊴ g` with `k` also available as a standalone algebra.
#[derive(Debug, Clone)]
pub struct ChainInstance {
    pub label: String,
    pub g: LieAlgebra,
    pub k: Subalgebra,
    pub h: Subalgebra,
    pub k_algebra: LieAlgebra,
    pub h_in_k: Subalgebra,
}

pub fn perfect_algebras() -> Vec<LieAlgebra> {
    vec![
        catalog::sl2(),
        catalog::so3(),
        catalog::sl2_rad2(),
        catalog::sl2()
            .direct_sum(&catalog::so3())
            .0
            .with_name("sl2_sum_so3"),
    ]
}

fn chain_partners() -> Vec<LieAlgebra> {
    vec![
        LieAlgebra::abelian(1).with_name("abelian(1)"),
        LieAlgebra::abelian(2).with_name("abelian(2)"),
        catalog::aff1(),
        catalog::heisenberg3(),
        catalog::sl2(),
        catalog::so3(),
        catalog::gl2(),
    ]
}

/// Perfect `h`, `k = h ⊕ P` for catalog partners `P`, and three ambients per
/// `k`: the holomorph, the holomorph plus `aff1`, and the holomorph in a
/// random sparse unimodular basis.
pub fn perfect_chain_corpus(seed: u64) -> Vec<ChainInstance> {
    let mut jobs = Vec::new();
    for h in perfect_algebras() {
        for p in chain_partners() {
            jobs.push((h.clone(), p));
        }
    }
    let mut r = rng(seed, 3);
    let bases: Vec<u64> = jobs.iter().map(|_| r.random()).collect();
    jobs.into_par_iter()
        .zip(bases)
        .flat_map_iter(|((h, p), basis_seed)| chain_instances(&h, &p, basis_seed))
        .collect()
}

fn chain_instances(h: &LieAlgebra, p: &LieAlgebra, basis_seed: u64) -> Vec<ChainInstance> {
    let (k_algebra, into_k, _) = h.direct_sum(p);
    let k_algebra = k_algebra.with_name(&k_name(h, p));
    let into_k = LinMap::new(h.clone(), k_algebra.clone(), into_k.matrix().clone()).expect("shape");
    let h_in_k = full_image(&into_k);
    let hol = holomorph(&k_algebra);
    let h_in_g = full_image(&hol.embed_base.compose(&into_k).expect("composable"));
    let k_in_g = hol.base_ideal();
    let g = hol.algebra.clone();
    let instance = |suffix: &str, g: LieAlgebra, k: Subalgebra, h: Subalgebra| ChainInstance {
        label: format!("{}/{suffix}", label(&k_algebra)),
        g,
        k,
        h,
        k_algebra: k_algebra.clone(),
        h_in_k: h_in_k.clone(),
    };
    let mut out = vec![instance(
        "holomorph",
        g.clone(),
        k_in_g.clone(),
        h_in_g.clone(),
    )];

    let (g2, i1, _) = g.direct_sum(&catalog::aff1());
    out.push(instance(
        "holomorph+aff1",
        g2,
        transport(&i1, &k_in_g),
        transport(&i1, &h_in_g),
    ));

    let mut r = ChaCha8Rng::seed_from_u64(basis_seed);
    let change = random_rebase(&mut r, g.dim());
    let (g3, iso) = g.change_basis(&change).expect("unimodular");
    let back = LinMap::new(
        g.clone(),
        g3.clone(),
        iso.matrix().inverse().expect("unimodular"),
    )
    .expect("shape");
    out.push(instance(
        "holomorph/rebased",
        g3,
        transport(&back, &k_in_g),
        transport(&back, &h_in_g),
    ));
    out
}

fn k_name(h: &LieAlgebra, p: &LieAlgebra) -> String {
    format!("{}+{}", label(h), label(p))
}

/// Centerless corpus for the derivation-tower checks.
pub fn centerless_corpus(seed: u64) -> Vec<LieAlgebra> {
    let mut out = vec![
        catalog::sl2(),
        catalog::aff1(),
        catalog::so3(),
        catalog::get("sl2_sum_aff1").expect("catalog").algebra,
        catalog::sl2_rad2(),
    ];
    out.extend(random_centerless_solvable(seed, 6));
    out
}

// ---------------------------------------------------------------------------
// criteria

fn outcome_check(name: String, result: Result<(bool, serde_json::Value)>) -> Check {
    match result {
        Ok((ok, detail)) => Check::new(name, Status::from_bool(ok), detail),
        Err(e) => Check::error(name, &e),
    }
}

fn criterion_perfect(cfg: &Config) -> Vec<Check> {
    perfect_chain_corpus(cfg.seed)
        .par_iter()
        .map(|inst| {
            let r = check_perfect_transitivity(&inst.g, &inst.h).and_then(|rep| {
                let verified = rep.chain.verify().is_ok()
                    && rep.chain.innermost() == &inst.h
                    && inst.h.is_ideal_of(&inst.k)?
                    && inst.g.is_ideal(&inst.k)?;
                Ok((
                    rep.holds() && verified,
                    json!({
                        "dim_g": inst.g.dim(),
                        "chain_length": rep.chain.len(),
                        "ideal": rep.ideal,
                    }),
                ))
            });
            outcome_check(format!("c1/{}", inst.label), r)
        })
        .collect()
}

pub fn non_perfect_algebras() -> Vec<LieAlgebra> {
    let mut out: Vec<LieAlgebra> = (1..=4)
        .map(|n| LieAlgebra::abelian(n).with_name(&format!("abelian({n})")))
        .collect();
    out.push(catalog::heisenberg3());
    out.push(catalog::aff1());
    out.push(catalog::upper_triangular(3));
    out
}

fn criterion_counterexample() -> Vec<Check> {
    non_perfect_algebras()
        .par_iter()
        .map(|h| {
            let r = counterexample_extension(h).map(|cert| {
                (
                    cert.verify() && cert.escapes(),
                    json!({
                        "dim_ambient": cert.ambient.dim(),
                        "chain_length": cert.chain.len(),
                        "escaping_value": vector_json(&cert.escaping_value),
                        "separating_functional": vector_json(&cert.separating_functional),
                    }),
                )
            });
            outcome_check(format!("c2/{}", label(h)), r)
        })
        .collect()
}

/// The derivation `(X, Y) ↦ (0, π X)` of `aff1 ⊕ aff1/[aff1, aff1]` moves
/// `aff1 ⊕ 0`, so non-perfect ideals need not be characteristic.
fn non_characteristic_witness() -> Check {
    let r = counterexample_extension(&catalog::aff1()).and_then(|cert| {
        let k = &cert.extension;
        let first = Subalgebra::span(k, vec![vector(&[1, 0, 0]), vector(&[0, 1, 0])])?;
        let moved = first
            .space()
            .basis_vectors()
            .iter()
            .any(|x| first.space().coordinates(&cert.derivation.mul_vec(x)).is_none());
        let characteristic = is_characteristic(k, &first)?;
        Ok((
            is_derivation(k, &cert.derivation) && moved && !characteristic,
            json!({ "derivation": cert.derivation.row_vectors().iter().map(|r| vector_json(r)).collect::<Vec<_>>() }),
        ))
    });
    outcome_check("c3/aff1+abelian(1)/non-characteristic".into(), r)
}

fn criterion_characteristic(cfg: &Config) -> Vec<Check> {
    let mut checks: Vec<Check> = perfect_chain_corpus(cfg.seed)
        .par_iter()
        .map(|inst| {
            let r = is_characteristic(&inst.g, &inst.h).and_then(|in_g| {
                let in_k = is_characteristic(&inst.k_algebra, &inst.h_in_k)?;
                Ok((in_g && in_k, json!({ "in_g": in_g, "in_k": in_k })))
            });
            outcome_check(format!("c3/{}", inst.label), r)
        })
        .collect();
    checks.push(non_characteristic_witness());
    checks
}

fn criterion_derived_tower(cfg: &Config) -> Vec<Check> {
    centerless_corpus(cfg.seed)
        .par_iter()
        .map(|g| {
            let r = theorem_derived_check(g).and_then(|d| {
                let tower = derivation_tower(g, None)?;
                let stable = matches!(tower.stabilized_at, Stabilization::At(_));
                let dims: Vec<usize> = tower.stages.iter().map(LieAlgebra::dim).collect();
                Ok((
                    d.holds() && stable,
                    json!({ "lhs": d.lhs, "rhs": d.rhs, "tower_dims": dims, "stabilized": stable }),
                ))
            });
            outcome_check(format!("c4/{}", label(g)), r)
        })
        .collect()
}

/// Every algebra the suites touch, deduplicated by name.
pub fn all_corpus_algebras(seed: u64) -> Vec<LieAlgebra> {
    let mut out: Vec<LieAlgebra> = catalog::standard_entries()
        .into_iter()
        .map(|e| e.algebra)
        .collect();
    out.extend(centerless_corpus(seed));
    out.extend(random_solvable(seed, 12));
    for h in perfect_algebras() {
        for p in chain_partners() {
            out.push(h.direct_sum(&p).0.with_name(&k_name(&h, &p)));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|g| seen.insert(label(g)));
    out
}

fn criterion_inner_identity(cfg: &Config) -> Vec<Check> {
    all_corpus_algebras(cfg.seed)
        .par_iter()
        .map(|g| {
            let der = derivation_algebra(g);
            Check::new(
                format!("c5/{}", label(g)),
                Status::from_bool(inner_commutator_identity_holds(&der)),
                json!({ "dim": g.dim(), "dim_derivations": der.dim() }),
            )
        })
        .collect()
}

fn criterion_complete() -> Vec<Check> {
    let complete = [catalog::aff1(), catalog::sl2(), catalog::so3()];
    let partners = [
        catalog::aff1(),
        catalog::sl2(),
        catalog::so3(),
        catalog::sl2_rad2(),
    ];
    let jobs: Vec<(LieAlgebra, LieAlgebra)> = complete
        .iter()
        .flat_map(|h| partners.iter().map(move |p| (h.clone(), p.clone())))
        .collect();
    jobs.par_iter()
        .map(|(h, p)| {
            let (k, into_k, _) = h.direct_sum(p);
            let hol = holomorph(&k);
            let h_in_g = full_image(&hol.embed_base.compose(&into_k).expect("composable"));
            let r = check_complete_subideal(&hol.algebra, &h_in_g, &hol.base_ideal()).map(|rep| {
                (
                    rep.holds(),
                    json!({
                        "ideal": rep.ideal,
                        "centralizer": subspace_json(rep.centralizer.space()),
                        "sum_is_k": rep.sum_is_k,
                        "intersection_zero": rep.intersection_zero,
                        "commute": rep.commute,
                    }),
                )
            });
            outcome_check(format!("c6/{}", k_name(h, p)), r)
        })
        .collect()
}

/// `(g, h)` with `h` a nonzero subideal.
#[derive(Debug, Clone)]
pub struct SubidealInstance {
    pub label: String,
    pub g: LieAlgebra,
    pub h: Subalgebra,
}

fn is_subideal(g: &LieAlgebra, h: &Subalgebra) -> bool {
    subideal_chain(g, h)
        .map(|v| v.is_subideal())
        .unwrap_or(false)
}

fn catalog_subideal_pairs() -> Vec<SubidealInstance> {
    let mut out = Vec::new();
    for e in catalog::standard_entries() {
        let g = &e.algebra;
        let mut candidates: Vec<(String, Subspace)> = e
            .subalgebras
            .iter()
            .map(|(t, s)| (t.clone(), s.clone()))
            .collect();
        candidates.push(("full".into(), Subspace::full(g.dim())));
        candidates.push(("derived".into(), g.derived_algebra().space().clone()));
        candidates.push(("radical".into(), g.radical().space().clone()));
        candidates.push(("center".into(), g.center().space().clone()));
        let mut seen = Vec::new();
        for (tag, space) in candidates {
            if space.is_zero() || seen.contains(&space) {
                continue;
            }
            seen.push(space.clone());
            let h = Subalgebra::new(g.clone(), space).expect("catalog subalgebras are closed");
            if is_subideal(g, &h) {
                out.push(SubidealInstance {
                    label: format!("{}:{tag}", e.name),
                    g: g.clone(),
                    h,
                });
            }
        }
    }
    out
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| int(rng.random_range(-1..=1))).collect()
}

/// Randomized subideals in solvable and mixed ambients, generated from one
/// or two random vectors.
pub fn random_subideal_pairs(seed: u64, count: usize) -> Vec<SubidealInstance> {
    let mut ambients = random_solvable(seed, 12);
    let mixed: Vec<LieAlgebra> = ambients
        .iter()
        .take(6)
        .enumerate()
        .map(|(i, s)| {
            let semi = if i % 2 == 0 {
                catalog::sl2()
            } else {
                catalog::so3()
            };
            s.direct_sum(&semi)
                .0
                .with_name(&format!("{}+{}", label(s), label(&semi)))
        })
        .collect();
    ambients.extend(mixed);
    ambients.push(catalog::sl2_rad2());
    ambients.push(catalog::gl2());
    ambients.push(catalog::get("sl2_sum_aff1").expect("catalog").algebra);

    let mut r = rng(seed, 4);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 40 {
        attempts += 1;
        let g = &ambients[r.random_range(0..ambients.len())];
        let gens: Vec<Vec<Rat>> = (0..r.random_range(1..=2))
            .map(|_| random_vector(&mut r, g.dim()))
            .collect();
        let h = g.generated_subalgebra(&gens).expect("dimensions match");
        if h.space().is_zero() || !is_subideal(g, &h) {
            continue;
        }
        out.push(SubidealInstance {
            label: format!("{}#{}", label(g), out.len()),
            g: g.clone(),
            h,
        });
    }
    out
}

pub fn radical_corpus(cfg: &Config) -> Vec<SubidealInstance> {
    let mut out = random_subideal_pairs(cfg.seed, cfg.random);
    out.extend(catalog_subideal_pairs());
    out
}

fn criterion_radical(cfg: &Config) -> Vec<Check> {
    radical_corpus(cfg)
        .par_iter()
        .map(|inst| {
            let r = check_radical_intersection(&inst.g, &inst.h).map(|rep| {
                (
                    rep.holds(),
                    json!({
                        "dim_h": inst.h.dim(),
                        "dim_radical_h": rep.radical_h.dim(),
                        "dim_radical_g_cap_h": rep.radical_g_cap_h.dim(),
                    }),
                )
            });
            outcome_check(format!("c7/{}", inst.label), r)
        })
        .collect()
}

fn criterion_levi(cfg: &Config) -> Vec<Check> {
    radical_corpus(cfg)
        .par_iter()
        .map(|inst| {
            let r = levi_criterion(&inst.g, &inst.h)
                .map(|rep| (rep.holds(), serde_json::to_value(rep).expect("plain data")));
            outcome_check(format!("c8/{}", inst.label), r)
        })
        .collect()
}

fn tagged_with_full(e: &CatalogEntry) -> Vec<(String, Subalgebra)> {
    let g = &e.algebra;
    let mut out: Vec<(String, Subalgebra)> = e
        .subalgebras
        .iter()
        .map(|(t, s)| {
            (
                t.clone(),
                Subalgebra::new(g.clone(), s.clone()).expect("catalog subalgebras are closed"),
            )
        })
        .collect();
    out.push(("full".into(), Subalgebra::full(g)));
    out
}

fn criterion_outcome_check(name: String, r: Result<CriterionOutcome>) -> Check {
    match r {
        Err(e) => Check::error(name, &e),
        Ok(CriterionOutcome::HypothesisNotSatisfied(reason)) => Check::new(
            name,
            Status::HypothesisNotSatisfied,
            json!({ "reason": reason }),
        ),
        Ok(CriterionOutcome::Checked { subideal, ideal }) => Check::new(
            name,
            Status::from_bool(subideal == ideal),
            json!({ "subideal": subideal, "ideal": ideal }),
        ),
    }
}

fn criterion_skew_form() -> Vec<Check> {
    let mut checks = Vec::new();
    for name in ["so3", "so3_sum_so3", "sl2"] {
        let e = catalog::get(name).expect("catalog");
        let subs = tagged_with_full(&e);
        for (ftag, form) in &e.forms {
            for (htag, h) in &subs {
                for (ktag, k) in &subs {
                    if !h.is_subset_of(k).expect("same parent") {
                        continue;
                    }
                    checks.push(criterion_outcome_check(
                        format!("c9/{name}/{ftag}/{htag}<={ktag}"),
                        check_skew_form_criterion(form, h, k),
                    ));
                }
            }
        }
    }
    checks
}

fn criterion_cartan() -> Vec<Check> {
    let mut checks = Vec::new();
    let e = catalog::get("sl2").expect("catalog");
    let g = &e.algebra;
    let theta = &e.maps["theta"];
    let r = cartan_eigenspaces(g, theta).map(|dec| {
        let u = Subspace::span(3, vec![vector(&[0, 1, -1])]);
        let p = Subspace::span(3, vec![vector(&[1, 0, 0]), vector(&[0, 1, 1])]);
        let (ku, kp) = dec.killing_inertia();
        let ok = dec.verify()
            && dec.u.space() == &u
            && dec.p == p
            && ku == Inertia::new(0, 1, 0)
            && kp == Inertia::new(2, 0, 0);
        (
            ok,
            json!({
                "u": subspace_json(dec.u.space()),
                "p": subspace_json(&dec.p),
                "killing_inertia_u": ku.to_string(),
                "killing_inertia_p": kp.to_string(),
            }),
        )
    });
    checks.push(outcome_check("c10/sl2/eigenspaces".into(), r));

    for name in ["sl2", "so3", "so3_sum_so3"] {
        let e = catalog::get(name).expect("catalog");
        let theta = &e.maps["theta"];
        let dec = match cartan_eigenspaces(&e.algebra, theta) {
            Ok(d) => d,
            Err(err) => {
                checks.push(Check::error(format!("c10/{name}/decomposition"), &err));
                continue;
            }
        };
        let subs = tagged_with_full(&e);
        for (htag, h) in &subs {
            let eligible = h.space().contains(dec.u.space()).expect("same ambient")
                || h.space().contains(&dec.p).expect("same ambient");
            if !eligible {
                continue;
            }
            for (ktag, k) in &subs {
                if !h.is_subset_of(k).expect("same parent") {
                    continue;
                }
                let name = format!("c10/{name}/{htag}<={ktag}");
                let r = check_cartan_criterion(&e.algebra, theta, h, k).map(|rep| {
                    (
                        rep.holds(),
                        json!({
                            "outcome": format!("{:?}", rep.outcome),
                            "reduction": format!("{:?}", rep.reduction),
                        }),
                    )
                });
                checks.push(outcome_check(name, r));
            }
        }
    }
    checks
}

fn hypotheses_for(e: &CatalogEntry) -> Vec<(String, SelfNormHypothesis)> {
    let mut out = vec![
        ("perfect".to_owned(), SelfNormHypothesis::Perfect),
        (
            "radical-central".to_owned(),
            SelfNormHypothesis::RadicalCentral,
        ),
    ];
    for (tag, b) in &e.forms {
        out.push((
            format!("skew:{tag}"),
            SelfNormHypothesis::SkewForm(b.clone()),
        ));
        out.push((
            format!("compact:{tag}"),
            SelfNormHypothesis::Compact(b.clone()),
        ));
        out.push((
            format!("compactly-embedded:{tag}"),
            SelfNormHypothesis::CompactlyEmbedded(b.clone()),
        ));
    }
    for (tag, theta) in &e.maps {
        out.push((
            format!("cartan:{tag}"),
            SelfNormHypothesis::CartanEigenspace(theta.clone()),
        ));
    }
    out
}

fn criterion_self_normalizing() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut verified_tags = std::collections::BTreeSet::new();
    for e in catalog::standard_entries() {
        let g = &e.algebra;
        for (htag, h) in tagged_with_full(&e) {
            for (hyp_name, hyp) in hypotheses_for(&e) {
                let name = format!("c11/{}/{htag}/({}) {hyp_name}", e.name, hyp.tag());
                let check = match check_self_normalizing_theorem(g, &h, &hyp) {
                    Err(err) => Check::error(name, &err),
                    Ok(SelfNormOutcome::HypothesisNotSatisfied(reason)) => Check::new(
                        name,
                        Status::HypothesisNotSatisfied,
                        json!({ "reason": reason }),
                    ),
                    Ok(SelfNormOutcome::Checked {
                        normalizer,
                        self_normalizing,
                    }) => {
                        verified_tags.insert(hyp.tag());
                        Check::new(
                            name,
                            Status::from_bool(self_normalizing),
                            json!({ "normalizer": subspace_json(normalizer.space()) }),
                        )
                    }
                };
                checks.push(check);
            }
        }
    }
    for tag in ["i", "ii", "v", "vi"] {
        checks.push(Check::new(
            format!("c11/coverage/({tag})"),
            Status::from_bool(verified_tags.contains(tag)),
            json!({ "verifying_instance_found": verified_tags.contains(tag) }),
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_solvable(7, 5);
        let b = random_solvable(7, 5);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.is_solvable() && !g.is_abelian()));
        assert!(a.iter().skip(2).step_by(3).all(LieAlgebra::is_nilpotent));
        let c = random_centerless_solvable(7, 3);
        assert!(c
            .iter()
            .all(|g| g.center().space().is_zero() && g.is_solvable()));
    }

    #[test]
    fn rebases_are_invertible() {
        let mut r = rng(1, 0);
        for n in 1..6 {
            let m = random_rebase(&mut r, n);
            assert!(m.inverse().is_some());
        }
    }

    #[test]
    fn matrix_closure_of_elementary_generators() {
        let e12 = Mat::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let e23 = Mat::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let basis = matrix_lie_closure(3, &[e12, e23]);
        assert_eq!(basis.len(), 3);
        let g = LieAlgebra::from_matrix_basis(&basis, None).unwrap();
        assert!(g.is_nilpotent() && !g.is_abelian());
    }

    #[test]
    fn counterexample_and_complete_suites_pass() {
        for id in [2, 6] {
            let run = run_criterion(id, &Config::default());
            assert!(run.passed(), "{:?}", run.checks);
        }
    }

    #[test]
    fn skew_form_suite_skips_killing_on_cartan() {
        let checks = criterion_skew_form();
        let c = checks
            .iter()
            .find(|c| c.name == "c9/sl2/killing/cartan<=full")
            .unwrap();
        assert_eq!(c.status, Status::HypothesisNotSatisfied);
        assert!(checks.iter().any(|c| c.status == Status::Pass));
        assert!(!checks.iter().any(|c| c.status.is_failure()));
    }
}

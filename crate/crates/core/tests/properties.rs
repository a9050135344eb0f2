use lietrans::catalog;
use lietrans::corpus::{random_rebase, random_solvable, rng};
use lietrans::derivations::{derivation_basis, derivation_space, is_derivation};
use lietrans::exactlin::{int, nullspace, rref, symmetric_inertia, Mat, Rat, Subspace};
use lietrans::transitivity::subideal_chain;
use lietrans::{LieAlgebra, LinMap, Subalgebra};
use num_traits::Zero;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |e| Mat::from_fn(rows, cols, |r, c| int(e[r * cols + c])))
}

fn any_matrix() -> impl Strategy<Value = Mat> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn symmetric(n: usize) -> impl Strategy<Value = Mat> {
    matrix(n, n).prop_map(|b| &b + &b.transpose())
}

fn int_vectors(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), count).prop_map(|vs| {
        vs.into_iter()
            .map(|v| v.into_iter().map(int).collect())
            .collect()
    })
}

/// Catalog algebras of dimension at most 6.
fn small_catalog() -> Vec<LieAlgebra> {
    catalog::standard_entries()
        .into_iter()
        .map(|e| e.algebra)
        .filter(|g| g.dim() <= 6)
        .collect()
}

fn catalog_algebra() -> impl Strategy<Value = LieAlgebra> {
    let all = small_catalog();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn algebra_with_vectors(count: usize) -> impl Strategy<Value = (LieAlgebra, Vec<Vec<Rat>>)> {
    catalog_algebra().prop_flat_map(move |g| {
        let n = g.dim();
        (Just(g), int_vectors(n, count))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r, pivots) = rref(&m);
        let (r2, pivots2) = rref(&r);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let k = nullspace(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(a in int_vectors(4, 2), b in int_vectors(4, 3)) {
        let u = Subspace::span(4, a.clone());
        let w = Subspace::span(4, b);
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u).unwrap() && u.contains(&i).unwrap() && w.contains(&i).unwrap());
        for v in a {
            prop_assert!(u.contains_vector(&v).unwrap());
        }
    }

    #[test]
    fn inertia_is_a_congruence_invariant(a in symmetric(4), seed in any::<u64>()) {
        let p = random_rebase(&mut rng(seed, 0), 4);
        let congruent = &(&p.transpose() * &a) * &p;
        let i1 = symmetric_inertia(&a).unwrap();
        let i2 = symmetric_inertia(&congruent).unwrap();
        prop_assert_eq!(i1, i2);
        prop_assert_eq!(i1.n_plus + i1.n_minus, a.rank());
    }

    #[test]
    fn orthogonal_complement_is_orthogonal(a in symmetric(4), vs in int_vectors(4, 2)) {
        let u = Subspace::span(4, vs);
        let perp = u.orthogonal_complement(&a).unwrap();
        prop_assert!(perp.dim() + u.dim() >= 4);
        if a.rank() == 4 {
            prop_assert_eq!(perp.dim() + u.dim(), 4);
        }
        for x in u.basis_vectors() {
            for y in perp.basis_vectors() {
                let ay = a.mul_vec(&y);
                let s: Rat = x.iter().zip(&ay).map(|(p, q)| p * q).sum();
                prop_assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn killing_form_is_ad_invariant((g, v) in algebra_with_vectors(3)) {
        let k = g.killing_form();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let lhs = k.eval(&g.bracket(x, y).unwrap(), z);
        let rhs = k.eval(y, &g.bracket(x, z).unwrap());
        prop_assert_eq!(lhs, -rhs);
    }

    #[test]
    fn subideal_verdicts_survive_basis_change((g, v) in algebra_with_vectors(2), seed in any::<u64>()) {
        let h = g.generated_subalgebra(&v).unwrap();
        let p = random_rebase(&mut rng(seed, 1), g.dim());
        let (g2, iso) = g.change_basis(&p).unwrap();
        let back = LinMap::new(g.clone(), g2.clone(), iso.matrix().inverse().unwrap()).unwrap();
        prop_assert!(back.is_homomorphism());
        let h2 = back.image_of(h.space());
        let v1 = subideal_chain(&g, &h).unwrap();
        let v2 = subideal_chain(&g2, &h2).unwrap();
        prop_assert_eq!(v1.is_subideal(), v2.is_subideal());
        prop_assert_eq!(g.is_ideal(&h).unwrap(), g2.is_ideal(&h2).unwrap());
        prop_assert_eq!(derivation_space(&g).dim(), derivation_space(&g2).dim());
    }

    #[test]
    fn subideal_chains_reverify((g, v) in algebra_with_vectors(1)) {
        let h = g.generated_subalgebra(&v).unwrap();
        if let Some(chain) = subideal_chain(&g, &h).unwrap().chain() {
            prop_assert!(chain.verify().is_ok());
            prop_assert_eq!(chain.innermost(), &h);
            prop_assert_eq!(chain.outermost(), &Subalgebra::full(&g));
            for pair in chain.links().windows(2) {
                prop_assert!(pair[0].is_ideal_of(&pair[1]).unwrap());
            }
        }
    }

    #[test]
    fn derivations_form_a_subalgebra_of_gl(g in catalog_algebra()) {
        let basis = derivation_basis(&g);
        for i in 0..g.dim() {
            prop_assert!(is_derivation(&g, &g.ad_basis(i)));
        }
        for a in &basis {
            for b in &basis {
                prop_assert!(is_derivation(&g, &a.commutator(b)));
            }
        }
    }

    #[test]
    fn random_algebras_round_trip_through_text(seed in any::<u64>()) {
        for g in random_solvable(seed, 2) {
            prop_assert!(g.validate().is_valid());
            let back = catalog::parse(&catalog::to_text(&g)).unwrap();
            prop_assert_eq!(&back, &g);
        }
    }
}

#[test]
fn text_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for e in catalog::standard_entries() {
        let path = dir.path().join(format!("{}.json", e.name));
        catalog::save(&e.algebra, &path).unwrap();
        assert_eq!(catalog::load(&path).unwrap(), e.algebra);
    }
}

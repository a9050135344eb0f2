mod common;

use common::{derivation_dim_oracle, grid_subalgebras, is_ideal_in, subideal_oracle, Space};
use lietrans::corpus::{random_centerless_solvable, random_solvable};
use lietrans::derivations::{derivation_space, holomorph};
use lietrans::transitivity::subideal_chain;
use lietrans::{catalog, LieAlgebra, Subalgebra, Subspace};

#[test]
fn derivation_dimensions_match_substitution() {
    // [DERIVED] values: abelian(n) has every endomorphism, heisenberg3 and
    // sl2 are fixed by the oracle before being compared to the library
    for n in 1..=4 {
        assert_eq!(derivation_dim_oracle(&LieAlgebra::abelian(n)), n * n);
    }
    assert_eq!(derivation_dim_oracle(&catalog::heisenberg3()), 6);
    assert_eq!(derivation_dim_oracle(&catalog::sl2()), 3);

    let mut algebras: Vec<LieAlgebra> = catalog::standard_entries()
        .into_iter()
        .map(|e| e.algebra)
        .collect();
    algebras.extend(random_solvable(5, 10));
    algebras.extend(random_centerless_solvable(5, 4));
    algebras.push(holomorph(&catalog::aff1()).algebra);
    algebras.push(holomorph(&catalog::heisenberg3()).algebra);
    for g in &algebras {
        assert_eq!(
            derivation_space(g).dim(),
            derivation_dim_oracle(g),
            "{:?}",
            g.name()
        );
    }
}

#[test]
fn subideal_verdicts_match_exhaustive_search() {
    let mut algebras: Vec<LieAlgebra> = vec![
        LieAlgebra::abelian(2),
        catalog::heisenberg3(),
        catalog::aff1(),
        catalog::sl2(),
        catalog::so3(),
    ];
    algebras.extend(random_solvable(9, 12).into_iter().filter(|g| g.dim() <= 3));
    let mut negatives = 0;
    for g in &algebras {
        let n = g.dim();
        let lattice = grid_subalgebras(g);
        let top = Space::span(n, (0..n).map(|i| common::unit(n, i)).collect());
        for h in &lattice {
            let sub = Subalgebra::new(g.clone(), Subspace::span(n, h.0.clone())).unwrap();
            let lib = subideal_chain(g, &sub).unwrap().is_subideal();
            assert_eq!(
                lib,
                subideal_oracle(g, &lattice, h, &top),
                "{:?} {h:?}",
                g.name()
            );
            negatives += usize::from(!lib);
        }
    }
    assert!(negatives > 0, "corpus must contain non-subideals");
}

#[test]
fn heisenberg_line_is_a_subideal_but_not_an_ideal() {
    let g = catalog::heisenberg3();
    let lattice = grid_subalgebras(&g);
    let x = Space::span(3, vec![common::unit(3, 0)]);
    let top = Space::span(3, (0..3).map(|i| common::unit(3, i)).collect());
    assert!(subideal_oracle(&g, &lattice, &x, &top));
    assert!(!is_ideal_in(&g, &x, &top));
}

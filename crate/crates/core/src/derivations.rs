//! Derivation algebras, the holomorph, completeness and the derivation
//! tower.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{unit_vector, KernelSolver, Mat, Rat, Subspace};
use crate::liealg::{LieAlgebra, LinMap, Subalgebra};

/// Solution space of the Leibniz system of `g`.
///
/// Unknowns are the entries of the derivation matrix in row-major order:
/// unknown `a * n + b` is the coefficient of `e_a` in `f(e_b)`.
pub fn derivation_space(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut solver = KernelSolver::new(n * n);
    let var = |a: usize, b: usize| a * n + b;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                // f([e_i,e_j])_k - [f e_i, e_j]_k - [e_i, f e_j]_k = 0
                let mut row: Vec<(usize, Rat)> = Vec::new();
                for m in 0..n {
                    let c = g.structure_constant(i, j, m);
                    if !c.is_zero() {
                        row.push((var(k, m), c.clone()));
                    }
                }
                for a in 0..n {
                    let c = g.structure_constant(a, j, k);
                    if !c.is_zero() {
                        row.push((var(a, i), -c.clone()));
                    }
                    let c = g.structure_constant(i, a, k);
                    if !c.is_zero() {
                        row.push((var(a, j), -c.clone()));
                    }
                }
                if !row.is_empty() {
                    solver.push(row);
                }
            }
        }
    }
    solver.kernel()
}

/// Matrices of a basis of `D(g)`.
pub fn derivation_basis(g: &LieAlgebra) -> Vec<Mat> {
    let n = g.dim();
    derivation_space(g)
        .basis_vectors()
        .into_iter()
        .map(|v| Mat::from_entries(n, n, v))
        .collect()
}

/// Leibniz rule on every basis pair, evaluated directly.
pub fn is_derivation(g: &LieAlgebra, f: &Mat) -> bool {
    let n = g.dim();
    if f.rows() != n || f.cols() != n {
        return false;
    }
    let images: Vec<Vec<Rat>> = (0..n).map(|j| f.column(j)).collect();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let ei = unit_vector(n, i);
            let ej = unit_vector(n, j);
            let lhs = f.mul_vec(&g.bracket_unchecked(&ei, &ej));
            let r1 = g.bracket_unchecked(&images[i], &ej);
            let r2 = g.bracket_unchecked(&ei, &images[j]);
            lhs == crate::exactlin::add_vectors(&r1, &r2)
        })
    })
}

/// `D(g)` as an abstract algebra together with its realization on `g`.
#[derive(Debug, Clone)]
pub struct DerivationAlgebra {
    base: LieAlgebra,
    space: Subspace,
    algebra: LieAlgebra,
    realization: Vec<Mat>,
    inner: Subspace,
}

impl DerivationAlgebra {
    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    /// Abstract structure constants of `D(g)` in the canonical basis.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.realization.len()
    }

    /// Matrix of each basis derivation acting on `g`.
    pub fn realization(&self) -> &[Mat] {
        &self.realization
    }

    /// `ad_g` inside `D(g)` coordinates.
    pub fn inner(&self) -> &Subspace {
        &self.inner
    }

    /// Coordinates of a derivation matrix, `None` if it is not a derivation.
    pub fn coordinates(&self, f: &Mat) -> Option<Vec<Rat>> {
        let n = self.base.dim();
        if f.rows() != n || f.cols() != n {
            return None;
        }
        self.space.coordinates(f.entries())
    }

    /// Matrix of the derivation with the given coordinates.
    pub fn matrix_of(&self, coords: &[Rat]) -> Mat {
        let n = self.base.dim();
        Mat::from_entries(n, n, self.space.combine(coords))
    }

    /// `ad: g -> D(g)` as a linear map into the abstract algebra.
    pub fn ad_embedding(&self) -> LinMap {
        let n = self.base.dim();
        let columns: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                self.coordinates(&self.base.ad_basis(i))
                    .expect("inner derivations are derivations")
            })
            .collect();
        LinMap::new(
            self.base.clone(),
            self.algebra.clone(),
            Mat::from_columns(self.dim(), &columns),
        )
        .expect("shape")
    }

    /// Whether the subspace `u` of `g` is invariant under every derivation.
    pub fn preserves(&self, u: &Subspace) -> bool {
        self.realization.iter().all(|f| {
            u.basis_vectors()
                .iter()
                .all(|v| u.coordinates(&f.mul_vec(v)).is_some())
        })
    }
}

/// Computes `D(g)`: solution basis, commutator structure constants and the
/// inner derivations.
pub fn derivation_algebra(g: &LieAlgebra) -> DerivationAlgebra {
    let n = g.dim();
    let space = derivation_space(g);
    let realization: Vec<Mat> = space
        .basis_vectors()
        .into_iter()
        .map(|v| Mat::from_entries(n, n, v))
        .collect();
    let m = realization.len();
    let mut tensor = vec![Rat::zero(); m * m * m];
    for a in 0..m {
        for b in a + 1..m {
            let c = realization[a].commutator(&realization[b]);
            let coords = space
                .coordinates(c.entries())
                .expect("commutator of derivations is a derivation");
            for (k, v) in coords.into_iter().enumerate() {
                tensor[(b * m + a) * m + k] = -v.clone();
                tensor[(a * m + b) * m + k] = v;
            }
        }
    }
    let name = g.name().map(|s| format!("D({s})"));
    let algebra = LieAlgebra::new(m, tensor, name).expect("D(g) satisfies the Lie axioms");
    let inner = Subspace::span(
        m,
        (0..n)
            .map(|i| {
                space
                    .coordinates(g.ad_basis(i).entries())
                    .expect("inner derivations are derivations")
            })
            .collect::<Vec<_>>(),
    );
    DerivationAlgebra {
        base: g.clone(),
        space,
        algebra,
        realization,
        inner,
    }
}

/// Trivial center and every derivation inner.
pub fn is_complete(g: &LieAlgebra) -> bool {
    if !g.center().space().is_zero() {
        return false;
    }
    // centerless: ad is injective, so D(g) = ad_g iff dim D(g) = dim g
    derivation_space(g).dim() == g.dim()
}

/// `H(h) = h ⋊ D(h)` with
/// `[(X,f),(Y,g)] = ([X,Y] + f(Y) - g(X), [f,g])`.
#[derive(Debug, Clone)]
pub struct Holomorph {
    pub algebra: LieAlgebra,
    /// `X -> (X, 0)`.
    pub embed_base: LinMap,
    /// `f -> (0, f)`, from the abstract derivation algebra.
    pub embed_derivations: LinMap,
    pub derivations: DerivationAlgebra,
}

impl Holomorph {
    /// Image of `h ⋊ 0`.
    pub fn base_ideal(&self) -> Subalgebra {
        self.embed_base
            .image_of(&Subspace::full(self.embed_base.source().dim()))
    }
}

pub fn holomorph(h: &LieAlgebra) -> Holomorph {
    let der = derivation_algebra(h);
    let n = h.dim();
    let m = der.dim();
    let total = n + m;
    let mut tensor = vec![Rat::zero(); total * total * total];
    let at = |i: usize, j: usize, k: usize| (i * total + j) * total + k;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                tensor[at(i, j, k)] = h.structure_constant(i, j, k).clone();
            }
        }
    }
    for (a, f) in der.realization().iter().enumerate() {
        for j in 0..n {
            // [(0,f), (e_j,0)] = (f(e_j), 0)
            for k in 0..n {
                let v = f.get(k, j).clone();
                tensor[at(n + a, j, k)] = v.clone();
                tensor[at(j, n + a, k)] = -v;
            }
        }
    }
    let d = der.algebra();
    for a in 0..m {
        for b in 0..m {
            for k in 0..m {
                tensor[at(n + a, n + b, n + k)] = d.structure_constant(a, b, k).clone();
            }
        }
    }
    let name = h.name().map(|s| format!("H({s})"));
    let algebra = LieAlgebra::new(total, tensor, name).expect("holomorph satisfies Jacobi");
    let embed_base = LinMap::new(
        h.clone(),
        algebra.clone(),
        Mat::from_fn(
            total,
            n,
            |r, c| if r == c { Rat::one() } else { Rat::zero() },
        ),
    )
    .expect("shape");
    let embed_derivations = LinMap::new(
        d.clone(),
        algebra.clone(),
        Mat::from_fn(
            total,
            m,
            |r, c| {
                if r == n + c {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            },
        ),
    )
    .expect("shape");
    Holomorph {
        algebra,
        embed_base,
        embed_derivations,
        derivations: der,
    }
}

/// Where the derivation tower stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stabilization {
    /// First complete stage.
    At(usize),
    ExceededBudget,
}

/// `g ⊴ D(g) ⊴ D²(g) ⊴ ...`, each stage embedded in the next by `ad`.
#[derive(Debug, Clone)]
pub struct TowerReport {
    pub stages: Vec<LieAlgebra>,
    pub embeddings: Vec<LinMap>,
    pub stabilized_at: Stabilization,
}

pub fn default_max_steps(g: &LieAlgebra) -> usize {
    g.dim() * g.dim() + 1
}

/// Iterates `D` from a centerless `g` until the first complete stage, or
/// `max_steps` derivation computations.
pub fn derivation_tower(g: &LieAlgebra, max_steps: Option<usize>) -> Result<TowerReport> {
    if !g.center().space().is_zero() {
        return Err(Error::Precondition(
            "derivation tower needs a centerless algebra".into(),
        ));
    }
    let budget = max_steps.unwrap_or_else(|| default_max_steps(g));
    let mut stages = vec![g.clone()];
    let mut embeddings = Vec::new();
    loop {
        let current = stages.last().expect("nonempty").clone();
        if is_complete(&current) {
            let at = stages.len() - 1;
            return Ok(TowerReport {
                stages,
                embeddings,
                stabilized_at: Stabilization::At(at),
            });
        }
        if embeddings.len() == budget {
            return Ok(TowerReport {
                stages,
                embeddings,
                stabilized_at: Stabilization::ExceededBudget,
            });
        }
        let der = derivation_algebra(&current);
        let next = der.algebra().clone();
        assert!(
            next.center().space().is_zero(),
            "derivation algebra of a centerless algebra has a center"
        );
        let emb = der.ad_embedding();
        assert!(
            emb.is_injective() && emb.is_homomorphism(),
            "ad embedding is not an injective homomorphism"
        );
        let image = emb.image_of(&Subspace::full(current.dim()));
        assert!(
            next.is_ideal(&image).expect("same parent"),
            "ad image is not an ideal of the next stage"
        );
        stages.push(next);
        embeddings.push(emb);
    }
}

/// Both sides of "`D(g)` complete iff `g` is an ideal of `D²(g)`".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedCheck {
    /// `D(g)` is complete.
    pub lhs: bool,
    /// Image of `g` under `ad ∘ ad` is an ideal of `D²(g)`.
    pub rhs: bool,
}

impl DerivedCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn theorem_derived_check(g: &LieAlgebra) -> Result<DerivedCheck> {
    if !g.center().space().is_zero() {
        return Err(Error::Precondition("g must be centerless".into()));
    }
    let d1 = derivation_algebra(g);
    let d2 = derivation_algebra(d1.algebra());
    let lhs = is_complete(d1.algebra());
    let two_step = d2.ad_embedding().compose(&d1.ad_embedding())?;
    let image = two_step.image_of(&Subspace::full(g.dim()));
    let rhs = d2.algebra().is_ideal(&image)?;
    Ok(DerivedCheck { lhs, rhs })
}

/// Every derivation of `g` maps the ideal `h` into itself.
pub fn is_characteristic(g: &LieAlgebra, h: &Subalgebra) -> Result<bool> {
    if !g.is_ideal(h)? {
        return Err(Error::NotIdeal);
    }
    let n = g.dim();
    let basis = h.space().basis_vectors();
    Ok(derivation_space(g).basis_vectors().into_iter().all(|v| {
        let f = Mat::from_entries(n, n, v);
        basis
            .iter()
            .all(|x| h.space().coordinates(&f.mul_vec(x)).is_some())
    }))
}

/// `[f, ad_X] = ad_{f(X)}` for every basis derivation `f` and basis `X`.
pub fn inner_commutator_identity_holds(der: &DerivationAlgebra) -> bool {
    let g = der.base();
    let n = g.dim();
    der.realization().iter().all(|f| {
        (0..n).all(|i| {
            let lhs = f.commutator(&g.ad_basis(i));
            let fx = f.column(i);
            lhs == g.ad_matrix(&fx).expect("dimension")
        })
    })
}

/// Derivations of `D(g)` that vanish on every inner derivation. For
/// centerless `g` this space is zero.
pub fn inner_annihilating_derivations(der: &DerivationAlgebra) -> Subspace {
    let d = der.algebra();
    let m = d.dim();
    let d2 = derivation_space(d);
    let inner = der.inner().basis_vectors();
    // F(v) = 0 for each inner v: linear in F's coordinates
    let mut solver = KernelSolver::new(d2.dim());
    let basis: Vec<Mat> = d2
        .basis_vectors()
        .into_iter()
        .map(|v| Mat::from_entries(m, m, v))
        .collect();
    for v in &inner {
        let images: Vec<Vec<Rat>> = basis.iter().map(|f| f.mul_vec(v)).collect();
        for k in 0..m {
            solver.push(
                images
                    .iter()
                    .enumerate()
                    .map(|(c, img)| (c, img[k].clone())),
            );
        }
    }
    solver.kernel()
}
